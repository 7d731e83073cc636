#pragma once

namespace symcon::detail {

extern const char* const kTable1;
extern const char* const kTable2;
extern const char* const kTable3;
extern const char* const kTable4;

}  // namespace symcon::detail
