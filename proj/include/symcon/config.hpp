#pragma once

namespace symcon {

// Largest n accepted by size-guarded operations unless overridden.
inline constexpr int kHardMaxN = 20;

// Default truncation degree for graded series.
inline constexpr int kDefaultSeriesDegree = 16;

// Current process-wide cap; starts at kHardMaxN.
int max_n();

// Raises or lowers the cap. Values above kHardMaxN are accepted (the CLI
// warns that they are unsupported); values below 1 throw ParameterError.
void set_max_n(int n);

// Throws CapacityError when n exceeds max_n().
void require_capacity(int n, const char* what);

}  // namespace symcon
