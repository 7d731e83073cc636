#pragma once

#include <stdexcept>
#include <string>

namespace symcon {

// All library failures derive from Error so callers can catch one type.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParameterError : Error {
  using Error::Error;
};

struct DegreeError : Error {
  using Error::Error;
};

struct TruncationError : Error {
  using Error::Error;
};

struct CapacityError : Error {
  using Error::Error;
};

struct CatalogError : Error {
  using Error::Error;
};

}  // namespace symcon
