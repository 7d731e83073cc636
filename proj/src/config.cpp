#include "symcon/config.hpp"

#include <atomic>
#include <string>

#include "symcon/errors.hpp"

namespace symcon {

namespace {
std::atomic<int> g_max_n{kHardMaxN};
}

int max_n() { return g_max_n.load(); }

void set_max_n(int n) {
  if (n < 1) throw ParameterError("max_n must be at least 1");
  g_max_n.store(n);
}

void require_capacity(int n, const char* what) {
  if (n > max_n()) {
    throw CapacityError(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds the configured maximum " + std::to_string(max_n()));
  }
}

}  // namespace symcon
