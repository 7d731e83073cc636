#pragma once

// Murnaghan–Nakayama evaluation shared by the public API and the kernels.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "symcon/partition.hpp"

namespace symcon::detail {

// Evaluates χ^ν(μ) by stripping border strips of length μ_1, μ_2, ... in
// turn. Shapes are handled as beta-sets (first-column hook lengths), where
// removing a strip of length r is moving one bead down r positions and the
// height of the strip is the number of beads jumped over. Results are
// memoised on (remaining shape, remaining class). Not thread-safe.
class MNEvaluator {
 public:
  std::int64_t value(const Partition& nu, const Partition& mu);

 private:
  std::int64_t recurse(const std::vector<int>& shape, const std::vector<int>& mu, std::size_t from);
  std::unordered_map<std::string, std::int64_t> memo_;
};

}  // namespace symcon::detail
