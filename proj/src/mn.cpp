#include "mn.hpp"

#include <algorithm>

namespace symcon::detail {

namespace {

std::string memo_key(const std::vector<int>& shape, const std::vector<int>& mu, std::size_t from) {
  std::string key;
  key.reserve(shape.size() + mu.size() - from + 1);
  for (int p : shape) key.push_back(static_cast<char>(p));
  key.push_back('|');
  for (std::size_t i = from; i < mu.size(); ++i) key.push_back(static_cast<char>(mu[i]));
  return key;
}

}  // namespace

std::int64_t MNEvaluator::value(const Partition& nu, const Partition& mu) {
  return recurse(nu.parts(), mu.parts(), 0);
}

std::int64_t MNEvaluator::recurse(const std::vector<int>& shape, const std::vector<int>& mu, std::size_t from) {
  if (from == mu.size()) return shape.empty() ? 1 : 0;
  const std::string key = memo_key(shape, mu, from);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  const int r = mu[from];
  const int len = static_cast<int>(shape.size());
  // Beta-set, strictly decreasing: beta_i = shape_i + (len - 1 - i).
  std::vector<int> beta(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) beta[static_cast<std::size_t>(i)] = shape[static_cast<std::size_t>(i)] + (len - 1 - i);

  std::int64_t total = 0;
  for (int i = 0; i < len; ++i) {
    const int target = beta[static_cast<std::size_t>(i)] - r;
    if (target < 0) continue;
    if (std::binary_search(beta.begin(), beta.end(), target, std::greater<>())) continue;
    // Beads strictly between target and beta_i give the strip height.
    int height = 0;
    for (int j = i + 1; j < len && beta[static_cast<std::size_t>(j)] > target; ++j) ++height;
    std::vector<int> moved = beta;
    moved[static_cast<std::size_t>(i)] = target;
    std::sort(moved.begin(), moved.end(), std::greater<>());
    std::vector<int> next;
    next.reserve(static_cast<std::size_t>(len));
    for (int j = 0; j < len; ++j) {
      const int part = moved[static_cast<std::size_t>(j)] - (len - 1 - j);
      if (part > 0) next.push_back(part);
    }
    const std::int64_t sub = recurse(next, mu, from + 1);
    total += height % 2 ? -sub : sub;
  }
  memo_.emplace(key, total);
  return total;
}

}  // namespace symcon::detail
