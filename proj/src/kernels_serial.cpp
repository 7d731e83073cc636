#include <atomic>

#include "mn.hpp"
#include "symcon/characters.hpp"
#include "symcon/kernels.hpp"

namespace symcon::kernels {

namespace {
std::atomic<int> g_threads{0};
}

void set_threads(int threads) { g_threads.store(threads < 0 ? 0 : threads); }
int threads() { return g_threads.load(); }

namespace serial {

std::vector<std::int64_t> character_values(int n) {
  const auto& labels = partitions_cached(n);
  const std::size_t d = labels.size();
  std::vector<std::int64_t> out(d * d);
  detail::MNEvaluator ev;
  for (std::size_t col = 0; col < d; ++col) {
    for (std::size_t row = 0; row < d; ++row) out[row * d + col] = ev.value(labels[row], labels[col]);
  }
  return out;
}

std::vector<Rational> schur_multiplicities(const CharacterTable& table, const PowerSumExpr& f) {
  const int d = table.dim();
  std::vector<std::pair<int, Rational>> cols;
  for (const auto& [lambda, c] : f.terms()) cols.emplace_back(revlex_index(lambda), c);
  std::vector<Rational> out(static_cast<std::size_t>(d));
  for (int row = 0; row < d; ++row) {
    Rational acc = 0;
    for (const auto& [col, c] : cols) acc += c * static_cast<long>(table.at(row, col));
    out[static_cast<std::size_t>(row)] = acc;
  }
  return out;
}

PowerSumExpr sum_plethystic(int n, const GradedSeries& F, bool elementary) {
  return elementary ? sum_E(n, F) : sum_H(n, F);
}

}  // namespace serial
}  // namespace symcon::kernels
