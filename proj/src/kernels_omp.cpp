#include <omp.h>

#include "mn.hpp"
#include "symcon/characters.hpp"
#include "symcon/kernels.hpp"

namespace symcon::kernels::omp {

namespace {

int team_size() {
  const int t = threads();
  return t > 0 ? t : omp_get_max_threads();
}

}  // namespace

std::vector<std::int64_t> character_values(int n) {
  const auto& labels = partitions_cached(n);
  const auto d = static_cast<long>(labels.size());
  std::vector<std::int64_t> out(static_cast<std::size_t>(d * d));
#pragma omp parallel num_threads(team_size())
  {
    detail::MNEvaluator ev;
#pragma omp for schedule(dynamic)
    for (long col = 0; col < d; ++col) {
      for (long row = 0; row < d; ++row) {
        out[static_cast<std::size_t>(row * d + col)] =
            ev.value(labels[static_cast<std::size_t>(row)], labels[static_cast<std::size_t>(col)]);
      }
    }
  }
  return out;
}

std::vector<Rational> schur_multiplicities(const CharacterTable& table, const PowerSumExpr& f) {
  const int d = table.dim();
  std::vector<std::pair<int, Rational>> cols;
  for (const auto& [lambda, c] : f.terms()) cols.emplace_back(revlex_index(lambda), c);
  std::vector<Rational> out(static_cast<std::size_t>(d));
#pragma omp parallel for schedule(static) num_threads(team_size())
  for (int row = 0; row < d; ++row) {
    Rational acc = 0;
    for (const auto& [col, c] : cols) acc += c * static_cast<long>(table.at(row, col));
    out[static_cast<std::size_t>(row)] = acc;
  }
  return out;
}

PowerSumExpr sum_plethystic(int n, const GradedSeries& F, bool elementary) {
  const auto& labels = partitions_cached(n);
  const auto count = static_cast<long>(labels.size());
  const int team = team_size();
  std::vector<PowerSumExpr> partial(static_cast<std::size_t>(team));
#pragma omp parallel num_threads(team)
  {
    PlethysticEvaluator ev(F);
    PowerSumExpr local;
#pragma omp for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
      const auto& lambda = labels[static_cast<std::size_t>(i)];
      local += elementary ? ev.E(lambda) : ev.H(lambda);
    }
    partial[static_cast<std::size_t>(omp_get_thread_num())] = std::move(local);
  }
  PowerSumExpr out;
  for (const auto& p : partial) out += p;
  return out;
}

}  // namespace symcon::kernels::omp
