#include "doctest.h"

#include "symcon/characters.hpp"
#include "symcon/errors.hpp"
#include "symcon/family.hpp"
#include "symcon/repmodels.hpp"
#include "symcon/symfunc.hpp"

using namespace symcon;

namespace {

PowerSumExpr P(std::initializer_list<int> parts, const Rational& c = 1) {
  return PowerSumExpr::monomial(Partition(parts), c);
}

PowerSumExpr sum_over(const std::vector<Partition>& ps) {
  PowerSumExpr f;
  for (const auto& p : ps) f.add_term(p, 1);
  return f;
}

}  // namespace

TEST_CASE("products of power sums take multiset unions") {
  CHECK(P({2}) * P({1, 1}) == P({2, 1, 1}));
  const auto f = P({3}) + P({2, 1}, make_rational(1, 2));
  CHECK(f + PowerSumExpr() == f);
  CHECK((PowerSumExpr::p(1) + PowerSumExpr::p(2)) * (PowerSumExpr::p(1) - PowerSumExpr::p(2)) ==
        P({1, 1}) - P({2, 2}));
}

TEST_CASE("zero coefficients are never stored") {
  auto f = P({2, 1}) - P({2, 1});
  CHECK(f.is_zero());
  CHECK(f.num_terms() == 0);
  CHECK(f.max_degree() == -1);
}

TEST_CASE("degree queries") {
  const auto f = P({3}) + P({2});
  CHECK_FALSE(f.is_homogeneous());
  CHECK_THROWS_AS(f.degree(), DegreeError);
  CHECK(f.component(2) == P({2}));
  CHECK(P({2, 1}).degree() == 3);
}

TEST_CASE("omega multiplies p_lambda by the sign of its class") {
  CHECK(omega(P({2, 1})) == -P({2, 1}));
  CHECK(omega(P({3, 1})) == P({3, 1}));
  for (int n = 1; n <= 8; ++n) CHECK(omega(h_n(n)) == e_n(n));
}

TEST_CASE("Hall inner product") {
  CHECK(inner_product(P({2, 1}), P({2, 1})) == 2);
  CHECK(inner_product(P({3}), P({2, 1})) == 0);
  for (int n = 1; n <= 8; ++n) CHECK(inner_product(h_n(n), h_n(n)) == 1);
  CHECK_THROWS_AS(inner_product(P({2}), P({3})), DegreeError);
  CHECK(inner_product(PowerSumExpr(), P({3})) == 0);
}

TEST_CASE("derivative with respect to p1") {
  CHECK(p1_derivative(P({1, 1, 1})) == P({1, 1}, 3));
  CHECK(p1_derivative(P({2, 2})).is_zero());
  for (int n = 1; n <= 10; ++n) {
    const auto ones = std::vector<int>(static_cast<std::size_t>(n - 1), 1);
    CHECK(p1_derivative(foulkes(n, 0)) == PowerSumExpr::monomial(Partition(ones)));
  }
}

TEST_CASE("dimension reads n! times the p_1^n coefficient") {
  for (int n = 1; n <= 10; ++n) CHECK(dimension(sum_over(partitions_cached(n))) == Rational(from_u64(factorial(n))));
  for (int n = 2; n <= 10; ++n) CHECK(dimension(sum_over(members(FamilySpec::distinct_odd(), n))) == 0);
  CHECK(dimension(P({1, 1})) == 2);
}

TEST_CASE("plethysm by a power sum scales every part") {
  CHECK(plethysm_p(2, P({3})) == P({6}));
  const auto g = P({2, 1}) + P({3}, 5);
  CHECK(plethysm_p(1, g) == g);
  CHECK(plethysm_p(2, PowerSumExpr::p(1) + PowerSumExpr::p(2)) == P({2}) + P({4}));
}

TEST_CASE("plethysm by complete and elementary functions") {
  const auto g = P({2, 1}) + P({3});
  CHECK(plethysm_h(0, g) == PowerSumExpr::constant(1));
  CHECK(plethysm_e(0, g) == PowerSumExpr::constant(1));
  CHECK(plethysm_h(1, g) == g);
  CHECK(plethysm_e(1, g) == g);
  CHECK(plethysm_h(2, P({2})) == make_rational(1, 2) * (P({2, 2}) + P({4})));
  for (int m = 1; m <= 6; ++m) CHECK(plethysm_e(m, PowerSumExpr::p(1)) == e_n(m));
  for (int m = 1; m <= 6; ++m) CHECK(plethysm_h(m, PowerSumExpr::p(1)) == h_n(m));
}

TEST_CASE("h2 of h2 expands to s4 plus s22") {
  const auto s = to_schur(plethysm_h(2, h_n(2)), 4);
  for (const auto& [nu, m] : s.mults) {
    const bool expected = nu == Partition{4} || nu == Partition{2, 2};
    CHECK(m == (expected ? 1 : 0));
  }
}

TEST_CASE("general plethysm agrees with the specialised forms") {
  const auto g = P({2}) + P({1, 1}, 3);
  CHECK(plethysm(h_n(3), g) == plethysm_h(3, g));
  CHECK(plethysm(e_n(3), g) == plethysm_e(3, g));
  CHECK(plethysm(P({2, 1}), g) == plethysm_p(2, g) * g);
}

TEST_CASE("Newton recurrence makes H and signed E mutually inverse") {
  const auto g = P({2}) + P({1, 1}, 2) + P({1}, make_rational(1, 3));
  for (int m = 1; m <= 8; ++m) {
    const auto hs = plethysm_h_upto(m, g);
    const auto es = plethysm_e_upto(m, g);
    PowerSumExpr total;
    for (int r = 0; r <= m; ++r) total += scale(r % 2 ? -1 : 1, es[r] * hs[m - r]);
    CHECK(total.is_zero());
  }
}

TEST_CASE("H and E over a graded series") {
  const auto F = foulkes_series(0, 10);
  CHECK(H_lambda({}, F) == PowerSumExpr::constant(1));
  CHECK(E_lambda({}, F) == PowerSumExpr::constant(1));
  for (int n = 3; n <= 8; ++n) CHECK(H_lambda({n - 1, 1}, F) == F[n - 1] * F[1]);
  for (int n = 1; n <= 8; ++n) {
    const auto ones = std::vector<int>(static_cast<std::size_t>(n), 1);
    CHECK(E_lambda(Partition(ones), F) == e_n(n));
  }
  for (int n = 1; n <= 6; ++n) {
    for (const auto& lam : partitions_cached(n)) CHECK(H_lambda(lam, F).degree() == n);
  }
}

TEST_CASE("missing series components raise a truncation error") {
  const auto F = foulkes_series(0, 4);
  CHECK_THROWS_AS(F.at(5), TruncationError);
  CHECK_THROWS_AS(H_lambda({5}, F), TruncationError);
}

TEST_CASE("memoised evaluator matches direct products") {
  const auto F = foulkes_series(2, 8);
  PlethysticEvaluator ev(F);
  for (const auto& lam : partitions_cached(7)) {
    CHECK(ev.H(lam) == H_lambda(lam, F));
    CHECK(ev.E(lam) == E_lambda(lam, F));
  }
}

TEST_CASE("product expansions reproduce the conjugation family sums") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<ProductFactor> all, odd, distinct;
    for (int m = 1; m <= n; ++m) {
      all.push_back({m, -1, -1});
      if (m % 2) odd.push_back({m, -1, -1});
      distinct.push_back({m, 1, 1});
    }
    CHECK(product_expansion(all, n) == sum_over(partitions_cached(n)));
    CHECK(product_expansion(odd, n) == sum_over(members(FamilySpec::odd_parts(), n)));
    CHECK(product_expansion(distinct, n) == sum_over(members(FamilySpec::distinct(), n)));
  }
}

TEST_CASE("series inverse, log and exp") {
  const auto F = foulkes_series(0, 8);
  GradedSeries one_plus = series_add(GradedSeries::one(8), F);
  const auto inv = series_inverse(one_plus);
  CHECK(series_mul(one_plus, inv) == GradedSeries::one(8));
  CHECK(series_exp(series_log(one_plus)) == one_plus);
}

TEST_CASE("power-sum JSON round trip") {
  const auto f = P({2, 1}, make_rational(1, 2)) - P({3}, 4);
  CHECK(power_sum_from_json(to_json(f)) == f);
}
