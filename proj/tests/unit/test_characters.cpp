#include "doctest.h"

#include "symcon/characters.hpp"
#include "symcon/config.hpp"
#include "symcon/errors.hpp"
#include "symcon/family.hpp"
#include "symcon/repmodels.hpp"

using namespace symcon;

namespace {

int sign_of(const Partition& mu) { return (mu.size() - mu.length()) % 2 ? -1 : 1; }

}  // namespace

TEST_CASE("trivial and sign characters") {
  for (int n = 1; n <= 8; ++n) {
    const auto ones = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
    for (const auto& mu : partitions_cached(n)) {
      CHECK(mn_character({n}, mu) == 1);
      CHECK(mn_character(ones, mu) == sign_of(mu));
    }
  }
}

TEST_CASE("non-hook characters vanish on an n-cycle") {
  CHECK(mn_character({2, 2}, {4}) == 0);
  CHECK(mn_character({3, 1, 1}, {5}) == 1);
  CHECK(mn_character({2, 1, 1, 1}, {5}) == -1);
}

TEST_CASE("character values reject mismatched sizes") {
  CHECK_THROWS_AS(mn_character({2, 1}, {2, 2}), ParameterError);
}

TEST_CASE("small character tables") {
  CHECK(character_table(1).raw() == std::vector<std::int64_t>{1});
  const auto& t3 = character_table(3);
  const int row = revlex_index({2, 1});
  CHECK(t3.at(row, 0) == -1);
  CHECK(t3.at(row, 1) == 0);
  CHECK(t3.at(row, 2) == 2);
  CHECK(&character_table(6) == &character_table(6));
}

TEST_CASE("character tables respect the capacity cap") {
  set_max_n(8);
  CHECK_THROWS_AS(character_table(9), CapacityError);
  set_max_n(kHardMaxN);
}

TEST_CASE("alternant oracle values") {
  CHECK(alternant_oracle({2, 1}, {3}) == -1);
  for (const auto& mu : partitions_cached(5)) CHECK(alternant_oracle({5}, mu) == 1);
}

TEST_CASE("border-strip recursion agrees with the alternant oracle up to six") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& nu : partitions_cached(n)) {
      for (const auto& mu : partitions_cached(n)) {
        CAPTURE(nu.to_string());
        CAPTURE(mu.to_string());
        CHECK(mn_character(nu, mu) == alternant_oracle(nu, mu));
      }
    }
  }
}

TEST_CASE("column orthogonality holds exactly") {
  for (int n = 1; n <= 9; ++n) {
    const auto& t = character_table(n);
    const int d = t.dim();
    for (int a = 0; a < d; ++a) {
      for (int b = a; b < d; ++b) {
        std::int64_t s = 0;
        for (int r = 0; r < d; ++r) s += t.at(r, a) * t.at(r, b);
        const auto expect = a == b ? static_cast<std::int64_t>(z_lambda(t.labels()[a])) : 0;
        CHECK(s == expect);
      }
    }
  }
}

TEST_CASE("conjugating the shape twists by the sign") {
  for (int n = 1; n <= 10; ++n) {
    const auto& t = character_table(n);
    for (const auto& nu : t.labels()) {
      for (const auto& mu : t.labels()) CHECK(t.value(nu.conjugate(), mu) == sign_of(mu) * t.value(nu, mu));
    }
  }
}

TEST_CASE("conversion to Schur functions") {
  PowerSumExpr all;
  for (const auto& p : partitions_cached(3)) all.add_term(p, 1);
  const auto s = to_schur(all, 3);
  CHECK(s.mult({3}) == 3);
  CHECK(s.mult({2, 1}) == 1);
  CHECK(s.mult({1, 1, 1}) == 1);
  CHECK(s.verdict == Verdict::Positive);
  CHECK(to_pretty(s) == "3·(3) + 1·(2,1) + 1·(1,1,1)");
  CHECK(to_json(s) == R"({"n":3,"mults":{"[3]":3,"[2,1]":1,"[1,1,1]":1},"verdict":"POSITIVE"})");
}

TEST_CASE("the regular representation expands by tableau counts") {
  for (int n = 1; n <= 8; ++n) {
    const auto s = to_schur(PowerSumExpr::monomial(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))), n);
    for (const auto& [nu, m] : s.mults) CHECK(m == Rational(from_u64(syt_count(nu))));
    CHECK(s.verdict == Verdict::Positive);
  }
}

TEST_CASE("Schur to power sums and back is the identity") {
  for (int n = 1; n <= 9; ++n) {
    for (const auto& nu : partitions_cached(n)) {
      const auto s = to_schur(schur_to_power(nu), n);
      for (const auto& [lam, m] : s.mults) CHECK(m == (lam == nu ? 1 : 0));
    }
  }
}

TEST_CASE("sign multiplicity of the first negative family is minus one at four") {
  FamilySpec t = FamilySpec::odd_sign();
  auto list = members(t, 4);
  list.push_back({1, 1, 1, 1});
  const auto s = to_schur(power_sum_family(FamilySpec::explicit_set(list), 4), 4);
  CHECK(s.mult({1, 1, 1, 1}) == -1);
  CHECK(s.verdict == Verdict::Mixed);
}

TEST_CASE("verdict classification") {
  using M = std::vector<std::pair<Partition, Rational>>;
  CHECK(classify(M{{{2}, 1}, {{1, 1}, 2}}) == Verdict::Positive);
  CHECK(classify(M{{{2}, 1}, {{1, 1}, 0}}) == Verdict::Nonnegative);
  CHECK(classify(M{{{2}, 1}, {{1, 1}, -1}}) == Verdict::Mixed);
  CHECK(classify(M{{{2}, make_rational(1, 2)}, {{1, 1}, 1}}) == Verdict::NonIntegral);
}

TEST_CASE("inhomogeneous input is rejected by the Schur conversion") {
  CHECK_THROWS_AS(to_schur(PowerSumExpr::p(2) + PowerSumExpr::p(3), 3), DegreeError);
  CHECK(to_schur(PowerSumExpr(), 4).verdict == Verdict::Nonnegative);
}
