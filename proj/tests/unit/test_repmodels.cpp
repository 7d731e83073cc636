#include "doctest.h"

#include "symcon/characters.hpp"
#include "symcon/errors.hpp"
#include "symcon/numbertheory.hpp"
#include "symcon/repmodels.hpp"

using namespace symcon;

namespace {

PowerSumExpr P(std::initializer_list<int> parts, const Rational& c = 1) {
  return PowerSumExpr::monomial(Partition(parts), c);
}

PowerSumExpr ch(ModuleId id, int n) { return module_char(ModuleSpec(id), n); }

Rational fact(int n) { return from_u64(factorial(n)); }

}  // namespace

TEST_CASE("second totient character is h2") { CHECK(foulkes(2, 0) == h_n(2)); }

TEST_CASE("fifth totient character in the Schur basis") {
  const auto s = to_schur(foulkes(5, 0), 5);
  CHECK(to_pretty(s) == "1·(5) + 1·(3,2) + 2·(3,1,1) + 1·(2,2,1) + 1·(1,1,1,1,1)");
}

TEST_CASE("Moebius character for k equal one") {
  for (int n = 1; n <= 10; ++n) {
    PowerSumExpr want;
    for (long d : divisors(n)) {
      want.add_term(Partition(std::vector<int>(static_cast<std::size_t>(n / d), static_cast<int>(d))),
                    make_rational(moebius(d), n));
    }
    CHECK(foulkes(n, 1) == want);
  }
}

TEST_CASE("totient character multiplicities count tableaux by major index") {
  for (int n = 1; n <= 9; ++n) {
    const auto s = to_schur(foulkes(n, 0), n);
    for (const auto& [nu, m] : s.mults) CHECK(m == Rational(from_u64(maj_multiplicity(nu, n, 0))));
  }
}

TEST_CASE("evaluations at plus and minus one for the totient case") {
  for (int n = 1; n <= 30; ++n) {
    CHECK(f_eval(n, 0, 1) == 1);
    CHECK(f_eval(n, 0, -1) == (n % 2 ? -1 : 0));
  }
  CHECK(f_eval(6, 2, -1) == 0);
  CHECK(f_eval(4, 2, -1) == 1);
}

TEST_CASE("closed-form evaluations agree with the defining sums") {
  for (int n = 1; n <= 30; ++n) {
    for (long k = 0; k <= 12; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(Rational(f_eval(n, k, 1)) == f_eval_direct(n, k, 1));
      CHECK(Rational(f_eval(n, k, -1)) == f_eval_direct(n, k, -1));
    }
  }
}

TEST_CASE("family sums give the conjugation characteristics") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(power_sum_family(FamilySpec::all(), n) == ch(ModuleId::Psi, n));
    CHECK(power_sum_family(FamilySpec::odd_parts(), n) == ch(ModuleId::Eps, n));
    CHECK(power_sum_family(FamilySpec::distinct_odd(), n) == ch(ModuleId::UDO, n));
  }
}

TEST_CASE("induced alternating-group conjugation at three") {
  const auto f = ch(ModuleId::AltInduced, 3);
  CHECK(f == P({3}, 2) + P({1, 1, 1}));
  CHECK(to_pretty(to_schur(f, 3)) == "3·(3) + 3·(1,1,1)");
}

TEST_CASE("alternating-group conjugation at four") {
  CHECK(to_pretty(to_schur(ch(ModuleId::PsiA, 4), 4)) == "3·(4) + 1·(3,1) + 1·(2,2) + 1·(2,1,1) + 1·(1,1,1,1)");
}

TEST_CASE("U minus is anti-fixed by omega") {
  for (int n = 1; n <= 10; ++n) CHECK(omega(ch(ModuleId::UMinus, n)) == -ch(ModuleId::UMinus, n));
}

TEST_CASE("module dimensions") {
  for (int n = 2; n <= 8; ++n) {
    for (auto id : {ModuleId::Psi, ModuleId::Eps, ModuleId::UPlus, ModuleId::AltInduced}) {
      CHECK(dimension(ch(id, n)) == fact(n));
    }
    for (auto id : {ModuleId::PsiA, ModuleId::PsiAbar, ModuleId::EpsA, ModuleId::EpsAbar}) {
      CHECK(dimension(ch(id, n)) == fact(n) / 2);
    }
    CHECK(dimension(ch(ModuleId::UMinus, n)) == 0);
    CHECK(dimension(ch(ModuleId::UDO, n)) == 0);
    for (int k = 2; k <= 6; ++k) CHECK(dimension(W(n, k)) == fact(n));
  }
}

TEST_CASE("self-conjugate modules") {
  for (int n = 1; n <= 10; ++n) {
    for (auto id : {ModuleId::Eps, ModuleId::UDO}) CHECK(omega(ch(id, n)) == ch(id, n));
    const auto sum = ch(ModuleId::UPlus, n) + ch(ModuleId::UDO, n);
    CHECK(omega(sum) == sum);
  }
  for (int n = 2; n <= 10; ++n) {
    CHECK(omega(ch(ModuleId::UPlus, n)) == ch(ModuleId::UPlus, n));
    CHECK(omega(ch(ModuleId::AltInduced, n)) == ch(ModuleId::AltInduced, n));
  }
}

TEST_CASE("linear relations among the conjugation modules") {
  for (int n = 2; n <= 10; ++n) {
    const auto psi = ch(ModuleId::Psi, n);
    const auto a = ch(ModuleId::PsiA, n);
    const auto abar = ch(ModuleId::PsiAbar, n);
    const auto up = ch(ModuleId::UPlus, n);
    const auto um = ch(ModuleId::UMinus, n);
    const auto udo = ch(ModuleId::UDO, n);
    const auto alt = ch(ModuleId::AltInduced, n);
    CHECK(psi == a + abar);
    CHECK(udo == a - abar);
    CHECK(up == abar + omega(abar));
    CHECK(scale(2, um) == psi - omega(psi));
    CHECK(alt == up + scale(2, udo));
    CHECK(alt == a + omega(a));
    CHECK(up == psi + omega(psi) - alt);
  }
}

TEST_CASE("plethystic and product routes agree with the power-sum form") {
  for (const auto& m : named_modules()) {
    for (int n = 2; n <= 8; ++n) {
      CAPTURE(m.name());
      CAPTURE(n);
      const auto direct = module_char(m, n);
      if (auto via = module_char_plethystic(m, n)) CHECK(*via == direct);
      if (auto via = module_char_product(m, n)) CHECK(*via == direct);
    }
  }
}

TEST_CASE("W for k equal two at four") {
  const auto w = W(4, 2);
  CHECK(w == P({1, 1, 1, 1}) + P({2, 1, 1}) + P({2, 2}));
  const auto h2 = h_n(2), e2 = e_n(2);
  CHECK(w == scale(3, h2 * h2) + e2 * e2);
  CHECK(W(3, 5) == P({1, 1, 1}));
}

TEST_CASE("W closed forms") {
  for (int m = 1; m <= 5; ++m) CHECK(W2_complete_form(m) == W(2 * m, 2));
  for (int n = 1; n <= 12; ++n) {
    for (int k = 2; k <= 6; ++k) CHECK(W_closed_form(n, k) == W(n, k));
  }
}

TEST_CASE("free Lie algebra identities pass through degree ten") {
  for (const auto& r : lie_series_identities(10)) {
    CAPTURE(to_line(r));
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("product formulas for the Foulkes families") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 3}, {6, 1}, {7, 4}}) {
    for (const auto& r : foulkes_products(n, k)) {
      CAPTURE(to_line(r));
      CHECK(r.status == Status::Pass);
    }
  }
}

TEST_CASE("module names round trip through the parser") {
  for (const auto& m : named_modules()) CHECK(parse_module(m.name()).name() == m.name());
  CHECK(parse_module("w:3").name() == "w:3");
  CHECK(parse_module("family:odd-parts").id == ModuleId::Family);
  CHECK_THROWS_AS(parse_module("w:1"), ParameterError);
  CHECK_THROWS_AS(parse_module("w:two"), ParameterError);
  CHECK_THROWS_AS(parse_module("nothing"), ParameterError);
}
