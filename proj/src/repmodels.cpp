#include "symcon/repmodels.hpp"

#include "symcon/errors.hpp"
#include "symcon/numbertheory.hpp"

namespace symcon {

long foulkes_weight(long d, long k) { return k == 0 ? totient(d) : ramanujan_sum(d, k); }

PowerSumExpr foulkes(int n, long k) {
  if (n < 1) throw ParameterError("foulkes: n must be positive");
  PowerSumExpr out;
  for (long d : divisors(n)) {
    const long w = foulkes_weight(d, k);
    if (w == 0) continue;
    out.add_term(Partition(std::vector<int>(static_cast<std::size_t>(n / d), static_cast<int>(d))), make_rational(w, n));
  }
  return out;
}

GradedSeries foulkes_series(long k, int truncation) {
  return GradedSeries::from_components(truncation, [k](int d) { return foulkes(d, k); });
}

namespace {

bool divides(long d, long k) { return k % d == 0; }

}  // namespace

long f_eval(int n, long k, int sign) {
  if (n < 1) throw ParameterError("f_eval: n must be positive");
  if (sign != 1 && sign != -1) throw ParameterError("f_eval: sign must be +1 or -1");
  const bool odd = n % 2 == 1;
  if (k == 0) {
    // Totient case.
    if (sign == 1) return 1;
    return odd ? -1 : 0;
  }
  if (k == 1) {
    // Möbius case.
    if (sign == 1) return n == 1 ? 1 : 0;
    return n == 1 ? -1 : (n == 2 ? 1 : 0);
  }
  if (sign == 1) return divides(n, k) ? 1 : 0;
  if (odd) return divides(n, k) ? -1 : 0;
  return divides(n / 2, k) && !divides(n, k) ? 1 : 0;
}

Rational f_eval_direct(int n, long k, int sign) {
  if (n < 1) throw ParameterError("f_eval_direct: n must be positive");
  Rational total = 0;
  for (long d : divisors(n)) {
    const long w = foulkes_weight(d, k);
    total += (sign < 0 && (n / d) % 2 == 1) ? -w : w;
  }
  return total / n;
}

PowerSumExpr power_sum_family(const FamilySpec& spec, int n) {
  PowerSumExpr out;
  for (const auto& lambda : members(spec, n)) out.add_term(lambda, 1);
  return out;
}

// ---------------------------------------------------------------- modules

std::string ModuleSpec::name() const {
  switch (id) {
    case ModuleId::Psi: return "psi";
    case ModuleId::Eps: return "eps";
    case ModuleId::PsiA: return "psi-a";
    case ModuleId::PsiAbar: return "psi-abar";
    case ModuleId::EpsA: return "eps-a";
    case ModuleId::EpsAbar: return "eps-abar";
    case ModuleId::UPlus: return "u-plus";
    case ModuleId::UMinus: return "u-minus";
    case ModuleId::UDO: return "u-do";
    case ModuleId::AltInduced: return "alt-induced";
    case ModuleId::W: return "w:" + std::to_string(k);
    case ModuleId::Family: return "family:" + family.name();
  }
  return "?";
}

ModuleSpec parse_module(const std::string& text) {
  static const std::pair<const char*, ModuleId> simple[] = {
      {"psi", ModuleId::Psi},         {"eps", ModuleId::Eps},
      {"psi-a", ModuleId::PsiA},      {"psi-abar", ModuleId::PsiAbar},
      {"eps-a", ModuleId::EpsA},      {"eps-abar", ModuleId::EpsAbar},
      {"u-plus", ModuleId::UPlus},    {"u-minus", ModuleId::UMinus},
      {"u-do", ModuleId::UDO},        {"alt-induced", ModuleId::AltInduced},
  };
  for (const auto& [name, id] : simple) {
    if (text == name) return ModuleSpec{id};
  }
  if (text.rfind("w:", 0) == 0) {
    ModuleSpec m{ModuleId::W};
    try {
      std::size_t used = 0;
      m.k = std::stoi(text.substr(2), &used);
      if (used != text.size() - 2) throw ParameterError("");
    } catch (const std::exception&) {
      throw ParameterError("bad W parameter in '" + text + "'");
    }
    if (m.k < 2) throw ParameterError("W needs k >= 2");
    return m;
  }
  if (text.rfind("family:", 0) == 0) {
    ModuleSpec m{ModuleId::Family};
    m.family = parse_family(text.substr(7));
    return m;
  }
  throw ParameterError("unknown module: " + text);
}

std::vector<ModuleSpec> named_modules() {
  return {ModuleSpec{ModuleId::Psi},   ModuleSpec{ModuleId::Eps},     ModuleSpec{ModuleId::PsiA},
          ModuleSpec{ModuleId::PsiAbar}, ModuleSpec{ModuleId::EpsA},  ModuleSpec{ModuleId::EpsAbar},
          ModuleSpec{ModuleId::UPlus}, ModuleSpec{ModuleId::UMinus},  ModuleSpec{ModuleId::UDO},
          ModuleSpec{ModuleId::AltInduced}};
}

namespace {

PowerSumExpr fam(const FamilySpec& s, int n) { return power_sum_family(s, n); }

PowerSumExpr half(const PowerSumExpr& f) { return scale(Rational(1, 2), f); }

PowerSumExpr plus_omega(const PowerSumExpr& f) { return add(f, omega(f)); }

}  // namespace

PowerSumExpr module_char(const ModuleSpec& m, int n) {
  if (n < 1) throw ParameterError("module_char: n must be positive");
  switch (m.id) {
    case ModuleId::Psi: return fam(FamilySpec::all(), n);
    case ModuleId::Eps: return fam(FamilySpec::odd_parts(), n);
    case ModuleId::PsiA: return half(add(fam(FamilySpec::distinct_odd(), n), fam(FamilySpec::all(), n)));
    case ModuleId::PsiAbar: return half(fam(FamilySpec::not_do(), n));
    // The power-sum forms of the twisted coset splits are stated after ω.
    case ModuleId::EpsA:
      return half(add(fam(FamilySpec::odd_parts(), n), omega(fam(FamilySpec::distinct(), n))));
    case ModuleId::EpsAbar:
      return half(sub(fam(FamilySpec::odd_parts(), n), omega(fam(FamilySpec::distinct(), n))));
    case ModuleId::UPlus: return fam(FamilySpec::not_do_even_sign(), n);
    case ModuleId::UMinus: return fam(FamilySpec::odd_sign(), n);
    case ModuleId::UDO: return fam(FamilySpec::distinct_odd(), n);
    case ModuleId::AltInduced:
      return add(scale(2, fam(FamilySpec::distinct_odd(), n)), fam(FamilySpec::not_do_even_sign(), n));
    case ModuleId::W: return W(n, m.k);
    case ModuleId::Family: return fam(m.family, n);
  }
  throw ParameterError("module_char: unknown module");
}

std::optional<PowerSumExpr> module_char_plethystic(const ModuleSpec& m, int n) {
  if (n < 1) throw ParameterError("module_char_plethystic: n must be positive");
  const GradedSeries F = foulkes_series(0, n);
  auto psi = [&] { return sum_H(n, F); };
  auto fk = [&](int k) { return foulkes_series(k, n); };
  switch (m.id) {
    case ModuleId::Psi: return psi();
    case ModuleId::Eps: return sum_E(n, F);
    case ModuleId::PsiA: return sum_H(n, F, SignFilter::EvenSign);
    case ModuleId::PsiAbar: return sum_H(n, F, SignFilter::OddSign);
    case ModuleId::EpsA: return sum_E(n, F, SignFilter::EvenSign);
    case ModuleId::EpsAbar: return sum_E(n, F, SignFilter::OddSign);
    case ModuleId::UPlus: return plus_omega(sum_H(n, F, SignFilter::OddSign));
    case ModuleId::UMinus: {
      const PowerSumExpr p = psi();
      return half(sub(p, omega(p)));
    }
    case ModuleId::UDO: return sum_H(n, F, SignFilter::Alternating);
    case ModuleId::AltInduced: return plus_omega(sum_H(n, F, SignFilter::EvenSign));
    case ModuleId::W:
      if (!is_prime(m.k)) return std::nullopt;
      return sum_H(n, fk(m.k));
    case ModuleId::Family: {
      const FamilySpec& s = m.family;
      switch (s.kind) {
        case FamilyKind::All: return psi();
        case FamilyKind::OddParts: return sum_E(n, F);
        case FamilyKind::EvenSign: return half(plus_omega(psi()));
        case FamilyKind::OddSign: return module_char_plethystic(ModuleSpec{ModuleId::UMinus}, n);
        case FamilyKind::NotDO: return scale(2, sum_H(n, F, SignFilter::OddSign));
        case FamilyKind::NotDOEvenSign: return module_char_plethystic(ModuleSpec{ModuleId::UPlus}, n);
        case FamilyKind::DO: return sum_H(n, F, SignFilter::Alternating);
        case FamilyKind::Distinct: return omega(sum_E(n, F, SignFilter::Alternating));
        case FamilyKind::PartsDivideK: return sum_H(n, fk(s.param));
        case FamilyKind::PartsOneOrK:
          if (s.param != 1 && !is_prime(s.param)) return std::nullopt;
          return sum_H(n, fk(s.param));
        case FamilyKind::WeightedEvenParts:
        case FamilyKind::PrimePFamily: return omega(sum_E(n, fk(s.param)));
        case FamilyKind::LexSegment:
        case FamilyKind::Explicit: return std::nullopt;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

namespace {

// The four product generating functions evaluated at degree n for the
// Foulkes family with parameter k:
//   sym      Σ H_λ            = ∏ (1 - t^m p_m)^{-f_m(1)}
//   sym_alt  Σ (-1)^{n-ℓ} H_λ = ∏ (1 + (-1)^{m-1} t^m p_m)^{-f_m(-1)}
//   ext      Σ E_λ            = ∏ (1 - t^m p_m)^{f_m(-1)}
//   ext_alt  Σ (-1)^{n-ℓ} E_λ = ∏ (1 + (-1)^{m-1} t^m p_m)^{f_m(1)}
enum class Gen { Sym, SymAlt, Ext, ExtAlt, AltExterior };

PowerSumExpr generating(Gen g, long k, int n) {
  std::vector<ProductFactor> factors;
  for (int m = 1; m <= n; ++m) {
    const int alt_sign = m % 2 ? 1 : -1;
    switch (g) {
      case Gen::Sym: factors.push_back({m, Rational(-f_eval(m, k, 1)), -1}); break;
      case Gen::SymAlt: factors.push_back({m, Rational(-f_eval(m, k, -1)), alt_sign}); break;
      case Gen::Ext: factors.push_back({m, Rational(f_eval(m, k, -1)), -1}); break;
      case Gen::ExtAlt: factors.push_back({m, Rational(f_eval(m, k, 1)), alt_sign}); break;
      case Gen::AltExterior: factors.push_back({m, Rational(f_eval(m, k, 1)), 1}); break;
    }
  }
  return product_expansion(factors, n);
}

}  // namespace

std::optional<PowerSumExpr> module_char_product(const ModuleSpec& m, int n) {
  if (n < 1) throw ParameterError("module_char_product: n must be positive");
  auto A = [&] { return generating(Gen::Sym, 0, n); };
  auto B = [&] { return generating(Gen::SymAlt, 0, n); };
  auto C = [&] { return generating(Gen::Ext, 0, n); };
  auto D = [&] { return generating(Gen::ExtAlt, 0, n); };
  auto psi_abar = [&] { return half(sub(A(), B())); };
  auto u_minus = [&] {
    const PowerSumExpr a = A();
    return half(sub(a, omega(a)));
  };
  auto one_or_k = [&](int k) {
    return product_expansion({{1, -1, -1}, {k, -1, -1}}, n);
  };
  switch (m.id) {
    case ModuleId::Psi: return A();
    case ModuleId::Eps: return C();
    case ModuleId::PsiA: return half(add(A(), B()));
    case ModuleId::PsiAbar: return psi_abar();
    case ModuleId::EpsA: return half(add(C(), D()));
    case ModuleId::EpsAbar: return half(sub(C(), D()));
    case ModuleId::UPlus: return plus_omega(psi_abar());
    case ModuleId::UMinus: return u_minus();
    case ModuleId::UDO: return B();
    case ModuleId::AltInduced: return plus_omega(half(add(A(), B())));
    case ModuleId::W: return one_or_k(m.k);
    case ModuleId::Family: {
      const FamilySpec& s = m.family;
      switch (s.kind) {
        case FamilyKind::All: return A();
        case FamilyKind::OddParts: return C();
        case FamilyKind::EvenSign: return half(plus_omega(A()));
        case FamilyKind::OddSign: return u_minus();
        case FamilyKind::NotDO: return sub(A(), B());
        case FamilyKind::NotDOEvenSign: return plus_omega(psi_abar());
        case FamilyKind::DO: return B();
        case FamilyKind::Distinct: return generating(Gen::AltExterior, 0, n);
        case FamilyKind::PartsDivideK: return generating(Gen::Sym, s.param, n);
        case FamilyKind::PartsOneOrK:
          if (s.param == 1) return power(PowerSumExpr::p(1), n);
          return one_or_k(s.param);
        case FamilyKind::WeightedEvenParts:
        case FamilyKind::PrimePFamily: return omega(generating(Gen::Ext, s.param, n));
        case FamilyKind::LexSegment:
        case FamilyKind::Explicit: return std::nullopt;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- W_{n,k}

PowerSumExpr W(int n, int k) {
  if (n < 0 || k < 1) throw ParameterError("W: need n >= 0 and k >= 1");
  PowerSumExpr out;
  for (int r = 0; r * k <= n; ++r) {
    std::vector<int> parts(static_cast<std::size_t>(r), k);
    parts.insert(parts.end(), static_cast<std::size_t>(n - k * r), 1);
    out.add_term(Partition(std::move(parts)), 1);
  }
  return out;
}

PowerSumExpr W_closed_form(int n, int k) {
  if (n < 0 || k < 1) throw ParameterError("W_closed_form: need n >= 0 and k >= 1");
  const int m = n / k;
  const int tail = n - m * k;
  const PowerSumExpr p1k = power(PowerSumExpr::p(1), k);
  const PowerSumExpr pk = PowerSumExpr::p(k);
  const PowerSumExpr alpha = sub(p1k, pk);
  const PowerSumExpr beta = add(p1k, pk);
  PowerSumExpr acc;
  for (int j = 1; j <= m + 1; j += 2) {
    acc += scale(binomial(m + 1, j), mul(power(beta, m + 1 - j), power(alpha, j - 1)));
  }
  Rational two_m = 1;
  for (int i = 0; i < m; ++i) two_m *= 2;
  return mul(power(PowerSumExpr::p(1), tail), scale(1 / two_m, acc));
}

PowerSumExpr W2_complete_form(int m) {
  const PowerSumExpr h2 = h_n(2);
  const PowerSumExpr e2 = e_n(2);
  PowerSumExpr acc;
  for (int j = 1; j <= m + 1; j += 2) {
    acc += scale(binomial(m + 1, j), mul(power(h2, m + 1 - j), power(e2, j - 1)));
  }
  return acc;
}

// ---------------------------------------------------------------- Lie series

GradedSeries lie_series(int truncation) { return foulkes_series(1, truncation); }

GradedSeries pi_alt_series(int truncation) {
  return series_alt(series_omega(lie_series(truncation)));
}

namespace {

GradedSeries linear_series(int truncation, std::initializer_list<std::pair<int, PowerSumExpr>> terms) {
  GradedSeries s = GradedSeries::one(truncation);
  for (const auto& [d, f] : terms) {
    if (d <= truncation) s.set(d, add(s[d], f));
  }
  return s;
}

// Σ_{n} t^n Σ_{λ ⊢ n} H_λ[F] (or E_λ) through the truncation degree.
GradedSeries plethystic_series(const GradedSeries& F, bool elementary) {
  GradedSeries G = GradedSeries::one(F.truncation());
  for (int d = 1; d <= F.truncation(); ++d) G.set(d, elementary ? sum_E(d, F) : sum_H(d, F));
  return G;
}

}  // namespace

CheckResult exterior_quotient_check(const GradedSeries& F, int n, const std::string& id) {
  const GradedSeries G = plethystic_series(F, false);
  const GradedSeries quotient = series_mul(G, series_inverse(series_plethysm_p(2, G)));
  return compare(id, n, sum_E(n, F), quotient[n]);
}

std::vector<CheckResult> lie_series_identities(int n_max) {
  std::vector<CheckResult> out;
  if (n_max < 1) return out;
  const GradedSeries L = lie_series(n_max);
  const GradedSeries pi_alt = pi_alt_series(n_max);
  const PowerSumExpr p1 = PowerSumExpr::p(1);
  const PowerSumExpr p2 = PowerSumExpr::p(2);
  const GradedSeries ext_target =
      series_mul(linear_series(n_max, {{2, scale(-1, p2)}}), series_inverse(linear_series(n_max, {{1, scale(-1, p1)}})));
  const GradedSeries pi_ext_target =
      series_mul(linear_series(n_max, {{1, p1}}), series_inverse(linear_series(n_max, {{2, p2}})));
  const GradedSeries G = plethystic_series(L, false);
  const GradedSeries quotient = series_mul(G, series_inverse(series_plethysm_p(2, G)));
  for (int n = 1; n <= n_max; ++n) {
    const PowerSumExpr symL = sum_H(n, L);
    const PowerSumExpr extL = sum_E(n, L);
    out.push_back(compare("cor5.2.1", n, symL, power(p1, n)));
    out.push_back(compare("cor5.2.2", n, sum_H(n, pi_alt), n == 1 ? p1 : PowerSumExpr()));
    out.push_back(compare("cor5.2.3", n, extL, ext_target[n]));
    const PowerSumExpr exterior_lie = n >= 2 ? scale(2, mul(power(p1, n - 2), e_n(2))) : p1;
    out.push_back(compare("cor5.3", n, extL, exterior_lie));
    out.push_back(compare("prop5.4", n, sum_E(n, pi_alt), pi_ext_target[n]));
    out.push_back(compare("lemma5.5", n, extL, quotient[n]));
  }
  return out;
}

std::vector<CheckResult> foulkes_products(int n, int k) {
  if (n < 1 || k < 1) throw ParameterError("foulkes_products: need n, k >= 1");
  const GradedSeries F = foulkes_series(k, n);
  const GradedSeries wFalt = series_alt(series_omega(F));
  const std::string tag = "[k=" + std::to_string(k) + "]";
  std::vector<ProductFactor> sym, ext, ext_omega, alt_ext, alt_sym, alt_sym_omega;
  for (long d : divisors(k)) {
    const int di = static_cast<int>(d);
    sym.push_back({di, -1, -1});
    alt_ext.push_back({di, 1, 1});
    if (d % 2 == 1) {
      ext.push_back({di, -1, -1});
      ext_omega.push_back({di, -1, -1});
      alt_sym.push_back({di, 1, 1});
      alt_sym_omega.push_back({di, 1, 1});
    }
    if (k % (2 * d) != 0) {
      ext.push_back({2 * di, 1, -1});
      ext_omega.push_back({2 * di, 1, 1});
      alt_sym.push_back({2 * di, -1, 1});
      alt_sym_omega.push_back({2 * di, -1, -1});
    }
  }
  const PowerSumExpr sumH = sum_H(n, F);
  const PowerSumExpr sumE = sum_E(n, F);
  const PowerSumExpr altE = omega(sum_E(n, F, SignFilter::Alternating));
  const PowerSumExpr altH = omega(sum_H(n, F, SignFilter::Alternating));
  std::vector<CheckResult> out;
  out.push_back(compare("thm5.9.1" + tag, n, sumH, product_expansion(sym, n)));
  out.push_back(compare("thm5.9.2" + tag, n, sumH, power_sum_family(FamilySpec::parts_divide_k(k), n)));
  out.push_back(compare("thm5.9.3" + tag, n, sumE, product_expansion(ext, n)));
  out.push_back(compare("thm5.9.4" + tag, n, omega(sumE), product_expansion(ext_omega, n)));
  out.push_back(compare("thm5.9.5" + tag, n, omega(sumE), power_sum_family(FamilySpec::weighted_even_parts(k), n)));
  const PowerSumExpr rhs6 = product_expansion(alt_ext, n);
  auto r6 = compare("thm5.9.6" + tag, n, altE, rhs6);
  if (!r6.failed()) r6 = compare("thm5.9.6" + tag, n, sum_H(n, wFalt), rhs6);
  out.push_back(r6);
  const PowerSumExpr rhs7 = product_expansion(alt_sym, n);
  auto r7 = compare("thm5.9.7" + tag, n, altH, rhs7);
  if (!r7.failed()) r7 = compare("thm5.9.7" + tag, n, sum_E(n, wFalt), rhs7);
  out.push_back(r7);
  out.push_back(compare("thm5.9.8" + tag, n, sum_H(n, F, SignFilter::Alternating), product_expansion(alt_sym_omega, n)));
  return out;
}

}  // namespace symcon
