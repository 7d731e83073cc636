#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symcon/family.hpp"
#include "symcon/report.hpp"
#include "symcon/symfunc.hpp"

namespace symcon {

// ψ_k(d) = c_d(k); k = 0 gives φ(d), the conjugation (totient) case.
long foulkes_weight(long d, long k);

// f_n = (1/n) Σ_{d|n} ψ_k(d) p_d^{n/d}.
PowerSumExpr foulkes(int n, long k);

// Σ_{n≥1} t^n f_n truncated at degree N.
GradedSeries foulkes_series(long k, int truncation);

// Closed forms for f_n(1) (sign = +1) and f_n(-1) (sign = -1), where
// f_n(u) = (1/n) Σ_{d|n} ψ_k(d) u^{n/d}.
long f_eval(int n, long k, int sign);
// The same value computed from the defining sum.
Rational f_eval_direct(int n, long k, int sign);

PowerSumExpr power_sum_family(const FamilySpec& spec, int n);

enum class ModuleId {
  Psi,
  Eps,
  PsiA,
  PsiAbar,
  EpsA,
  EpsAbar,
  UPlus,
  UMinus,
  UDO,
  AltInduced,
  W,
  Family,
};

struct ModuleSpec {
  ModuleSpec() = default;
  explicit ModuleSpec(ModuleId module_id, int k_param = 0) : id(module_id), k(k_param) {}
  static ModuleSpec of_family(FamilySpec spec) {
    ModuleSpec m(ModuleId::Family);
    m.family = std::move(spec);
    return m;
  }

  ModuleId id = ModuleId::Psi;
  int k = 0;             // W only
  FamilySpec family;     // Family only

  std::string name() const;
};

ModuleSpec parse_module(const std::string& text);

// The ten named modules of the conjugacy-action story (W and Family are
// parameterised and listed separately).
std::vector<ModuleSpec> named_modules();

// Power-sum form.
PowerSumExpr module_char(const ModuleSpec& m, int n);
// Sums of H_λ[F] / E_λ[F] over the totient series, where such a form exists.
std::optional<PowerSumExpr> module_char_plethystic(const ModuleSpec& m, int n);
// Coefficient extraction from product generating functions, where such a
// form exists.
std::optional<PowerSumExpr> module_char_product(const ModuleSpec& m, int n);

// W_{n,k} = Σ_r p_k^r p_1^{n-kr}.
PowerSumExpr W(int n, int k);
// p_1^t · 2^{-m} Σ_{j odd} C(m+1,j) β^{m+1-j} α^{j-1}, n = mk + t.
PowerSumExpr W_closed_form(int n, int k);
// Σ_{j odd} C(m+1,j) h_2^{m+1-j} e_2^{j-1} for W_{2m,2}.
PowerSumExpr W2_complete_form(int m);

// Lie_n = foulkes(n,1) and π^alt = Σ (-1)^{i-1} t^i ω(Lie_i).
GradedSeries lie_series(int truncation);
GradedSeries pi_alt_series(int truncation);

// Free Lie algebra identities checked degreewise through n_max.
std::vector<CheckResult> lie_series_identities(int n_max);

// E[F] at degree n against G/G[p_2] with G = H[F], through the series
// inverse.
CheckResult exterior_quotient_check(const GradedSeries& F, int n, const std::string& id);

// Product formulas for the Foulkes family F^{(k)} at degree n.
std::vector<CheckResult> foulkes_products(int n, int k);

}  // namespace symcon
