#pragma once

#include <map>
#include <string>
#include <vector>

#include "symcon/partition.hpp"
#include "symcon/rational.hpp"

namespace symcon {

// Σ c_λ p_λ with exact rational coefficients. Zero coefficients are never
// stored, so two expressions are equal iff their term maps are equal.
class PowerSumExpr {
 public:
  using Terms = std::map<Partition, Rational, GradedRevLex>;

  PowerSumExpr() = default;
  static PowerSumExpr constant(const Rational& c);
  static PowerSumExpr monomial(const Partition& lambda, const Rational& c = 1);
  // p_m as a single part.
  static PowerSumExpr p(int m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }

  Rational coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Rational& c);

  // -1 for the zero expression.
  int max_degree() const;
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous expression; throws DegreeError otherwise.
  int degree() const;
  PowerSumExpr component(int d) const;

  PowerSumExpr& operator+=(const PowerSumExpr& other);
  PowerSumExpr& operator-=(const PowerSumExpr& other);
  PowerSumExpr& operator*=(const Rational& c);

  friend bool operator==(const PowerSumExpr&, const PowerSumExpr&) = default;

  // Human readable: "1/2 p(2,1) + p(3)".
  std::string to_string() const;

 private:
  Terms terms_;
};

PowerSumExpr add(const PowerSumExpr& f, const PowerSumExpr& g);
PowerSumExpr sub(const PowerSumExpr& f, const PowerSumExpr& g);
PowerSumExpr mul(const PowerSumExpr& f, const PowerSumExpr& g);
PowerSumExpr scale(const Rational& c, const PowerSumExpr& f);
PowerSumExpr power(const PowerSumExpr& f, int e);

inline PowerSumExpr operator+(const PowerSumExpr& f, const PowerSumExpr& g) { return add(f, g); }
inline PowerSumExpr operator-(const PowerSumExpr& f, const PowerSumExpr& g) { return sub(f, g); }
inline PowerSumExpr operator*(const PowerSumExpr& f, const PowerSumExpr& g) { return mul(f, g); }
inline PowerSumExpr operator*(const Rational& c, const PowerSumExpr& f) { return scale(c, f); }
inline PowerSumExpr operator-(const PowerSumExpr& f) { return scale(-1, f); }

PowerSumExpr omega(const PowerSumExpr& f);

// Hall inner product ⟨p_λ, p_μ⟩ = z_λ δ_{λμ}. Both arguments must be
// homogeneous of the same degree unless one of them is zero.
Rational inner_product(const PowerSumExpr& f, const PowerSumExpr& g);

PowerSumExpr p1_derivative(const PowerSumExpr& f);

// n!·[p_{1^n}] f for homogeneous f of degree n.
Rational dimension(const PowerSumExpr& f);

// Complete and elementary symmetric functions in the power-sum basis.
PowerSumExpr h_n(int n);
PowerSumExpr e_n(int n);

// p_a[g]: every part of every key is multiplied by a.
PowerSumExpr plethysm_p(int a, const PowerSumExpr& g);

// h_m[g] and e_m[g] via the Newton recurrences.
PowerSumExpr plethysm_h(int m, const PowerSumExpr& g);
PowerSumExpr plethysm_e(int m, const PowerSumExpr& g);

// All of h_0[g], ..., h_m[g] (resp. e_j) in one pass.
std::vector<PowerSumExpr> plethysm_h_upto(int m, const PowerSumExpr& g);
std::vector<PowerSumExpr> plethysm_e_upto(int m, const PowerSumExpr& g);

// General plethysm f[g] = Σ c_λ ∏ p_{λ_i}[g].
PowerSumExpr plethysm(const PowerSumExpr& f, const PowerSumExpr& g);

// Σ_n t^n q_n truncated at degree N, with component 0 allowed (constant
// term). Component d must be homogeneous of degree d.
class GradedSeries {
 public:
  GradedSeries() = default;
  explicit GradedSeries(int truncation);

  int truncation() const { return truncation_; }
  const PowerSumExpr& operator[](int d) const;
  // Throws TruncationError when d is beyond the truncation degree.
  const PowerSumExpr& at(int d) const;
  void set(int d, PowerSumExpr value);

  // Builds a series from a generator callable f(d) for 1 ≤ d ≤ N.
  template <class Fn>
  static GradedSeries from_components(int truncation, Fn&& fn) {
    GradedSeries s(truncation);
    for (int d = 1; d <= truncation; ++d) s.set(d, fn(d));
    return s;
  }

  static GradedSeries one(int truncation);

  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

 private:
  int truncation_ = 0;
  std::vector<PowerSumExpr> comps_;
};

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
GradedSeries series_scale(const Rational& c, const GradedSeries& a);
GradedSeries series_omega(const GradedSeries& a);
// Multiplicative inverse; the constant term must be exactly 1.
GradedSeries series_inverse(const GradedSeries& a);
// log(a) for constant term 1, and exp(a) for constant term 0.
GradedSeries series_log(const GradedSeries& a);
GradedSeries series_exp(const GradedSeries& a);
// Component-wise p_a[·]; degree d of the input lands in degree a·d.
GradedSeries series_plethysm_p(int a, const GradedSeries& s);
// Σ_i (-1)^{i-1} t^i q_i, i.e. Q^alt.
GradedSeries series_alt(const GradedSeries& s);

// H_λ[F] = ∏ h_{m_i}[F_i] and E_λ[F] = ∏ e_{m_i}[F_i].
PowerSumExpr H_lambda(const Partition& lambda, const GradedSeries& F);
PowerSumExpr E_lambda(const Partition& lambda, const GradedSeries& F);

// Memoised evaluator for many H_λ / E_λ over the same series. Not
// thread-safe; create one per thread.
class PlethysticEvaluator {
 public:
  explicit PlethysticEvaluator(const GradedSeries& F);
  PowerSumExpr H(const Partition& lambda);
  PowerSumExpr E(const Partition& lambda);
  const PowerSumExpr& h(int m, int i);
  const PowerSumExpr& e(int m, int i);

 private:
  const GradedSeries& F_;
  std::map<int, std::vector<PowerSumExpr>> hcache_;
  std::map<int, std::vector<PowerSumExpr>> ecache_;
};

// Signs applied to H_λ / E_λ in the generating functions.
enum class SignFilter { All, EvenSign, OddSign, Alternating };

// Σ_{λ ⊢ n} s(λ) H_λ[F], where s is 1 (All), the indicator of n-ℓ even or
// odd, or (-1)^{n-ℓ} (Alternating).
PowerSumExpr sum_H(int n, const GradedSeries& F, SignFilter filter = SignFilter::All);
PowerSumExpr sum_E(int n, const GradedSeries& F, SignFilter filter = SignFilter::All);

// Σ_{λ ⊢ n} (-1)^{ℓ(λ)} H_λ[F] and the E analogue: the v = -1 case of the
// graded generating functions.
PowerSumExpr sum_H_pm(int n, const GradedSeries& F);
PowerSumExpr sum_E_pm(int n, const GradedSeries& F);

// One factor (1 + sign·t^m p_m)^c of a product expansion. The exponent is
// rational to allow the logarithmic forms; integer exponents are the usual
// case.
struct ProductFactor {
  int m = 1;
  Rational c = 1;
  int sign = 1;
};

// Coefficient of t^n in ∏ (1 + sign·t^m p_m)^c.
PowerSumExpr product_expansion(const std::vector<ProductFactor>& factors, int n);

// Same product as a truncated series.
GradedSeries product_series(const std::vector<ProductFactor>& factors, int truncation);

// JSON object text {"[2,1]": "1/2", ...}.
std::string to_json(const PowerSumExpr& f);
PowerSumExpr power_sum_from_json(const std::string& text);

}  // namespace symcon
