#include "symcon/symfunc.hpp"

#include <sstream>

#include "json.hpp"

#include "symcon/errors.hpp"

namespace symcon {

// ---------------------------------------------------------------- PowerSumExpr

PowerSumExpr PowerSumExpr::constant(const Rational& c) {
  PowerSumExpr f;
  f.add_term(Partition(), c);
  return f;
}

PowerSumExpr PowerSumExpr::monomial(const Partition& lambda, const Rational& c) {
  PowerSumExpr f;
  f.add_term(lambda, c);
  return f;
}

PowerSumExpr PowerSumExpr::p(int m) { return monomial(Partition{m}); }

Rational PowerSumExpr::coeff(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? Rational(0) : it->second;
}

void PowerSumExpr::add_term(const Partition& lambda, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int PowerSumExpr::max_degree() const {
  return terms_.empty() ? -1 : terms_.rbegin()->first.size();
}

bool PowerSumExpr::is_homogeneous() const {
  return terms_.empty() || terms_.begin()->first.size() == terms_.rbegin()->first.size();
}

int PowerSumExpr::degree() const {
  if (terms_.empty()) throw DegreeError("degree of the zero expression is undefined");
  if (!is_homogeneous()) throw DegreeError("expression is not homogeneous");
  return terms_.begin()->first.size();
}

PowerSumExpr PowerSumExpr::component(int d) const {
  PowerSumExpr out;
  for (const auto& [lambda, c] : terms_) {
    if (lambda.size() == d) out.terms_.emplace_hint(out.terms_.end(), lambda, c);
  }
  return out;
}

PowerSumExpr& PowerSumExpr::operator+=(const PowerSumExpr& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
  return *this;
}

PowerSumExpr& PowerSumExpr::operator-=(const PowerSumExpr& other) {
  for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
  return *this;
}

PowerSumExpr& PowerSumExpr::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= c;
  return *this;
}

std::string PowerSumExpr::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [lambda, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (lambda.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + " ";
    out += "p" + lambda.to_string();
  }
  return out;
}

PowerSumExpr add(const PowerSumExpr& f, const PowerSumExpr& g) {
  PowerSumExpr out = f;
  out += g;
  return out;
}

PowerSumExpr sub(const PowerSumExpr& f, const PowerSumExpr& g) {
  PowerSumExpr out = f;
  out -= g;
  return out;
}

PowerSumExpr mul(const PowerSumExpr& f, const PowerSumExpr& g) {
  PowerSumExpr out;
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) out.add_term(a.join(b), ca * cb);
  }
  return out;
}

PowerSumExpr scale(const Rational& c, const PowerSumExpr& f) {
  PowerSumExpr out = f;
  out *= c;
  return out;
}

PowerSumExpr power(const PowerSumExpr& f, int e) {
  if (e < 0) throw ParameterError("power: negative exponent");
  PowerSumExpr out = PowerSumExpr::constant(1);
  for (int i = 0; i < e; ++i) out = mul(out, f);
  return out;
}

PowerSumExpr omega(const PowerSumExpr& f) {
  PowerSumExpr out;
  for (const auto& [lambda, c] : f.terms()) {
    out.add_term(lambda, (lambda.size() - lambda.length()) % 2 ? Rational(-c) : c);
  }
  return out;
}

Rational inner_product(const PowerSumExpr& f, const PowerSumExpr& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  if (f.degree() != g.degree()) throw DegreeError("inner_product: degrees differ");
  Rational total = 0;
  for (const auto& [lambda, c] : f.terms()) {
    auto it = g.terms().find(lambda);
    if (it != g.terms().end()) total += c * it->second * from_u64(z_lambda(lambda));
  }
  return total;
}

PowerSumExpr p1_derivative(const PowerSumExpr& f) {
  PowerSumExpr out;
  for (const auto& [lambda, c] : f.terms()) {
    const int m1 = lambda.multiplicity(1);
    if (m1 == 0) continue;
    out.add_term(lambda.without_part(1), c * m1);
  }
  return out;
}

Rational dimension(const PowerSumExpr& f) {
  if (f.is_zero()) return 0;
  const int n = f.degree();
  return from_u64(factorial(n)) * f.coeff(Partition(std::vector<int>(static_cast<std::size_t>(n), 1)));
}

PowerSumExpr h_n(int n) {
  PowerSumExpr out;
  for (const auto& lambda : partitions_cached(n)) {
    out.add_term(lambda, Rational(1) / from_u64(z_lambda(lambda)));
  }
  return out;
}

PowerSumExpr e_n(int n) {
  PowerSumExpr out;
  for (const auto& lambda : partitions_cached(n)) {
    Rational c = Rational(1) / from_u64(z_lambda(lambda));
    if ((n - lambda.length()) % 2) c = -c;
    out.add_term(lambda, c);
  }
  return out;
}

PowerSumExpr plethysm_p(int a, const PowerSumExpr& g) {
  if (a < 1) throw ParameterError("plethysm_p: a must be positive");
  PowerSumExpr out;
  for (const auto& [lambda, c] : g.terms()) out.add_term(lambda.scaled(a), c);
  return out;
}

namespace {

std::vector<PowerSumExpr> newton_upto(int m, const PowerSumExpr& g, bool elementary) {
  if (m < 0) throw ParameterError("plethysm: m must be nonnegative");
  std::vector<PowerSumExpr> pr(static_cast<std::size_t>(m) + 1);
  for (int r = 1; r <= m; ++r) pr[static_cast<std::size_t>(r)] = plethysm_p(r, g);
  std::vector<PowerSumExpr> out(static_cast<std::size_t>(m) + 1);
  out[0] = PowerSumExpr::constant(1);
  for (int j = 1; j <= m; ++j) {
    PowerSumExpr acc;
    for (int r = 1; r <= j; ++r) {
      PowerSumExpr term = mul(pr[static_cast<std::size_t>(r)], out[static_cast<std::size_t>(j - r)]);
      if (elementary && r % 2 == 0) acc -= term;
      else acc += term;
    }
    acc *= Rational(1, j);
    out[static_cast<std::size_t>(j)] = std::move(acc);
  }
  return out;
}

}  // namespace

std::vector<PowerSumExpr> plethysm_h_upto(int m, const PowerSumExpr& g) { return newton_upto(m, g, false); }
std::vector<PowerSumExpr> plethysm_e_upto(int m, const PowerSumExpr& g) { return newton_upto(m, g, true); }

PowerSumExpr plethysm_h(int m, const PowerSumExpr& g) { return newton_upto(m, g, false).back(); }
PowerSumExpr plethysm_e(int m, const PowerSumExpr& g) { return newton_upto(m, g, true).back(); }

PowerSumExpr plethysm(const PowerSumExpr& f, const PowerSumExpr& g) {
  std::map<int, PowerSumExpr> pa;
  PowerSumExpr out;
  for (const auto& [lambda, c] : f.terms()) {
    PowerSumExpr term = PowerSumExpr::constant(c);
    for (int part : lambda.parts()) {
      auto it = pa.find(part);
      if (it == pa.end()) it = pa.emplace(part, plethysm_p(part, g)).first;
      term = mul(term, it->second);
    }
    out += term;
  }
  return out;
}

// ---------------------------------------------------------------- GradedSeries

GradedSeries::GradedSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw ParameterError("GradedSeries: negative truncation");
  comps_.resize(static_cast<std::size_t>(truncation) + 1);
}

const PowerSumExpr& GradedSeries::operator[](int d) const { return at(d); }

const PowerSumExpr& GradedSeries::at(int d) const {
  if (d < 0 || d > truncation_) {
    throw TruncationError("series component " + std::to_string(d) + " requested beyond truncation " +
                          std::to_string(truncation_));
  }
  return comps_[static_cast<std::size_t>(d)];
}

void GradedSeries::set(int d, PowerSumExpr value) {
  if (d < 0 || d > truncation_) throw TruncationError("set: degree beyond truncation");
  if (!value.is_zero() && value.degree() != d) {
    throw DegreeError("series component " + std::to_string(d) + " is not homogeneous of that degree");
  }
  comps_[static_cast<std::size_t>(d)] = std::move(value);
}

GradedSeries GradedSeries::one(int truncation) {
  GradedSeries s(truncation);
  s.set(0, PowerSumExpr::constant(1));
  return s;
}

GradedSeries series_add(const GradedSeries& a, const GradedSeries& b) {
  const int N = std::min(a.truncation(), b.truncation());
  GradedSeries out(N);
  for (int d = 0; d <= N; ++d) out.set(d, add(a[d], b[d]));
  return out;
}

GradedSeries series_sub(const GradedSeries& a, const GradedSeries& b) {
  const int N = std::min(a.truncation(), b.truncation());
  GradedSeries out(N);
  for (int d = 0; d <= N; ++d) out.set(d, sub(a[d], b[d]));
  return out;
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  const int N = std::min(a.truncation(), b.truncation());
  GradedSeries out(N);
  for (int d = 0; d <= N; ++d) {
    PowerSumExpr acc;
    for (int i = 0; i <= d; ++i) {
      if (a[i].is_zero() || b[d - i].is_zero()) continue;
      acc += mul(a[i], b[d - i]);
    }
    out.set(d, std::move(acc));
  }
  return out;
}

GradedSeries series_scale(const Rational& c, const GradedSeries& a) {
  GradedSeries out(a.truncation());
  for (int d = 0; d <= a.truncation(); ++d) out.set(d, scale(c, a[d]));
  return out;
}

GradedSeries series_omega(const GradedSeries& a) {
  GradedSeries out(a.truncation());
  for (int d = 0; d <= a.truncation(); ++d) out.set(d, omega(a[d]));
  return out;
}

GradedSeries series_inverse(const GradedSeries& a) {
  if (!(a[0] == PowerSumExpr::constant(1))) {
    throw ParameterError("series_inverse: constant term must be 1");
  }
  GradedSeries out = GradedSeries::one(a.truncation());
  for (int d = 1; d <= a.truncation(); ++d) {
    PowerSumExpr acc;
    for (int j = 1; j <= d; ++j) {
      if (a[j].is_zero() || out[d - j].is_zero()) continue;
      acc -= mul(a[j], out[d - j]);
    }
    out.set(d, std::move(acc));
  }
  return out;
}

GradedSeries series_log(const GradedSeries& a) {
  if (!(a[0] == PowerSumExpr::constant(1))) {
    throw ParameterError("series_log: constant term must be 1");
  }
  // From t·A' = A·(t·L'):  d·L_d = d·A_d - Σ_{j<d} j·L_j·A_{d-j}.
  GradedSeries L(a.truncation());
  for (int d = 1; d <= a.truncation(); ++d) {
    PowerSumExpr acc = scale(d, a[d]);
    for (int j = 1; j < d; ++j) {
      if (L[j].is_zero() || a[d - j].is_zero()) continue;
      acc -= scale(j, mul(L[j], a[d - j]));
    }
    acc *= Rational(1, d);
    L.set(d, std::move(acc));
  }
  return L;
}

GradedSeries series_exp(const GradedSeries& a) {
  if (!a[0].is_zero()) throw ParameterError("series_exp: constant term must be 0");
  GradedSeries E = GradedSeries::one(a.truncation());
  for (int d = 1; d <= a.truncation(); ++d) {
    PowerSumExpr acc;
    for (int j = 1; j <= d; ++j) {
      if (a[j].is_zero() || E[d - j].is_zero()) continue;
      acc += scale(j, mul(a[j], E[d - j]));
    }
    acc *= Rational(1, d);
    E.set(d, std::move(acc));
  }
  return E;
}

GradedSeries series_plethysm_p(int a, const GradedSeries& s) {
  GradedSeries out(s.truncation());
  out.set(0, s[0]);
  for (int d = 1; d * a <= s.truncation(); ++d) out.set(d * a, plethysm_p(a, s[d]));
  return out;
}

GradedSeries series_alt(const GradedSeries& s) {
  GradedSeries out(s.truncation());
  for (int d = 0; d <= s.truncation(); ++d) out.set(d, d % 2 == 0 && d > 0 ? scale(-1, s[d]) : s[d]);
  return out;
}

// ---------------------------------------------------------------- H_λ, E_λ

namespace {

PowerSumExpr product_over_multiplicities(const Partition& lambda, const GradedSeries& F, bool elementary) {
  PowerSumExpr out = PowerSumExpr::constant(1);
  const auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    const auto& fi = F.at(static_cast<int>(i));
    out = mul(out, elementary ? plethysm_e(m[i], fi) : plethysm_h(m[i], fi));
  }
  return out;
}

}  // namespace

PowerSumExpr H_lambda(const Partition& lambda, const GradedSeries& F) {
  return product_over_multiplicities(lambda, F, false);
}

PowerSumExpr E_lambda(const Partition& lambda, const GradedSeries& F) {
  return product_over_multiplicities(lambda, F, true);
}

PlethysticEvaluator::PlethysticEvaluator(const GradedSeries& F) : F_(F) {}

const PowerSumExpr& PlethysticEvaluator::h(int m, int i) {
  auto& v = hcache_[i];
  if (static_cast<int>(v.size()) <= m) v = plethysm_h_upto(m, F_.at(i));
  return v[static_cast<std::size_t>(m)];
}

const PowerSumExpr& PlethysticEvaluator::e(int m, int i) {
  auto& v = ecache_[i];
  if (static_cast<int>(v.size()) <= m) v = plethysm_e_upto(m, F_.at(i));
  return v[static_cast<std::size_t>(m)];
}

PowerSumExpr PlethysticEvaluator::H(const Partition& lambda) {
  PowerSumExpr out = PowerSumExpr::constant(1);
  const auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i]) out = mul(out, h(m[i], static_cast<int>(i)));
  }
  return out;
}

PowerSumExpr PlethysticEvaluator::E(const Partition& lambda) {
  PowerSumExpr out = PowerSumExpr::constant(1);
  const auto m = lambda.multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    if (m[i]) out = mul(out, e(m[i], static_cast<int>(i)));
  }
  return out;
}

namespace {

PowerSumExpr filtered_sum(int n, const GradedSeries& F, SignFilter filter, bool elementary, bool length_sign) {
  PlethysticEvaluator ev(F);
  PowerSumExpr out;
  for (const auto& lambda : partitions_cached(n)) {
    const bool odd = (n - lambda.length()) % 2 == 1;
    int sign = 1;
    switch (filter) {
      case SignFilter::All: break;
      case SignFilter::EvenSign: if (odd) continue; break;
      case SignFilter::OddSign: if (!odd) continue; break;
      case SignFilter::Alternating: sign = odd ? -1 : 1; break;
    }
    if (length_sign && lambda.length() % 2) sign = -sign;
    PowerSumExpr term = elementary ? ev.E(lambda) : ev.H(lambda);
    if (sign < 0) out -= term;
    else out += term;
  }
  return out;
}

}  // namespace

PowerSumExpr sum_H(int n, const GradedSeries& F, SignFilter filter) {
  return filtered_sum(n, F, filter, false, false);
}

PowerSumExpr sum_E(int n, const GradedSeries& F, SignFilter filter) {
  return filtered_sum(n, F, filter, true, false);
}

PowerSumExpr sum_H_pm(int n, const GradedSeries& F) { return filtered_sum(n, F, SignFilter::All, false, true); }
PowerSumExpr sum_E_pm(int n, const GradedSeries& F) { return filtered_sum(n, F, SignFilter::All, true, true); }

// ---------------------------------------------------------------- products

GradedSeries product_series(const std::vector<ProductFactor>& factors, int truncation) {
  GradedSeries acc = GradedSeries::one(truncation);
  for (const auto& f : factors) {
    if (f.m < 1) throw ParameterError("product factor degree must be positive");
    if (f.c == 0 || f.m > truncation) continue;
    // (1 + s x)^c = Σ_j binom(c, j) s^j x^j with x = t^m p_m.
    GradedSeries factor = GradedSeries::one(truncation);
    Rational binom = 1;
    for (int j = 1; j * f.m <= truncation; ++j) {
      binom *= f.c - (j - 1);
      binom /= j;
      if (binom == 0) break;
      const Rational coef = (f.sign < 0 && j % 2) ? Rational(-binom) : binom;
      factor.set(j * f.m, PowerSumExpr::monomial(Partition(std::vector<int>(static_cast<std::size_t>(j), f.m)), coef));
    }
    acc = series_mul(acc, factor);
  }
  return acc;
}

PowerSumExpr product_expansion(const std::vector<ProductFactor>& factors, int n) {
  if (n < 0) throw ParameterError("product_expansion: n must be nonnegative");
  return product_series(factors, n)[n];
}

// ---------------------------------------------------------------- JSON

std::string to_json(const PowerSumExpr& f) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [lambda, c] : f.terms()) j[lambda.to_json_key()] = c.get_str();
  return j.dump();
}

PowerSumExpr power_sum_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("power-sum JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParameterError("power-sum JSON must be an object");
  PowerSumExpr out;
  for (const auto& [key, value] : j.items()) {
    Rational c;
    if (value.is_string()) c = parse_rational(value.get<std::string>());
    else if (value.is_number_integer()) c = Rational(value.get<long>());
    else throw ParameterError("power-sum JSON coefficients must be strings or integers");
    out.add_term(parse_partition(key), c);
  }
  return out;
}

}  // namespace symcon
