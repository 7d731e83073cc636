#include "symcon/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "json.hpp"

#include "symcon/config.hpp"
#include "symcon/errors.hpp"
#include "symcon/kernels.hpp"
#include "mn.hpp"

namespace symcon {

CharacterTable::CharacterTable(int n, std::vector<std::int64_t> values) : n_(n), values_(std::move(values)) {
  const auto d = static_cast<std::size_t>(dim());
  if (values_.size() != d * d) throw ParameterError("CharacterTable: wrong number of entries");
}

std::int64_t CharacterTable::value(const Partition& nu, const Partition& mu) const {
  if (nu.size() != n_ || mu.size() != n_) throw ParameterError("CharacterTable::value: size mismatch");
  return at(revlex_index(nu), revlex_index(mu));
}

std::int64_t mn_character(const Partition& nu, const Partition& mu) {
  if (nu.size() != mu.size()) throw ParameterError("mn_character: |nu| != |mu|");
  detail::MNEvaluator ev;
  return ev.value(nu, mu);
}

const CharacterTable& character_table(int n) {
  if (n < 0) throw ParameterError("character_table: negative n");
  require_capacity(n, "character_table");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<CharacterTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<CharacterTable>(n, kernels::omp::character_values(n));
  return *slot;
}

std::int64_t alternant_oracle(const Partition& nu, const Partition& mu) {
  const int n = nu.size();
  if (mu.size() != n) throw ParameterError("alternant_oracle: |nu| != |mu|");
  if (n > 6) throw CapacityError("alternant_oracle supports n <= 6 only");
  if (n == 0) return 1;
  using Monomial = std::vector<int>;
  // p_mu in n variables, as exponent vector -> coefficient.
  std::map<Monomial, std::int64_t> poly{{Monomial(static_cast<std::size_t>(n), 0), 1}};
  for (int part : mu.parts()) {
    std::map<Monomial, std::int64_t> next;
    for (const auto& [mono, c] : poly) {
      for (int v = 0; v < n; ++v) {
        Monomial m = mono;
        m[static_cast<std::size_t>(v)] += part;
        next[m] += c;
      }
    }
    poly = std::move(next);
  }
  Monomial target(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    target[static_cast<std::size_t>(i)] = (i < nu.length() ? nu[i] : 0) + (n - 1 - i);
  }
  // Σ_w sgn(w) [x^{target - w(δ)}] p_mu, with w running over orderings of δ.
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::int64_t total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
      }
    }
    Monomial need(static_cast<std::size_t>(n));
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      const int delta = n - 1 - perm[static_cast<std::size_t>(i)];
      need[static_cast<std::size_t>(i)] = target[static_cast<std::size_t>(i)] - delta;
      if (need[static_cast<std::size_t>(i)] < 0) ok = false;
    }
    if (!ok) continue;
    auto it = poly.find(need);
    if (it != poly.end()) total += inversions % 2 ? -it->second : it->second;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Positive: return "POSITIVE";
    case Verdict::Nonnegative: return "NONNEGATIVE";
    case Verdict::Mixed: return "MIXED";
    case Verdict::NonIntegral: return "NON_INTEGRAL";
  }
  return "?";
}

Rational SchurExpansion::mult(const Partition& nu) const {
  for (const auto& [lambda, m] : mults) {
    if (lambda == nu) return m;
  }
  throw ParameterError("SchurExpansion::mult: " + nu.to_string() + " is not a partition of " + std::to_string(n));
}

Verdict classify(const std::vector<std::pair<Partition, Rational>>& mults) {
  bool negative = false;
  bool has_zero = false;
  for (const auto& kv : mults) {
    if (!is_integer(kv.second)) return Verdict::NonIntegral;
    if (kv.second < 0) negative = true;
    if (kv.second == 0) has_zero = true;
  }
  if (negative) return Verdict::Mixed;
  return has_zero ? Verdict::Nonnegative : Verdict::Positive;
}

SchurExpansion to_schur(const PowerSumExpr& f, int n) {
  if (!f.is_zero() && (!f.is_homogeneous() || f.degree() != n)) {
    throw DegreeError("to_schur: expression is not homogeneous of degree " + std::to_string(n));
  }
  const auto& table = character_table(n);
  const auto values = kernels::omp::schur_multiplicities(table, f);
  SchurExpansion out;
  out.n = n;
  const auto& labels = table.labels();
  out.mults.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) out.mults.emplace_back(labels[i], values[i]);
  out.verdict = classify(out.mults);
  return out;
}

SchurExpansion to_schur(const PowerSumExpr& f) {
  if (f.is_zero()) throw DegreeError("to_schur: degree of the zero expression is ambiguous");
  return to_schur(f, f.degree());
}

PowerSumExpr schur_to_power(const Partition& nu) {
  const int n = nu.size();
  const auto& table = character_table(n);
  const int row = revlex_index(nu);
  PowerSumExpr out;
  const auto& labels = table.labels();
  for (int col = 0; col < table.dim(); ++col) {
    const auto& lambda = labels[static_cast<std::size_t>(col)];
    out.add_term(lambda, Rational(static_cast<long>(table.at(row, col))) / from_u64(z_lambda(lambda)));
  }
  return out;
}

namespace {

nlohmann::ordered_json rational_json(const Rational& r) {
  if (is_integer(r) && r.get_num().fits_slong_p()) return r.get_num().get_si();
  return r.get_str();
}

}  // namespace

std::string to_json(const SchurExpansion& s) {
  nlohmann::ordered_json j;
  j["n"] = s.n;
  auto mults = nlohmann::ordered_json::object();
  for (const auto& [nu, m] : s.mults) {
    if (m != 0) mults[nu.to_json_key()] = rational_json(m);
  }
  j["mults"] = mults;
  j["verdict"] = to_string(s.verdict);
  return j.dump();
}

std::string to_pretty(const SchurExpansion& s) {
  std::string out;
  for (const auto& [nu, m] : s.mults) {
    if (m == 0) continue;
    if (out.empty()) {
      out += m.get_str();
    } else {
      out += m < 0 ? " - " + Rational(-m).get_str() : " + " + m.get_str();
    }
    out += "·" + nu.to_string();
  }
  return out.empty() ? "0" : out;
}

}  // namespace symcon
