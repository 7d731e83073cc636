#include "symcon/verify.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>

#include <omp.h>

#include "symcon/characters.hpp"
#include "symcon/config.hpp"
#include "symcon/errors.hpp"
#include "symcon/kernels.hpp"
#include "symcon/numbertheory.hpp"
#include "symcon/repmodels.hpp"
#include "symcon/tables.hpp"

namespace symcon {

namespace {

using Expr = PowerSumExpr;

Expr fam(const FamilySpec& s, int n) { return power_sum_family(s, n); }
Expr half(const Expr& f) { return scale(Rational(1, 2), f); }
Expr plus_omega(const Expr& f) { return add(f, omega(f)); }

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Partition hook(int arm, int legs) {
  std::vector<int> parts{arm};
  parts.insert(parts.end(), static_cast<std::size_t>(legs), 1);
  return Partition(std::move(parts));
}

std::string tag(const std::string& key, long value) { return "[" + key + "=" + std::to_string(value) + "]"; }

// ------------------------------------------------------------ memoisation

// Results shared by several catalog entries at the same degree, computed
// once per (key, n). Values are never evicted.
template <class T>
const T& memo(const std::string& key, int n, const std::function<T()>& make) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, int>, std::shared_ptr<const T>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({key, n});
    if (it != cache.end()) return *it->second;
  }
  auto value = std::make_shared<const T>(make());
  std::lock_guard<std::mutex> lock(mutex);
  return *cache.emplace(std::make_pair(key, n), std::move(value)).first->second;
}

const GradedSeries& series_k(long k, int n) {
  return memo<GradedSeries>("F" + std::to_string(k), n, [&] { return foulkes_series(k, n); });
}

const Expr& sum_h(int n, SignFilter s = SignFilter::All, long k = 0) {
  return memo<Expr>("H" + std::to_string(static_cast<int>(s)) + ":" + std::to_string(k), n,
                    [&] { return sum_H(n, series_k(k, n), s); });
}

const Expr& sum_e(int n, SignFilter s = SignFilter::All, long k = 0) {
  return memo<Expr>("E" + std::to_string(static_cast<int>(s)) + ":" + std::to_string(k), n,
                    [&] { return sum_E(n, series_k(k, n), s); });
}

CheckResult pick(const std::vector<CheckResult>& results, const std::string& id, int n) {
  for (const auto& r : results) {
    if (r.id == id && r.n == n) return r;
  }
  return fail(id, n, "no result produced", {});
}

// ------------------------------------------------------------ check builder

// Accumulates sub-checks for one catalog result. The first failing sub-check
// decides the outcome; later ones are skipped.
class Checks {
 public:
  Checks(std::string id, int n) : id_(std::move(id)), n_(n) {}

  Checks& eq(const std::string& what, const Expr& lhs, const Expr& rhs) {
    if (failure_) return *this;
    auto r = compare(id_, n_, lhs, rhs);
    if (r.failed()) {
      r.detail = what + ": " + r.detail;
      failure_ = std::move(r);
    } else {
      done_.push_back(what);
    }
    return *this;
  }

  Checks& positive(const std::string& what, const Expr& f, PositivityMode mode,
                   const std::vector<Partition>& exempt = {}) {
    if (failure_) return *this;
    auto r = check_positivity(id_, f, n_, mode, exempt);
    if (r.failed()) {
      r.detail = what + ": " + r.detail;
      failure_ = std::move(r);
    } else {
      done_.push_back(what);
    }
    return *this;
  }

  Checks& nonneg(const std::string& what, const Expr& f) { return positive(what, f, PositivityMode::Nonneg); }

  Checks& truth(const std::string& what, bool ok, Witness w = {}) {
    if (failure_) return *this;
    if (ok) {
      done_.push_back(what);
    } else {
      failure_ = fail(id_, n_, what + " does not hold", {std::move(w)});
    }
    return *this;
  }

  Checks& multiplicity(const std::string& what, const SchurExpansion& s, const Partition& nu, const Rational& want) {
    const Rational got = s.mult(nu);
    return truth(what + " (expected " + want.get_str() + ")", got == want, {nu, got, "computed multiplicity"});
  }

  CheckResult result() const {
    if (failure_) return *failure_;
    std::string detail;
    for (const auto& d : done_) detail += (detail.empty() ? "" : "; ") + d;
    return pass(id_, n_, detail);
  }

 private:
  std::string id_;
  int n_;
  std::optional<CheckResult> failure_;
  std::vector<std::string> done_;
};

// Every ν other than the listed ones appears; the listed ones are absent.
CheckResult strict_with_absent(const std::string& id, const Expr& f, int n, const std::vector<Partition>& absent) {
  Checks c(id, n);
  c.positive(absent.empty() ? "every irreducible appears" : "every other irreducible appears", f,
             absent.empty() ? PositivityMode::Strict : PositivityMode::StrictExcept, absent);
  if (!absent.empty()) {
    const auto s = to_schur(f, n);
    for (const auto& nu : absent) c.multiplicity(nu.to_string() + " is absent", s, nu, 0);
  }
  return c.result();
}

// ------------------------------------------------------------ product forms

// ∏_{m ≤ n} (1 + sign_m t^m p_m)^{c_m} at degree n.
template <class Fn>
Expr product_of(int n, Fn&& factor) {
  std::vector<ProductFactor> fs;
  for (int m = 1; m <= n; ++m) {
    ProductFactor pf = factor(m);
    if (pf.c != 0) fs.push_back(pf);
  }
  return product_expansion(fs, n);
}

int alt_sign(int m) { return m % 2 ? 1 : -1; }

Rational fv(int m, long k, int v) { return Rational(f_eval(m, k, v)); }

// Σ_d t^d (sum over weight-d partitions) as a series with constant term 1.
enum class Plethystic { H, E, Hpm, Epm };

GradedSeries plethystic_series(const GradedSeries& Q, int N, Plethystic which) {
  GradedSeries out = GradedSeries::one(N);
  for (int d = 1; d <= N; ++d) {
    switch (which) {
      case Plethystic::H: out.set(d, sum_H(d, Q)); break;
      case Plethystic::E: out.set(d, sum_E(d, Q)); break;
      case Plethystic::Hpm: out.set(d, sum_H_pm(d, Q)); break;
      case Plethystic::Epm: out.set(d, sum_E_pm(d, Q)); break;
    }
  }
  return out;
}

GradedSeries restrict_series(const GradedSeries& Q, const std::function<bool(int)>& keep) {
  GradedSeries out(Q.truncation());
  for (int d = 1; d <= Q.truncation(); ++d) {
    if (keep(d)) out.set(d, Q[d]);
  }
  return out;
}

// ------------------------------------------------------------ catalog builder

class Builder {
 public:
  std::vector<CatalogEntry> entries;

  CatalogEntry& add(std::string id, std::string group, EntryKind kind, int min_n, int max_n,
                    std::function<CheckResult(int)> run) {
    CatalogEntry e;
    e.id = std::move(id);
    e.group = std::move(group);
    e.kind = kind;
    e.min_n = min_n;
    e.max_n = max_n;
    e.run = std::move(run);
    entries.push_back(std::move(e));
    return entries.back();
  }

  // An identity lhs(n) == rhs(n) over the totient series.
  void identity(const std::string& id, const std::string& group, int min_n, std::function<Expr(int)> lhs,
                std::function<Expr(int)> rhs, const std::string& what) {
    add(id, group, EntryKind::Identity, min_n, kHardMaxN,
        [id, lhs, rhs, what](int n) { return Checks(id, n).eq(what, lhs(n), rhs(n)).result(); });
  }
};

constexpr int kMaxK = 6;

void add_family_positivity(Builder& b) {
  std::vector<std::pair<FamilySpec, int>> fams = {
      {FamilySpec::all(), 1},          {FamilySpec::odd_parts(), 1}, {FamilySpec::even_sign(), 1},
      {FamilySpec::not_do_even_sign(), 2}, {FamilySpec::not_do(), 2},
  };
  for (int k = 1; k <= kMaxK; ++k) fams.push_back({FamilySpec::parts_one_or_k(k), 1});
  for (int k = 1; k <= kMaxK; ++k) fams.push_back({FamilySpec::parts_divide_k(k), 1});
  for (int p : {3, 5, 7}) fams.push_back({FamilySpec::prime_p_family(p), 1});
  for (int k = 1; k <= kMaxK; ++k) fams.push_back({FamilySpec::weighted_even_parts(k), 1});
  for (const auto& [spec, from] : fams) {
    const FamilySpec s = spec;
    b.add("thm1.1[" + s.name() + "]", "thm1.1", EntryKind::Positivity, from, kHardMaxN,
          [s](int n) { return check_positivity(s, n, PositivityMode::Nonneg); });
  }
}

void add_conjugation_series(Builder& b) {
  const std::string g = "thm4.2";
  b.identity("thm4.2.1", g, 1, [](int n) { return sum_h(n); },
             [](int n) { return product_of(n, [](int m) { return ProductFactor{m, -1, -1}; }); },
             "sum H = prod (1 - p_m)^-1");
  b.identity("thm4.2.2", g, 1, [](int n) { return sum_h(n); }, [](int n) { return fam(FamilySpec::all(), n); },
             "sum H = sum over all p");
  b.identity("thm4.2.3", g, 1, [](int n) { return sum_e(n); },
             [](int n) {
               return product_of(n, [](int m) { return ProductFactor{m, m % 2 ? -1 : 0, -1}; });
             },
             "sum E = prod over odd m of (1 - p_m)^-1");
  b.identity("thm4.2.4", g, 1, [](int n) { return sum_e(n); }, [](int n) { return fam(FamilySpec::odd_parts(), n); },
             "sum E = sum over odd-part p");
  b.identity("thm4.2.5", g, 1, [](int n) { return omega(sum_e(n, SignFilter::Alternating)); },
             [](int n) { return product_of(n, [](int m) { return ProductFactor{m, 1, 1}; }); },
             "signed omega E = prod (1 + p_m)");
  b.identity("thm4.2.6", g, 1, [](int n) { return omega(sum_e(n, SignFilter::Alternating)); },
             [](int n) { return fam(FamilySpec::distinct(), n); }, "signed omega E = sum over distinct-part p");
  b.identity("thm4.2.7", g, 1, [](int n) { return omega(sum_h(n, SignFilter::Alternating)); },
             [](int n) { return product_of(n, [](int m) { return ProductFactor{m, m % 2 ? 1 : 0, 1}; }); },
             "signed omega H = prod over odd m of (1 + p_m)");
  b.identity("thm4.2.8", g, 1, [](int n) { return omega(sum_h(n, SignFilter::Alternating)); },
             [](int n) { return fam(FamilySpec::distinct_odd(), n); }, "signed omega H = sum over DO p");
}

void add_alternating_conjugation(Builder& b) {
  const std::string g = "thm4.11";
  auto all = [](int n) { return fam(FamilySpec::all(), n); };
  auto odd = [](int n) { return fam(FamilySpec::odd_parts(), n); };
  auto dist = [](int n) { return fam(FamilySpec::distinct(), n); };
  auto dop = [](int n) { return fam(FamilySpec::distinct_odd(), n); };
  b.add("thm4.11.1", g, EntryKind::Identity, 1, kHardMaxN, [=](int n) {
    return Checks("thm4.11.1", n)
        .eq("psi(A) + psi(Abar) = sum over all p", sum_h(n, SignFilter::EvenSign) + sum_h(n, SignFilter::OddSign), all(n))
        .eq("sum H = sum over all p", sum_h(n), all(n))
        .result();
  });
  b.add("thm4.11.2", g, EntryKind::Identity, 1, kHardMaxN, [=](int n) {
    const Expr rhs = half(dop(n) + all(n));
    return Checks("thm4.11.2", n).eq("psi(A) = (DO + all)/2", sum_h(n, SignFilter::EvenSign), rhs).nonneg("Schur-nonnegative", rhs).result();
  });
  b.add("thm4.11.3", g, EntryKind::Identity, 1, kHardMaxN, [=](int n) {
    const Expr rhs = half(fam(FamilySpec::not_do(), n));
    return Checks("thm4.11.3", n).eq("psi(Abar) = notDO/2", sum_h(n, SignFilter::OddSign), rhs).nonneg("Schur-nonnegative", rhs).result();
  });
  b.add("thm4.11.4", g, EntryKind::Identity, 1, kHardMaxN, [=](int n) {
    const Expr rhs = fam(FamilySpec::even_sign(), n);
    return Checks("thm4.11.4", n).eq("(psi + omega psi)/2 = even-sign p", half(plus_omega(sum_h(n))), rhs).nonneg("Schur-nonnegative", rhs).result();
  });
  b.add("thm4.11.5", g, EntryKind::Identity, 1, kHardMaxN, [=](int n) {
    return Checks("thm4.11.5", n)
        .eq("eps(A) + eps(Abar) = odd-part p", sum_e(n, SignFilter::EvenSign) + sum_e(n, SignFilter::OddSign), odd(n))
        .result();
  });
  b.add("thm4.11.6", g, EntryKind::Identity, 1, kHardMaxN, [=](int n) {
    const Expr rhs = half(odd(n) + dist(n));
    return Checks("thm4.11.6", n).eq("omega eps(A) = (odd + distinct)/2", omega(sum_e(n, SignFilter::EvenSign)), rhs).nonneg("Schur-nonnegative", rhs).result();
  });
  b.add("thm4.11.7", g, EntryKind::Identity, 1, kHardMaxN, [=](int n) {
    const Expr rhs = half(odd(n) - dist(n));
    return Checks("thm4.11.7", n).eq("omega eps(Abar) = (odd - distinct)/2", omega(sum_e(n, SignFilter::OddSign)), rhs).nonneg("Schur-nonnegative", rhs).result();
  });
}

// U⁺, U⁻, U^DO come from their power-sum definitions; ψ and its coset
// pieces come from the plethystic sums, so none of these is a tautology.
struct UParts {
  Expr up, um, udo, psi, psiA, psiAbar;
};

UParts u_parts(int n) {
  return {fam(FamilySpec::not_do_even_sign(), n), fam(FamilySpec::odd_sign(), n), fam(FamilySpec::distinct_odd(), n),
          sum_h(n), sum_h(n, SignFilter::EvenSign), sum_h(n, SignFilter::OddSign)};
}

void add_sign_splittings(Builder& b) {
  const std::string g = "prop4.13";
  auto entry = [&](const std::string& id, std::function<void(Checks&, const UParts&)> body) {
    b.add(id, g, EntryKind::Identity, 1, kHardMaxN, [id, body](int n) {
      Checks c(id, n);
      body(c, u_parts(n));
      return c.result();
    });
  };
  b.add("prop4.13.1", g, EntryKind::Identity, 1, kHardMaxN, [](int n) {
    const Expr udo = fam(FamilySpec::distinct_odd(), n);
    return Checks("prop4.13.1", n)
        .eq("U^DO = signed sum H", udo, sum_h(n, SignFilter::Alternating))
        .eq("U^DO self-conjugate", omega(udo), udo)
        .result();
  });
  entry("prop4.13.2", [](Checks& c, const UParts& u) {
    c.eq("U+ self-conjugate", omega(u.up), u.up).eq("omega U- = -U-", omega(u.um), -u.um);
  });
  entry("prop4.13.3", [](Checks& c, const UParts& u) { c.eq("psi = U+ + U- + U^DO", u.psi, u.up + u.um + u.udo); });
  entry("prop4.13.4", [](Checks& c, const UParts& u) {
    c.eq("omega psi = U+ - U- + U^DO", omega(u.psi), u.up - u.um + u.udo);
  });
  entry("prop4.13.5", [](Checks& c, const UParts& u) {
    c.eq("psi(A) = (U+ + U-)/2 + U^DO", u.psiA, half(u.up + u.um) + u.udo);
  });
  entry("prop4.13.6", [](Checks& c, const UParts& u) { c.eq("psi(Abar) = (U+ + U-)/2", u.psiAbar, half(u.up + u.um)); });
  entry("prop4.13.7", [](Checks& c, const UParts& u) { c.eq("2 U- = psi - omega psi", scale(2, u.um), u.psi - omega(u.psi)); });
  entry("prop4.13.8", [](Checks& c, const UParts& u) { c.eq("U^DO = psi(A) - psi(Abar)", u.udo, u.psiA - u.psiAbar); });
  entry("prop4.13.9", [](Checks& c, const UParts& u) { c.eq("U+ = psi(Abar) + omega psi(Abar)", u.up, plus_omega(u.psiAbar)); });
  entry("prop4.13.10", [](Checks& c, const UParts& u) {
    c.eq("U+ + U^DO = psi(A) + omega psi(Abar)", u.up + u.udo, u.psiA + omega(u.psiAbar))
        .eq("U+ + U^DO = (psi + omega psi)/2", u.up + u.udo, half(plus_omega(u.psi)));
  });
}

void add_u_plus_identities(Builder& b) {
  const std::string g = "thm4.15";
  auto entry = [&](const std::string& id, std::function<void(Checks&, const UParts&, int)> body) {
    b.add(id, g, EntryKind::Identity, 1, kHardMaxN, [id, body](int n) {
      Checks c(id, n);
      body(c, u_parts(n), n);
      return c.result();
    });
  };
  entry("thm4.15.1", [](Checks& c, const UParts& u, int n) {
    Expr odd_sign_sum;
    for (const auto& lambda : partitions_cached(n)) {
      if ((n - lambda.length()) % 2 == 1) odd_sign_sum += plus_omega(H_lambda(lambda, series_k(0, n)));
    }
    c.eq("U+ = sum over odd-sign classes of H + omega H", u.up, odd_sign_sum)
        .eq("U+ = psi(Abar) + omega psi(Abar)", u.up, plus_omega(u.psiAbar))
        .nonneg("U+ Schur-nonnegative", u.up)
        .truth("dim U+ = n! for n >= 2", n < 2 || dimension(u.up) == from_u64(factorial(n)));
  });
  entry("thm4.15.2", [](Checks& c, const UParts& u, int n) {
    c.eq("U+ + U^DO = even-sign p", u.up + u.udo, fam(FamilySpec::even_sign(), n))
        .eq("U+ + U^DO = psi(A) + omega psi(Abar)", u.up + u.udo, u.psiA + omega(u.psiAbar));
  });
  entry("thm4.15.3", [](Checks& c, const UParts& u, int) {
    c.eq("U+ + U^DO = (psi + omega psi)/2", u.up + u.udo, half(plus_omega(u.psi)));
  });
  entry("thm4.15.4", [](Checks& c, const UParts& u, int) {
    c.eq("U+ + U^DO = omega psi(A) + psi(Abar)", u.up + u.udo, omega(u.psiA) + u.psiAbar);
  });
}

void add_induced_alternating(Builder& b) {
  const std::string g = "prop6.5";
  auto alt = [](int n) { return module_char(ModuleSpec(ModuleId::AltInduced), n); };
  auto entry = [&](const std::string& id, std::function<void(Checks&, const UParts&, const Expr&, int)> body) {
    b.add(id, g, EntryKind::Identity, 1, kHardMaxN, [id, body, alt](int n) {
      Checks c(id, n);
      body(c, u_parts(n), alt(n), n);
      return c.result();
    });
  };
  entry("prop6.5.1", [](Checks& c, const UParts& u, const Expr& a, int) {
    c.eq("ALT = psi(A) + omega psi(A)", a, plus_omega(u.psiA));
  });
  entry("prop6.5.2", [](Checks& c, const UParts& u, const Expr& a, int n) {
    const Expr& udo = sum_h(n, SignFilter::Alternating);
    c.eq("ALT = U+ + 2 U^DO", a, plus_omega(u.psiAbar) + scale(2, udo));
  });
  entry("prop6.5.3", [](Checks& c, const UParts& u, const Expr& a, int n) {
    const Expr& udo = sum_h(n, SignFilter::Alternating);
    c.eq("2 ALT = psi + omega psi + 2 U^DO", scale(2, a), plus_omega(u.psi) + scale(2, udo));
  });
  entry("prop6.5.4", [](Checks& c, const UParts& u, const Expr& a, int) {
    c.eq("U+ = psi + omega psi - ALT", u.up, plus_omega(u.psi) - a);
  });
  b.add("thm6.4", "thm6.4", EntryKind::Strictness, 2, kHardMaxN, [alt](int n) {
    const Expr a = alt(n);
    if (n == 3) {
      return Checks("thm6.4", n)
          .eq("ALT = 3(h3 + e3)", a, scale(3, h_n(3) + e_n(3)))
          .multiplicity("(2,1) is absent", to_schur(a, n), Partition{2, 1}, 0)
          .result();
    }
    return Checks("thm6.4", n)
        .eq("self-conjugate", omega(a), a)
        .truth("dimension n!", dimension(a) == from_u64(factorial(n)))
        .positive("every irreducible appears", a, PositivityMode::Strict)
        .result();
  });
}

void add_foulkes_products(Builder& b) {
  for (int k = 1; k <= kMaxK; ++k) {
    for (int j = 1; j <= 8; ++j) {
      const std::string id = "thm5.9." + std::to_string(j) + tag("k", k);
      b.add(id, "thm5.9", EntryKind::Identity, 1, kHardMaxN, [id, k](int n) {
        const auto& all = memo<std::vector<CheckResult>>("thm5.9" + tag("k", k), n, [&] { return foulkes_products(n, k); });
        return pick(all, id, n);
      });
    }
  }
  for (const char* raw : {"cor5.2.1", "cor5.2.2", "cor5.2.3", "cor5.3", "prop5.4", "lemma5.5"}) {
    const std::string id = raw;
    b.add(id, id.rfind("cor5.2", 0) == 0 ? "cor5.2" : id, EntryKind::Identity, 1, kHardMaxN, [id](int n) {
      const auto& all = memo<std::vector<CheckResult>>("lie", n, [&] { return lie_series_identities(n); });
      return pick(all, id, n);
    });
  }
}

void add_generating_functions(Builder& b) {
  // Derivative recurrences for sums of H and of E.
  for (long k : {0L, 1L, 2L}) {
    for (bool ext : {false, true}) {
      const std::string id = std::string("prop3.6.") + (ext ? "ext" : "sym") + tag("k", k);
      b.add(id, "prop3.6", EntryKind::Identity, 1, kHardMaxN - 1, [id, k, ext](int n) {
        const GradedSeries F = foulkes_series(k, n + 1);
        auto g = [&](int d) { return d == 0 ? Expr::constant(1) : (ext ? sum_E(d, F) : sum_H(d, F)); };
        Expr rhs;
        for (int i = 0; i <= n; ++i) rhs += g(n - i) * power(Expr::p(1), i);
        return Checks(id, n).eq("d/dp1 g(n+1) = sum g(n-i) p1^i", p1_derivative(g(n + 1)), rhs).result();
      });
    }
  }

  // Subset factorisations for S = odd degrees and S = {1}.
  const std::vector<std::pair<std::string, std::function<bool(int)>>> subsets = {
      {"odd", [](int d) { return d % 2 == 1; }},
      {"1", [](int d) { return d == 1; }},
  };
  for (const auto& [name, in_s] : subsets) {
    for (int part : {1, 2}) {
      const std::string id = "prop2.3." + std::to_string(part) + "[S=" + name + "]";
      const auto keep = in_s;
      b.add(id, "prop2.3", EntryKind::Identity, 1, kHardMaxN, [id, keep, part](int n) {
        const GradedSeries& Q = series_k(0, n);
        const GradedSeries QS = restrict_series(Q, keep);
        const GradedSeries QSbar = restrict_series(Q, [&](int d) { return !keep(d); });
        if (part == 1) {
          const auto rhs = series_mul(plethystic_series(QSbar, n, Plethystic::Epm), plethystic_series(Q, n, Plethystic::H));
          return Checks(id, n).eq("H[Q_S] = E+-[Q_Sbar] H[Q]", sum_H(n, QS), rhs[n]).result();
        }
        const auto rhs = series_mul(plethystic_series(QSbar, n, Plethystic::Hpm), plethystic_series(Q, n, Plethystic::E));
        return Checks(id, n).eq("E[Q_S] = H+-[Q_Sbar] E[Q]", sum_E(n, QS), rhs[n]).result();
      });
    }
  }

  // Half-sum constructions: each side agrees and is Schur-nonnegative.
  for (long k = 0; k <= kMaxK; ++k) {
    for (int item = 5; item <= 8; ++item) {
      const std::string id = "thm3.4." + std::to_string(item) + tag("k", k);
      b.add(id, "thm3.4", EntryKind::Identity, 1, kHardMaxN, [id, k, item](int n) {
        const bool ext = item <= 6;
        const bool plus = item % 2 == 1;
        Expr a, c;
        if (ext) {
          a = product_of(n, [&](int m) { return ProductFactor{m, fv(m, k, -1), -1}; });
          c = product_of(n, [&](int m) { return ProductFactor{m, fv(m, k, 1), alt_sign(m)}; });
        } else {
          a = product_of(n, [&](int m) { return ProductFactor{m, -fv(m, k, 1), -1}; });
          c = product_of(n, [&](int m) { return ProductFactor{m, -fv(m, k, -1), alt_sign(m)}; });
        }
        const Expr lhs = half(plus ? a + c : a - c);
        const SignFilter s = plus ? SignFilter::EvenSign : SignFilter::OddSign;
        const Expr rhs = ext ? sum_e(n, s, k) : sum_h(n, s, k);
        return Checks(id, n).eq("half-sum of products = signed plethystic sum", lhs, rhs).nonneg("Schur-nonnegative", rhs).result();
      });
    }
  }

  // The four graded generating functions at v = 1 and v = -1.
  for (long k : {0L, 1L, 2L}) {
    for (int v : {1, -1}) {
      const std::string suffix = "[v=" + std::to_string(v) + ",k=" + std::to_string(k) + "]";
      auto add32 = [&](int item, std::function<CheckResult(const std::string&, int)> fn) {
        const std::string id = "thm3.2." + std::to_string(item) + suffix;
        b.add(id, "thm3.2", EntryKind::Identity, 1, kHardMaxN, [id, fn](int n) { return fn(id, n); });
      };
      add32(1, [k, v](const std::string& id, int n) {
        const GradedSeries& F = series_k(k, n);
        const Expr lhs = v == 1 ? sum_H(n, F) : sum_H_pm(n, F);
        return Checks(id, n).eq("H(v)[F]", lhs, product_of(n, [&](int m) { return ProductFactor{m, -fv(m, k, v), -1}; })).result();
      });
      add32(2, [k, v](const std::string& id, int n) {
        const GradedSeries& F = series_k(k, n);
        const Expr lhs = v == 1 ? sum_E(n, F) : sum_E_pm(n, F);
        return Checks(id, n).eq("E(v)[F]", lhs, product_of(n, [&](int m) { return ProductFactor{m, fv(m, k, -v), -1}; })).result();
      });
      add32(3, [k, v](const std::string& id, int n) {
        const GradedSeries& F = series_k(k, n);
        const GradedSeries wF = series_alt(series_omega(F));
        const Expr lhs = v == 1 ? omega(sum_E(n, F, SignFilter::Alternating)) : scale(n % 2 ? -1 : 1, omega(sum_E(n, F)));
        const Expr mid = v == 1 ? sum_H(n, wF) : sum_H_pm(n, wF);
        const Expr rhs = product_of(n, [&](int m) { return ProductFactor{m, fv(m, k, v), 1}; });
        return Checks(id, n).eq("signed omega E(v) = H(v)[omega F alt]", lhs, mid).eq("H(v)[omega F alt] = product", mid, rhs).result();
      });
      add32(4, [k, v](const std::string& id, int n) {
        const GradedSeries& F = series_k(k, n);
        const GradedSeries wF = series_alt(series_omega(F));
        const Expr lhs = v == 1 ? omega(sum_H(n, F, SignFilter::Alternating)) : scale(n % 2 ? -1 : 1, omega(sum_H(n, F)));
        const Expr mid = v == 1 ? sum_E(n, wF) : sum_E_pm(n, wF);
        const Expr rhs = product_of(n, [&](int m) { return ProductFactor{m, -fv(m, k, -v), 1}; });
        return Checks(id, n).eq("signed omega H(v) = E(v)[omega F alt]", lhs, mid).eq("E(v)[omega F alt] = product", mid, rhs).result();
      });
    }
  }

  // Logarithmic product forms of F and (ωF)^alt.
  for (long k : {0L, 1L, 2L, 3L}) {
    for (int part : {1, 2}) {
      const std::string id = "prop3.1." + std::to_string(part) + tag("k", k);
      b.add(id, "prop3.1", EntryKind::Identity, 1, kHardMaxN, [id, k, part](int n) {
        std::vector<ProductFactor> fs;
        for (int d = 1; d <= n; ++d) {
          const long w = foulkes_weight(d, k);
          if (w == 0) continue;
          fs.push_back(part == 1 ? ProductFactor{d, make_rational(-w, d), -1} : ProductFactor{d, make_rational(w, d), 1});
        }
        const GradedSeries logp = series_log(product_series(fs, n));
        const GradedSeries& F = series_k(k, n);
        const Expr want = part == 1 ? F[n] : series_alt(series_omega(F))[n];
        return Checks(id, n).eq("log of product", logp[n], want).result();
      });
    }
  }

  // ω(E_λ[Q]) = (-1)^{|λ|-ℓ} H_λ[ω(Q)^alt] and the H/E swap.
  for (long k : {0L, 1L}) {
    for (int part : {1, 2}) {
      const std::string id = "lemma2.2." + std::to_string(part) + tag("k", k);
      b.add(id, "lemma2.2", EntryKind::Identity, 1, kHardMaxN, [id, k, part](int n) {
        const GradedSeries& Q = series_k(k, n);
        const GradedSeries wQ = series_alt(series_omega(Q));
        Checks c(id, n);
        for (const auto& lambda : partitions_cached(n)) {
          const int sign = (n - lambda.length()) % 2 ? -1 : 1;
          const Expr lhs = part == 1 ? omega(E_lambda(lambda, Q)) : omega(H_lambda(lambda, Q));
          const Expr rhs = part == 1 ? H_lambda(lambda, wQ) : E_lambda(lambda, wQ);
          c.eq("class " + lambda.to_string(), lhs, scale(sign, rhs));
        }
        return c.result();
      });
    }
  }

  b.add("lemma3.3", "lemma3.3", EntryKind::Identity, 1, 30, [](int n) {
    Checks c("lemma3.3", n);
    for (long k = 0; k <= 12; ++k) {
      const Rational minus = f_eval_direct(n, k, -1);
      const Rational plus = f_eval_direct(n, k, 1);
      const Rational want = n % 2 ? Rational(-plus) : Rational(f_eval_direct(n / 2, k, 1) - plus);
      c.truth("parity relation at k=" + std::to_string(k), minus == want, {Partition{n}, minus, "f_n(-1)"});
    }
    return c.result();
  });
  b.add("lemma5.7", "lemma5.7", EntryKind::Identity, 1, 30, [](int n) {
    Checks c("lemma5.7", n);
    for (long k = 0; k <= 12; ++k) {
      for (int v : {1, -1}) {
        const Rational direct = f_eval_direct(n, k, v);
        c.truth("closed form at k=" + std::to_string(k) + ", u=" + std::to_string(v), direct == Rational(f_eval(n, k, v)),
                {Partition{n}, direct, "direct evaluation"});
      }
    }
    return c.result();
  });
}

void add_multiplicity_laws(Builder& b) {
  b.add("cor4.14", "cor4.14", EntryKind::Invariant, 1, kHardMaxN, [](int n) {
    const auto psi = to_schur(module_char(ModuleSpec(ModuleId::Psi), n), n);
    const auto um = to_schur(module_char(ModuleSpec(ModuleId::UMinus), n), n);
    Checks c("cor4.14", n);
    for (const auto& [nu, m] : psi.mults) {
      if (nu.is_self_conjugate()) {
        c.multiplicity(nu.to_string() + " absent from U-", um, nu, 0);
      } else {
        const Rational other = psi.mult(nu.conjugate());
        const Integer diff = Rational(m - other).get_num();
        c.truth("parity of " + nu.to_string() + " and its conjugate", mpz_even_p(diff.get_mpz_t()) != 0, {nu, m, "multiplicity"});
      }
    }
    return c.result();
  });
  b.add("prop4.21", "prop4.21", EntryKind::Invariant, 1, kHardMaxN, [](int n) {
    const auto psi = to_schur(module_char(ModuleSpec(ModuleId::Psi), n), n);
    Checks c("prop4.21", n);
    c.multiplicity("trivial", psi, Partition{n}, from_u64(partition_count(n)));
    c.multiplicity("sign", psi, ones(n), Rational(static_cast<long>(members(FamilySpec::distinct_odd(), n).size())));
    if (n >= 2) {
      long want = 0;
      for (const auto& lambda : partitions_cached(n)) want += lambda.num_distinct_part_sizes() - 1;
      c.multiplicity("(n-1,1)", psi, hook(n - 1, 1), Rational(want));
    }
    return c.result();
  });
  b.add("prop4.22", "prop4.22", EntryKind::Invariant, 1, kHardMaxN, [](int n) {
    const auto eps = to_schur(module_char(ModuleSpec(ModuleId::Eps), n), n);
    const Rational odd(static_cast<long>(members(FamilySpec::odd_parts(), n).size()));
    return Checks("prop4.22", n)
        .multiplicity("trivial", eps, Partition{n}, odd)
        .multiplicity("sign", eps, ones(n), odd)
        .result();
  });
  b.add("lemma4.7", "lemma4.7", EntryKind::Invariant, 1, kHardMaxN, [](int n) {
    const auto f = to_schur(foulkes(n, 0), n);
    Checks c("lemma4.7", n);
    c.truth("trivial appears", f.mult(Partition{n}) >= 1, {Partition{n}, f.mult(Partition{n}), "multiplicity"});
    if (n >= 2) c.multiplicity("(n-1,1) never appears", f, hook(n - 1, 1), 0);
    if (n >= 3) c.multiplicity("sign appears once iff n odd", f, ones(n), n % 2);
    if (n >= 4) c.multiplicity("(2,1^(n-2)) appears once iff n even", f, hook(2, n - 2), n % 2 ? 0 : 1);
    if (n >= 3 && n % 2 == 1 && is_prime(n)) {
      c.positive("every other irreducible for prime n", foulkes(n, 0), PositivityMode::StrictExcept,
                 {hook(n - 1, 1), hook(2, n - 2)});
    }
    return c.result();
  });
  b.add("kw", "kw", EntryKind::Oracle, 1, 12, [](int n) {
    Checks c("kw", n);
    for (int r = 0; r < n; ++r) {
      const auto f = to_schur(foulkes(n, r), n);
      for (const auto& [nu, m] : f.mults) {
        const Rational want = from_u64(maj_multiplicity(nu, n, r));
        c.truth("residue " + std::to_string(r) + " at " + nu.to_string(), m == want, {nu, m, "expected " + want.get_str()});
      }
    }
    return c.result();
  });
  for (int k = 2; k <= kMaxK; ++k) {
    const std::string id = "thm4.23" + tag("k", k);
    b.add(id, "thm4.23", EntryKind::Identity, 1, kHardMaxN, [id, k](int n) {
      const Expr w = W(n, k);
      Checks c(id, n);
      c.eq("power-sum form = closed form", w, W_closed_form(n, k)).nonneg("Schur-nonnegative", w);
      if (k == 2 && n % 2 == 0) c.eq("complete-function form", w, W2_complete_form(n / 2));
      if (is_prime(k)) c.eq("sum H over the k-th Foulkes series", w, sum_h(n, SignFilter::All, k));
      return c.result();
    });
  }
  b.add("cor5.10", "cor5.10", EntryKind::Identity, 1, kHardMaxN, [](int n) {
    const Expr w = W(n, 2);
    const Expr g = product_expansion({{1, 1, 1}, {4, -1, -1}}, n);
    return Checks("cor5.10", n)
        .eq("W = sum H", w, sum_h(n, SignFilter::All, 2))
        .eq("g = signed sum H", g, sum_h(n, SignFilter::Alternating, 2))
        .eq("(W + g)/2 = even-sign sum H", half(w + g), sum_h(n, SignFilter::EvenSign, 2))
        .eq("(W - g)/2 = odd-sign sum H", half(w - g), sum_h(n, SignFilter::OddSign, 2))
        .nonneg("(W + g)/2 Schur-nonnegative", half(w + g))
        .nonneg("(W - g)/2 Schur-nonnegative", half(w - g))
        .result();
  });
}

void add_strictness(Builder& b) {
  auto mod = [](ModuleId id, int n) { return module_char(ModuleSpec(id), n); };
  b.add("thm4.5", "thm4.5", EntryKind::Strictness, 1, kHardMaxN, [mod](int n) {
    return strict_with_absent("thm4.5", mod(ModuleId::Psi, n), n, n == 2 ? std::vector<Partition>{Partition{1, 1}} : std::vector<Partition>{});
  });
  b.add("thm4.8", "thm4.8", EntryKind::Invariant, 1, kHardMaxN, [mod](int n) {
    const Expr e = mod(ModuleId::Eps, n);
    return Checks("thm4.8", n)
        .eq("self-conjugate", omega(e), e)
        .truth("dimension n!", dimension(e) == from_u64(factorial(n)))
        .nonneg("Schur-nonnegative", e)
        .result();
  });
  b.add("thm4.9", "thm4.9", EntryKind::Strictness, 1, kHardMaxN,
        [mod](int n) { return strict_with_absent("thm4.9", mod(ModuleId::Eps, n), n, {}); });
  b.add("cor4.12", "cor4.12", EntryKind::Strictness, 1, kHardMaxN, [](int n) {
     return strict_with_absent("cor4.12", fam(FamilySpec::even_sign(), n), n, {});
   }).excluded = {2};
  b.add("thm4.17.1", "thm4.17", EntryKind::Strictness, 4, kHardMaxN,
        [mod](int n) { return strict_with_absent("thm4.17.1", mod(ModuleId::PsiA, n), n, {}); });
  b.add("thm4.17.2", "thm4.17", EntryKind::Strictness, 2, kHardMaxN,
        [mod](int n) { return strict_with_absent("thm4.17.2", mod(ModuleId::PsiAbar, n), n, {ones(n)}); });
  b.add("cor4.18", "cor4.18", EntryKind::Strictness, 2, kHardMaxN,
        [mod](int n) { return strict_with_absent("cor4.18", mod(ModuleId::UPlus, n), n, {}); });
  b.add("thm4.19.1", "thm4.19", EntryKind::Strictness, 4, kHardMaxN, [mod](int n) {
    return strict_with_absent("thm4.19.1", mod(ModuleId::EpsA, n), n, n == 4 ? std::vector<Partition>{Partition{2, 2}} : std::vector<Partition>{});
  });
  b.add("thm4.19.2", "thm4.19", EntryKind::Strictness, 2, kHardMaxN,
        [mod](int n) { return strict_with_absent("thm4.19.2", mod(ModuleId::EpsAbar, n), n, {ones(n)}); });
}

void add_module_invariants(Builder& b) {
  struct Dim {
    ModuleId id;
    int kind;  // 0: n!, 1: n!/2, 2: zero
    bool self_conjugate;
  };
  const Dim dims[] = {
      {ModuleId::Psi, 0, false},    {ModuleId::Eps, 0, true},      {ModuleId::PsiA, 1, false},
      {ModuleId::PsiAbar, 1, false}, {ModuleId::EpsA, 1, false},    {ModuleId::EpsAbar, 1, false},
      {ModuleId::UPlus, 0, true},   {ModuleId::UMinus, 2, false},  {ModuleId::UDO, 2, true},
      {ModuleId::AltInduced, 0, true},
  };
  for (const auto& d : dims) {
    const ModuleSpec m(d.id);
    const std::string id = "dim." + m.name();
    // U+ vanishes at n = 1 and ALT needs a proper index-2 subgroup.
    const int from = (d.id == ModuleId::UPlus || d.id == ModuleId::AltInduced) ? 2 : 1;
    b.add(id, "dims", EntryKind::Invariant, from, kHardMaxN, [id, m, d](int n) {
      const Expr f = module_char(m, n);
      Rational want = from_u64(factorial(n));
      if (d.kind == 1) want = n >= 2 ? want / 2 : Rational(n == 1 && (d.id == ModuleId::PsiA || d.id == ModuleId::EpsA) ? 1 : 0);
      if (d.kind == 2) want = n == 1 && d.id == ModuleId::UDO ? 1 : 0;
      Checks c(id, n);
      c.truth("dimension " + want.get_str(), dimension(f) == want, {ones(n), dimension(f), "dimension"});
      if (d.self_conjugate) c.eq("self-conjugate", omega(f), f);
      return c.result();
    });
  }
  for (int k = 2; k <= kMaxK; ++k) {
    const std::string id = "dim.w" + tag("k", k);
    b.add(id, "dims", EntryKind::Invariant, 1, kHardMaxN, [id, k](int n) {
      return Checks(id, n).truth("dimension n!", dimension(W(n, k)) == from_u64(factorial(n))).result();
    });
  }
  b.add("dim.u-plus+u-do", "dims", EntryKind::Invariant, 1, kHardMaxN, [](int n) {
    const Expr f = module_char(ModuleSpec(ModuleId::UPlus), n) + module_char(ModuleSpec(ModuleId::UDO), n);
    return Checks("dim.u-plus+u-do", n).eq("self-conjugate", omega(f), f).result();
  });
  for (const auto& m : named_modules()) {
    const std::string id = "routes." + m.name();
    b.add(id, "routes", EntryKind::Oracle, 1, kHardMaxN, [id, m](int n) {
      const Expr base = module_char(m, n);
      Checks c(id, n);
      if (auto p = module_char_plethystic(m, n)) c.eq("plethystic sum = power-sum form", *p, base);
      if (auto p = module_char_product(m, n)) c.eq("product expansion = power-sum form", *p, base);
      return c.result();
    });
  }
}

void add_oracles(Builder& b) {
  b.add("oracle.mn", "oracles", EntryKind::Oracle, 1, 6, [](int n) {
    Checks c("oracle.mn", n);
    const auto& table = character_table(n);
    for (const auto& nu : partitions_cached(n)) {
      for (const auto& mu : partitions_cached(n)) {
        const long want = static_cast<long>(alternant_oracle(nu, mu));
        const long got = static_cast<long>(table.value(nu, mu));
        const long single = static_cast<long>(mn_character(nu, mu));
        c.truth("character at " + nu.to_string() + ", " + mu.to_string(), got == want && single == want,
                {nu, Rational(got), "class " + mu.to_string() + ", expected " + std::to_string(want)});
      }
    }
    return c.result();
  });
  auto& ram = b.add("oracle.ramanujan", "oracles", EntryKind::Oracle, 60, 60, [](int n) {
    Checks c("oracle.ramanujan", n);
    for (long d = 1; d <= n; ++d) {
      for (long k = 0; k <= n; ++k) {
        const long got = ramanujan_sum(d, k);
        c.truth("c_" + std::to_string(d) + "(" + std::to_string(k) + ")", got == ramanujan_sum_oracle(d, k),
                {Partition{static_cast<int>(d)}, Rational(got), "k=" + std::to_string(k)});
      }
    }
    return c.result();
  });
  ram.fixed = true;
}

void add_tables(Builder& b) {
  const std::pair<TableKind, std::pair<int, int>> ranges[] = {
      {TableKind::T1, {1, 16}}, {TableKind::T2, {1, 10}}, {TableKind::T3, {2, 12}}, {TableKind::T4, {2, 12}}};
  for (const auto& [kind, range] : ranges) {
    const TableKind t = kind;
    b.add("table." + to_string(t), "tables", EntryKind::Table, range.first, range.second,
          [t](int n) { return reproduce_table(t, n); });
  }
}

CheckResult counterexample_a();
CheckResult counterexample_explicit(const std::string& id, std::vector<Partition> members, const Partition& nu);

void add_reports(Builder& b) {
  b.add("counterexample.a", "counterexamples", EntryKind::Counterexample, 6, 6, [](int) { return counterexample_a(); })
      .fixed = true;
  b.add("counterexample.b", "counterexamples", EntryKind::Counterexample, 6, 6, [](int) {
     return counterexample_explicit("counterexample.b", {{1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {3, 3}, {4, 2}, {4, 1, 1}},
                                    {2, 1, 1, 1, 1});
   }).fixed = true;
  b.add("counterexample.c", "counterexamples", EntryKind::Counterexample, 6, 6, [](int) {
     return counterexample_explicit("counterexample.c", {{1, 1, 1, 1, 1, 1}, {2, 2, 2}, {3, 1, 1, 1}, {4, 1, 1}, {4, 2}},
                                    {3, 3});
   }).fixed = true;
  b.add("conj1.5", "scans", EntryKind::Scan, 1, kHardMaxN, [](int n) { return conjecture_scan(n).front(); });
  b.add("remark4.20.H", "scans", EntryKind::Scan, 1, kHardMaxN, [](int n) { return per_class_coverage(n)[0]; });
  b.add("remark4.20.E", "scans", EntryKind::Scan, 1, kHardMaxN, [](int n) { return per_class_coverage(n)[1]; });
}

std::vector<CatalogEntry> build_catalog() {
  Builder b;
  add_tables(b);
  add_family_positivity(b);
  add_strictness(b);
  add_conjugation_series(b);
  add_alternating_conjugation(b);
  add_sign_splittings(b);
  add_u_plus_identities(b);
  add_induced_alternating(b);
  add_foulkes_products(b);
  add_generating_functions(b);
  add_multiplicity_laws(b);
  add_module_invariants(b);
  add_oracles(b);
  add_reports(b);
  return std::move(b.entries);
}

// ------------------------------------------------------------ reports

CheckResult counterexample_a() {
  std::vector<Witness> w;
  bool as_stated = true;
  const long stated[] = {-1, -2, -4};
  for (int n = 4; n <= 6; ++n) {
    std::vector<Partition> t{ones(n)};
    for (const auto& lambda : members(FamilySpec::odd_sign(), n)) t.push_back(lambda);
    const auto s = to_schur(fam(FamilySpec::explicit_set(t), n), n);
    const Rational m = s.mult(ones(n));
    const Rational formula = 1 - static_cast<long>(t.size() - 1);
    as_stated = as_stated && m == stated[n - 4] && m == formula;
    w.push_back({ones(n), m, "sign multiplicity at n=" + std::to_string(n)});
  }
  if (!as_stated) return fail("counterexample.a", 6, "sign multiplicities differ from -1, -2, -4", std::move(w));
  return report("counterexample.a", 6, "(1^n) plus odd-sign classes: sign multiplicity 1 - #odd-sign = -1, -2, -4 at n = 4, 5, 6",
                std::move(w));
}

CheckResult counterexample_explicit(const std::string& id, std::vector<Partition> list, const Partition& nu) {
  const int n = nu.size();
  const auto s = to_schur(fam(FamilySpec::explicit_set(std::move(list)), n), n);
  const Rational m = s.mult(nu);
  std::vector<Witness> w{{nu, m, "multiplicity"}};
  if (m != -1) return fail(id, n, "expected multiplicity -1 at " + nu.to_string(), std::move(w));
  return report(id, n, "multiplicity -1 at " + nu.to_string() + "; full expansion " + to_pretty(s), std::move(w));
}

}  // namespace

// ------------------------------------------------------------ public API

CheckResult check_positivity(const std::string& id, const PowerSumExpr& f, int n, PositivityMode mode,
                             const std::vector<Partition>& exempt) {
  const auto s = to_schur(f, n);
  std::vector<Witness> bad;
  for (const auto& [nu, m] : s.mults) {
    const bool excused = mode == PositivityMode::StrictExcept && std::find(exempt.begin(), exempt.end(), nu) != exempt.end();
    const Rational floor = (mode == PositivityMode::Nonneg || excused) ? 0 : 1;
    if (!is_integer(m)) {
      bad.push_back({nu, m, "non-integral"});
    } else if (m < floor) {
      bad.push_back({nu, m, floor == 0 ? "negative" : "missing"});
    }
  }
  const std::string verdict = to_string(s.verdict);
  if (!bad.empty()) return fail(id, n, "verdict " + verdict, std::move(bad));
  return pass(id, n, "verdict " + verdict);
}

CheckResult check_positivity(const FamilySpec& spec, int n, PositivityMode mode, const std::vector<Partition>& exempt) {
  return check_positivity("positivity[" + spec.name() + "]", power_sum_family(spec, n), n, mode, exempt);
}

std::string to_string(EntryKind kind) {
  switch (kind) {
    case EntryKind::Identity: return "identities";
    case EntryKind::Positivity: return "positivity";
    case EntryKind::Strictness: return "strictness";
    case EntryKind::Invariant: return "invariants";
    case EntryKind::Oracle: return "oracles";
    case EntryKind::Table: return "tables";
    case EntryKind::Counterexample: return "counterexamples";
    case EntryKind::Scan: return "scans";
  }
  return "?";
}

bool CatalogEntry::applies(int n) const {
  if (fixed) return n == min_n;
  if (n < min_n || n > max_n) return false;
  return std::find(excluded.begin(), excluded.end(), n) == excluded.end();
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

CheckResult check_identity(const std::string& id, int n) {
  for (const auto& e : catalog()) {
    if (e.id != id) continue;
    if (!e.applies(n)) {
      throw ParameterError("catalog entry " + id + " does not apply at n=" + std::to_string(n) + " (range " +
                           std::to_string(e.min_n) + ".." + std::to_string(e.fixed ? e.min_n : e.max_n) + ")");
    }
    return e.run(n);
  }
  throw CatalogError("unknown catalog id: " + id);
}

std::vector<const CatalogEntry*> select_entries(const std::string& selector) {
  std::vector<const CatalogEntry*> out;
  const auto& all = catalog();
  auto collect = [&](auto&& pred) {
    for (const auto& e : all) {
      if (pred(e)) out.push_back(&e);
    }
  };
  if (selector == "all") {
    collect([](const CatalogEntry&) { return true; });
  } else {
    collect([&](const CatalogEntry& e) { return to_string(e.kind) == selector; });
    if (out.empty()) collect([&](const CatalogEntry& e) { return e.group == selector; });
    if (out.empty()) collect([&](const CatalogEntry& e) { return e.id == selector; });
  }
  if (out.empty()) throw CatalogError("selector matches no catalog entry: " + selector);
  return out;
}

std::vector<CheckResult> run_selection(const std::vector<const CatalogEntry*>& entries, const HarnessOptions& options) {
  struct Task {
    const CatalogEntry* entry;
    int n;
  };
  std::vector<Task> tasks;
  for (const auto* e : entries) {
    if (e->fixed) {
      tasks.push_back({e, e->min_n});
      continue;
    }
    for (int n = e->min_n; n <= std::min(e->max_n, options.max_n); ++n) {
      if (e->applies(n)) tasks.push_back({e, n});
    }
  }
  std::vector<CheckResult> results(tasks.size());
  const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
  const auto count = static_cast<long>(tasks.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    const Task& t = tasks[static_cast<std::size_t>(i)];
    try {
      results[static_cast<std::size_t>(i)] = t.entry->run(t.n);
    } catch (const std::exception& ex) {
      results[static_cast<std::size_t>(i)] = fail(t.entry->id, t.n, std::string("error: ") + ex.what(), {});
    }
  }
  return results;
}

std::vector<CheckResult> run_selector(const std::string& selector, const HarnessOptions& options) {
  return run_selection(select_entries(selector), options);
}

std::vector<CheckResult> counterexamples() {
  return {counterexample_a(),
          counterexample_explicit("counterexample.b", {{1, 1, 1, 1, 1, 1}, {2, 1, 1, 1, 1}, {3, 3}, {4, 2}, {4, 1, 1}},
                                  {2, 1, 1, 1, 1}),
          counterexample_explicit("counterexample.c", {{1, 1, 1, 1, 1, 1}, {2, 2, 2}, {3, 1, 1, 1}, {4, 1, 1}, {4, 2}},
                                  {3, 3})};
}

std::vector<CheckResult> conjecture_scan(int n) {
  require_capacity(n, "conjecture_scan");
  const auto& table = character_table(n);
  const auto& parts = partitions_cached(n);
  const int dim = table.dim();
  // Suffix sums over columns: seg[ν] holds Σ_{λ ∈ [μ,(1^n)]} χ^ν(λ).
  std::vector<long long> seg(static_cast<std::size_t>(dim), 0);
  std::vector<Witness> violations;
  for (int col = dim - 1; col >= 0; --col) {
    long long worst = 0;
    int worst_row = -1;
    for (int row = 0; row < dim; ++row) {
      seg[static_cast<std::size_t>(row)] += table.at(row, col);
      if (seg[static_cast<std::size_t>(row)] < worst) {
        worst = seg[static_cast<std::size_t>(row)];
        worst_row = row;
      }
    }
    if (worst_row >= 0) {
      violations.push_back({parts[static_cast<std::size_t>(col)], Rational(static_cast<long>(worst)),
                            "segment start; most negative at " + parts[static_cast<std::size_t>(worst_row)].to_string()});
    }
  }
  const std::string detail = std::to_string(dim) + " final segments scanned, " + std::to_string(violations.size()) +
                             " with a negative multiplicity";
  return {report("conj1.5", n, detail, std::move(violations))};
}

std::vector<CheckResult> per_class_coverage(int n) {
  require_capacity(n, "per_class_coverage");
  const GradedSeries F = foulkes_series(0, n);
  PlethysticEvaluator ev(F);
  std::vector<Witness> h_full, e_full;
  for (const auto& lambda : partitions_cached(n)) {
    if (to_schur(ev.H(lambda), n).verdict == Verdict::Positive) h_full.push_back({lambda, 1, "covers every irreducible"});
    if (to_schur(ev.E(lambda), n).verdict == Verdict::Positive) e_full.push_back({lambda, 1, "covers every irreducible"});
  }
  const std::string total = std::to_string(partitions_cached(n).size());
  const std::string h_detail = std::to_string(h_full.size()) + " of " + total + " classes λ have H_λ[F] containing every irreducible";
  const std::string e_detail = std::to_string(e_full.size()) + " of " + total + " classes λ have E_λ[F] containing every irreducible";
  std::vector<CheckResult> out;
  out.push_back(report("remark4.20.H", n, h_detail, std::move(h_full)));
  out.push_back(report("remark4.20.E", n, e_detail, std::move(e_full)));
  return out;
}

}  // namespace symcon
