#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symcon/family.hpp"
#include "symcon/report.hpp"
#include "symcon/symfunc.hpp"

namespace symcon {

enum class PositivityMode { Nonneg, Strict, StrictExcept };

// NONNEG: every multiplicity is an integer ≥ 0. STRICT: every multiplicity
// is an integer ≥ 1. STRICT_EXCEPT: as STRICT, but the listed ν only need
// to be nonnegative integers.
CheckResult check_positivity(const FamilySpec& spec, int n, PositivityMode mode,
                             const std::vector<Partition>& exempt = {});
CheckResult check_positivity(const std::string& id, const PowerSumExpr& f, int n, PositivityMode mode,
                             const std::vector<Partition>& exempt = {});

enum class EntryKind {
  Identity,        // exact equality of two computed sides
  Positivity,      // nonnegativity of a family
  Strictness,      // every irreducible appears, with declared exceptions
  Invariant,       // dimensions, ω-fixedness, multiplicity formulas
  Oracle,          // agreement with an independent implementation
  Table,           // fixture reproduction
  Counterexample,  // confirmed negative multiplicities, REPORT
  Scan,            // exploratory scans, REPORT
};

std::string to_string(EntryKind kind);

struct CatalogEntry {
  std::string id;
  std::string group;
  EntryKind kind = EntryKind::Identity;
  int min_n = 1;
  // Upper end of the range the entry is meaningful for; the harness also
  // clamps to its own max_n. Ignored for fixed entries.
  int max_n = 20;
  // Degrees inside [min_n, max_n] that the underlying statement excludes.
  std::vector<int> excluded;
  // Fixed entries run exactly once at min_n, independent of max_n.
  bool fixed = false;
  std::function<CheckResult(int)> run;

  bool applies(int n) const;
};

// The whole catalog in its canonical order. Built once; thread-safe.
const std::vector<CatalogEntry>& catalog();

// Runs a single entry by id at degree n. Throws CatalogError for unknown ids
// and ParameterError when n is outside the entry's range.
CheckResult check_identity(const std::string& id, int n);

// Selector grammar: "all", a kind name ("identities", "positivity",
// "strictness", "invariants", "oracles", "tables", "counterexamples",
// "scans"), a group name such as "thm4.13", or an exact entry id. Throws
// CatalogError when nothing matches.
std::vector<const CatalogEntry*> select_entries(const std::string& selector);

struct HarnessOptions {
  int max_n = 12;
  int threads = 0;  // 0: OpenMP default
};

// Runs every (entry, n) pair of the selection, possibly in parallel, and
// returns results in catalog order with n ascending inside an entry.
// Exceptions thrown by an entry become FAIL results.
std::vector<CheckResult> run_selection(const std::vector<const CatalogEntry*>& entries, const HarnessOptions& options);
std::vector<CheckResult> run_selector(const std::string& selector, const HarnessOptions& options);

// The three families that include (1^n) yet fail to be Schur-nonnegative.
std::vector<CheckResult> counterexamples();

// For each μ ⊢ n, the Schur expansion of Σ_{λ ∈ [μ,(1^n)]} p_λ; one REPORT
// listing the segments with a negative multiplicity.
std::vector<CheckResult> conjecture_scan(int n);

// REPORTs listing the λ ⊢ n for which H_λ[F] (resp. E_λ[F]) over the
// totient series contains every irreducible.
std::vector<CheckResult> per_class_coverage(int n);

}  // namespace symcon
