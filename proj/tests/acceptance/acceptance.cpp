// Acceptance runner: one PASS/FAIL line per criterion, 1 through 9.
//
// Exit status is 0 only when every criterion passes. With --known-red a,b,...
// the exit status is 0 when the failing criteria are exactly that set, which
// lets ctest pin an acknowledged red criterion without hiding regressions
// elsewhere. The FAIL line is printed either way.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symcon/characters.hpp"
#include "symcon/family.hpp"
#include "symcon/numbertheory.hpp"
#include "symcon/partition.hpp"
#include "symcon/repmodels.hpp"
#include "symcon/tables.hpp"
#include "symcon/verify.hpp"

using namespace symcon;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

// Collects the first few failing lines of a result list.
struct Tally {
  std::size_t pass = 0, fail = 0, report = 0;
  std::vector<std::string> failures;

  void add(const CheckResult& r) {
    switch (r.status) {
      case Status::Pass: ++pass; break;
      case Status::Report: ++report; break;
      case Status::Fail:
        ++fail;
        if (failures.size() < 4) failures.push_back(to_line(r));
        break;
    }
  }
  void add(const std::vector<CheckResult>& rs) {
    for (const auto& r : rs) add(r);
  }
  Outcome outcome(bool reports_allowed = false) const {
    Outcome o;
    o.ok = fail == 0 && (reports_allowed || report == 0);
    std::ostringstream s;
    s << pass << " pass, " << fail << " fail";
    if (report) s << ", " << report << " report";
    for (const auto& f : failures) s << "\n      " << f;
    o.detail = s.str();
    return o;
  }
};

std::vector<const CatalogEntry*> entries_where(const std::function<bool(const CatalogEntry&)>& pred) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : catalog()) {
    if (pred(e)) out.push_back(&e);
  }
  return out;
}

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

Partition ones(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

Outcome tables() {
  Tally t;
  for (int n = 1; n <= 10; ++n) {
    t.add(reproduce_table(TableKind::T1, n));
    t.add(reproduce_table(TableKind::T2, n));
  }
  for (int n = 2; n <= 8; ++n) {
    t.add(reproduce_table(TableKind::T3, n));
    t.add(reproduce_table(TableKind::T4, n));
  }
  return t.outcome();
}

Outcome positivity() {
  Tally t;
  t.add(run_selector("thm1.1", {12, 0}));
  return t.outcome();
}

Outcome strictness() {
  Tally t;
  t.add(run_selection(entries_where([](const CatalogEntry& e) { return e.kind == EntryKind::Strictness; }), {12, 0}));
  // The conjugation action must fail strictness at n = 2, and only on (1,1).
  const auto two = check_positivity(FamilySpec::all(), 2, PositivityMode::Strict);
  const bool exact = two.failed() && two.witnesses.size() == 1 && two.witnesses[0].nu == Partition{1, 1};
  t.add(exact ? pass("psi strict fails at 2", 2, "only (1,1) missing")
              : fail("psi strict fails at 2", 2, "unexpected outcome: " + to_line(two), {}));
  // (2,2) is absent from the alternating twisted block at n = 4.
  const auto eps_a4 = to_schur(module_char(ModuleSpec(ModuleId::EpsA), 4), 4);
  t.add(eps_a4.mult({2, 2}) == 0 ? pass("eps-a (2,2) absent", 4) : fail("eps-a (2,2) absent", 4, "present", {}));
  return t.outcome();
}

Outcome identities() {
  Tally t;
  t.add(run_selector("identities", {10, 0}));
  return t.outcome();
}

Outcome oracles() {
  Tally t;
  t.add(run_selection(entries_where([](const CatalogEntry& e) {
                        return e.id == "oracle.mn" || e.id == "oracle.ramanujan" || starts_with(e.id, "routes.");
                      }),
                      {10, 0}));
  t.add(run_selection(entries_where([](const CatalogEntry& e) { return e.id == "kw"; }), {9, 0}));
  // Two-route equality including the product route, read directly.
  for (const auto& m : named_modules()) {
    for (int n = 2; n <= 10; ++n) {
      const auto direct = module_char(m, n);
      const auto a = module_char_plethystic(m, n);
      const auto b = module_char_product(m, n);
      const bool ok = (!a || *a == direct) && (!b || *b == direct);
      t.add(ok ? pass("routes." + m.name(), n) : fail("routes." + m.name(), n, "route mismatch", {}));
    }
  }
  return t.outcome();
}

Outcome dimensions() {
  Tally t;
  t.add(run_selection(entries_where([](const CatalogEntry& e) { return starts_with(e.id, "dim."); }), {10, 0}));
  for (int n = 1; n <= 10; ++n) {
    std::vector<ModuleId> fixed{ModuleId::Eps, ModuleId::UDO};
    if (n >= 2) {
      fixed.push_back(ModuleId::UPlus);
      fixed.push_back(ModuleId::AltInduced);
    }
    for (auto id : fixed) {
      const auto f = module_char(ModuleSpec(id), n);
      const std::string label = "omega-fixed." + ModuleSpec(id).name();
      t.add(omega(f) == f ? pass(label, n) : fail(label, n, "omega moves the characteristic", {}));
    }
  }
  return t.outcome();
}

Outcome counterexample_values() {
  const auto rs = counterexamples();
  Outcome o;
  auto value_at = [](const CheckResult& r, std::size_t i) {
    return i < r.witnesses.size() ? r.witnesses[i].value : Rational(0);
  };
  o.ok = rs.size() == 3 && rs[0].witnesses.size() == 3 && value_at(rs[0], 0) == -1 && value_at(rs[0], 1) == -2 &&
         value_at(rs[0], 2) == -4 && !rs[1].witnesses.empty() && rs[1].witnesses[0].nu == Partition{2, 1, 1, 1, 1} &&
         value_at(rs[1], 0) == -1 && !rs[2].witnesses.empty() && rs[2].witnesses[0].nu == Partition{3, 3} &&
         value_at(rs[2], 0) == -1;
  std::ostringstream s;
  if (rs.size() == 3) {
    s << "sign multiplicities " << value_at(rs[0], 0) << ", " << value_at(rs[0], 1) << ", " << value_at(rs[0], 2)
      << "; " << value_at(rs[1], 0) << " at (2,1^4); " << value_at(rs[2], 0) << " at (3^2)";
  }
  o.detail = s.str();
  return o;
}

Outcome closed_forms() {
  std::size_t checked = 0;
  std::vector<std::string> bad;
  for (int n = 1; n <= 30; ++n) {
    for (long k = 0; k <= 12; ++k) {
      for (int sign : {1, -1}) {
        ++checked;
        if (Rational(f_eval(n, k, sign)) != f_eval_direct(n, k, sign) && bad.size() < 4) {
          bad.push_back("f_eval(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(sign) + ")");
        }
      }
    }
  }
  for (int n = 1; n <= 12; ++n) {
    for (int k = 2; k <= 6; ++k) {
      ++checked;
      if (W_closed_form(n, k) != W(n, k) && bad.size() < 4) {
        bad.push_back("W(" + std::to_string(n) + "," + std::to_string(k) + ")");
      }
    }
  }
  Outcome o;
  o.ok = bad.empty();
  o.detail = std::to_string(checked) + " evaluations";
  for (const auto& b : bad) o.detail += "; mismatch " + b;
  return o;
}

Outcome scans() {
  Tally t;
  std::size_t violations = 0;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& r : conjecture_scan(n)) {
      t.add(r);
      violations += r.witnesses.size();
    }
  }
  for (int n = 1; n <= 10; ++n) t.add(per_class_coverage(n));
  Outcome o = t.outcome(true);
  o.ok = o.ok && violations == 0;
  o.detail += "; " + std::to_string(violations) + " segment violations";
  return o;
}

std::set<int> parse_known_red(int argc, char** argv) {
  std::set<int> out;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--known-red" && i + 1 < argc) {
      std::stringstream s(argv[++i]);
      std::string item;
      while (std::getline(s, item, ',')) out.insert(std::stoi(item));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  const std::set<int> known_red = parse_known_red(argc, argv);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"table reproduction", tables},
      {"family positivity", positivity},
      {"strictness with exceptions", strictness},
      {"identity catalog", identities},
      {"oracle equivalence", oracles},
      {"dimensions and self-conjugacy", dimensions},
      {"counterexample values", counterexample_values},
      {"closed-form evaluations", closed_forms},
      {"report-only scans", scans},
  };
  std::set<int> red;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) red.insert(number);
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << number << " " << criteria[i].first << " (" << timing
              << "): " << o.detail << "\n";
  }
  if (!known_red.empty()) {
    std::cout << "known red: ";
    for (int r : known_red) std::cout << r << " ";
    std::cout << (red == known_red ? "(matches)" : "(does not match)") << "\n";
    return red == known_red ? 0 : 1;
  }
  return red.empty() ? 0 : 1;
}
