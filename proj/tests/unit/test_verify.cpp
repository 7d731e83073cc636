#include "doctest.h"

#include <set>

#include "symcon/errors.hpp"
#include "symcon/family.hpp"
#include "symcon/verify.hpp"

using namespace symcon;

namespace {

const Partition kOnes(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

}  // namespace

TEST_CASE("conjugation action is strictly positive except at two") {
  for (int n = 3; n <= 10; ++n) CHECK(check_positivity(FamilySpec::all(), n, PositivityMode::Strict).status == Status::Pass);
  const auto r = check_positivity(FamilySpec::all(), 2, PositivityMode::Strict);
  REQUIRE(r.status == Status::Fail);
  REQUIRE_FALSE(r.witnesses.empty());
  CHECK(r.witnesses[0].nu == Partition{1, 1});
  CHECK(r.witnesses[0].value == 0);
}

TEST_CASE("twisted conjugation is strictly positive from one") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(check_positivity(FamilySpec::odd_parts(), n, PositivityMode::Strict).status == Status::Pass);
  }
}

TEST_CASE("strict positivity with the sign exempted") {
  for (int n = 4; n <= 10; ++n) {
    const auto r = check_positivity(FamilySpec::not_do_even_sign(), n, PositivityMode::StrictExcept, {kOnes(n)});
    CHECK(r.status == Status::Pass);
  }
}

TEST_CASE("nonnegative mode rejects negative multiplicities") {
  auto list = members(FamilySpec::odd_sign(), 5);
  list.push_back(kOnes(5));
  const auto r = check_positivity(FamilySpec::explicit_set(list), 5, PositivityMode::Nonneg);
  CHECK(r.status == Status::Fail);
  CHECK(r.witnesses[0].value == -2);
}

TEST_CASE("identity lookups by id") {
  CHECK(check_identity("thm4.2.6", 6).status == Status::Pass);
  CHECK(check_identity("prop4.13.8", 8).status == Status::Pass);
  const auto r = check_identity("prop6.5.2", 3);
  CHECK(r.status == Status::Pass);
  CHECK_THROWS_AS(check_identity("thm9.9.9", 4), CatalogError);
  CHECK_THROWS_AS(check_identity("thm4.17.1", 3), ParameterError);
  CHECK_THROWS_AS(check_identity("cor4.12", 2), ParameterError);
}

TEST_CASE("catalog ids are unique and every entry has a body") {
  std::set<std::string> ids;
  for (const auto& e : catalog()) {
    CHECK(ids.insert(e.id).second);
    CHECK(static_cast<bool>(e.run));
    CHECK(e.min_n <= e.max_n);
  }
  CHECK(ids.count("table.T1") == 1);
  CHECK(ids.count("thm5.9.8[k=6]") == 1);
  CHECK(ids.count("counterexample.c") == 1);
}

TEST_CASE("selector grammar") {
  CHECK(select_entries("all").size() == catalog().size());
  CHECK(select_entries("thm1.1").size() == 26);
  CHECK(select_entries("tables").size() == 4);
  CHECK(select_entries("counterexamples").size() == 3);
  CHECK(select_entries("thm4.9").size() == 1);
  CHECK_THROWS_AS(select_entries("no-such-thing"), CatalogError);
}

TEST_CASE("declared exceptions are skipped by the range test") {
  const auto entries = select_entries("cor4.12");
  REQUIRE(entries.size() == 1);
  CHECK_FALSE(entries[0]->applies(2));
  CHECK(entries[0]->applies(3));
  const auto results = run_selection(entries, {6, 0});
  for (const auto& r : results) CHECK(r.n != 2);
}

TEST_CASE("counterexamples give the documented negative values") {
  const auto rs = counterexamples();
  REQUIRE(rs.size() == 3);
  for (const auto& r : rs) CHECK(r.status == Status::Report);
  REQUIRE(rs[0].witnesses.size() == 3);
  CHECK(rs[0].witnesses[0].value == -1);
  CHECK(rs[0].witnesses[1].value == -2);
  CHECK(rs[0].witnesses[2].value == -4);
  CHECK(rs[1].witnesses[0].nu == Partition{2, 1, 1, 1, 1});
  CHECK(rs[1].witnesses[0].value == -1);
  CHECK(rs[2].witnesses[0].nu == Partition{3, 3});
  CHECK(rs[2].witnesses[0].value == -1);
}

TEST_CASE("final-segment scan finds no negative multiplicity up to eight") {
  for (int n = 1; n <= 8; ++n) {
    const auto rs = conjecture_scan(n);
    REQUIRE(rs.size() == 1);
    CHECK(rs[0].status == Status::Report);
    CHECK(rs[0].witnesses.empty());
  }
}

TEST_CASE("per-class coverage reports") {
  const auto one = per_class_coverage(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0].witnesses.size() == 1);
  CHECK(one[0].witnesses[0].nu == Partition{1});
  CHECK(per_class_coverage(2)[0].witnesses.empty());
  const auto six = per_class_coverage(6);
  REQUIRE(six[0].witnesses.size() == 1);
  CHECK(six[0].witnesses[0].nu == Partition{5, 1});
}

TEST_CASE("harness output is independent of the thread count") {
  const auto entries = select_entries("thm4.11");
  const auto serial = run_selection(entries, {9, 1});
  const auto parallel = run_selection(entries, {9, 4});
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(to_json(serial[i]) == to_json(parallel[i]));
}

TEST_CASE("harness orders results by catalog position then degree") {
  const auto rs = run_selector("thm4.17", {7, 0});
  REQUIRE_FALSE(rs.empty());
  CHECK(rs.front().id == "thm4.17.1");
  CHECK(rs.front().n == 4);
  CHECK(rs.back().id == "thm4.17.2");
  CHECK(rs.back().n == 7);
}

TEST_CASE("fixed entries run once") {
  const auto rs = run_selector("oracle.ramanujan", {4, 0});
  REQUIRE(rs.size() == 1);
  CHECK(rs[0].status == Status::Pass);
}

TEST_CASE("report rendering") {
  const auto r = fail("x", 3, "bad", {{Partition{2, 1}, make_rational(-1, 2), "note"}});
  CHECK(to_line(r).rfind("FAIL x n=3", 0) == 0);
  CHECK(to_json(r).find("\"status\":\"FAIL\"") != std::string::npos);
  CHECK(compare("same", 2, PowerSumExpr::p(2), PowerSumExpr::p(2)).status == Status::Pass);
  const auto diff = compare("diff", 2, PowerSumExpr::p(2), PowerSumExpr::p(1) * PowerSumExpr::p(1));
  CHECK(diff.status == Status::Fail);
  CHECK_FALSE(diff.witnesses.empty());
}
