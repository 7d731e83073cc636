#include "doctest.h"

#include "symcon/errors.hpp"
#include "symcon/tables.hpp"

using namespace symcon;

namespace {

std::vector<long> values(const TableBlock& b) {
  std::vector<long> out;
  for (const auto& [nu, m] : b.entries) out.push_back(m);
  return out;
}

long entry(const TableBlock& b, const Partition& nu) {
  for (const auto& [p, m] : b.entries) {
    if (p == nu) return m;
  }
  FAIL("partition missing from block");
  return 0;
}

}  // namespace

TEST_CASE("table kind parsing") {
  CHECK(parse_table_kind("t1") == TableKind::T1);
  CHECK(parse_table_kind("T4") == TableKind::T4);
  CHECK(to_string(TableKind::T3) == "T3");
  CHECK_THROWS_AS(parse_table_kind("t5"), ParameterError);
}

TEST_CASE("fixture ranges") {
  CHECK(fixture_min_n(TableKind::T1) == 1);
  CHECK(fixture_max_n(TableKind::T1) >= 10);
  CHECK(fixture_max_n(TableKind::T2) >= 10);
  CHECK(fixture_min_n(TableKind::T3) == 2);
  CHECK(fixture_max_n(TableKind::T4) >= 8);
  CHECK_THROWS_AS(table_fixture(TableKind::T1, 99), ParameterError);
}

TEST_CASE("conjugation table column at eight") {
  const std::vector<long> want{22, 23, 49, 33, 39, 78, 44, 25, 70, 67, 81, 34, 35, 53, 58, 52, 17, 19, 19, 17, 5, 2};
  CHECK(values(table_fixture(TableKind::T1, 8)[0]) == want);
  CHECK(values(compute_table(TableKind::T1, 8)[0]) == want);
  CHECK(reproduce_table(TableKind::T1, 8).status == Status::Pass);
}

TEST_CASE("twisted conjugation table column at three") {
  const std::vector<long> want{2, 1, 2};
  CHECK(values(table_fixture(TableKind::T2, 3)[0]) == want);
  CHECK(values(compute_table(TableKind::T2, 3)[0]) == want);
}

TEST_CASE("twisted conjugation table has top entry ten at n equal ten") {
  CHECK(compute_table(TableKind::T2, 10)[0].entries.front().second == 10);
  CHECK(table_fixture(TableKind::T2, 10)[0].entries.front().second == 10);
}

TEST_CASE("alternating twisted blocks at four omit (2,2) from the A block") {
  const auto blocks = compute_table(TableKind::T4, 4);
  REQUIRE(blocks.size() == 2);
  CHECK(blocks[0].title == "eps(S4,A4)");
  CHECK(values(blocks[0]) == std::vector<long>{1, 2, 0, 1, 2});
  CHECK(entry(blocks[0], {2, 2}) == 0);
  CHECK(reproduce_table(TableKind::T4, 4).status == Status::Pass);
}

TEST_CASE("alternating conjugation blocks at four") {
  const auto blocks = compute_table(TableKind::T3, 4);
  CHECK(blocks[0].title == "psi(S4,A4)");
  CHECK(blocks[1].title == "psi(S4,Abar4)");
  CHECK(values(blocks[0]) == std::vector<long>{3, 1, 1, 1, 1});
}

TEST_CASE("single entry table at one") {
  const auto b = compute_table(TableKind::T1, 1)[0];
  REQUIRE(b.entries.size() == 1);
  CHECK(b.entries[0].second == 1);
}

TEST_CASE("computed tables always satisfy the checksum") {
  for (int n = 2; n <= 10; ++n) {
    for (auto kind : {TableKind::T1, TableKind::T2, TableKind::T3, TableKind::T4}) {
      for (const auto& b : compute_table(kind, n)) CHECK(block_checksum(b) == expected_checksum(kind, n));
    }
  }
}

TEST_CASE("checksum guard flags the inconsistent transcribed columns") {
  const auto t1 = table_fixture(TableKind::T1, 7)[0];
  CHECK(block_checksum(t1) == 4910);
  CHECK(expected_checksum(TableKind::T1, 7) == 5040);
  const auto r1 = reproduce_table(TableKind::T1, 7);
  CHECK(r1.status == Status::Fail);
  CHECK(r1.detail.find("checksum") != std::string::npos);
  CHECK(r1.witnesses.size() == 2);

  const auto t2 = table_fixture(TableKind::T2, 9)[0];
  CHECK(block_checksum(t2) == 361476);
  CHECK(reproduce_table(TableKind::T2, 9).status == Status::Fail);

  for (const auto& b : table_fixture(TableKind::T3, 7)) CHECK(block_checksum(b) == 2455);
}

TEST_CASE("consistent transcribed columns pass the checksum") {
  for (int n = 1; n <= 10; ++n) {
    if (n == 7 || n == 9) continue;
    CHECK(block_checksum(table_fixture(TableKind::T1, n)[0]) == expected_checksum(TableKind::T1, n));
  }
  for (int n = 2; n <= 8; ++n) {
    for (const auto& b : table_fixture(TableKind::T4, n)) CHECK(block_checksum(b) == expected_checksum(TableKind::T4, n));
  }
}
