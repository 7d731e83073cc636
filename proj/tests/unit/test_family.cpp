#include "doctest.h"

#include <cstdio>
#include <fstream>

#include "symcon/errors.hpp"
#include "symcon/family.hpp"

using namespace symcon;

using Parts = std::vector<Partition>;

TEST_CASE("odd-part and distinct-odd members of three") {
  CHECK(members(FamilySpec::odd_parts(), 3) == Parts{{3}, {1, 1, 1}});
  CHECK(members(FamilySpec::distinct_odd(), 3) == Parts{{3}});
}

TEST_CASE("sign families split by the parity of n minus length") {
  CHECK(members(FamilySpec::even_sign(), 4) == Parts{{3, 1}, {2, 2}, {1, 1, 1, 1}});
  CHECK(members(FamilySpec::odd_sign(), 4) == Parts{{4}, {2, 1, 1}});
}

TEST_CASE("distinct-odd partitions are equinumerous with self-conjugate ones") {
  for (int n = 1; n <= 16; ++n) {
    std::size_t self_conj = 0;
    for (const auto& p : partitions_cached(n)) self_conj += p.is_self_conjugate() ? 1 : 0;
    CHECK(members(FamilySpec::distinct_odd(), n).size() == self_conj);
  }
}

TEST_CASE("complement of distinct-odd") {
  for (int n = 1; n <= 10; ++n) {
    CHECK(members(FamilySpec::not_do(), n).size() + members(FamilySpec::distinct_odd(), n).size() ==
          partitions_cached(n).size());
  }
}

TEST_CASE("parts restricted to one or k") {
  CHECK(members(FamilySpec::parts_one_or_k(3), 5) == Parts{{3, 1, 1}, {1, 1, 1, 1, 1}});
  CHECK(members(FamilySpec::parts_divide_k(1), 4) == Parts{{1, 1, 1, 1}});
  CHECK(members(FamilySpec::parts_divide_k(6), 4) == Parts{{3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("weighted even-part family for k equal two") {
  CHECK(members(FamilySpec::weighted_even_parts(2), 5) == Parts{{4, 1}, {1, 1, 1, 1, 1}});
}

TEST_CASE("prime family uses each even part at most once") {
  CHECK(members(FamilySpec::prime_p_family(3), 5) == Parts{{3, 2}, {3, 1, 1}, {2, 1, 1, 1}, {1, 1, 1, 1, 1}});
  CHECK_FALSE(in_family({2, 2, 1}, FamilySpec::prime_p_family(3)));
  CHECK(in_family({6, 1}, FamilySpec::prime_p_family(3)));
}

TEST_CASE("lexicographic final segment") {
  const auto seg = FamilySpec::lex_segment({3, 1});
  CHECK(members(seg, 4) == Parts{{3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
  CHECK_THROWS_AS(validate(seg, 5), ParameterError);
  CHECK_THROWS_AS(members(seg, 5), ParameterError);
}

TEST_CASE("invalid family parameters are rejected") {
  CHECK_THROWS_AS(validate(FamilySpec::prime_p_family(4)), ParameterError);
  CHECK_THROWS_AS(validate(FamilySpec::prime_p_family(2)), ParameterError);
  CHECK_THROWS_AS(validate(FamilySpec::parts_one_or_k(0)), ParameterError);
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("family names round trip through the parser") {
  for (const std::string name : {"all", "odd-parts", "even-sign", "odd-sign", "not-do", "not-do-even-sign", "do",
                                 "distinct", "one-or-k:3", "divides-k:6", "thm59:4", "prime-family:5",
                                 "lex-from:[3,1]"}) {
    CHECK(parse_family(name).name() == name);
  }
  CHECK_THROWS_AS(parse_family("nope"), ParameterError);
  CHECK_THROWS_AS(parse_family("all:3"), ParameterError);
  CHECK_THROWS_AS(parse_family("divides-k:x"), ParameterError);
}

TEST_CASE("explicit families are read from a JSON file") {
  const std::string path = "explicit_family_test.json";
  {
    std::ofstream out(path);
    out << "[[2,1],[1,1,1]]";
  }
  const auto spec = parse_family("explicit:" + path);
  CHECK(members(spec, 3) == Parts{{2, 1}, {1, 1, 1}});
  CHECK(members(spec, 4).empty());
  std::remove(path.c_str());
  CHECK_THROWS_AS(parse_family("explicit:/nonexistent/file.json"), ParameterError);
}
