#include "doctest.h"

#include "symcon/numbertheory.hpp"

using namespace symcon;

TEST_CASE("totient and Moebius small values") {
  CHECK(totient(1) == 1);
  CHECK(moebius(1) == 1);
  CHECK(totient(12) == 4);
  CHECK(moebius(12) == 0);
  CHECK(moebius(30) == -1);
  CHECK(moebius(6) == 1);
}

TEST_CASE("totient sums over divisors to n") {
  for (long n = 1; n <= 100; ++n) {
    long s = 0;
    for (long d : divisors(n)) s += totient(d);
    CHECK(s == n);
  }
}

TEST_CASE("factorization and divisors") {
  const std::vector<std::pair<long, int>> want{{2, 2}, {3, 1}, {5, 1}};
  CHECK(factorize(60) == want);
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("Ramanujan sum closed form on the documented values") {
  for (long k = -3; k <= 10; ++k) CHECK(ramanujan_sum(1, k) == 1);
  for (long d = 1; d <= 60; ++d) CHECK(ramanujan_sum(d, 1) == moebius(d));
  CHECK(ramanujan_sum(6, 2) == -1);
  CHECK(ramanujan_sum(4, 2) == -2);
  for (long d = 1; d <= 30; ++d) CHECK(ramanujan_sum(d, 0) == totient(d));
}

TEST_CASE("Ramanujan sum divisor oracle on the documented values") {
  CHECK(ramanujan_sum_oracle(1, 5) == 1);
  CHECK(ramanujan_sum_oracle(4, 2) == -2);
  for (long p = 2; p <= 50; ++p) {
    bool prime = p > 1;
    for (long q = 2; q * q <= p; ++q) prime = prime && p % q != 0;
    if (prime) CHECK(ramanujan_sum_oracle(p, p) == p - 1);
  }
}

TEST_CASE("Ramanujan closed form agrees with the divisor oracle") {
  for (long d = 1; d <= 60; ++d) {
    for (long k = -5; k <= 60; ++k) {
      CAPTURE(d);
      CAPTURE(k);
      CHECK(ramanujan_sum(d, k) == ramanujan_sum_oracle(d, k));
    }
  }
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(30, 15) == 155117520);
}
