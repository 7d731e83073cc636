#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace symcon {

// Prime factorisation by trial division as (prime, exponent) pairs.
std::vector<std::pair<long, int>> factorize(long d);

std::vector<long> divisors(long n);

long totient(long d);
int moebius(long d);

// c_d(k) by Hölder's closed form, with k reduced mod d first.
long ramanujan_sum(long d, long k);

// c_d(k) = Σ_{e | gcd(d,k)} e·μ(d/e), with gcd(d,0) = d.
long ramanujan_sum_oracle(long d, long k);

long binomial(long n, long k);

}  // namespace symcon
