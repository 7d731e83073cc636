#include "symcon/numbertheory.hpp"

#include <cstdlib>
#include <numeric>

#include "symcon/errors.hpp"

namespace symcon {

std::vector<std::pair<long, int>> factorize(long d) {
  if (d < 1) throw ParameterError("factorize: d must be positive");
  std::vector<std::pair<long, int>> out;
  for (long p = 2; p * p <= d; ++p) {
    int e = 0;
    while (d % p == 0) {
      d /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (d > 1) out.emplace_back(d, 1);
  return out;
}

std::vector<long> divisors(long n) {
  if (n < 1) throw ParameterError("divisors: n must be positive");
  std::vector<long> small, large;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

long totient(long d) {
  long phi = d;
  for (const auto& [p, e] : factorize(d)) phi = phi / p * (p - 1);
  return phi;
}

int moebius(long d) {
  const auto f = factorize(d);
  for (const auto& pe : f) {
    if (pe.second > 1) return 0;
  }
  return f.size() % 2 ? -1 : 1;
}

long ramanujan_sum(long d, long k) {
  if (d < 1) throw ParameterError("ramanujan_sum: d must be positive");
  const long r = ((k % d) + d) % d;
  const long g = std::gcd(d, r);  // gcd(d, 0) = d
  const long q = d / g;
  return totient(d) / totient(q) * moebius(q);
}

long ramanujan_sum_oracle(long d, long k) {
  if (d < 1) throw ParameterError("ramanujan_sum_oracle: d must be positive");
  const long g = std::gcd(d, std::labs(k));
  long total = 0;
  for (long e : divisors(g)) total += e * moebius(d / e);
  return total;
}

long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace symcon
