#ifndef ZETALAB_PRIMES_HPP
#define ZETALAB_PRIMES_HPP

#include <cstdint>
#include <vector>

#include "zetalab/core.hpp"

namespace zetalab {

inline std::vector<long> primes_up_to(long x) {
  std::vector<long> out;
  if (x < 2) return out;
  std::vector<bool> composite(static_cast<std::size_t>(x) + 1, false);
  for (long i = 2; i * i <= x; ++i)
    if (!composite[i])
      for (long j = i * i; j <= x; j += i) composite[j] = true;
  for (long i = 2; i <= x; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

// first n primes (p_1 = 2)
inline std::vector<long> first_primes(int n) {
  if (n <= 0) return {};
  // p_n < n (ln n + ln ln n) for n >= 6
  long bound = 15;
  if (n >= 6) {
    double nd = n;
    bound = static_cast<long>(nd * (std::log(nd) + std::log(std::log(nd)))) + 10;
  }
  std::vector<long> p = primes_up_to(bound);
  while (static_cast<int>(p.size()) < n) {
    bound *= 2;
    p = primes_up_to(bound);
  }
  p.resize(n);
  return p;
}

// smallest prime factor for 2..n (spf[0], spf[1] unused)
inline std::vector<std::int32_t> spf_sieve(long n) {
  std::vector<std::int32_t> spf(static_cast<std::size_t>(n) + 1, 0);
  for (long i = 2; i <= n; ++i) {
    if (spf[i] == 0)
      for (long j = i; j <= n; j += i)
        if (spf[j] == 0) spf[j] = static_cast<std::int32_t>(i);
  }
  return spf;
}

}  // namespace zetalab

#endif  // ZETALAB_PRIMES_HPP
