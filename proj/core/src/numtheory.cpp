/*
   Copyright 2026 The dickson authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "dickson/numtheory.hpp"

#include <map>
#include <numeric>
#include <string>

#include "dickson/error.hpp"
#include "int128.hpp"

namespace dickson {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  Factorization out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  detail::u128 r = 1;
  detail::u128 b = base % m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return static_cast<std::uint64_t>(r);
}

unsigned v2(std::uint64_t n) noexcept {
  if (n == 0) return 64;
  unsigned c = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++c;
  }
  return c;
}

namespace {

// C(a, b) mod p for a, b < p.
std::uint32_t small_binom(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  if (b > a) return 0;
  std::uint64_t num = 1;
  std::uint64_t den = 1;
  for (std::uint32_t i = 0; i < b; ++i) {
    num = num * (a - i) % p;
    den = den * (i + 1) % p;
  }
  return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

// Classical Lucas in base p.
std::uint32_t lucas(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  std::uint64_t r = 1;
  while (n > 0 || m > 0) {
    const std::uint32_t mi = static_cast<std::uint32_t>(m % p);
    const std::uint32_t ni = static_cast<std::uint32_t>(n % p);
    if (ni > mi) return 0;
    r = r * small_binom(mi, ni, p) % p;
    m /= p;
    n /= p;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::uint32_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint32_t p, std::uint32_t s) {
  if (n > m) return 0;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) q *= p;
  std::uint64_t r = 1;
  while (n > 0 || m > 0) {
    const std::uint64_t mi = m % q;
    const std::uint64_t ni = n % q;
    if (ni > mi) return 0;
    r = r * lucas(mi, ni, p) % p;
    if (r == 0) return 0;
    m /= q;
    n /= q;
  }
  return static_cast<std::uint32_t>(r);
}

mpz_class binom_exact(std::uint64_t m, std::uint64_t n) {
  if (m > kMaxExactBinomial) {
    throw Error(Errc::Overflow, "binom_exact bound exceeded by m = " + std::to_string(m));
  }
  if (n > m) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(n));
  return r;
}

std::uint64_t find_k(std::uint64_t M, std::uint64_t N) {
  if (N < 2 || M < 1 || M > N - 1) {
    throw Error(Errc::OutOfRange,
                "find_k needs 1 <= M <= N - 1, got M = " + std::to_string(M) +
                    ", N = " + std::to_string(N));
  }
  if (N % 2 == 0) return (M - 1) / 2;
  if (M % 2 == 1) return (M - 1) / 2;
  if (N % 4 == 3) return (M - 2) / 2;
  const unsigned s1 = v2(M);
  const unsigned s2 = v2(N - 1);
  return s1 != s2 ? M / 2 - 1 : M / 2 - 2;
}

namespace {

struct Egcd {
  std::int64_t g;
  std::int64_t x;
};

// g = gcd(a, b) and x with a x = g mod b.
Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t t = old_r / r;
    std::int64_t tmp = old_r - t * r;
    old_r = r;
    r = tmp;
    tmp = old_s - t * s;
    old_s = s;
    s = tmp;
  }
  return Egcd{old_r, old_s};
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

std::uint64_t crt2(std::int64_t r1, std::uint64_t m1, std::int64_t r2, std::uint64_t m2) {
  if (m1 == 0 || m2 == 0) throw Error(Errc::OutOfRange, "crt2 modulus must be positive");
  const auto a = static_cast<std::int64_t>(m1);
  const auto b = static_cast<std::int64_t>(m2);
  const std::int64_t x1 = mod_floor(r1, a);
  const std::int64_t x2 = mod_floor(r2, b);
  const Egcd e = egcd(a, b);
  if ((x2 - x1) % e.g != 0) {
    throw Error(Errc::Inconsistent, "congruences disagree modulo gcd");
  }
  const std::int64_t lcm = a / e.g * b;
  const std::int64_t step = b / e.g;
  const detail::i128 t = static_cast<detail::i128>((x2 - x1) / e.g) * e.x;
  const std::int64_t k = static_cast<std::int64_t>(((t % step) + step) % step);
  return static_cast<std::uint64_t>(mod_floor(x1 + static_cast<std::int64_t>(
                                                       static_cast<detail::i128>(a) * k % lcm),
                                              lcm));
}

DynStruct dyn_structure_int(std::uint64_t n, std::uint64_t M) {
  if (M == 0) throw Error(Errc::OutOfRange, "modulus must be positive");
  std::map<std::uint64_t, std::uint64_t> seen;
  std::uint64_t s = n % M;
  for (std::uint64_t m = 1;; ++m) {
    const auto [it, inserted] = seen.emplace(s, m);
    if (!inserted) return DynStruct{it->second - 1, m - it->second};
    s = static_cast<std::uint64_t>(static_cast<detail::u128>(s) * n % M);
  }
}

std::uint64_t mult_order_mod(std::uint64_t n, std::uint64_t M) {
  if (M == 0) throw Error(Errc::OutOfRange, "modulus must be positive");
  if (std::gcd(n, M) != 1) {
    throw Error(Errc::NotCoprime, std::to_string(n) + " is not a unit mod " + std::to_string(M));
  }
  std::uint64_t t = euler_phi(M);
  for (const auto& [r, e] : factorize(t)) {
    (void)e;
    while (t % r == 0 && pow_mod(n, t / r, M) == 1 % M) t /= r;
  }
  return t;
}

std::uint64_t euler_phi(std::uint64_t M) {
  std::uint64_t r = M;
  for (const auto& [p, e] : factorize(M)) {
    (void)e;
    r = r / p * (p - 1);
  }
  return r;
}

std::uint64_t lcm_list(std::span<const std::uint64_t> xs) {
  std::uint64_t r = 1;
  for (const std::uint64_t x : xs) r = std::lcm(r, x);
  return r;
}

std::uint64_t unit_group_generator(std::uint64_t p, unsigned e) {
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < e; ++i) pe *= p;
  if (p == 2 && e >= 3) {
    throw Error(Errc::NoGeneratorFound, "(Z/2^e)^x is not cyclic for e >= 3");
  }
  if (pe <= 2) return 1;
  const std::uint64_t phi = euler_phi(pe);
  for (std::uint64_t g = 2; g < pe; ++g) {
    if (std::gcd(g, pe) == 1 && mult_order_mod(g, pe) == phi) return g;
  }
  throw Error(Errc::NoGeneratorFound, "no generator mod " + std::to_string(pe));
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

unsigned valuation(std::uint64_t n, std::uint64_t p) {
  unsigned c = 0;
  while (n % p == 0) {
    n /= p;
    ++c;
  }
  return c;
}

void check_args(std::uint64_t q, std::uint64_t m, std::uint64_t pi) {
  if (q < 2 || m == 0 || pi == 0 || (q - 1) % m != 0 || (q * q - 1) % pi != 0) {
    throw Error(Errc::OutOfRange, "inconsistent (q, m, pi) for the max-period construction");
  }
}

}  // namespace

std::uint64_t max_period_bound(std::uint64_t q, std::uint64_t m, std::uint64_t pi) {
  check_args(q, m, pi);
  std::vector<std::uint64_t> terms;
  const unsigned k = v2(pi);
  const unsigned kp = v2(m);
  if (kp > 1) terms.push_back(ipow(2, k - kp));
  if (kp == 1) terms.push_back(k >= 2 ? ipow(2, k - 2) : 1);
  for (const auto& [r, e] : factorize(pi)) {
    if (r == 2) continue;
    const unsigned ep = valuation(m, r);
    if (ep > 0) {
      terms.push_back(ipow(r, e - ep));
    } else {
      terms.push_back(euler_phi(ipow(r, e)));
    }
  }
  return lcm_list(terms);
}

std::uint64_t construct_max_period_n(std::uint64_t q, std::uint64_t m, std::uint64_t pi) {
  check_args(q, m, pi);
  std::uint64_t n = 0;
  std::uint64_t mod = 1;
  const unsigned k = v2(pi);
  const unsigned kp = v2(m);
  if (k > 0) {
    const std::uint64_t pk = ipow(2, k);
    std::uint64_t target;
    if (kp > 0) {
      target = (1 + ipow(2, kp)) % pk;
    } else if (k <= 2) {
      target = unit_group_generator(2, k);
    } else {
      throw Error(Errc::NoGeneratorFound,
                  "odd alpha order with 2-part 2^" + std::to_string(k) + " of the period");
    }
    n = crt2(static_cast<std::int64_t>(target), pk, static_cast<std::int64_t>(n), mod);
    mod *= pk;
  }
  bool squared_alpha = m != 1;
  bool squared_beta = false;
  for (const auto& [r, e] : factorize(pi)) {
    if (r == 2) continue;
    const std::uint64_t re = ipow(r, e);
    const unsigned ep = valuation(m, r);
    std::uint64_t target;
    if (ep > 0) {
      target = (1 + ipow(r, ep)) % re;
    } else {
      target = unit_group_generator(r, e);
      const bool divides_q_minus_1 = (q - 1) % r == 0;
      if (divides_q_minus_1 && !squared_alpha) {
        target = target * target % re;
        squared_alpha = true;
      } else if (!divides_q_minus_1 && !squared_beta) {
        target = target * target % re;
        squared_beta = true;
      }
    }
    n = crt2(static_cast<std::int64_t>(target), re, static_cast<std::int64_t>(n), mod);
    mod *= re;
  }
  return n == 0 ? pi : n;
}

}  // namespace dickson
