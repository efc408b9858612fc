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

#ifndef DICKSON_NUMTHEORY_HPP
#define DICKSON_NUMTHEORY_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace dickson {

/// Eventual periodicity (tail, period) of the sequence n^m mod M, m >= 1.
struct DynStruct {
  std::uint64_t tail = 0;
  std::uint64_t period = 1;

  friend bool operator==(const DynStruct&, const DynStruct&) = default;
};

using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n) noexcept;
/// Trial division; primes ascending.
Factorization factorize(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) noexcept;
unsigned v2(std::uint64_t n) noexcept;

/// Largest m accepted by binom_exact.
inline constexpr std::uint64_t kMaxExactBinomial = 1u << 20;

/// C(m, n) mod p by base-q digits with base-p Lucas for each digit pair.
std::uint32_t binom_mod_p(std::uint64_t m, std::uint64_t n, std::uint32_t p, std::uint32_t s);
mpz_class binom_exact(std::uint64_t m, std::uint64_t n);

/// Constructive k with gcd(M + k (N - 1), N^2 - 1) | N - 1.
std::uint64_t find_k(std::uint64_t M, std::uint64_t N);

/// x with x = r1 mod m1 and x = r2 mod m2, in [0, lcm(m1, m2)).
std::uint64_t crt2(std::int64_t r1, std::uint64_t m1, std::int64_t r2, std::uint64_t m2);

DynStruct dyn_structure_int(std::uint64_t n, std::uint64_t M);

std::uint64_t mult_order_mod(std::uint64_t n, std::uint64_t M);
std::uint64_t euler_phi(std::uint64_t M);
std::uint64_t lcm_list(std::span<const std::uint64_t> xs);
/// Smallest generator of (Z / p^e)^x for an odd prime p, or of (Z / 2^e)^x when e <= 2.
std::uint64_t unit_group_generator(std::uint64_t p, unsigned e);

/// n with alpha^n = alpha whose composition period is meant to reach the lcm bound.
/// m is the multiplicative order of alpha, pi the sequence period.
std::uint64_t construct_max_period_n(std::uint64_t q, std::uint64_t m, std::uint64_t pi);
/// The lcm bound that construct_max_period_n aims for.
std::uint64_t max_period_bound(std::uint64_t q, std::uint64_t m, std::uint64_t pi);

}  // namespace dickson

#endif  // DICKSON_NUMTHEORY_HPP
