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

#ifndef DICKSON_DICKSON_HPP
#define DICKSON_DICKSON_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "dickson/gf.hpp"
#include "dickson/polyring.hpp"

namespace dickson {

/// D_n(x, alpha).
struct DicksonId {
  std::uint64_t n = 0;
  Felt alpha;

  friend auto operator<=>(const DicksonId&, const DicksonId&) = default;
};

/// Largest n accepted by dickson_closed.
inline constexpr std::uint64_t kMaxClosedDegree = 1u << 17;

/// Integer coefficient n/(n-i) C(n-i, i) of (-alpha)^i x^{n-2i}; 2 for n = 0.
mpz_class dickson_coefficient(std::uint64_t n, std::uint64_t i);
/// Same coefficient reduced mod p, computed with Lucas digits.
std::uint32_t dickson_coefficient_mod_p(std::uint64_t n, std::uint64_t i, std::uint32_t p);

/// Unreduced D_n from the closed form.
Poly dickson_closed(const DicksonId& id, const Field& f);
/// D_n mod x^q - x by the order-2 recurrence.
RPoly dickson_reduced(const DicksonId& id, const Field& f);
/// D_n mod x^q - x by the stride-2 recurrence.
RPoly dickson_stride2(const DicksonId& id, const Field& f);

/// D_0, ..., D_last mod x^q - x.
std::vector<RPoly> dickson_sequence(const Field& f, Felt alpha, std::uint64_t last);

/// Walks D_0, D_1, ... mod x^q - x one step at a time.
class DicksonWalker {
 public:
  DicksonWalker(const Field& f, Felt alpha);

  std::uint64_t index() const noexcept { return index_; }
  const RPoly& current() const noexcept { return cur_; }
  const RPoly& next() const noexcept { return next_; }
  void advance();

 private:
  Felt alpha_;
  std::uint64_t index_ = 0;
  RPoly cur_;
  RPoly next_;
};

bool check_functional_eq(const DicksonId& id, const ExtField& ext);
bool check_compose_identity(std::uint64_t m, std::uint64_t n, Felt alpha, const Field& f);
bool is_permutation(const DicksonId& id, const Field& f);

}  // namespace dickson

#endif  // DICKSON_DICKSON_HPP
