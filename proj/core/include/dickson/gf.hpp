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

#ifndef DICKSON_GF_HPP
#define DICKSON_GF_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dickson/error.hpp"

namespace dickson {

/// q = p^s with p prime.
struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t s = 0;
  std::uint32_t q = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Largest field order accepted by make_field.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

std::optional<PrimePower> as_prime_power(std::uint64_t q);

/// All prime powers 2 <= q <= q_max in increasing order.
std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t q_max);

/// Element of F_q, stored by its canonical encoding c_0 + c_1 p + ... + c_{s-1} p^{s-1}.
struct Felt {
  std::uint32_t code = 0;

  friend auto operator<=>(const Felt&, const Felt&) = default;
};

namespace detail {

struct FieldData {
  PrimePower pp;
  std::vector<std::uint32_t> modulus;  // s + 1 coefficients, low to high, monic
  std::uint32_t generator = 0;
  std::vector<std::uint32_t> exp;  // exp[i] = g^i, length 2(q - 1)
  std::vector<std::uint32_t> log;  // log[a] for a != 0
};

}  // namespace detail

/// A concrete finite field F_q. Cheap to copy; all copies share immutable tables.
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t s);

  static Field of_order(std::uint64_t q);

  const PrimePower& pp() const noexcept { return d_->pp; }
  std::uint32_t p() const noexcept { return d_->pp.p; }
  std::uint32_t s() const noexcept { return d_->pp.s; }
  std::uint32_t q() const noexcept { return d_->pp.q; }
  bool odd() const noexcept { return d_->pp.p != 2; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return d_->modulus; }
  Felt generator() const noexcept { return Felt{d_->generator}; }

  Felt zero() const noexcept { return Felt{0}; }
  Felt one() const noexcept { return Felt{1}; }
  Felt from_int(std::int64_t v) const noexcept;
  Felt from_code(std::uint32_t code) const;
  Felt from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(Felt a) const;

  Felt add(Felt a, Felt b) const noexcept {
    const std::uint32_t p = d_->pp.p;
    if (d_->pp.s == 1) {
      const std::uint32_t r = a.code + b.code;
      return Felt{r >= p ? r - p : r};
    }
    if (p == 2) return Felt{a.code ^ b.code};
    return Felt{digit_add(a.code, b.code)};
  }
  Felt neg(Felt a) const noexcept;
  Felt sub(Felt a, Felt b) const noexcept { return add(a, neg(b)); }
  Felt mul(Felt a, Felt b) const noexcept {
    if (a.code == 0 || b.code == 0) return Felt{0};
    return Felt{d_->exp[d_->log[a.code] + d_->log[b.code]]};
  }
  Felt pow(Felt a, std::uint64_t e) const noexcept;
  Felt inv(Felt a) const;
  Felt div(Felt a, Felt b) const { return mul(a, inv(b)); }

  bool is_square(Felt a) const;
  std::uint64_t mult_order(Felt a) const;

  /// All q elements in ascending encoding.
  std::vector<Felt> elements() const;
  /// The q - 1 nonzero elements in ascending encoding.
  std::vector<Felt> units() const;

  std::string format(Felt a) const;
  Felt parse(std::string_view text) const;

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.d_ == b.d_ || a.pp() == b.pp();
  }

 private:
  std::uint32_t digit_add(std::uint32_t a, std::uint32_t b) const noexcept;

  std::shared_ptr<const detail::FieldData> d_;
};

Field make_field(std::uint32_t p, std::uint32_t s);
bool is_square(const Field& f, Felt a);
std::uint64_t mult_order(const Field& f, Felt a);

/// Element a + b y of F_{q^2}.
struct ExtElt {
  Felt a;
  Felt b;

  friend auto operator<=>(const ExtElt&, const ExtElt&) = default;
};

/// F_{q^2} = F_q[y] / (y^2 - t y - u).
class ExtField {
 public:
  explicit ExtField(Field base);

  const Field& base() const noexcept { return base_; }
  Felt t() const noexcept { return t_; }
  Felt u() const noexcept { return u_; }
  std::uint64_t order() const noexcept {
    return static_cast<std::uint64_t>(base_.q()) * base_.q();
  }

  ExtElt embed(Felt a) const noexcept { return ExtElt{a, Felt{0}}; }
  ExtElt zero() const noexcept { return ExtElt{}; }
  ExtElt one() const noexcept { return ExtElt{Felt{1}, Felt{0}}; }
  bool in_base(ExtElt v) const noexcept { return v.b.code == 0; }

  ExtElt add(ExtElt x, ExtElt y) const noexcept;
  ExtElt sub(ExtElt x, ExtElt y) const noexcept;
  ExtElt mul(ExtElt x, ExtElt y) const noexcept;
  ExtElt pow(ExtElt x, std::uint64_t e) const noexcept;
  ExtElt inv(ExtElt x) const;
  ExtElt div(ExtElt x, ExtElt y) const { return mul(x, inv(y)); }
  std::uint64_t mult_order(ExtElt x) const;

  std::uint64_t code(ExtElt v) const noexcept {
    return v.a.code + static_cast<std::uint64_t>(base_.q()) * v.b.code;
  }
  ExtElt from_code(std::uint64_t code) const;
  /// All q^2 elements in ascending encoding.
  std::vector<ExtElt> elements() const;
  std::vector<ExtElt> units() const;

  std::string format(ExtElt v) const;

 private:
  Field base_;
  Felt t_;
  Felt u_;
};

ExtField make_ext(const Field& base);

/// u + alpha / u.
ExtElt phi_alpha(const ExtField& ext, Felt alpha, ExtElt u);
/// Roots of x^2 - beta x + alpha in F_{q^2}, ascending encoding.
std::vector<ExtElt> phi_preimages(const ExtField& ext, Felt alpha, Felt beta);
/// { u : u^{q+1} = gamma }, ascending encoding.
std::vector<ExtElt> s_gamma(const ExtField& ext, Felt gamma);
/// Some v with v^2 = a (smallest encoding). Requires odd q.
ExtElt sqrt_in_ext(const ExtField& ext, Felt a);

}  // namespace dickson

#endif  // DICKSON_GF_HPP
