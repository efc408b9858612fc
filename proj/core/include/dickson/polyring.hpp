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

#ifndef DICKSON_POLYRING_HPP
#define DICKSON_POLYRING_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dickson/gf.hpp"

namespace dickson {

/// Dense polynomial over F_q; coefficient i belongs to x^i, trimmed so the leading one is nonzero.
class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<Felt> coeffs);

  static Poly constant(const Field& f, Felt c);
  static Poly monomial(const Field& f, Felt c, std::size_t e);
  static Poly x(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const noexcept { return field_; }
  const std::vector<Felt>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Felt coeff(std::size_t e) const noexcept { return e < coeffs_.size() ? coeffs_[e] : Felt{}; }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::vector<Felt> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Felt c);
Felt eval(const Poly& a, Felt x);
/// x^m f(1/x); requires m >= deg f.
Poly reverse_scale(const Poly& f, std::size_t m);

/// Polynomial modulo x^q - x, stored as exactly q coefficients.
class RPoly {
 public:
  explicit RPoly(const Field& f) : field_(f), coeffs_(f.q()) {}
  RPoly(Field f, std::vector<Felt> coeffs);

  static RPoly constant(const Field& f, Felt c);
  static RPoly monomial(const Field& f, Felt c, std::uint64_t e);
  static RPoly x(const Field& f) { return monomial(f, f.one(), 1); }

  const Field& field() const noexcept { return field_; }
  const std::vector<Felt>& coeffs() const noexcept { return coeffs_; }
  Felt coeff(std::size_t e) const noexcept { return coeffs_[e]; }
  bool is_zero() const noexcept;
  /// Index of the highest nonzero coefficient, -1 for zero.
  std::int64_t degree() const noexcept;
  Poly to_poly() const { return Poly(field_, coeffs_); }

  friend bool operator==(const RPoly& a, const RPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

 private:
  Field field_;
  std::vector<Felt> coeffs_;
};

struct RPolyHash {
  std::size_t operator()(const RPoly& f) const noexcept;
};

/// Exponent e >= 1 reduced into 1..q-1; 0 stays 0.
std::uint64_t reduced_exponent(std::uint64_t e, std::uint32_t q) noexcept;

RPoly reduce(const Poly& f);
RPoly rp_add(const RPoly& a, const RPoly& b);
RPoly rp_sub(const RPoly& a, const RPoly& b);
RPoly rp_scale(const RPoly& a, Felt c);
RPoly rp_mul(const RPoly& a, const RPoly& b);
/// x * a.
RPoly rp_mul_x(const RPoly& a);
Felt rp_eval(const RPoly& a, Felt beta);

/// Values at every element in encoding order.
using ValueTable = std::vector<Felt>;

ValueTable values(const RPoly& a);
RPoly interpolate(std::span<const Felt> table, const Field& f);
RPoly rp_compose(const RPoly& outer, const RPoly& inner);
/// (outer o inner) on value tables.
ValueTable compose_tables(std::span<const Felt> outer, std::span<const Felt> inner);

/// Text such as "x^4 + x^2 + 2" or "(z+1)x^3 + zx".
std::string to_string(const Poly& f);
std::string to_string(const RPoly& f);
/// "c0,c1,...,c_{q-1}".
std::string to_csv(const RPoly& f);
/// Accepts "c_k*x^k + ... + c_0"; compound coefficients must be parenthesized.
Poly parse_poly(const Field& f, std::string_view text);
/// Accepts "c0,c1,...".
Poly parse_csv(const Field& f, std::string_view text);

}  // namespace dickson

#endif  // DICKSON_POLYRING_HPP
