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

#include "dickson/gf.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "dickson/numtheory.hpp"

namespace dickson {

namespace {

using Digits = std::vector<std::uint32_t>;

// Remainder of a modulo b over F_p; b nonzero with trimmed leading coefficient.
Digits poly_rem(Digits a, const Digits& b, std::uint32_t p) {
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = static_cast<std::uint32_t>(pow_mod(b.back(), p - 2, p));
  while (a.size() > db) {
    const std::uint32_t c = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(c) * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

bool is_irreducible(const Digits& f, std::uint32_t p) {
  const std::uint32_t s = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; d <= s / 2; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Digits g(d + 1);
      std::uint64_t v = idx;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

// Monic irreducible of degree s, smallest when (c_0, ..., c_{s-1}) is compared lexicographically.
Digits smallest_irreducible(std::uint32_t p, std::uint32_t s) {
  if (s == 1) return {0, 1};
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < s; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Digits f(s + 1);
    std::uint64_t v = idx;
    for (std::uint32_t i = s; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(v % p);
      v /= p;
    }
    f[s] = 1;
    if (f[0] != 0 && is_irreducible(f, p)) return f;
  }
  throw Error(Errc::DegreeTooLarge, "no irreducible polynomial found");
}

class SlowArith {
 public:
  SlowArith(std::uint32_t p, std::uint32_t s, const Digits& modulus)
      : p_(p), s_(s), modulus_(modulus) {}

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    Digits x = digits(a), y = digits(b);
    Digits prod(2 * s_, 0);
    for (std::uint32_t i = 0; i < s_; ++i) {
      for (std::uint32_t j = 0; j < s_; ++j) {
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(x[i]) * y[j]) % p_);
      }
    }
    while (!prod.empty() && prod.back() == 0) prod.pop_back();
    const Digits r = s_ == 1 ? prod : poly_rem(prod, modulus_, p_);
    std::uint32_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p_ + r[i];
    return code;
  }

  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    while (e > 0) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

 private:
  Digits digits(std::uint32_t a) const {
    Digits d(s_);
    for (std::uint32_t i = 0; i < s_; ++i) {
      d[i] = a % p_;
      a /= p_;
    }
    return d;
  }

  std::uint32_t p_;
  std::uint32_t s_;
  Digits modulus_;
};

}  // namespace

std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  const Factorization f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(f[0].first), f[0].second,
                    static_cast<std::uint32_t>(q)};
}

std::vector<std::uint32_t> prime_powers_up_to(std::uint32_t q_max) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t q = 2; q <= q_max; ++q) {
    if (as_prime_power(q)) out.push_back(q);
  }
  return out;
}

Field::Field(std::uint32_t p, std::uint32_t s) {
  if (!is_prime(p)) throw Error(Errc::NotPrime, std::to_string(p) + " is not prime");
  if (s == 0) throw Error(Errc::DegreeTooLarge, "extension degree must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxFieldOrder) {
      throw Error(Errc::DegreeTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
    }
  }

  auto d = std::make_shared<detail::FieldData>();
  d->pp = PrimePower{p, s, static_cast<std::uint32_t>(q)};
  d->modulus = smallest_irreducible(p, s);

  const SlowArith slow(p, s, d->modulus);
  const std::uint32_t order = static_cast<std::uint32_t>(q - 1);
  const Factorization fo = factorize(order);
  for (std::uint32_t g = 1; g < q; ++g) {
    bool primitive = true;
    for (const auto& [r, e] : fo) {
      if (slow.pow(g, order / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      d->generator = g;
      break;
    }
  }

  d->exp.assign(2 * static_cast<std::size_t>(order), 0);
  d->log.assign(q, 0);
  std::uint32_t cur = 1;
  for (std::uint32_t i = 0; i < order; ++i) {
    d->exp[i] = cur;
    d->exp[i + order] = cur;
    d->log[cur] = i;
    cur = slow.mul(cur, d->generator);
  }
  d_ = std::move(d);
}

Field Field::of_order(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw Error(Errc::NotPrimePower, std::to_string(q) + " is not a prime power");
  return Field(pp->p, pp->s);
}

Field make_field(std::uint32_t p, std::uint32_t s) { return Field(p, s); }

Felt Field::from_int(std::int64_t v) const noexcept {
  const std::int64_t p = d_->pp.p;
  return Felt{static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Felt Field::from_code(std::uint32_t code) const {
  if (code >= q()) throw Error(Errc::OutOfRange, "element code " + std::to_string(code));
  return Felt{code};
}

Felt Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() > s()) throw Error(Errc::OutOfRange, "too many element coefficients");
  std::uint32_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p()) throw Error(Errc::OutOfRange, "coefficient not reduced mod p");
    code = code * p() + coeffs[i];
  }
  return Felt{code};
}

std::vector<std::uint32_t> Field::coeffs(Felt a) const {
  std::vector<std::uint32_t> out(s());
  std::uint32_t v = a.code;
  for (auto& c : out) {
    c = v % p();
    v /= p();
  }
  return out;
}

std::uint32_t Field::digit_add(std::uint32_t a, std::uint32_t b) const noexcept {
  const std::uint32_t p = d_->pp.p;
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  for (std::uint32_t i = 0; i < d_->pp.s; ++i) {
    std::uint32_t d = a % p + b % p;
    if (d >= p) d -= p;
    r += d * place;
    place *= p;
    a /= p;
    b /= p;
  }
  return r;
}

Felt Field::neg(Felt a) const noexcept {
  const std::uint32_t p = d_->pp.p;
  if (p == 2 || a.code == 0) return a;
  if (d_->pp.s == 1) return Felt{p - a.code};
  std::uint32_t r = 0;
  std::uint32_t place = 1;
  std::uint32_t v = a.code;
  for (std::uint32_t i = 0; i < d_->pp.s; ++i) {
    const std::uint32_t d = v % p;
    r += (d == 0 ? 0 : p - d) * place;
    place *= p;
    v /= p;
  }
  return Felt{r};
}

Felt Field::pow(Felt a, std::uint64_t e) const noexcept {
  if (e == 0) return one();
  if (a.code == 0) return zero();
  const std::uint64_t order = q() - 1;
  const std::uint64_t idx = (static_cast<std::uint64_t>(d_->log[a.code]) * (e % order)) % order;
  return Felt{d_->exp[idx]};
}

Felt Field::inv(Felt a) const {
  if (a.code == 0) throw Error(Errc::DivisionByZero, "inverse of zero");
  return pow(a, q() - 2);
}

bool Field::is_square(Felt a) const {
  if (a.code == 0) throw Error(Errc::ZeroInput, "is_square of zero");
  if (!odd()) return true;
  return pow(a, (q() - 1) / 2) == one();
}

std::uint64_t Field::mult_order(Felt a) const {
  if (a.code == 0) throw Error(Errc::ZeroInput, "order of zero");
  std::uint64_t t = q() - 1;
  for (const auto& [r, e] : factorize(t)) {
    (void)e;
    while (t % r == 0 && pow(a, t / r) == one()) t /= r;
  }
  return t;
}

bool is_square(const Field& f, Felt a) { return f.is_square(a); }
std::uint64_t mult_order(const Field& f, Felt a) { return f.mult_order(a); }

std::vector<Felt> Field::elements() const {
  std::vector<Felt> out(q());
  for (std::uint32_t i = 0; i < q(); ++i) out[i] = Felt{i};
  return out;
}

std::vector<Felt> Field::units() const {
  std::vector<Felt> out(q() - 1);
  for (std::uint32_t i = 1; i < q(); ++i) out[i - 1] = Felt{i};
  return out;
}

std::string Field::format(Felt a) const {
  if (s() == 1) return std::to_string(a.code);
  if (a.code == 0) return "0";
  const auto c = coeffs(a);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]);
    out += 'z';
    if (i > 1) out += '^' + std::to_string(i);
  }
  return out;
}

namespace {

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

Felt Field::parse(std::string_view text) const {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  if (t.empty()) throw Error(Errc::ParseError, "empty element");

  Felt acc = zero();
  const Felt gen_z = Felt{s() > 1 ? p() : 0};
  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < t.size() && t[end] != '+' && t[end] != '-') ++end;
    std::string_view term(t.data() + pos, end - pos);
    if (term.empty()) throw Error(Errc::ParseError, "bad element '" + std::string(text) + "'");

    const std::size_t zpos = term.find('z');
    std::uint64_t coeff = 1;
    std::uint64_t power = 0;
    if (zpos == std::string_view::npos) {
      if (!parse_uint(term, coeff)) {
        throw Error(Errc::ParseError, "bad element '" + std::string(text) + "'");
      }
    } else {
      if (s() == 1) throw Error(Errc::ParseError, "z used in a prime field");
      std::string_view c = term.substr(0, zpos);
      if (!c.empty() && c.back() == '*') c.remove_suffix(1);
      if (!c.empty() && !parse_uint(c, coeff)) {
        throw Error(Errc::ParseError, "bad coefficient in '" + std::string(text) + "'");
      }
      std::string_view rest = term.substr(zpos + 1);
      power = 1;
      if (!rest.empty()) {
        if (rest.front() != '^' || !parse_uint(rest.substr(1), power)) {
          throw Error(Errc::ParseError, "bad exponent in '" + std::string(text) + "'");
        }
      }
    }
    const Felt v = mul(from_int(static_cast<std::int64_t>(coeff % p())), pow(gen_z, power));
    acc = negative ? sub(acc, v) : add(acc, v);
    pos = end;
  }
  return acc;
}

}  // namespace dickson
