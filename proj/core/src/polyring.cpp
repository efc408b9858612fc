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

#include "dickson/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace dickson {

namespace {

void require_same(const Field& a, const Field& b) {
  if (!(a == b)) throw Error(Errc::ContextMismatch, "operands live in different fields");
}

void trim(std::vector<Felt>& c) {
  while (!c.empty() && c.back().code == 0) c.pop_back();
}

}  // namespace

Poly::Poly(Field f, std::vector<Felt> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  trim(coeffs_);
}

Poly Poly::constant(const Field& f, Felt c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Felt c, std::size_t e) {
  std::vector<Felt> coeffs(e + 1);
  coeffs[e] = c;
  return Poly(f, std::move(coeffs));
}

Poly operator+(const Poly& a, const Poly& b) {
  require_same(a.field(), b.field());
  const Field& f = a.field();
  std::vector<Felt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  require_same(a.field(), b.field());
  const Field& f = a.field();
  std::vector<Felt> c(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a.field(), b.field());
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f);
  std::vector<Felt> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].code == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly(f, std::move(c));
}

Poly scale(const Poly& a, Felt s) {
  const Field& f = a.field();
  std::vector<Felt> c(a.coeffs());
  for (auto& v : c) v = f.mul(v, s);
  return Poly(f, std::move(c));
}

Felt eval(const Poly& a, Felt x) {
  const Field& f = a.field();
  Felt r = f.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) r = f.add(f.mul(r, x), a.coeffs()[i]);
  return r;
}

Poly reverse_scale(const Poly& f, std::size_t m) {
  if (f.degree() > static_cast<std::int64_t>(m)) {
    throw Error(Errc::MTooSmall, "reverse_scale needs m >= deg f");
  }
  std::vector<Felt> c(m + 1);
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) c[m - e] = f.coeffs()[e];
  return Poly(f.field(), std::move(c));
}

RPoly::RPoly(Field f, std::vector<Felt> coeffs) : field_(std::move(f)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_.q()) {
    throw Error(Errc::OutOfRange, "reduced polynomial needs exactly q coefficients");
  }
}

RPoly RPoly::constant(const Field& f, Felt c) {
  RPoly r(f);
  r.coeffs_[0] = c;
  return r;
}

RPoly RPoly::monomial(const Field& f, Felt c, std::uint64_t e) {
  RPoly r(f);
  r.coeffs_[reduced_exponent(e, f.q())] = c;
  return r;
}

bool RPoly::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Felt c) { return c.code == 0; });
}

std::int64_t RPoly::degree() const noexcept {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i].code != 0) return static_cast<std::int64_t>(i);
  }
  return -1;
}

std::size_t RPolyHash::operator()(const RPoly& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (const Felt c : f.coeffs()) {
    h ^= c.code;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t reduced_exponent(std::uint64_t e, std::uint32_t q) noexcept {
  if (e == 0) return 0;
  return (e - 1) % (q - 1) + 1;
}

RPoly reduce(const Poly& f) {
  const Field& fld = f.field();
  std::vector<Felt> c(fld.q());
  for (std::size_t e = 0; e < f.coeffs().size(); ++e) {
    const std::uint64_t r = reduced_exponent(e, fld.q());
    c[r] = fld.add(c[r], f.coeffs()[e]);
  }
  return RPoly(fld, std::move(c));
}

RPoly rp_add(const RPoly& a, const RPoly& b) {
  require_same(a.field(), b.field());
  const Field& f = a.field();
  std::vector<Felt> c(f.q());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return RPoly(f, std::move(c));
}

RPoly rp_sub(const RPoly& a, const RPoly& b) {
  require_same(a.field(), b.field());
  const Field& f = a.field();
  std::vector<Felt> c(f.q());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return RPoly(f, std::move(c));
}

RPoly rp_scale(const RPoly& a, Felt s) {
  const Field& f = a.field();
  std::vector<Felt> c(a.coeffs());
  for (auto& v : c) v = f.mul(v, s);
  return RPoly(f, std::move(c));
}

RPoly rp_mul(const RPoly& a, const RPoly& b) {
  require_same(a.field(), b.field());
  const Field& f = a.field();
  const std::uint32_t q = f.q();
  std::vector<Felt> c(q);
  for (std::uint32_t i = 0; i < q; ++i) {
    if (a.coeff(i).code == 0) continue;
    for (std::uint32_t j = 0; j < q; ++j) {
      if (b.coeff(j).code == 0) continue;
      const std::uint64_t e = reduced_exponent(i + j, q);
      c[e] = f.add(c[e], f.mul(a.coeff(i), b.coeff(j)));
    }
  }
  return RPoly(f, std::move(c));
}

RPoly rp_mul_x(const RPoly& a) {
  const Field& f = a.field();
  const std::uint32_t q = f.q();
  std::vector<Felt> c(q);
  for (std::uint32_t e = 0; e + 1 < q; ++e) c[e + 1] = a.coeff(e);
  c[1] = f.add(c[1], a.coeff(q - 1));
  return RPoly(f, std::move(c));
}

Felt rp_eval(const RPoly& a, Felt beta) {
  const Field& f = a.field();
  Felt r = f.zero();
  for (std::size_t i = a.coeffs().size(); i-- > 0;) r = f.add(f.mul(r, beta), a.coeff(i));
  return r;
}

ValueTable values(const RPoly& a) {
  const Field& f = a.field();
  ValueTable t(f.q());
  for (std::uint32_t b = 0; b < f.q(); ++b) t[b] = rp_eval(a, Felt{b});
  return t;
}

RPoly interpolate(std::span<const Felt> table, const Field& f) {
  const std::uint32_t q = f.q();
  if (table.size() != q) throw Error(Errc::OutOfRange, "value table needs q entries");
  // f(x) = sum_c f(c) (1 - (x - c)^{q-1}) and (x - c)^{q-1} = sum_j c^{q-1-j} x^j.
  std::vector<Felt> c(q);
  c[0] = table[0];
  Felt top = f.zero();
  for (std::uint32_t v = 0; v < q; ++v) top = f.add(top, table[v]);
  c[q - 1] = f.neg(top);
  for (std::uint32_t j = 1; j + 1 < q; ++j) {
    Felt acc = f.zero();
    for (std::uint32_t v = 1; v < q; ++v) {
      if (table[v].code == 0) continue;
      acc = f.add(acc, f.mul(table[v], f.pow(Felt{v}, q - 1 - j)));
    }
    c[j] = f.neg(acc);
  }
  return RPoly(f, std::move(c));
}

ValueTable compose_tables(std::span<const Felt> outer, std::span<const Felt> inner) {
  ValueTable t(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) t[i] = outer[inner[i].code];
  return t;
}

RPoly rp_compose(const RPoly& outer, const RPoly& inner) {
  require_same(outer.field(), inner.field());
  const ValueTable a = values(outer);
  const ValueTable b = values(inner);
  return interpolate(compose_tables(a, b), outer.field());
}

namespace {

std::string render(const Field& f, std::span<const Felt> coeffs) {
  std::string out;
  for (std::size_t e = coeffs.size(); e-- > 0;) {
    const Felt c = coeffs[e];
    if (c.code == 0) continue;
    const bool first = out.empty();
    if (!first) out += " + ";
    std::string cs = f.format(c);
    const bool compound = cs.find('+') != std::string::npos;
    if (e == 0) {
      out += compound && !first ? "(" + cs + ")" : cs;
      continue;
    }
    if (compound) cs = "(" + cs + ")";
    if (cs != "1") out += cs;
    out += 'x';
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

bool parse_size(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), out);
  return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

std::string to_string(const Poly& f) { return render(f.field(), f.coeffs()); }
std::string to_string(const RPoly& f) { return render(f.field(), f.coeffs()); }

std::string to_csv(const RPoly& f) {
  std::string out;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i > 0) out += ',';
    out += f.field().format(f.coeff(i));
  }
  return out;
}

Poly parse_poly(const Field& f, std::string_view text) {
  std::string t;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  }
  if (t.empty()) throw Error(Errc::ParseError, "empty polynomial");

  std::vector<Felt> coeffs;
  auto add_term = [&](Felt c, std::uint64_t e, bool negative) {
    if (e > (1u << 20)) throw Error(Errc::ParseError, "exponent too large");
    if (coeffs.size() <= e) coeffs.resize(e + 1);
    coeffs[e] = negative ? f.sub(coeffs[e], c) : f.add(coeffs[e], c);
  };

  std::size_t pos = 0;
  while (pos < t.size()) {
    bool negative = false;
    if (t[pos] == '+' || t[pos] == '-') {
      negative = t[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    int depth = 0;
    while (end < t.size()) {
      const char ch = t[end];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && end > pos) break;
      ++end;
    }
    const std::string_view term(t.data() + pos, end - pos);
    if (term.empty()) throw Error(Errc::ParseError, "empty term in '" + std::string(text) + "'");

    const std::size_t xpos = term.rfind('x');
    std::string_view coeff_text = term;
    std::uint64_t e = 0;
    if (xpos != std::string_view::npos) {
      coeff_text = term.substr(0, xpos);
      if (!coeff_text.empty() && coeff_text.back() == '*') coeff_text.remove_suffix(1);
      const std::string_view rest = term.substr(xpos + 1);
      e = 1;
      if (!rest.empty() && (rest.front() != '^' || !parse_size(rest.substr(1), e))) {
        throw Error(Errc::ParseError, "bad exponent in '" + std::string(term) + "'");
      }
    }
    const Felt c = coeff_text.empty() ? f.one() : f.parse(coeff_text);
    add_term(c, e, negative);
    pos = end;
  }
  return Poly(f, std::move(coeffs));
}

Poly parse_csv(const Field& f, std::string_view text) {
  std::vector<Felt> coeffs;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    coeffs.push_back(f.parse(text.substr(pos, end - pos)));
    pos = end + 1;
  }
  return Poly(f, std::move(coeffs));
}

}  // namespace dickson
