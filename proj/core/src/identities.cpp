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

#include "dickson/identities.hpp"

#include <algorithm>

#include "dickson/dickson.hpp"
#include "dickson/numtheory.hpp"

namespace dickson {

namespace {

void require_odd(const Field& f) {
  if (!f.odd()) throw Error(Errc::EvenQ, "identity needs odd q");
}

std::uint64_t qq(const Field& f) { return static_cast<std::uint64_t>(f.q()) * f.q(); }

Poly minus_two(const Poly& d) {
  const Field& f = d.field();
  return d - Poly::constant(f, f.from_int(2));
}

}  // namespace

CoeffGrid grid_from_poly(const Poly& f, Parity parity, std::uint64_t hi, std::uint64_t lo,
                         std::size_t cols, Direction direction, std::size_t offset,
                         std::string source) {
  if (hi < lo || cols == 0) throw Error(Errc::BadRange, "grid needs hi >= lo and cols >= 1");
  const std::uint64_t want = parity == Parity::Even ? 0 : 1;
  std::vector<std::uint64_t> exps;
  for (std::uint64_t e = lo; e <= hi; ++e) {
    if (e % 2 == want) exps.push_back(e);
  }
  if (direction == Direction::Descending) std::reverse(exps.begin(), exps.end());

  CoeffGrid g;
  g.cols = cols;
  g.source = std::move(source);
  g.cells.assign(offset, std::nullopt);
  for (const auto e : exps) g.cells.emplace_back(f.coeff(e));
  return g;
}

CoeffGrid rotate180(const CoeffGrid& g) {
  CoeffGrid r = g;
  std::reverse(r.cells.begin(), r.cells.end());
  r.source = g.source.empty() ? g.source : "rot180(" + g.source + ")";
  return r;
}

std::string render_grid(const CoeffGrid& g, const Field& f) {
  std::size_t width = 1;
  for (const auto& c : g.cells) {
    if (c) width = std::max(width, f.format(*c).size());
  }
  std::string out;
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    const std::string cell = g.cells[i] ? f.format(*g.cells[i]) : "";
    out += std::string(width - cell.size() + (i % g.cols == 0 ? 0 : 1), ' ') + cell;
    if (i % g.cols == g.cols - 1 || i + 1 == g.cells.size()) out += '\n';
  }
  return out;
}

std::string grid_csv(const CoeffGrid& g, const Field& f) {
  std::string out;
  for (std::size_t i = 0; i < g.cells.size(); ++i) {
    if (i % g.cols != 0) out += ',';
    if (g.cells[i]) out += f.format(*g.cells[i]);
    if (i % g.cols == g.cols - 1 || i + 1 == g.cells.size()) out += '\n';
  }
  return out;
}

RotationCheck full_rotation_check(const Field& f, Felt alpha) {
  require_odd(f);
  if (alpha.code == 0) throw Error(Errc::ZeroAlpha, "alpha must be nonzero");
  const std::uint64_t n = qq(f) - 1;
  const Felt alpha2 = f.inv(f.mul(f.from_int(16), alpha));
  const Felt c = f.inv(f.neg(f.mul(f.from_int(4), alpha)));
  const std::string a = f.format(alpha);
  RotationCheck r;
  r.left = grid_from_poly(dickson_closed(DicksonId{n, alpha}, f), Parity::Even, n, 2, f.q() - 1,
                          Direction::Descending, 0,
                          "D_" + std::to_string(n) + "(x," + a + ")");
  r.right = grid_from_poly(scale(dickson_closed(DicksonId{n, alpha2}, f), c), Parity::Even, n, 2,
                           f.q() - 1, Direction::Descending, 0,
                           f.format(c) + "*D_" + std::to_string(n) + "(x," + f.format(alpha2) +
                               ")");
  r.ok = rotate180(r.left) == r.right;
  return r;
}

RotationCheck half_rotation_check(const Field& f, Felt alpha) {
  require_odd(f);
  if (alpha.code == 0) throw Error(Errc::ZeroAlpha, "alpha must be nonzero");
  if (!f.is_square(alpha)) throw Error(Errc::NotSquare, "half identity needs square alpha");
  const std::uint64_t h = (qq(f) - 1) / 2;
  const Felt alpha2 = f.inv(f.mul(f.from_int(16), alpha));
  const Felt two = f.from_int(2);
  RotationCheck r;
  r.left = grid_from_poly(dickson_closed(DicksonId{h, alpha}, f), Parity::Even, h, 2,
                          (f.q() - 1) / 2, Direction::Descending, 0,
                          "D_" + std::to_string(h) + "(x," + f.format(alpha) + ")");
  r.right = grid_from_poly(scale(dickson_closed(DicksonId{h + 1, alpha2}, f), two), Parity::Odd,
                           h - 1, 1, (f.q() - 1) / 2, Direction::Descending, 0,
                           "2*D_" + std::to_string(h + 1) + "(x," + f.format(alpha2) + ")");
  r.ok = rotate180(r.left) == r.right;
  return r;
}

CoeffGrid ascending_grid(const Field& f, Felt alpha) {
  const std::uint64_t n = qq(f) - 1;
  return grid_from_poly(dickson_closed(DicksonId{n, alpha}, f), Parity::Even, n, 2, f.q(),
                        Direction::Ascending, 1,
                        "D_" + std::to_string(n) + "(x," + f.format(alpha) + ") ascending");
}

bool verify_full_identity(const Field& f, Felt alpha) {
  require_odd(f);
  if (alpha.code == 0) throw Error(Errc::ZeroAlpha, "alpha must be nonzero");
  const std::uint64_t n = qq(f) - 1;
  const Felt alpha2 = f.inv(f.mul(f.from_int(16), alpha));
  const Felt c = f.inv(f.neg(f.mul(f.from_int(4), alpha)));
  const Poly lhs = reverse_scale(minus_two(dickson_closed(DicksonId{n, alpha}, f)), n + 2);
  const Poly rhs = scale(minus_two(dickson_closed(DicksonId{n, alpha2}, f)), c);
  return lhs == rhs;
}

bool verify_half_identity(const Field& f, Felt alpha) {
  require_odd(f);
  if (alpha.code == 0) throw Error(Errc::ZeroAlpha, "alpha must be nonzero");
  if (!f.is_square(alpha)) throw Error(Errc::NotSquare, "half identity needs square alpha");
  const std::uint64_t h = (qq(f) - 1) / 2;
  const Felt alpha2 = f.inv(f.mul(f.from_int(16), alpha));
  const Poly lhs = reverse_scale(dickson_closed(DicksonId{h, alpha}, f), h + 1);
  const Poly rhs = scale(dickson_closed(DicksonId{h + 1, alpha2}, f), f.from_int(2));
  return lhs == rhs;
}

std::uint32_t rational_mod_p(const mpq_class& r, std::uint32_t p) {
  const unsigned long den = mpz_fdiv_ui(r.get_den_mpz_t(), p);
  if (den == 0) throw Error(Errc::DenominatorDivisibleByP, "denominator vanishes mod p");
  const unsigned long num = mpz_fdiv_ui(r.get_num_mpz_t(), p);
  return static_cast<std::uint32_t>(num * pow_mod(den, p - 2, p) % p);
}

namespace {

// Formal-fraction term, or the closed-form value if its denominator vanishes mod p.
std::uint32_t term_mod_p(const mpq_class& formal, const mpq_class& closed, std::uint32_t p,
                         std::size_t& fallbacks) {
  try {
    return rational_mod_p(formal, p);
  } catch (const Error& e) {
    if (e.code() != Errc::DenominatorDivisibleByP) throw;
    ++fallbacks;
    return rational_mod_p(closed, p);
  }
}

mpq_class power_of_sixteen_inv(std::uint64_t e) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 16, static_cast<unsigned long>(e));
  return mpq_class(1, d);
}

mpq_class frac(const mpz_class& num, const mpz_class& den) {
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

LemmaTermReport lemma_terms(const Field& f) {
  require_odd(f);
  const std::uint32_t p = f.p();
  const std::uint64_t Q = qq(f);
  const std::uint64_t n = Q - 1;
  LemmaTermReport rep;

  for (std::uint64_t i = 1; i <= n / 2; ++i) {
    const std::uint64_t top = n / 2 + i;
    const mpq_class u_formal = frac(mpz_class(static_cast<unsigned long>(n)) *
                                        binom_exact(top, n / 2 - i),
                                    mpz_class(static_cast<unsigned long>(top)));
    const mpq_class u_closed(dickson_coefficient(n, n / 2 - i));
    const mpq_class v_formal =
        frac(mpz_class(static_cast<unsigned long>(n)) * binom_exact(Q - i, i - 1),
             mpz_class(static_cast<unsigned long>(4 * (Q - i)))) *
        power_of_sixteen_inv(i - 1);
    const mpq_class v_closed = mpq_class(dickson_coefficient(n, i - 1)) / 4 *
                               power_of_sixteen_inv(i - 1);
    const auto u = term_mod_p(u_formal, u_closed, p, rep.closed_form_fallbacks);
    const auto v = term_mod_p(v_formal, v_closed, p, rep.closed_form_fallbacks);
    ++rep.first_terms;
    if (u != v) rep.first_ok = false;
  }

  const std::uint64_t h = n / 2;
  const std::uint64_t fourth = n / 4;
  const std::uint64_t m = (Q + 1) / 2;
  for (std::uint64_t i = 0; i <= fourth; ++i) {
    const mpq_class u_formal = frac(mpz_class(static_cast<unsigned long>(h)) *
                                        binom_exact(fourth + i, fourth - i),
                                    mpz_class(static_cast<unsigned long>(fourth + i)));
    const mpq_class u_closed(dickson_coefficient(h, fourth - i));
    const mpq_class v_formal =
        frac(mpz_class(static_cast<unsigned long>(Q + 1)) * binom_exact(m - i, i),
             mpz_class(static_cast<unsigned long>(m - i))) *
        power_of_sixteen_inv(i);
    const mpq_class v_closed = mpq_class(2 * dickson_coefficient(m, i)) * power_of_sixteen_inv(i);
    const auto u = term_mod_p(u_formal, u_closed, p, rep.closed_form_fallbacks);
    const auto v = term_mod_p(v_formal, v_closed, p, rep.closed_form_fallbacks);
    ++rep.second_terms;
    if (u != v) rep.second_ok = false;
  }
  return rep;
}

bool verify_lemma_terms(const Field& f) {
  const LemmaTermReport r = lemma_terms(f);
  return r.first_ok && r.second_ok;
}

}  // namespace dickson
