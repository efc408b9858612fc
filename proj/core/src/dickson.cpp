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

#include "dickson/dickson.hpp"

#include <string>

#include "dickson/numtheory.hpp"

namespace dickson {

mpz_class dickson_coefficient(std::uint64_t n, std::uint64_t i) {
  if (n == 0) return i == 0 ? 2 : 0;
  if (2 * i > n) return 0;
  if (i == 0) return 1;
  return binom_exact(n - i, i) + binom_exact(n - i - 1, i - 1);
}

std::uint32_t dickson_coefficient_mod_p(std::uint64_t n, std::uint64_t i, std::uint32_t p) {
  if (n == 0) return i == 0 ? 2 % p : 0;
  if (2 * i > n) return 0;
  if (i == 0) return 1 % p;
  return (binom_mod_p(n - i, i, p, 1) + binom_mod_p(n - i - 1, i - 1, p, 1)) % p;
}

Poly dickson_closed(const DicksonId& id, const Field& f) {
  if (id.n > kMaxClosedDegree) {
    throw Error(Errc::DegreeTooLarge, "closed form limited to n <= " +
                                          std::to_string(kMaxClosedDegree));
  }
  if (id.n == 0) return Poly::constant(f, f.from_int(2));
  const Felt minus_alpha = f.neg(id.alpha);
  std::vector<Felt> c(id.n + 1);
  Felt power = f.one();
  for (std::uint64_t i = 0; 2 * i <= id.n; ++i) {
    const mpz_class a = dickson_coefficient(id.n, i);
    const unsigned long r = mpz_fdiv_ui(a.get_mpz_t(), f.p());
    c[id.n - 2 * i] = f.mul(f.from_int(static_cast<std::int64_t>(r)), power);
    power = f.mul(power, minus_alpha);
  }
  return Poly(f, std::move(c));
}

DicksonWalker::DicksonWalker(const Field& f, Felt alpha)
    : alpha_(alpha), cur_(RPoly::constant(f, f.from_int(2))), next_(RPoly::x(f)) {}

void DicksonWalker::advance() {
  RPoly after = rp_sub(rp_mul_x(next_), rp_scale(cur_, alpha_));
  cur_ = std::move(next_);
  next_ = std::move(after);
  ++index_;
}

RPoly dickson_reduced(const DicksonId& id, const Field& f) {
  DicksonWalker w(f, id.alpha);
  while (w.index() < id.n) w.advance();
  return w.current();
}

RPoly dickson_stride2(const DicksonId& id, const Field& f) {
  const Felt a = id.alpha;
  const Felt two = f.from_int(2);
  const Felt three = f.from_int(3);
  const RPoly x = RPoly::x(f);
  const RPoly x2 = RPoly::monomial(f, f.one(), 2);
  const RPoly step = rp_sub(x2, RPoly::constant(f, f.mul(two, a)));
  RPoly seeds[4] = {
      RPoly::constant(f, two),
      x,
      step,
      rp_sub(RPoly::monomial(f, f.one(), 3), rp_scale(x, f.mul(three, a))),
  };
  if (id.n < 4) return seeds[id.n];

  const Felt a2 = f.mul(a, a);
  RPoly older = seeds[id.n % 2];
  RPoly newer = seeds[id.n % 2 + 2];
  for (std::uint64_t k = id.n % 2 + 4; k <= id.n; k += 2) {
    RPoly nxt = rp_sub(rp_sub(rp_mul_x(rp_mul_x(newer)), rp_scale(newer, f.mul(two, a))),
                       rp_scale(older, a2));
    older = std::move(newer);
    newer = std::move(nxt);
  }
  return newer;
}

std::vector<RPoly> dickson_sequence(const Field& f, Felt alpha, std::uint64_t last) {
  std::vector<RPoly> out;
  out.reserve(last + 1);
  DicksonWalker w(f, alpha);
  out.push_back(w.current());
  while (w.index() < last) {
    w.advance();
    out.push_back(w.current());
  }
  return out;
}

bool check_functional_eq(const DicksonId& id, const ExtField& ext) {
  const Field& f = ext.base();
  if (id.alpha.code == 0) throw Error(Errc::ZeroAlpha, "functional equation needs alpha != 0");
  const Poly d = dickson_closed(id, f);
  const ExtElt alpha = ext.embed(id.alpha);
  for (const ExtElt u : ext.units()) {
    const ExtElt arg = phi_alpha(ext, id.alpha, u);
    ExtElt lhs = ext.zero();
    for (std::size_t i = d.coeffs().size(); i-- > 0;) {
      lhs = ext.add(ext.mul(lhs, arg), ext.embed(d.coeffs()[i]));
    }
    const ExtElt rhs = ext.add(ext.pow(u, id.n), ext.pow(ext.div(alpha, u), id.n));
    if (lhs != rhs) return false;
  }
  return true;
}

bool check_compose_identity(std::uint64_t m, std::uint64_t n, Felt alpha, const Field& f) {
  const RPoly outer = dickson_reduced(DicksonId{m, f.pow(alpha, n)}, f);
  const RPoly inner = dickson_reduced(DicksonId{n, alpha}, f);
  return rp_compose(outer, inner) == dickson_reduced(DicksonId{m * n, alpha}, f);
}

bool is_permutation(const DicksonId& id, const Field& f) {
  if (id.alpha.code == 0) throw Error(Errc::ZeroAlpha, "permutation test needs alpha != 0");
  const ValueTable t = values(dickson_reduced(id, f));
  std::vector<bool> hit(f.q(), false);
  for (const Felt v : t) {
    if (hit[v.code]) return false;
    hit[v.code] = true;
  }
  return true;
}

}  // namespace dickson
