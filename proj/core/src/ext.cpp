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

#include <algorithm>

#include "dickson/gf.hpp"
#include "dickson/numtheory.hpp"

namespace dickson {

namespace {

std::pair<Felt, Felt> choose_modulus(const Field& f) {
  if (f.odd()) {
    for (const Felt d : f.units()) {
      if (!f.is_square(d)) return {f.zero(), d};
    }
  } else {
    // y^2 = y + c, i.e. y^2 + y + c in characteristic 2.
    for (const Felt c : f.units()) {
      bool has_root = false;
      for (const Felt z : f.elements()) {
        if (f.add(f.add(f.mul(z, z), z), c) == f.zero()) {
          has_root = true;
          break;
        }
      }
      if (!has_root) return {f.one(), c};
    }
  }
  throw Error(Errc::Inconsistent, "no irreducible quadratic found");
}

}  // namespace

ExtField::ExtField(Field base) : base_(std::move(base)) {
  const auto [t, u] = choose_modulus(base_);
  t_ = t;
  u_ = u;
}

ExtField make_ext(const Field& base) { return ExtField(base); }

ExtElt ExtField::add(ExtElt x, ExtElt y) const noexcept {
  return ExtElt{base_.add(x.a, y.a), base_.add(x.b, y.b)};
}

ExtElt ExtField::sub(ExtElt x, ExtElt y) const noexcept {
  return ExtElt{base_.sub(x.a, y.a), base_.sub(x.b, y.b)};
}

ExtElt ExtField::mul(ExtElt x, ExtElt y) const noexcept {
  const Field& f = base_;
  const Felt bb = f.mul(x.b, y.b);
  const Felt a = f.add(f.mul(x.a, y.a), f.mul(bb, u_));
  const Felt b = f.add(f.add(f.mul(x.a, y.b), f.mul(x.b, y.a)), f.mul(bb, t_));
  return ExtElt{a, b};
}

ExtElt ExtField::pow(ExtElt x, std::uint64_t e) const noexcept {
  ExtElt r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

ExtElt ExtField::inv(ExtElt x) const {
  if (x == zero()) throw Error(Errc::DivisionByZero, "inverse of zero in F_{q^2}");
  return pow(x, order() - 2);
}

std::uint64_t ExtField::mult_order(ExtElt x) const {
  if (x == zero()) throw Error(Errc::ZeroInput, "order of zero");
  std::uint64_t t = order() - 1;
  for (const auto& [r, e] : factorize(t)) {
    (void)e;
    while (t % r == 0 && pow(x, t / r) == one()) t /= r;
  }
  return t;
}

ExtElt ExtField::from_code(std::uint64_t code) const {
  if (code >= order()) throw Error(Errc::OutOfRange, "extension element code");
  const std::uint32_t q = base_.q();
  return ExtElt{Felt{static_cast<std::uint32_t>(code % q)},
                Felt{static_cast<std::uint32_t>(code / q)}};
}

std::vector<ExtElt> ExtField::elements() const {
  std::vector<ExtElt> out;
  out.reserve(order());
  for (std::uint64_t c = 0; c < order(); ++c) out.push_back(from_code(c));
  return out;
}

std::vector<ExtElt> ExtField::units() const {
  std::vector<ExtElt> out;
  out.reserve(order() - 1);
  for (std::uint64_t c = 1; c < order(); ++c) out.push_back(from_code(c));
  return out;
}

std::string ExtField::format(ExtElt v) const {
  if (v.b.code == 0) return base_.format(v.a);
  std::string b = base_.format(v.b);
  if (b.find('+') != std::string::npos) b = "(" + b + ")";
  std::string out = (b == "1" ? "" : b) + "y";
  if (v.a.code != 0) {
    std::string a = base_.format(v.a);
    out += "+" + a;
  }
  return out;
}

ExtElt phi_alpha(const ExtField& ext, Felt alpha, ExtElt u) {
  if (u == ext.zero()) throw Error(Errc::ZeroInput, "phi_alpha at zero");
  return ext.add(u, ext.div(ext.embed(alpha), u));
}

std::vector<ExtElt> phi_preimages(const ExtField& ext, Felt alpha, Felt beta) {
  std::vector<ExtElt> out;
  const ExtElt a = ext.embed(alpha);
  const ExtElt b = ext.embed(beta);
  for (const ExtElt v : ext.elements()) {
    if (ext.add(ext.sub(ext.mul(v, v), ext.mul(b, v)), a) == ext.zero()) out.push_back(v);
  }
  return out;
}

std::vector<ExtElt> s_gamma(const ExtField& ext, Felt gamma) {
  std::vector<ExtElt> out;
  const ExtElt g = ext.embed(gamma);
  const std::uint64_t e = ext.base().q() + 1ull;
  for (const ExtElt u : ext.units()) {
    if (ext.pow(u, e) == g) out.push_back(u);
  }
  return out;
}

ExtElt sqrt_in_ext(const ExtField& ext, Felt a) {
  if (!ext.base().odd()) throw Error(Errc::EvenQ, "sqrt_in_ext requires odd q");
  const ExtElt target = ext.embed(a);
  for (const ExtElt v : ext.elements()) {
    if (ext.mul(v, v) == target) return v;
  }
  throw Error(Errc::Inconsistent, "no square root in F_{q^2}");
}

}  // namespace dickson
