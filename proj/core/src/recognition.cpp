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

#include "dickson/recognition.hpp"

#include <utility>

#include "dickson/error.hpp"
#include "dickson/periodicity.hpp"

namespace dickson {

namespace {

struct ParityMask {
  bool even = true;
  bool odd = true;
};

// Odd q preserves exponent parity under reduction, so D_n has only exponents of n's parity.
ParityMask parity_screen(const RPoly& g) {
  ParityMask m;
  if (!g.field().odd()) return m;
  bool saw_even = false, saw_odd = false;
  for (std::size_t e = 0; e < g.coeffs().size(); ++e) {
    if (g.coeff(e).code == 0) continue;
    (e % 2 == 0 ? saw_even : saw_odd) = true;
  }
  if (saw_even) m.odd = false;
  if (saw_odd) m.even = false;
  return m;
}

RecognitionResult monomial_or_not(const RPoly& g) {
  const std::int64_t d = g.degree();
  if (d < 1) return NotDickson{};
  const Field& f = g.field();
  if (g.coeff(static_cast<std::size_t>(d)) != f.one()) return NotDickson{};
  for (std::int64_t e = 0; e < d; ++e) {
    if (g.coeff(static_cast<std::size_t>(e)).code != 0) return NotDickson{};
  }
  return MonomialWitness{static_cast<std::uint64_t>(d)};
}

// First n of the given parity in [0, bound] with D_n(x, alpha) reducing to g.
std::optional<std::uint64_t> stride2_search(const RPoly& g, Felt alpha, std::uint64_t parity,
                                            std::uint64_t bound) {
  const Field& f = g.field();
  const Felt two_a = f.mul(f.from_int(2), alpha);
  const Felt a2 = f.mul(alpha, alpha);
  RPoly older = dickson_reduced(DicksonId{parity, alpha}, f);
  if (older == g) return parity;
  RPoly newer = dickson_reduced(DicksonId{parity + 2, alpha}, f);
  for (std::uint64_t n = parity + 2; n <= bound; n += 2) {
    if (newer == g) return n;
    RPoly nxt = rp_sub(rp_sub(rp_mul_x(rp_mul_x(newer)), rp_scale(newer, two_a)),
                       rp_scale(older, a2));
    older = std::move(newer);
    newer = std::move(nxt);
  }
  return std::nullopt;
}

}  // namespace

RecognitionResult recognize_brute(const Poly& f) { return recognize_brute(reduce(f)); }

RecognitionResult recognize_brute(const RPoly& g) {
  const Field& f = g.field();
  const ParityMask mask = parity_screen(g);
  if (!mask.even && !mask.odd) return NotDickson{};

  for (const Felt alpha : f.units()) {
    const std::uint64_t bound = theoretical_period(f, alpha);
    if (f.odd()) {
      std::optional<std::uint64_t> best;
      for (std::uint64_t r = 0; r < 2; ++r) {
        if ((r == 0 && !mask.even) || (r == 1 && !mask.odd)) continue;
        const auto n = stride2_search(g, alpha, r, bound);
        if (n && (!best || *n < *best)) best = n;
      }
      if (best) return DicksonWitness{*best, alpha};
    } else {
      DicksonWalker w(f, alpha);
      while (true) {
        if (w.current() == g) return DicksonWitness{w.index(), alpha};
        if (w.index() >= bound) break;
        w.advance();
      }
    }
  }
  return monomial_or_not(g);
}

GuessRecognizer::GuessRecognizer(const Field& f)
    : field_(f), max_n_(static_cast<std::uint64_t>(f.q()) * f.q() - 1) {
  // The table is cheap for small fields; larger ones fall back to Lucas per lookup.
  if (f.q() <= 32) {
    coeff_.resize(max_n_ + 1);
    for (std::uint64_t n = 0; n <= max_n_; ++n) {
      coeff_[n].resize(n / 2 + 1);
      for (std::uint64_t i = 0; i <= n / 2; ++i) {
        coeff_[n][i] = dickson_coefficient_mod_p(n, i, f.p());
      }
    }
  }
}

GuessRecognizer::Profile GuessRecognizer::profile(std::uint64_t n, int l) const {
  const Field& f = field_;
  const std::uint32_t q = f.q();
  const std::uint64_t period = f.odd() ? (q - 1) / 2 : q - 1;
  const Felt minus_one = f.neg(f.one());
  constexpr std::uint64_t kUnset = ~std::uint64_t{0};

  Profile pr;
  pr.c.assign(q, f.zero());
  pr.t.assign(q, kUnset);
  for (std::uint64_t i = 0; 2 * i <= n; ++i) {
    const std::uint32_t raw =
        coeff_.empty() ? dickson_coefficient_mod_p(n, i, f.p()) : coeff_[n][i];
    Felt a = f.from_int(raw);
    const std::uint64_t e = n - 2 * i;
    const std::uint64_t slot = reduced_exponent(e, q);
    std::uint64_t t = i;
    if (e != 0) {
      t = i % period;
      if (f.odd() && l < 0 && (i / period) % 2 == 1) a = f.mul(a, minus_one);
    }
    if (pr.t[slot] == kUnset) {
      pr.t[slot] = t;
    } else if (pr.t[slot] != t) {
      throw Error(Errc::Inconsistent, "profile slot exponents disagree");
    }
    pr.c[slot] = f.add(pr.c[slot], a);
    if (i == 1) pr.anchor = static_cast<std::int64_t>(slot);
  }
  return pr;
}

std::optional<Felt> GuessRecognizer::solve(const RPoly& g, std::uint64_t n, int l,
                                           GuessStats& stats) const {
  const Field& f = field_;
  const Profile pr = profile(n, l);
  for (std::uint32_t e = 0; e < f.q(); ++e) {
    if ((g.coeff(e).code == 0) != (pr.c[e].code == 0)) {
      ++stats.zero_pattern_rejections;
      return std::nullopt;
    }
  }

  std::vector<Felt> candidates;
  if (pr.anchor >= 0 && pr.c[pr.anchor].code != 0) {
    ++stats.anchor_solves;
    candidates.push_back(f.neg(f.div(g.coeff(pr.anchor), pr.c[pr.anchor])));
  } else {
    ++stats.fallback_scans;
    candidates = f.units();
  }

  const std::uint64_t half = (f.q() - 1) / 2;
  const Felt sign = l > 0 ? f.one() : f.neg(f.one());
  for (const Felt alpha : candidates) {
    if (alpha.code == 0) continue;
    const Felt minus_alpha = f.neg(alpha);
    if (f.odd() && f.pow(minus_alpha, half) != sign) continue;
    bool ok = true;
    for (std::uint32_t e = 0; e < f.q() && ok; ++e) {
      if (pr.c[e].code == 0) continue;
      ok = g.coeff(e) == f.mul(pr.c[e], f.pow(minus_alpha, pr.t[e]));
    }
    if (!ok) continue;
    ++stats.regenerations;
    if (dickson_reduced(DicksonId{n, alpha}, f) == g) return alpha;
    ++stats.soundness_rejections;
  }
  return std::nullopt;
}

RecognitionResult GuessRecognizer::recognize(const RPoly& g, GuessStats* stats) const {
  if (!(g.field() == field_)) throw Error(Errc::ContextMismatch, "polynomial over another field");
  GuessStats local;
  GuessStats& st = stats ? *stats : local;
  const Field& f = field_;
  const ParityMask mask = parity_screen(g);
  if (!mask.even && !mask.odd) return NotDickson{};

  // l0 = chi(-1); with l1 = -l0 every alpha falls in exactly one class.
  const int l0 = f.odd() && f.q() % 4 == 3 ? -1 : 1;
  const int l1 = -l0;
  for (std::uint64_t n = 0; n <= max_n_; ++n) {
    if (f.odd() && ((n % 2 == 0 && !mask.even) || (n % 2 == 1 && !mask.odd))) continue;
    ++st.degrees_tried;
    if (!f.odd()) {
      if (auto a = solve(g, n, 1, st)) return DicksonWitness{n, *a};
      continue;
    }
    if (auto a = solve(g, n, l1, st)) return DicksonWitness{n, *a};
    if (2 * n <= max_n_) {
      if (auto a = solve(g, n, l0, st)) return DicksonWitness{n, *a};
    }
  }
  return monomial_or_not(g);
}

RecognitionResult recognize_guess(const Poly& f) { return recognize_guess(reduce(f)); }

RecognitionResult recognize_guess(const RPoly& f) {
  return GuessRecognizer(f.field()).recognize(f);
}

DicksonTable::DicksonTable(const Field& f) {
  if (f.q() > kMaxTableOrder) {
    throw Error(Errc::DeskBoundExceeded,
                "table limited to q <= " + std::to_string(kMaxTableOrder));
  }
  const std::uint64_t last = static_cast<std::uint64_t>(f.q()) * f.q() - 1;
  for (const Felt alpha : f.elements()) {
    const auto seq = dickson_sequence(f, alpha, last);
    for (std::uint64_t n = 0; n <= last; ++n) map_[seq[n]].push_back(DicksonId{n, alpha});
  }
}

const std::vector<DicksonId>& DicksonTable::witnesses(const RPoly& g) const {
  static const std::vector<DicksonId> kNone;
  const auto it = map_.find(g);
  return it == map_.end() ? kNone : it->second;
}

DicksonTable dickson_table(const Field& f) { return DicksonTable(f); }

bool regenerates(const RecognitionResult& r, const RPoly& g) {
  const Field& f = g.field();
  if (const auto* d = std::get_if<DicksonWitness>(&r)) {
    return dickson_reduced(DicksonId{d->n, d->alpha}, f) == g;
  }
  if (const auto* m = std::get_if<MonomialWitness>(&r)) {
    return RPoly::monomial(f, f.one(), m->n) == g;
  }
  return false;
}

}  // namespace dickson
