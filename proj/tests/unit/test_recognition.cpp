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

#include <gtest/gtest.h>

#include <random>

#include "dickson/dickson.hpp"
#include "dickson/error.hpp"
#include "dickson/recognition.hpp"
#include "oracles.hpp"

using namespace dickson;

namespace {

RPoly random_rpoly(const Field& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
  std::vector<Felt> c(f.q());
  for (auto& x : c) x = Felt{d(rng)};
  return RPoly(f, std::move(c));
}

}  // namespace

TEST(Recognition, RoundTripBothMethods) {
  for (const auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    const GuessRecognizer guess(f);
    GuessStats stats;
    const std::uint64_t last = static_cast<std::uint64_t>(q) * q - 1;
    for (const Felt a : f.units()) {
      for (std::uint64_t n = 0; n <= last; ++n) {
        const RPoly g = dickson_reduced(DicksonId{n, a}, f);
        const auto b = recognize_brute(g);
        const auto s = guess.recognize(g, &stats);
        ASSERT_TRUE(is_dickson(b)) << q << ' ' << n;
        ASSERT_TRUE(is_dickson(s)) << q << ' ' << n;
        ASSERT_TRUE(regenerates(b, g));
        ASSERT_TRUE(regenerates(s, g));
      }
    }
    EXPECT_EQ(stats.soundness_rejections, 0u) << q;
    EXPECT_GT(stats.regenerations, 0u);
  }
}

TEST(Recognition, AgreesWithTableOnRandomInputs) {
  std::mt19937_64 rng(2024);
  for (const std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const Field f = Field::of_order(q);
    const DicksonTable table(f);
    const GuessRecognizer guess(f);
    for (int t = 0; t < 2000; ++t) {
      const RPoly g = random_rpoly(f, rng);
      const bool truth = table.contains(g);
      ASSERT_EQ(is_dickson(recognize_brute(g)), truth) << to_string(g);
      ASSERT_EQ(is_dickson(guess.recognize(g)), truth) << to_string(g);
    }
  }
}

TEST(Recognition, TableIsExhaustiveForSmallFields) {
  // Every reduced polynomial over F_2 and F_3 is classified identically by all three.
  for (const std::uint32_t q : {2u, 3u}) {
    const Field f = Field::of_order(q);
    const DicksonTable table(f);
    const GuessRecognizer guess(f);
    std::uint64_t total = 1;
    for (std::uint32_t i = 0; i < q; ++i) total *= q;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<Felt> c(q);
      std::uint64_t x = code;
      for (auto& v : c) {
        v = Felt{static_cast<std::uint32_t>(x % q)};
        x /= q;
      }
      const RPoly g(f, c);
      EXPECT_EQ(is_dickson(recognize_brute(g)), table.contains(g));
      EXPECT_EQ(is_dickson(guess.recognize(g)), table.contains(g));
    }
  }
}

TEST(Recognition, CanonicalWitness) {
  const Field f5 = Field::of_order(5);
  const RPoly g = reduce(parse_csv(f5, "2,0,1,0,1"));
  const auto r = recognize_brute(g);
  ASSERT_TRUE(std::holds_alternative<DicksonWitness>(r));
  EXPECT_EQ(std::get<DicksonWitness>(r).n, 4u);
  EXPECT_EQ(std::get<DicksonWitness>(r).alpha, f5.one());
  // D_1 = x for every alpha; the smallest encoding wins.
  const auto x = recognize_brute(RPoly::x(f5));
  EXPECT_EQ(std::get<DicksonWitness>(x), (DicksonWitness{1, f5.one()}));
}

TEST(Recognition, MonomialsAndNonMembers) {
  const Field f7 = Field::of_order(7);
  // x^2 is not D_n(x, alpha) for alpha != 0, only D_2(x, 0).
  const RPoly x2 = RPoly::monomial(f7, f7.one(), 2);
  const auto b = recognize_brute(x2);
  EXPECT_TRUE(is_dickson(b));
  EXPECT_TRUE(regenerates(b, x2));
  EXPECT_TRUE(regenerates(GuessRecognizer(f7).recognize(x2), x2));
  const RPoly one = RPoly::constant(f7, f7.one());
  EXPECT_FALSE(is_dickson(recognize_brute(one)));
  EXPECT_FALSE(is_dickson(recognize_guess(one)));
  EXPECT_FALSE(regenerates(NotDickson{}, one));
  // Mixed parity over odd q is rejected at once.
  const RPoly mixed = reduce(parse_poly(f7, "x^3 + x^2"));
  EXPECT_FALSE(is_dickson(recognize_brute(mixed)));
  GuessStats st;
  EXPECT_FALSE(is_dickson(GuessRecognizer(f7).recognize(mixed, &st)));
  EXPECT_EQ(st.degrees_tried, 0u);
}

TEST(Recognition, ProfilesMatchDirectReduction) {
  // Slot sums times (-alpha)^t must equal the reduced coefficients whenever chi(-alpha) = l.
  for (const std::uint32_t q : {3u, 4u, 5u, 7u, 9u}) {
    const Field f = Field::of_order(q);
    const GuessRecognizer g(f);
    const std::uint64_t half = (q - 1) / 2;
    for (std::uint64_t n = 0; n < static_cast<std::uint64_t>(q) * q; ++n) {
      for (const Felt a : f.units()) {
        const Felt m = f.neg(a);
        const int l = !f.odd() ? 1 : (f.pow(m, half) == f.one() ? 1 : -1);
        const auto pr = g.profile(n, l);
        const RPoly d = dickson_reduced(DicksonId{n, a}, f);
        for (std::uint32_t e = 0; e < q; ++e) {
          const Felt want = pr.c[e].code == 0 ? f.zero() : f.mul(pr.c[e], f.pow(m, pr.t[e]));
          ASSERT_EQ(d.coeff(e), want) << q << ' ' << n << ' ' << e;
        }
      }
    }
  }
}

TEST(Recognition, TableBounds) {
  EXPECT_THROW(DicksonTable(Field::of_order(17)), Error);
  const Field f3 = Field::of_order(3);
  const DicksonTable t = dickson_table(f3);
  const auto& w = t.witnesses(RPoly::x(f3));
  EXPECT_FALSE(w.empty());
  EXPECT_TRUE(t.witnesses(RPoly::constant(f3, f3.one())).empty());
  EXPECT_GT(t.distinct(), 1u);
}
