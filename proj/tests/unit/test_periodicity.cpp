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

#include <sstream>

#include "dickson/dickson.hpp"
#include "dickson/error.hpp"
#include "dickson/periodicity.hpp"
#include "oracles.hpp"

using namespace dickson;

namespace {

// Smallest t with D_t = D_0 and D_{t+1} = D_1, walking the recurrence on value tables.
std::uint64_t period_by_values(const Field& f, Felt alpha) {
  std::vector<Felt> two(f.q(), f.from_int(2));
  std::vector<Felt> x;
  for (const Felt v : f.elements()) x.push_back(v);
  std::vector<Felt> cur = two, next = x;
  for (std::uint64_t t = 1;; ++t) {
    std::vector<Felt> after(f.q());
    for (std::uint32_t i = 0; i < f.q(); ++i) {
      after[i] = f.sub(f.mul(x[i], next[i]), f.mul(alpha, cur[i]));
    }
    cur = next;
    next = after;
    if (cur == two && next == x) return t;
  }
}

}  // namespace

TEST(Period, TheoreticalFormula) {
  const Field f5 = Field::of_order(5);
  EXPECT_EQ(theoretical_period(f5, Felt{1}), 12u);
  EXPECT_EQ(theoretical_period(f5, Felt{2}), 24u);
  EXPECT_EQ(theoretical_period(Field::of_order(2), Felt{1}), 3u);
  EXPECT_EQ(theoretical_period(Field::of_order(3), Felt{2}), 8u);
  EXPECT_EQ(theoretical_period(Field::of_order(4), Felt{2}), 15u);
  EXPECT_THROW(theoretical_period(f5, Felt{0}), Error);
}

TEST(Period, EmpiricalMatchesTheoryUpTo32) {
  for (const auto q : prime_powers_up_to(32)) {
    const Field f = Field::of_order(q);
    for (const Felt a : f.units()) {
      const PeriodReport r = period_report(f, a);
      ASSERT_TRUE(r.agrees) << q << ' ' << f.format(a);
      ASSERT_EQ(r.square, f.is_square(a));
    }
  }
}

TEST(Period, IndependentValueTableWalk) {
  // Functional periods can only be shorter than polynomial ones; both must agree here
  // because reduced polynomials are determined by their values.
  for (const auto q : oracle::small_orders()) {
    const Field f = Field::of_order(q);
    for (const Felt a : f.units()) EXPECT_EQ(period_by_values(f, a), theoretical_period(f, a));
  }
}

TEST(Period, AnchorsAndSymmetry) {
  for (const auto q : prime_powers_up_to(13)) {
    const Field f = Field::of_order(q);
    for (const Felt a : f.units()) {
      EXPECT_TRUE(check_anchor_props(f, a)) << q;
      EXPECT_TRUE(check_symmetry(f, a)) << q;
    }
  }
}

TEST(Period, ScanIsOrderedAndParallelSafe) {
  const auto serial = scan_periods(16, 1);
  const auto parallel = scan_periods(16, 4);
  ASSERT_EQ(serial.size(), 68u);
  ASSERT_EQ(serial.size(), parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].q, parallel[i].q);
    EXPECT_EQ(serial[i].alpha, parallel[i].alpha);
    EXPECT_TRUE(serial[i].agrees);
  }
  std::ostringstream out;
  write_period_csv(out, {serial.front()});
  EXPECT_EQ(out.str(), "q,alpha,square_flag,theoretical,empirical,agrees\n2,1,true,3,3,true\n");
}

TEST(ColumnSums, AVanishBSignedVanish) {
  for (const std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const ColumnSums s = column_sums(Field::of_order(q));
    EXPECT_TRUE(s.lucas_agrees) << q;
    EXPECT_TRUE(s.a_vanish()) << q;
    EXPECT_TRUE(s.b_signed_vanish()) << q;
  }
  EXPECT_THROW(column_sums(Field::of_order(4)), Error);
}

TEST(ColumnSums, PlainBSumsDependOnQMod4) {
  // Without the chi(-1)^j weight the b sums survive exactly when q = 3 mod 4.
  for (const std::uint32_t q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    const ColumnSums s = column_sums(Field::of_order(q));
    EXPECT_EQ(s.b_vanish(), q % 4 == 1) << q;
    EXPECT_EQ(check_column_sums(Field::of_order(q)), q % 4 == 1) << q;
  }
}

TEST(ColumnSums, FrozenNonzeroBSums) {
  auto nonzero = [](const std::vector<std::uint32_t>& v) {
    std::vector<std::uint32_t> out;
    for (const auto x : v) {
      if (x != 0) out.push_back(x);
    }
    return out;
  };
  EXPECT_EQ(nonzero(column_sums(Field::of_order(3)).b), (std::vector<std::uint32_t>{2}));
  EXPECT_EQ(nonzero(column_sums(Field::of_order(7)).b), (std::vector<std::uint32_t>{2, 3, 5}));
  EXPECT_EQ(nonzero(column_sums(Field::of_order(11)).b),
            (std::vector<std::uint32_t>{2, 7, 1, 4, 8}));
}
