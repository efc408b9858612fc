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

#ifndef DICKSON_PERIODICITY_HPP
#define DICKSON_PERIODICITY_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dickson/gf.hpp"

namespace dickson {

struct PeriodReport {
  std::uint32_t q = 0;
  Felt alpha;
  bool square = false;
  std::uint64_t theoretical = 0;
  std::uint64_t empirical = 0;
  bool agrees = false;
};

std::uint64_t theoretical_period(const Field& f, Felt alpha);
/// Smallest t >= 1 with (D_t, D_{t+1}) = (2, x) mod x^q - x.
std::uint64_t empirical_period(const Field& f, Felt alpha);
PeriodReport period_report(const Field& f, Felt alpha);

bool check_anchor_props(const Field& f, Felt alpha);
bool check_symmetry(const Field& f, Felt alpha);

/// Column sums over j of the coefficient arrays a_{j,k} (n = q^2 - 1) and b_{j,k} (n = (q^2 - 1)/2).
struct ColumnSums {
  std::vector<std::uint32_t> a;
  std::vector<std::uint32_t> b;
  /// b sums weighted by chi(-1)^j, the sign carried by (-alpha)^{j (q-1)/2} for square alpha.
  std::vector<std::uint32_t> b_signed;
  /// Every a_{j,k} and b_{j,k} agrees between exact integers and Lucas digits.
  bool lucas_agrees = true;

  bool a_vanish() const;
  bool b_vanish() const;
  bool b_signed_vanish() const;
};

ColumnSums column_sums(const Field& f);
/// True iff both the a and the b column sums vanish mod p.
bool check_column_sums(const Field& f);

/// Every prime power q <= q_max and every alpha, ordered by (q, alpha encoding).
std::vector<PeriodReport> scan_periods(std::uint32_t q_max, unsigned jobs = 1);
void write_period_csv(std::ostream& out, const std::vector<PeriodReport>& rows);

}  // namespace dickson

#endif  // DICKSON_PERIODICITY_HPP
