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

#ifndef DICKSON_DYNAMICS_HPP
#define DICKSON_DYNAMICS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dickson/gf.hpp"
#include "dickson/polyring.hpp"

namespace dickson {

/// Tail and period of n^m mod pi(alpha) next to those of the iterates of D_n(x, alpha).
struct IterationRecord {
  std::uint32_t q = 0;
  Felt alpha;
  std::uint64_t n = 0;
  std::uint64_t l = 0;
  std::uint64_t k = 0;
  std::uint64_t poly_l = 0;
  std::uint64_t poly_k = 0;
};

struct GroupReport {
  std::uint32_t q = 0;
  Felt alpha;
  std::uint64_t pi = 0;
  /// Units n in [1, pi] with alpha^n = alpha.
  std::vector<std::uint64_t> units;
  std::vector<RPoly> elements;
  std::vector<std::uint64_t> kernel;
  std::uint64_t order = 0;
  std::uint64_t predicted_order = 0;
  /// Which shape of the structure applies: "alpha = 1", "square alpha != 1" (odd q, modulus
  /// (q^2 - 1) / 2) or "modulus q^2 - 1" (nonsquare alpha, or any alpha != 1 for even q).
  std::string structure_case;
  bool has_identity = false;
  bool closed = false;
  bool has_inverses = false;
};

/// {n in [1, pi] : alpha^n = alpha and D_n = x}.
std::vector<std::uint64_t> kernel(const Field& f, Felt alpha);
/// The congruence list for the kernel, as residues in [1, pi].
std::vector<std::uint64_t> predicted_kernel(const Field& f, Felt alpha);

GroupReport group_elements(const Field& f, Felt alpha);

/// Smallest t >= 1 with the t-fold composition of D_n(x, alpha) equal to x.
std::uint64_t composition_period(const Field& f, Felt alpha, std::uint64_t n);
/// Order of the coset n H in the units mod pi(alpha) modulo the kernel H.
std::uint64_t quotient_order(const Field& f, Felt alpha, std::uint64_t n);
/// Period predicted by the delta rule exactly as printed: delta k with k = ord(n mod pi).
/// Empty when delta = 1/2 meets an odd k.
std::optional<std::uint64_t> delta_rule_period(const Field& f, Felt alpha, std::uint64_t n);

IterationRecord iteration_structure(const Field& f, Felt alpha, std::uint64_t n);

struct MaxPeriodRecord {
  std::uint32_t q = 0;
  Felt alpha;
  std::uint64_t alpha_order = 0;
  std::uint64_t pi = 0;
  std::uint64_t bound = 0;
  std::optional<std::uint64_t> constructed_n;
  /// Multiplicative order of the constructed n modulo pi.
  std::uint64_t constructed_order = 0;
  /// Composition period of D_n for the constructed n.
  std::uint64_t constructed_period = 0;
  /// Largest composition period over admissible n, and the first n reaching it.
  std::uint64_t exhaustive_max = 0;
  std::uint64_t exhaustive_n = 0;
  /// Largest multiplicative order modulo pi over admissible n.
  std::uint64_t exhaustive_order_max = 0;
  /// Why the construction could not run, if it could not.
  std::string note;

  bool construction_reaches_bound() const {
    return constructed_n.has_value() && constructed_period == bound;
  }
  bool bound_is_max() const { return exhaustive_max == bound; }
  bool bound_is_max_order() const { return exhaustive_order_max == bound; }
};

MaxPeriodRecord construct_and_check_max_period(const Field& f, Felt alpha);

struct OqScan {
  /// Rows with gcd(n, q^2 - 1) > 1 and even k.
  std::vector<IterationRecord> rows;
  std::uint64_t instances = 0;
  std::uint64_t odd_k_instances = 0;
  std::uint64_t odd_k_violations = 0;
  std::uint64_t tail_violations = 0;
  std::uint64_t ratio_violations = 0;
  std::uint64_t ratio_one = 0;
  std::uint64_t ratio_two = 0;
};

/// Scans every prime power q <= q_max, alpha, and n in [1, pi] with alpha^n = alpha.
OqScan open_question_scan(std::uint32_t q_max, unsigned jobs = 1);
void write_oq_csv(std::ostream& out, const std::vector<IterationRecord>& rows);
void write_oq_jsonl(std::ostream& out, const std::vector<IterationRecord>& rows);

}  // namespace dickson

#endif  // DICKSON_DYNAMICS_HPP
