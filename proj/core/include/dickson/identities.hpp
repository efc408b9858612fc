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

#ifndef DICKSON_IDENTITIES_HPP
#define DICKSON_IDENTITIES_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dickson/gf.hpp"
#include "dickson/polyring.hpp"

namespace dickson {

enum class Parity { Even, Odd };
enum class Direction { Descending, Ascending };

/// Coefficients packed row-major into a fixed number of columns; empty cells are nullopt.
struct CoeffGrid {
  std::size_t cols = 1;
  std::vector<std::optional<Felt>> cells;
  std::string source;

  std::size_t rows() const noexcept { return cols == 0 ? 0 : (cells.size() + cols - 1) / cols; }

  friend bool operator==(const CoeffGrid& a, const CoeffGrid& b) {
    return a.cols == b.cols && a.cells == b.cells;
  }
};

CoeffGrid grid_from_poly(const Poly& f, Parity parity, std::uint64_t hi, std::uint64_t lo,
                         std::size_t cols, Direction direction, std::size_t offset = 0,
                         std::string source = {});
CoeffGrid rotate180(const CoeffGrid& g);
/// Right-aligned ASCII table.
std::string render_grid(const CoeffGrid& g, const Field& f);
/// One CSV line per row; empty cells stay empty.
std::string grid_csv(const CoeffGrid& g, const Field& f);

struct RotationCheck {
  CoeffGrid left;
  CoeffGrid right;
  bool ok = false;
};

/// Even exponents of D_{q^2-1}(x, alpha) against (-4 alpha)^{-1} D_{q^2-1}(x, (16 alpha)^{-1}).
RotationCheck full_rotation_check(const Field& f, Felt alpha);
/// Even exponents of D_{(q^2-1)/2}(x, alpha) against odd exponents of 2 D_{(q^2+1)/2}(x, (16 alpha)^{-1}).
RotationCheck half_rotation_check(const Field& f, Felt alpha);
/// Ascending even exponents of D_{q^2-1}(x, alpha), q columns, one leading empty cell.
CoeffGrid ascending_grid(const Field& f, Felt alpha);

bool verify_full_identity(const Field& f, Felt alpha);
bool verify_half_identity(const Field& f, Felt alpha);

/// Reduces an exact rational mod p; throws DenominatorDivisibleByP if it has no residue.
std::uint32_t rational_mod_p(const mpq_class& r, std::uint32_t p);

struct LemmaTermReport {
  bool first_ok = true;
  bool second_ok = true;
  std::size_t first_terms = 0;
  std::size_t second_terms = 0;
  std::size_t closed_form_fallbacks = 0;
};

LemmaTermReport lemma_terms(const Field& f);
bool verify_lemma_terms(const Field& f);

}  // namespace dickson

#endif  // DICKSON_IDENTITIES_HPP
