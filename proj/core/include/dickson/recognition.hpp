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

#ifndef DICKSON_RECOGNITION_HPP
#define DICKSON_RECOGNITION_HPP

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <variant>
#include <vector>

#include "dickson/dickson.hpp"
#include "dickson/gf.hpp"
#include "dickson/polyring.hpp"

namespace dickson {

struct DicksonWitness {
  std::uint64_t n = 0;
  Felt alpha;

  friend bool operator==(const DicksonWitness&, const DicksonWitness&) = default;
};

/// x^n, i.e. D_n(x, 0).
struct MonomialWitness {
  std::uint64_t n = 0;

  friend bool operator==(const MonomialWitness&, const MonomialWitness&) = default;
};

struct NotDickson {
  friend bool operator==(const NotDickson&, const NotDickson&) = default;
};

using RecognitionResult = std::variant<DicksonWitness, MonomialWitness, NotDickson>;

inline bool is_dickson(const RecognitionResult& r) {
  return !std::holds_alternative<NotDickson>(r);
}

/// Counters describing how the coefficient-guessing search reached its answer.
struct GuessStats {
  std::uint64_t degrees_tried = 0;
  std::uint64_t zero_pattern_rejections = 0;
  std::uint64_t anchor_solves = 0;
  std::uint64_t fallback_scans = 0;
  std::uint64_t regenerations = 0;
  std::uint64_t soundness_rejections = 0;
};

/// Scans alpha by encoding, then n upward, with the stride-2 recurrence for odd q.
RecognitionResult recognize_brute(const Poly& f);
RecognitionResult recognize_brute(const RPoly& f);

/// Solves for alpha from the integer coefficient profile of each candidate n.
class GuessRecognizer {
 public:
  explicit GuessRecognizer(const Field& f);

  RecognitionResult recognize(const RPoly& g, GuessStats* stats = nullptr) const;

  /// Slot sums c and (-alpha) exponents t for D_n, sign l = chi(-alpha) for odd q.
  struct Profile {
    std::vector<Felt> c;
    std::vector<std::uint64_t> t;
    std::int64_t anchor = -1;
  };
  Profile profile(std::uint64_t n, int l) const;

 private:
  std::optional<Felt> solve(const RPoly& g, std::uint64_t n, int l, GuessStats& stats) const;

  Field field_;
  std::uint64_t max_n_;
  // Integer Dickson coefficients mod p, row n, column i.
  std::vector<std::vector<std::uint32_t>> coeff_;
};

RecognitionResult recognize_guess(const Poly& f);
RecognitionResult recognize_guess(const RPoly& f);

/// Reduced D_n(x, alpha) for 0 <= n <= q^2 - 1 and every alpha, plus x^n for alpha = 0.
class DicksonTable {
 public:
  explicit DicksonTable(const Field& f);

  bool contains(const RPoly& g) const { return map_.count(g) > 0; }
  /// (n, alpha) pairs for g; alpha = 0 marks x^n.
  const std::vector<DicksonId>& witnesses(const RPoly& g) const;
  std::size_t distinct() const noexcept { return map_.size(); }

 private:
  std::unordered_map<RPoly, std::vector<DicksonId>, RPolyHash> map_;
};

/// Largest q accepted by DicksonTable.
inline constexpr std::uint32_t kMaxTableOrder = 16;

DicksonTable dickson_table(const Field& f);

/// True iff the witness regenerates g.
bool regenerates(const RecognitionResult& r, const RPoly& g);

}  // namespace dickson

#endif  // DICKSON_RECOGNITION_HPP
