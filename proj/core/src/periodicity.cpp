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

#include "dickson/periodicity.hpp"

#include <map>
#include <ostream>

#include "dickson/dickson.hpp"
#include "dickson/parallel.hpp"

namespace dickson {

namespace {

void require_alpha(Felt alpha) {
  if (alpha.code == 0) throw Error(Errc::ZeroAlpha, "alpha must be nonzero");
}

std::uint64_t q_squared_minus_one(const Field& f) {
  return static_cast<std::uint64_t>(f.q()) * f.q() - 1;
}

bool all_zero(const std::vector<std::uint32_t>& xs) {
  for (const auto x : xs) {
    if (x != 0) return false;
  }
  return true;
}

}  // namespace

std::uint64_t theoretical_period(const Field& f, Felt alpha) {
  require_alpha(alpha);
  const std::uint64_t n = q_squared_minus_one(f);
  return f.odd() && f.is_square(alpha) ? n / 2 : n;
}

std::uint64_t empirical_period(const Field& f, Felt alpha) {
  require_alpha(alpha);
  const RPoly two = RPoly::constant(f, f.from_int(2));
  const RPoly x = RPoly::x(f);
  const std::uint64_t bound = q_squared_minus_one(f);
  DicksonWalker w(f, alpha);
  do {
    w.advance();
    if (w.current() == two && w.next() == x) return w.index();
  } while (w.index() <= bound);
  throw Error(Errc::NoPeriodWithinBound, "state (2, x) did not recur within q^2 - 1 steps");
}

PeriodReport period_report(const Field& f, Felt alpha) {
  PeriodReport r;
  r.q = f.q();
  r.alpha = alpha;
  r.square = f.is_square(alpha);
  r.theoretical = theoretical_period(f, alpha);
  r.empirical = empirical_period(f, alpha);
  r.agrees = r.theoretical == r.empirical;
  return r;
}

bool check_anchor_props(const Field& f, Felt alpha) {
  require_alpha(alpha);
  const std::uint64_t n = q_squared_minus_one(f);
  const auto seq = dickson_sequence(f, alpha, n + 1);
  const RPoly two = RPoly::constant(f, f.from_int(2));
  const RPoly x = RPoly::x(f);
  bool ok = seq[n] == two && seq[n + 1] == x;
  if (f.odd() && f.is_square(alpha)) ok = ok && seq[n / 2] == two && seq[n / 2 + 1] == x;
  return ok;
}

bool check_symmetry(const Field& f, Felt alpha) {
  require_alpha(alpha);
  const std::uint64_t n = q_squared_minus_one(f);
  const auto seq = dickson_sequence(f, alpha, n);
  const Felt alpha_inv = f.inv(alpha);
  Felt scale = f.one();
  const bool half = f.odd() && f.is_square(alpha);
  for (std::uint64_t i = 0; i <= n; ++i) {
    const RPoly rhs = rp_scale(seq[i], scale);
    if (seq[n - i] != rhs) return false;
    if (half && i <= n / 2 && seq[n / 2 - i] != rhs) return false;
    scale = f.mul(scale, alpha_inv);
  }
  return true;
}

bool ColumnSums::a_vanish() const { return all_zero(a); }
bool ColumnSums::b_vanish() const { return all_zero(b); }
bool ColumnSums::b_signed_vanish() const { return all_zero(b_signed); }

ColumnSums column_sums(const Field& f) {
  if (!f.odd()) throw Error(Errc::EvenQ, "column sums need odd q");
  const std::uint64_t q = f.q();
  const std::uint32_t p = f.p();
  const std::uint64_t n = q * q - 1;
  const std::uint64_t h = n / 2;
  const std::int64_t chi_minus_one = q % 4 == 1 ? 1 : -1;
  ColumnSums out;

  auto coefficient = [&](std::uint64_t deg, std::uint64_t i) {
    const mpz_class exact = dickson_coefficient(deg, i);
    const auto r = static_cast<std::uint32_t>(mpz_fdiv_ui(exact.get_mpz_t(), p));
    if (r != dickson_coefficient_mod_p(deg, i, p)) out.lucas_agrees = false;
    return r;
  };

  for (std::uint64_t k = 0; k + 2 <= q; ++k) {
    std::uint64_t sum = 0;
    for (std::uint64_t j = 0; j <= (q - 1) / 2; ++j) sum += coefficient(n, j * (q - 1) + k);
    out.a.push_back(static_cast<std::uint32_t>(sum % p));
  }
  for (std::uint64_t k = 0; 2 * k + 3 <= q; ++k) {
    std::uint64_t sum = 0;
    std::int64_t signed_sum = 0;
    std::int64_t sign = 1;
    for (std::uint64_t j = 0; j <= (q - 1) / 2; ++j) {
      const std::uint32_t c = coefficient(h, j * ((q - 1) / 2) + k);
      sum += c;
      signed_sum += sign * static_cast<std::int64_t>(c);
      sign *= chi_minus_one;
    }
    out.b.push_back(static_cast<std::uint32_t>(sum % p));
    const std::int64_t ip = p;
    out.b_signed.push_back(static_cast<std::uint32_t>(((signed_sum % ip) + ip) % ip));
  }
  return out;
}

bool check_column_sums(const Field& f) {
  const ColumnSums c = column_sums(f);
  return c.a_vanish() && c.b_vanish();
}

std::vector<PeriodReport> scan_periods(std::uint32_t q_max, unsigned jobs) {
  struct Task {
    std::uint32_t q;
    std::uint32_t alpha;
  };
  std::vector<Task> tasks;
  for (const std::uint32_t q : prime_powers_up_to(q_max)) {
    for (std::uint32_t a = 1; a < q; ++a) tasks.push_back(Task{q, a});
  }
  std::map<std::uint32_t, Field> fields;
  for (const auto& t : tasks) {
    if (!fields.count(t.q)) fields.emplace(t.q, Field::of_order(t.q));
  }
  return parallel_map(tasks, jobs, [&](const Task& t) {
    return period_report(fields.at(t.q), Felt{t.alpha});
  });
}

void write_period_csv(std::ostream& out, const std::vector<PeriodReport>& rows) {
  out << "q,alpha,square_flag,theoretical,empirical,agrees\n";
  std::map<std::uint32_t, Field> fields;
  for (const auto& r : rows) {
    auto it = fields.find(r.q);
    if (it == fields.end()) it = fields.emplace(r.q, Field::of_order(r.q)).first;
    out << r.q << ',' << it->second.format(r.alpha) << ',' << (r.square ? "true" : "false")
        << ',' << r.theoretical << ',' << r.empirical << ',' << (r.agrees ? "true" : "false")
        << '\n';
  }
}

}  // namespace dickson
