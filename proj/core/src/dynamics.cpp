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

#include "dickson/dynamics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <unordered_map>

#include <json.hpp>

#include "dickson/dickson.hpp"
#include "dickson/numtheory.hpp"
#include "dickson/parallel.hpp"
#include "dickson/periodicity.hpp"
#include "int128.hpp"

namespace dickson {

namespace {

struct TableHash {
  std::size_t operator()(const ValueTable& t) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (const Felt c : t) {
      h ^= c.code;
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Value tables of D_0, ..., D_last on F_q, in element encoding order.
std::vector<ValueTable> value_sequence(const Field& f, Felt alpha, std::uint64_t last) {
  const std::uint32_t q = f.q();
  std::vector<ValueTable> out;
  out.reserve(last + 1);
  out.emplace_back(q, f.from_int(2));
  if (last == 0) return out;
  out.emplace_back(f.elements());
  for (std::uint64_t n = 2; n <= last; ++n) {
    ValueTable t(q);
    const ValueTable& a = out[n - 1];
    const ValueTable& b = out[n - 2];
    for (std::uint32_t x = 0; x < q; ++x) {
      t[x] = f.sub(f.mul(Felt{x}, a[x]), f.mul(alpha, b[x]));
    }
    out.push_back(std::move(t));
  }
  return out;
}

ValueTable identity_table(const Field& f) { return f.elements(); }

bool fixes_alpha(const Field& f, Felt alpha, std::uint64_t n) { return f.pow(alpha, n) == alpha; }

std::uint64_t q2m1(const Field& f) { return static_cast<std::uint64_t>(f.q()) * f.q() - 1; }

std::uint64_t residue_in_range(std::uint64_t r, std::uint64_t m) {
  r %= m;
  return r == 0 ? m : r;
}

// (tail, period) of T, T o T, ... indexed like the integer sequence n^m, m >= 1.
DynStruct table_orbit(const ValueTable& t) {
  std::unordered_map<ValueTable, std::uint64_t, TableHash> seen;
  ValueTable cur = t;
  for (std::uint64_t m = 1;; ++m) {
    const auto [it, inserted] = seen.emplace(cur, m);
    if (!inserted) return DynStruct{it->second - 1, m - it->second};
    cur = compose_tables(t, cur);
  }
}

IterationRecord make_record(const Field& f, Felt alpha, std::uint64_t n, std::uint64_t pi,
                            const ValueTable& table) {
  IterationRecord r;
  r.q = f.q();
  r.alpha = alpha;
  r.n = n;
  const DynStruct ints = dyn_structure_int(n, pi);
  const DynStruct polys = table_orbit(table);
  r.l = ints.tail;
  r.k = ints.period;
  r.poly_l = polys.tail;
  r.poly_k = polys.period;
  return r;
}

}  // namespace

std::vector<std::uint64_t> kernel(const Field& f, Felt alpha) {
  const std::uint64_t pi = theoretical_period(f, alpha);
  const auto seq = dickson_sequence(f, alpha, pi);
  const RPoly x = RPoly::x(f);
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 1; n <= pi; ++n) {
    if (fixes_alpha(f, alpha, n) && seq[n] == x) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> predicted_kernel(const Field& f, Felt alpha) {
  const std::uint64_t pi = theoretical_period(f, alpha);
  const std::uint64_t m = f.odd() ? pi : q2m1(f);
  const std::uint64_t q = f.q();
  std::set<std::uint64_t> s{residue_in_range(1, m), residue_in_range(q, m)};
  if (alpha == f.one()) {
    s.insert(residue_in_range(m - 1, m));
    s.insert(residue_in_range(m - q % m, m));
  }
  return {s.begin(), s.end()};
}

GroupReport group_elements(const Field& f, Felt alpha) {
  GroupReport g;
  g.q = f.q();
  g.alpha = alpha;
  g.pi = theoretical_period(f, alpha);
  g.kernel = kernel(f, alpha);
  const auto seq = dickson_sequence(f, alpha, g.pi);
  std::unordered_map<ValueTable, std::size_t, TableHash> index;
  std::vector<ValueTable> tables;
  for (std::uint64_t n = 1; n <= g.pi; ++n) {
    if (!fixes_alpha(f, alpha, n) || std::gcd(n, g.pi) != 1) continue;
    g.units.push_back(n);
    ValueTable t = values(seq[n]);
    if (index.emplace(t, tables.size()).second) {
      tables.push_back(std::move(t));
      g.elements.push_back(seq[n]);
    }
  }
  g.order = g.elements.size();
  g.predicted_order = g.kernel.empty() ? 0 : g.units.size() / g.kernel.size();
  if (alpha == f.one()) {
    g.structure_case = "alpha = 1";
  } else if (f.odd() && f.is_square(alpha)) {
    g.structure_case = "square alpha != 1";
  } else {
    g.structure_case = "modulus q^2 - 1";
  }

  const ValueTable id = identity_table(f);
  g.has_identity = index.count(id) > 0;
  g.closed = true;
  g.has_inverses = true;
  for (const auto& a : tables) {
    bool inverse = false;
    for (const auto& b : tables) {
      const ValueTable c = compose_tables(a, b);
      if (!index.count(c)) g.closed = false;
      if (c == id && compose_tables(b, a) == id) inverse = true;
    }
    if (!inverse) g.has_inverses = false;
  }
  return g;
}

std::uint64_t composition_period(const Field& f, Felt alpha, std::uint64_t n) {
  if (std::gcd(n, q2m1(f)) != 1) {
    throw Error(Errc::NotCoprime, "composition period needs gcd(n, q^2 - 1) = 1");
  }
  if (!fixes_alpha(f, alpha, n)) throw Error(Errc::AlphaNotFixed, "alpha^n != alpha");
  const std::uint64_t pi = theoretical_period(f, alpha);
  const ValueTable t = values(dickson_reduced(DicksonId{n, alpha}, f));
  const ValueTable id = identity_table(f);
  ValueTable cur = t;
  for (std::uint64_t s = 1; s <= pi; ++s) {
    if (cur == id) return s;
    cur = compose_tables(t, cur);
  }
  throw Error(Errc::NoPeriodWithinBound, "iterates of D_n did not return to x");
}

std::uint64_t quotient_order(const Field& f, Felt alpha, std::uint64_t n) {
  const std::uint64_t pi = theoretical_period(f, alpha);
  if (std::gcd(n, pi) != 1) throw Error(Errc::NotCoprime, "n is not a unit mod pi");
  const auto h = kernel(f, alpha);
  const std::set<std::uint64_t> hs(h.begin(), h.end());
  std::uint64_t cur = n % pi;
  for (std::uint64_t t = 1; t <= pi; ++t) {
    if (hs.count(residue_in_range(cur, pi))) return t;
    cur = static_cast<std::uint64_t>(static_cast<detail::u128>(cur) * n % pi);
  }
  throw Error(Errc::NoPeriodWithinBound, "coset order exceeds pi");
}

std::optional<std::uint64_t> delta_rule_period(const Field& f, Felt alpha, std::uint64_t n) {
  const std::uint64_t pi = theoretical_period(f, alpha);
  const std::uint64_t k = mult_order_mod(n % pi, pi);
  const std::uint64_t q = f.q();
  auto powers = [&](std::uint64_t m) {
    std::set<std::uint64_t> s;
    std::uint64_t cur = n % m;
    while (s.insert(cur).second) {
      cur = static_cast<std::uint64_t>(static_cast<detail::u128>(cur) * n % m);
    }
    return s;
  };
  bool half;
  if (alpha == f.one()) {
    const std::uint64_t m = q2m1(f);
    const auto s = powers(m);
    half = !s.count(m - 1) && !s.count(q % m) && !s.count((m - q % m) % m);
  } else {
    half = !powers(pi).count(q % pi);
  }
  if (!half) return k;
  if (k % 2 != 0) return std::nullopt;
  return k / 2;
}

IterationRecord iteration_structure(const Field& f, Felt alpha, std::uint64_t n) {
  if (!fixes_alpha(f, alpha, n)) throw Error(Errc::AlphaNotFixed, "alpha^n != alpha");
  const std::uint64_t pi = theoretical_period(f, alpha);
  return make_record(f, alpha, n, pi, values(dickson_reduced(DicksonId{n, alpha}, f)));
}

MaxPeriodRecord construct_and_check_max_period(const Field& f, Felt alpha) {
  MaxPeriodRecord r;
  r.q = f.q();
  r.alpha = alpha;
  r.alpha_order = f.mult_order(alpha);
  r.pi = theoretical_period(f, alpha);
  r.bound = max_period_bound(f.q(), r.alpha_order, r.pi);

  try {
    const std::uint64_t n = construct_max_period_n(f.q(), r.alpha_order, r.pi);
    r.constructed_n = n;
    if (std::gcd(n, q2m1(f)) != 1 || !fixes_alpha(f, alpha, n)) {
      r.note = "constructed n is not an admissible unit";
    } else {
      r.constructed_order = mult_order_mod(n, r.pi);
      r.constructed_period = composition_period(f, alpha, n);
    }
  } catch (const Error& e) {
    if (e.code() != Errc::NoGeneratorFound) throw;
    r.note = e.what();
  }

  for (std::uint64_t n = 1; n <= r.pi; ++n) {
    if (std::gcd(n, q2m1(f)) != 1 || !fixes_alpha(f, alpha, n)) continue;
    r.exhaustive_order_max = std::max(r.exhaustive_order_max, mult_order_mod(n, r.pi));
    const std::uint64_t t = composition_period(f, alpha, n);
    if (t > r.exhaustive_max) {
      r.exhaustive_max = t;
      r.exhaustive_n = n;
    }
  }
  return r;
}

OqScan open_question_scan(std::uint32_t q_max, unsigned jobs) {
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

  const auto parts = parallel_map(tasks, jobs, [&](const Task& task) {
    const Field& f = fields.at(task.q);
    const Felt alpha{task.alpha};
    const std::uint64_t pi = theoretical_period(f, alpha);
    const auto tables = value_sequence(f, alpha, pi);
    OqScan part;
    for (std::uint64_t n = 1; n <= pi; ++n) {
      if (!fixes_alpha(f, alpha, n)) continue;
      const IterationRecord rec = make_record(f, alpha, n, pi, tables[n]);
      ++part.instances;
      if (rec.poly_l != rec.l) ++part.tail_violations;
      if (rec.k % 2 == 1) {
        ++part.odd_k_instances;
        if (rec.poly_k != rec.k) ++part.odd_k_violations;
      }
      if (std::gcd(n, q2m1(f)) == 1 || rec.k % 2 != 0) continue;
      const bool divides = rec.k % rec.poly_k == 0;
      const std::uint64_t ratio = divides ? rec.k / rec.poly_k : 0;
      if (ratio == 1) {
        ++part.ratio_one;
      } else if (ratio == 2) {
        ++part.ratio_two;
      } else {
        ++part.ratio_violations;
      }
      part.rows.push_back(rec);
    }
    return part;
  });

  OqScan out;
  for (const auto& p : parts) {
    out.rows.insert(out.rows.end(), p.rows.begin(), p.rows.end());
    out.instances += p.instances;
    out.odd_k_instances += p.odd_k_instances;
    out.odd_k_violations += p.odd_k_violations;
    out.tail_violations += p.tail_violations;
    out.ratio_violations += p.ratio_violations;
    out.ratio_one += p.ratio_one;
    out.ratio_two += p.ratio_two;
  }
  return out;
}

namespace {

std::string ratio_text(const IterationRecord& r) {
  if (r.poly_k == 0 || r.k % r.poly_k != 0) return std::to_string(r.k) + "/" + std::to_string(r.poly_k);
  return std::to_string(r.k / r.poly_k);
}

}  // namespace

void write_oq_csv(std::ostream& out, const std::vector<IterationRecord>& rows) {
  out << "q,alpha,n,l,k,poly_k,ratio\n";
  std::map<std::uint32_t, Field> fields;
  for (const auto& r : rows) {
    auto it = fields.find(r.q);
    if (it == fields.end()) it = fields.emplace(r.q, Field::of_order(r.q)).first;
    out << r.q << ',' << it->second.format(r.alpha) << ',' << r.n << ',' << r.l << ',' << r.k
        << ',' << r.poly_k << ',' << ratio_text(r) << '\n';
  }
}

void write_oq_jsonl(std::ostream& out, const std::vector<IterationRecord>& rows) {
  std::map<std::uint32_t, Field> fields;
  for (const auto& r : rows) {
    auto it = fields.find(r.q);
    if (it == fields.end()) it = fields.emplace(r.q, Field::of_order(r.q)).first;
    const nlohmann::ordered_json j = {
        {"q", r.q},         {"alpha", it->second.format(r.alpha)},
        {"n", r.n},         {"l", r.l},
        {"k", r.k},         {"poly_k", r.poly_k},
        {"ratio", ratio_text(r)},
    };
    out << j.dump() << '\n';
  }
}

}  // namespace dickson
