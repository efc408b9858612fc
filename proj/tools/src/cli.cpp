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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dickson/dickson.hpp"
#include "dickson/dynamics.hpp"
#include "dickson/error.hpp"
#include "dickson/gf.hpp"
#include "dickson/identities.hpp"
#include "dickson/periodicity.hpp"
#include "dickson/polyring.hpp"
#include "dickson/recognition.hpp"

namespace dickson::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t q = 0;
  std::string alpha = "1";
  std::uint64_t n = 0;
  bool exact = false;
  std::string format = "text";
  std::uint32_t qmax = 16;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::uint64_t random = 0;
  bool render = false;
  std::string which = "full";
  std::string method = "brute";
  std::string poly;
  std::string out_path;
  bool max_period = false;
};

Field field_of(const Options& o) {
  if (!as_prime_power(o.q)) {
    throw Error(Errc::NotPrimePower, std::to_string(o.q) + " is not a prime power");
  }
  return Field::of_order(o.q);
}

std::string join(const std::vector<std::uint64_t>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string poly_csv(const Poly& f) {
  if (f.is_zero()) return f.field().format(f.field().zero());
  std::string s;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ',';
    s += f.field().format(f.coeffs()[i]);
  }
  return s;
}

std::string modulus_text(const Field& f) {
  const auto& m = f.modulus();
  std::string s;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " + ";
    const std::string c = m[i] == 1 && i > 0 ? "" : std::to_string(m[i]);
    if (i == 0) s += std::to_string(m[i]);
    else if (i == 1) s += c + "z";
    else s += c + "z^" + std::to_string(i);
  }
  return s;
}

// Writes to --out when given, else to the command's stream.
void emit(const Options& o, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (o.out_path.empty()) {
    body(out);
    return;
  }
  std::ofstream file(o.out_path);
  if (!file) throw Error(Errc::OutOfRange, "cannot open " + o.out_path);
  body(file);
}

int cmd_gen(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  const DicksonId id{o.n, f.parse(o.alpha)};
  if (o.exact) {
    const Poly d = dickson_closed(id, f);
    out << (o.format == "csv" ? poly_csv(d) : to_string(d)) << '\n';
  } else {
    const RPoly d = dickson_reduced(id, f);
    out << (o.format == "csv" ? to_csv(d) : to_string(d)) << '\n';
  }
  return kExitOk;
}

int cmd_sequence(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  const Felt alpha = f.parse(o.alpha);
  if (alpha.code == 0) throw Error(Errc::ZeroAlpha, "sequence needs alpha != 0");
  const std::uint64_t pi = theoretical_period(f, alpha);
  const auto seq = dickson_sequence(f, alpha, pi);
  out << "e.p. = " << pi << '\n';
  for (std::uint64_t n = 1; n <= pi; ++n) {
    out << (o.format == "csv" ? to_csv(seq[n]) : to_string(seq[n])) << '\n';
  }
  return kExitOk;
}

int cmd_period(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  const PeriodReport r = period_report(f, f.parse(o.alpha));
  write_period_csv(out, {r});
  return r.agrees ? kExitOk : kExitFail;
}

int cmd_scan_periods(const Options& o, std::ostream& out) {
  const auto rows = scan_periods(o.qmax, o.jobs);
  emit(o, out, [&](std::ostream& s) { write_period_csv(s, rows); });
  for (const auto& r : rows) {
    if (!r.agrees) return kExitFail;
  }
  return kExitOk;
}

void print_grid(const CoeffGrid& g, const Field& f, const Options& o, std::ostream& out) {
  out << g.source << '\n' << (o.format == "csv" ? grid_csv(g, f) : render_grid(g, f));
}

int cmd_identity(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  const Felt alpha = f.parse(o.alpha);
  if (o.which == "ascending") {
    print_grid(ascending_grid(f, alpha), f, o, out);
    return kExitOk;
  }
  const bool half = o.which == "half";
  const RotationCheck r = half ? half_rotation_check(f, alpha) : full_rotation_check(f, alpha);
  const bool exact = half ? verify_half_identity(f, alpha) : verify_full_identity(f, alpha);
  if (o.render) {
    print_grid(r.left, f, o, out);
    out << '\n';
    print_grid(r.right, f, o, out);
    out << '\n';
  }
  out << "ROTATION " << (r.ok ? "OK" : "FAIL") << '\n';
  out << "IDENTITY " << (exact ? "OK" : "FAIL") << '\n';
  return r.ok && exact ? kExitOk : kExitFail;
}

int cmd_group(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  const Felt alpha = f.parse(o.alpha);
  const GroupReport g = group_elements(f, alpha);
  const auto predicted = predicted_kernel(f, alpha);
  out << "q = " << g.q << '\n'
      << "alpha = " << f.format(g.alpha) << '\n'
      << "pi = " << g.pi << '\n'
      << "units = " << g.units.size() << '\n'
      << "kernel = " << join(g.kernel) << '\n'
      << "predicted_kernel = " << join(predicted) << '\n'
      << "order = " << g.order << '\n'
      << "predicted_order = " << g.predicted_order << '\n'
      << "case = " << g.structure_case << '\n'
      << "identity = " << (g.has_identity ? "true" : "false") << '\n'
      << "closed = " << (g.closed ? "true" : "false") << '\n'
      << "inverses = " << (g.has_inverses ? "true" : "false") << '\n';
  const bool ok = g.kernel == predicted && g.order == g.predicted_order && g.has_identity &&
                  g.closed && g.has_inverses;
  return ok ? kExitOk : kExitFail;
}

int cmd_dynamics(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  const Felt alpha = f.parse(o.alpha);
  if (o.max_period) {
    const MaxPeriodRecord m = construct_and_check_max_period(f, alpha);
    out << "pi = " << m.pi << '\n'
        << "alpha_order = " << m.alpha_order << '\n'
        << "bound = " << m.bound << '\n'
        << "constructed_n = " << (m.constructed_n ? std::to_string(*m.constructed_n) : "none")
        << '\n'
        << "constructed_order = " << m.constructed_order << '\n'
        << "constructed_period = " << m.constructed_period << '\n'
        << "exhaustive_order_max = " << m.exhaustive_order_max << '\n'
        << "exhaustive_period_max = " << m.exhaustive_max << " (n = " << m.exhaustive_n << ")\n";
    if (!m.note.empty()) out << "note = " << m.note << '\n';
    return m.bound_is_max() ? kExitOk : kExitFail;
  }
  const IterationRecord r = iteration_structure(f, alpha, o.n);
  out << "n = " << r.n << '\n'
      << "tail = " << r.l << '\n'
      << "period = " << r.k << '\n'
      << "poly_tail = " << r.poly_l << '\n'
      << "poly_period = " << r.poly_k << '\n';
  return kExitOk;
}

int cmd_oq_scan(const Options& o, std::ostream& out, std::ostream& err) {
  const OqScan s = open_question_scan(o.qmax, o.jobs);
  emit(o, out, [&](std::ostream& stream) {
    if (o.format == "jsonl") write_oq_jsonl(stream, s.rows);
    else write_oq_csv(stream, s.rows);
  });
  err << "instances=" << s.instances << " rows=" << s.rows.size()
      << " odd_k=" << s.odd_k_instances << " odd_k_violations=" << s.odd_k_violations
      << " tail_violations=" << s.tail_violations << " ratio_violations=" << s.ratio_violations
      << " ratio1=" << s.ratio_one << " ratio2=" << s.ratio_two << '\n';
  const bool ok = s.odd_k_violations == 0 && s.tail_violations == 0 && s.ratio_violations == 0;
  return ok ? kExitOk : kExitFail;
}

Json result_json(const RecognitionResult& r, const Field& f) {
  Json j;
  j["dickson"] = is_dickson(r);
  if (const auto* d = std::get_if<DicksonWitness>(&r)) {
    j["n"] = d->n;
    j["alpha"] = f.format(d->alpha);
  } else if (const auto* m = std::get_if<MonomialWitness>(&r)) {
    j["n"] = m->n;
    j["alpha"] = f.format(f.zero());
  }
  return j;
}

int recognize_random(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  const DicksonTable table(f);
  const GuessRecognizer guess(f);
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, f.q() - 1);
  std::uint64_t members = 0, disagreements = 0;
  for (std::uint64_t i = 0; i < o.random; ++i) {
    std::vector<Felt> c(f.q());
    for (auto& x : c) x = f.from_code(pick(rng));
    const RPoly g(f, std::move(c));
    const bool truth = table.contains(g);
    members += truth;
    const auto b = recognize_brute(g);
    const auto s = guess.recognize(g);
    if (is_dickson(b) != truth || is_dickson(s) != truth ||
        (truth && !(regenerates(b, g) && regenerates(s, g)))) {
      ++disagreements;
    }
  }
  Json j;
  j["q"] = f.q();
  j["seed"] = o.seed;
  j["samples"] = o.random;
  j["members"] = members;
  j["disagreements"] = disagreements;
  out << j.dump() << '\n';
  return disagreements == 0 ? kExitOk : kExitFail;
}

int cmd_recognize(const Options& o, std::ostream& out) {
  if (o.random > 0) return recognize_random(o, out);
  const Field f = field_of(o);
  if (o.poly.empty()) throw CLI::ValidationError("--poly", "a polynomial is required");
  const bool text = o.poly.find('x') != std::string::npos;
  const RPoly g = reduce(text ? parse_poly(f, o.poly) : parse_csv(f, o.poly));
  if (o.method == "brute") {
    out << result_json(recognize_brute(g), f).dump() << '\n';
    return kExitOk;
  }
  if (o.method == "guess") {
    out << result_json(GuessRecognizer(f).recognize(g), f).dump() << '\n';
    return kExitOk;
  }
  const auto b = recognize_brute(g);
  const auto s = GuessRecognizer(f).recognize(g);
  const bool agree = is_dickson(b) == is_dickson(s) &&
                     (!is_dickson(b) || (regenerates(b, g) && regenerates(s, g)));
  Json j = result_json(b, f);
  j["brute"] = result_json(b, f);
  j["guess"] = result_json(s, f);
  j["agree"] = agree;
  j["same_witness"] = b == s;
  out << j.dump() << '\n';
  return agree ? kExitOk : kExitFail;
}

int cmd_field_info(const Options& o, std::ostream& out) {
  const Field f = field_of(o);
  out << "q = " << f.q() << '\n'
      << "p = " << f.p() << '\n'
      << "s = " << f.s() << '\n'
      << "modulus = " << modulus_text(f) << '\n'
      << "generator = " << f.format(f.generator()) << '\n';
  const ExtField e = make_ext(f);
  out << "extension = y^2 = " << (e.t().code == 0 ? "" : f.format(e.t()) + "*y + ")
      << f.format(e.u()) << '\n';
  std::vector<std::string> squares;
  for (const Felt a : f.units()) {
    if (f.is_square(a)) squares.push_back(f.format(a));
  }
  out << "squares =";
  for (const auto& s : squares) out << ' ' << s;
  out << '\n';
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Dickson polynomials over finite fields"};
  app.require_subcommand(1);

  const auto add_q = [&](CLI::App* c) { c->add_option("--q", o.q, "field order")->required(); };
  const auto add_alpha = [&](CLI::App* c) {
    c->add_option("--alpha", o.alpha, "parameter: signed integer or z-notation");
  };
  const auto add_format = [&](CLI::App* c, std::vector<std::string> allowed) {
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember(allowed));
  };

  auto* gen = app.add_subcommand("gen", "print D_n(x, alpha)");
  add_q(gen);
  add_alpha(gen);
  gen->add_option("--n", o.n, "degree")->required();
  gen->add_flag("--exact", o.exact, "unreduced closed form");
  add_format(gen, {"text", "csv"});

  auto* seq = app.add_subcommand("sequence", "print D_1 .. D_pi mod x^q - x");
  add_q(seq);
  add_alpha(seq);
  add_format(seq, {"text", "csv"});

  auto* period = app.add_subcommand("period", "theoretical and empirical period");
  add_q(period);
  add_alpha(period);

  auto* scan = app.add_subcommand("scan-periods", "period scan over all q <= qmax");
  scan->add_option("--qmax", o.qmax, "largest field order");
  scan->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  scan->add_option("--out", o.out_path, "CSV output file");

  auto* identity = app.add_subcommand("identity", "coefficient rotation identities");
  add_q(identity);
  add_alpha(identity);
  identity->add_flag("--render", o.render, "print both grids");
  identity->add_option("--which", o.which, "full, half, or ascending")
      ->check(CLI::IsMember({"full", "half", "ascending"}));
  add_format(identity, {"text", "csv"});

  auto* group = app.add_subcommand("group", "group of Dickson permutations");
  add_q(group);
  add_alpha(group);

  auto* dyn = app.add_subcommand("dynamics", "iteration tail and period of D_n");
  add_q(dyn);
  add_alpha(dyn);
  dyn->add_option("--n", o.n, "degree");
  dyn->add_flag("--max-period", o.max_period, "construct an n of maximal iteration period");

  auto* oq = app.add_subcommand("oq-scan", "dynamics scan for n not coprime to q^2 - 1");
  oq->add_option("--qmax", o.qmax, "largest field order");
  oq->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  oq->add_option("--out", o.out_path, "output file");
  add_format(oq, {"csv", "jsonl"});

  auto* rec = app.add_subcommand("recognize", "recognize a reduced Dickson polynomial");
  add_q(rec);
  rec->add_option("--poly", o.poly, "\"c0,c1,...\" or polynomial text");
  rec->add_option("--method", o.method, "brute, guess, or both")
      ->check(CLI::IsMember({"brute", "guess", "both"}));
  rec->add_option("--random", o.random, "check this many random inputs against the table");
  rec->add_option("--seed", o.seed, "seed for --random");

  auto* info = app.add_subcommand("field-info", "field modulus, generator, and extension");
  add_q(info);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(o, out);
    if (*seq) return cmd_sequence(o, out);
    if (*period) return cmd_period(o, out);
    if (*scan) return cmd_scan_periods(o, out);
    if (*identity) return cmd_identity(o, out);
    if (*group) return cmd_group(o, out);
    if (*dyn) return cmd_dynamics(o, out);
    if (*oq) {
      if (o.format == "text") o.format = "csv";
      return cmd_oq_scan(o, out, err);
    }
    if (*rec) return cmd_recognize(o, out);
    if (*info) return cmd_field_info(o, out);
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dickson::cli
