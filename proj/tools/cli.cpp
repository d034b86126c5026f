/*
 *   Copyright 2026 The twoside Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "twoside/digital_kex.hpp"
#include "twoside/random.hpp"
#include "twoside/serialize.hpp"
#include "twoside/twisted_kex.hpp"

namespace twoside::cli {

namespace {

/// Raised for bad parameter combinations; maps to kUsage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string scheme = "digital";
  std::vector<std::size_t> n{3};
  std::vector<std::uint32_t> p{2};
  std::vector<std::size_t> fext{2};
  std::vector<std::uint32_t> m{3};
  std::vector<std::string> triples;
  std::uint64_t bound = kDefaultEntryBound;
  std::optional<std::uint64_t> seed;
  std::size_t trials = 10;
  std::string out;
  std::string in;
  std::string dump_system;
  std::string h_mode = "full";
  bool insecure_dump = false;
  bool no_timing = false;
};

struct TwistedShape {
  std::uint32_t p;
  std::size_t n;
  std::uint32_t m;
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

HSampling parse_h_mode(const std::string& mode) {
  if (mode == "full") return HSampling::FullSupport;
  if (mode == "uniform") return HSampling::Uniform;
  if (mode == "zero-divisor") return HSampling::ZeroDivisor;
  throw UsageError("--h-mode must be one of full, uniform, zero-divisor");
}

void check_twisted_shape(const TwistedShape& s) {
  if (!is_prime(s.p)) throw UsageError("p must be prime");
  if (s.p >= PrimeField::kMaxPrime) throw UsageError("p must be below 65536");
  if (s.n < 1) throw UsageError("--fext must be at least 1");
  if (s.m < 1) throw UsageError("m must be at least 1");
}

std::vector<TwistedShape> twisted_grid(const Options& o) {
  std::vector<TwistedShape> grid;
  if (!o.triples.empty()) {
    for (const auto& text : o.triples) {
      TwistedShape s{};
      char c1 = 0, c2 = 0;
      std::istringstream in(text);
      if (!(in >> s.p >> c1 >> s.n >> c2 >> s.m) || c1 != ',' || c2 != ',' || !in.eof())
        throw UsageError("--triple expects p,n,m, got '" + text + "'");
      grid.push_back(s);
    }
  } else {
    for (auto p : o.p)
      for (auto n : o.fext)
        for (auto m : o.m) grid.push_back({p, n, m});
  }
  if (grid.empty()) throw UsageError("parameter grid is empty");
  for (const auto& s : grid) check_twisted_shape(s);
  return grid;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path);
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

// ---------------------------------------------------------------- exchange

int cmd_exchange(const Options& o, std::ostream& out) {
  const std::uint64_t seed = resolve_seed(o);
  json transcript;
  bool agree = false;
  if (o.scheme == "digital") {
    if (o.n.size() != 1) throw UsageError("exchange takes a single --n");
    if (o.n[0] < 1) throw UsageError("n must be at least 1");
    const auto t = run_digital_exchange(o.n[0], seed, o.bound);
    agree = t.keys_agree;
    transcript = to_json(t, seed, o.insecure_dump);
  } else {
    if (o.p.size() != 1 || o.fext.size() != 1 || o.m.size() != 1)
      throw UsageError("exchange takes a single --p, --fext and --m");
    const TwistedShape s{o.p[0], o.fext[0], o.m[0]};
    check_twisted_shape(s);
    const auto t = run_twisted_exchange(s.p, s.n, s.m, seed, parse_h_mode(o.h_mode));
    agree = t.keys_agree;
    transcript = to_json(t, seed, o.insecure_dump);
  }

  if (o.out.empty()) {
    out << transcript.dump(2) << "\n";
  } else {
    write_text(o.out, transcript.dump(2) + "\n");
    json summary{{"scheme", o.scheme}, {"seed", seed}, {"keys_agree", agree}, {"out", o.out}};
    out << summary.dump() << "\n";
  }
  return agree ? kOk : kKeyMismatch;
}

// ---------------------------------------------------------------- attack

int report_attack(json report, bool solver_ok, const std::optional<bool>& matches, std::ostream& out) {
  report["solver_ok"] = solver_ok;
  report["shared_key_available"] = matches.has_value();
  report["attack_key_matches"] = matches ? json(*matches) : json(nullptr);
  out << report.dump() << "\n";
  if (!solver_ok) return kSolverFailure;
  if (matches && !*matches) return kKeyMismatch;
  return kOk;
}

int cmd_attack(const Options& o, std::ostream& out) {
  if (o.in.empty()) throw UsageError("attack needs a transcript path");
  const json transcript = read_json(o.in);
  const std::string scheme = transcript.value("scheme", std::string());

  if (scheme == "digital") {
    DigitalPublicView view;
    try {
      view = digital_public_from_json(transcript);
    } catch (const std::invalid_argument& e) {
      throw UsageError(o.in + ": " + e.what());
    }
    if (!o.dump_system.empty())
      write_text(o.dump_system, to_json(digital_attack_system(view.params, view.alice_pk)).dump() + "\n");
    const auto start = Clock::now();
    const auto result = digital_attack(view.params, view.alice_pk, view.bob_pk);
    const double attack_ms = ms_since(start);
    std::optional<bool> matches;
    if (result.key)
      if (auto stored = digital_stored_key(transcript)) matches = *stored == *result.key;
    json report{{"scheme", scheme},       {"n", view.params.n},          {"unknowns", result.unknowns},
                {"equations", result.equations}, {"solve_ms", result.solve_ms}, {"attack_ms", attack_ms}};
    return report_attack(std::move(report), result.key.has_value(), matches, out);
  }

  if (scheme == "twisted") {
    std::optional<TwistedPublicView> view;
    try {
      view = twisted_public_from_json(transcript);
    } catch (const std::invalid_argument& e) {
      throw UsageError(o.in + ": " + e.what());
    }
    const auto start = Clock::now();
    const auto result = twisted_attack(view->params, view->alice_pk, view->bob_pk);
    const double attack_ms = ms_since(start);
    std::optional<bool> matches;
    if (result.key)
      if (auto stored = twisted_stored_key(view->params.ring, transcript)) matches = *stored == *result.key;
    const auto& f = view->params.ring.field();
    json report{{"scheme", scheme},
                {"p", f.p()},
                {"n", f.n()},
                {"m", view->params.ring.m()},
                {"unknowns", result.unknowns},
                {"equations", result.equations},
                {"rank", result.rank},
                {"solve_ms", result.solve_ms},
                {"attack_ms", attack_ms}};
    return report_attack(std::move(report), result.key.has_value(), matches, out);
  }

  throw UsageError(o.in + ": unknown scheme '" + scheme + "'");
}

// ---------------------------------------------------------------- bench

struct BenchRow {
  std::string params;
  std::size_t trial;
  double solve_ms;
  double attack_ms;
  bool success;
};

std::string fmt_ms(double v, bool no_timing) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << (no_timing ? 0.0 : v);
  return s.str();
}

int cmd_bench(const Options& o, std::ostream& out) {
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  const std::uint64_t seed = resolve_seed(o);
  std::vector<BenchRow> rows;

  if (o.scheme == "digital") {
    if (o.n.empty()) throw UsageError("parameter grid is empty");
    for (std::size_t cfg = 0; cfg < o.n.size(); ++cfg) {
      const std::size_t n = o.n[cfg];
      if (n < 1) throw UsageError("n must be at least 1");
      for (std::size_t trial = 0; trial < o.trials; ++trial) {
        const auto t = run_digital_exchange(n, derive_seed(derive_seed(seed, cfg), trial), o.bound);
        const auto start = Clock::now();
        const auto r = digital_attack(t.params, t.alice_pk, t.bob_pk);
        const double attack_ms = ms_since(start);
        const bool ok = t.keys_agree && r.key && *r.key == t.secrets->shared_key;
        rows.push_back({"n=" + std::to_string(n), trial, r.solve_ms, attack_ms, ok});
      }
    }
  } else {
    const auto grid = twisted_grid(o);
    const HSampling sampling = parse_h_mode(o.h_mode);
    for (std::size_t cfg = 0; cfg < grid.size(); ++cfg) {
      const auto& s = grid[cfg];
      const std::string label =
          "p=" + std::to_string(s.p) + ";n=" + std::to_string(s.n) + ";m=" + std::to_string(s.m);
      for (std::size_t trial = 0; trial < o.trials; ++trial) {
        const auto t = run_twisted_exchange(s.p, s.n, s.m, derive_seed(derive_seed(seed, cfg), trial), sampling);
        const auto start = Clock::now();
        const auto r = twisted_attack(t.params, t.alice_pk, t.bob_pk);
        const double attack_ms = ms_since(start);
        const bool ok = t.keys_agree && r.key && *r.key == t.secrets->shared_key;
        rows.push_back({label, trial, r.solve_ms, attack_ms, ok});
      }
    }
  }

  std::ostringstream csv;
  csv << "scheme,params,trial,solve_ms,attack_ms,success\n";
  for (const auto& row : rows)
    csv << o.scheme << ',' << row.params << ',' << row.trial << ',' << fmt_ms(row.solve_ms, o.no_timing) << ','
        << fmt_ms(row.attack_ms, o.no_timing) << ',' << (row.success ? "true" : "false") << "\n";

  const std::size_t failures =
      static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const BenchRow& r) { return !r.success; }));
  if (o.out.empty()) {
    out << csv.str();
  } else {
    write_text(o.out, csv.str());
    out << json{{"scheme", o.scheme}, {"seed", seed}, {"rows", rows.size()}, {"failures", failures}, {"out", o.out}}
               .dump()
        << "\n";
  }
  return failures == 0 ? kOk : kKeyMismatch;
}

// ---------------------------------------------------------------- selftest

int cmd_selftest(const Options& o, std::ostream& out) {
  const std::uint64_t seed = o.seed.value_or(7);
  bool all_ok = true;

  const auto d = run_digital_exchange(3, seed);
  const auto dr = digital_attack(d.params, d.alice_pk, d.bob_pk);
  const bool d_ok = d.keys_agree && dr.key && *dr.key == d.secrets->shared_key;
  out << "digital n=3: " << (d_ok ? "ok" : "FAIL") << "\n";
  all_ok = all_ok && d_ok;

  for (const TwistedShape s : {TwistedShape{2, 2, 3}, TwistedShape{5, 1, 6}}) {
    const auto t = run_twisted_exchange(s.p, s.n, s.m, seed);
    const auto tr = twisted_attack(t.params, t.alice_pk, t.bob_pk);
    const bool ok = t.keys_agree && tr.key && *tr.key == t.secrets->shared_key;
    out << "twisted p=" << s.p << " n=" << s.n << " m=" << s.m << ": " << (ok ? "ok" : "FAIL") << "\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? kOk : kKeyMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Two-sided multiplication key exchanges and their key-recovery attacks"};
  app.require_subcommand(1);

  auto add_scheme = [&o](CLI::App* sub) {
    sub->add_option("--scheme", o.scheme, "digital or twisted")->check(CLI::IsMember({"digital", "twisted"}));
  };
  auto add_seed = [&o](CLI::App* sub) { sub->add_option("--seed", o.seed, "64-bit seed (random if omitted)"); };
  auto add_shape = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "matrix dimension (digital)")->delimiter(',');
    sub->add_option("--p", o.p, "field characteristic (twisted)")->delimiter(',');
    sub->add_option("--fext", o.fext, "extension degree n of F_{p^n} (twisted)")->delimiter(',');
    sub->add_option("--m", o.m, "dihedral parameter m (twisted)")->delimiter(',');
    sub->add_option("--bound", o.bound, "largest finite entry sampled (digital)");
    sub->add_option("--h-mode", o.h_mode, "public h sampling: full, uniform, zero-divisor (twisted)");
  };

  auto* exchange = app.add_subcommand("exchange", "Run an honest exchange and write its transcript");
  add_scheme(exchange);
  add_seed(exchange);
  add_shape(exchange);
  exchange->add_option("--out", o.out, "transcript path (stdout if omitted)");
  exchange->add_flag("--insecure-dump", o.insecure_dump, "include private keys and the shared key");

  auto* attack = app.add_subcommand("attack", "Recover the shared key from a transcript's public data");
  attack->add_option("transcript", o.in, "transcript JSON")->required();
  attack->add_option("--dump-system", o.dump_system, "write the digital linear system as JSON");

  auto* bench = app.add_subcommand("bench", "Run a seeded attack campaign and emit CSV");
  add_scheme(bench);
  add_seed(bench);
  add_shape(bench);
  bench->add_option("--triple", o.triples, "twisted grid point p,n,m (repeatable)");
  bench->add_option("--trials", o.trials, "trials per grid point");
  bench->add_option("--out", o.out, "CSV path (stdout if omitted)");
  bench->add_flag("--no-timing", o.no_timing, "write zero timings for byte-reproducible output");

  auto* selftest = app.add_subcommand("selftest", "Exchange and attack small instances of both schemes");
  add_seed(selftest);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (exchange->parsed()) return cmd_exchange(o, out);
    if (attack->parsed()) return cmd_attack(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
    if (selftest->parsed()) return cmd_selftest(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

}  // namespace twoside::cli
