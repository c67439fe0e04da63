// Copyright 2026 The pqlucas Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// pqlucas command-line front end. Every subcommand goes through the C API.

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pqlucas/pqlucas.h"
#include "table.hpp"

namespace pqlucas::cli {
namespace {

using json = nlohmann::ordered_json;

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,
  kExitIo = 3,
};

constexpr const char* kOutputDirEnv = "PQLUCAS_OUTPUT_DIR";
constexpr double kIdentityTolerance = 1e-9;
constexpr double kLucasTolerance = 1e-9;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void check(pql_status status) {
  if (status == PQL_OK) return;
  const std::string msg = pql_last_error();
  if (status == PQL_ERR_INVALID_ARGUMENT) throw UsageError(msg);
  throw std::runtime_error(std::string(pql_status_string(status)) + ": " + msg);
}

double parse_double(std::string_view text, std::string_view what) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw UsageError("malformed " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return v;
}

// Ascending coefficients, comma separated: "0,1" is p(x) = x.
std::vector<double> parse_list(const std::string& text, std::string_view what) {
  std::vector<double> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view piece(text.data() + start,
                                 (comma == std::string::npos ? text.size() : comma) - start);
    out.push_back(parse_double(piece, what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

// "v" or "start:stop:steps".
struct Range {
  double start = 0.0;
  double stop = 0.0;
  int steps = 1;

  std::vector<double> values() const {
    std::vector<double> v(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
      v[static_cast<std::size_t>(i)] =
          steps == 1 ? start
          : i == steps - 1 ? stop
          : start + (stop - start) * i / (steps - 1);
    }
    return v;
  }
};

Range parse_range(const std::string& text, std::string_view what) {
  const std::size_t c1 = text.find(':');
  if (c1 == std::string::npos) {
    const double v = parse_double(text, what);
    return {v, v, 1};
  }
  const std::size_t c2 = text.find(':', c1 + 1);
  if (c2 == std::string::npos) {
    throw UsageError(std::string(what) + " range must be start:stop:steps");
  }
  Range r;
  r.start = parse_double(std::string_view(text).substr(0, c1), what);
  r.stop = parse_double(std::string_view(text).substr(c1 + 1, c2 - c1 - 1), what);
  const double steps = parse_double(std::string_view(text).substr(c2 + 1), what);
  if (steps < 1 || steps != std::floor(steps)) {
    throw UsageError(std::string(what) + " steps must be an integer >= 1");
  }
  r.steps = static_cast<int>(steps);
  if (r.stop < r.start) throw UsageError(std::string(what) + " needs stop >= start");
  if (r.steps == 1 && r.stop != r.start) {
    throw UsageError(std::string(what) + " with one step needs start == stop");
  }
  return r;
}

struct OutputOptions {
  std::string format;
  std::string path;
};

void add_output_options(CLI::App* sub, OutputOptions& out, const std::string& default_format) {
  out.format = default_format;
  sub->add_option("--format", out.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", out.path,
                  "Output file (stdout if omitted; relative paths resolve against $" +
                      std::string(kOutputDirEnv) + " when set)");
}

void emit(const OutputOptions& opts, const std::function<void(std::ostream&)>& write) {
  if (opts.path.empty()) {
    write(std::cout);
    std::cout.flush();
    return;
  }
  std::filesystem::path path(opts.path);
  if (path.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
      path = std::filesystem::path(dir) / path;
    }
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open output file '" + path.string() + "'");
  write(file);
  file.flush();
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

void emit_table(const OutputOptions& opts, const Table& table, json extra = json::object()) {
  emit(opts, [&](std::ostream& os) {
    if (opts.format == "csv") {
      table.write_csv(os);
    } else {
      json doc = extra.is_object() ? std::move(extra) : json::object();
      doc.update(table.to_json());
      os << doc.dump(2) << '\n';
    }
  });
}

std::string join_flags(unsigned flags) {
  std::string out;
  for (unsigned bit = 1; bit != 0 && bit <= flags; bit <<= 1) {
    if (!(flags & bit)) continue;
    if (!out.empty()) out += "; ";
    out += pql_flag_text(bit);
  }
  return out;
}

std::vector<double> series_values(pql_series* s) {
  std::vector<double> c(pql_series_order(s) + 1);
  check(pql_series_real_coeffs(s, c.data(), c.size()));
  return c;
}

struct SeriesHandle {
  pql_series* ptr = nullptr;
  ~SeriesHandle() { pql_series_destroy(ptr); }
};

// ---- class parameters --------------------------------------------------

struct ParamOptions {
  std::string preset;
  std::optional<std::string> lambda;
  std::optional<std::string> mu;
  std::optional<std::string> delta;
  std::optional<std::string> alpha;
};

void add_param_options(CLI::App* sub, ParamOptions& p, bool ranges) {
  const std::string kind = ranges ? " (value or start:stop:steps)" : "";
  sub->add_option("--preset", p.preset, "caglar | srivastava | bistarlike | mu1")
      ->check(CLI::IsMember({"caglar", "srivastava", "bistarlike", "mu1"}));
  sub->add_option("--lambda", p.lambda, "lambda >= 1, default 1" + kind);
  sub->add_option("--mu", p.mu, "mu >= 0, default 0" + kind);
  sub->add_option("--delta", p.delta, "delta >= 0, default 0" + kind);
  sub->add_option("--alpha", p.alpha, "alpha in [0,1), default 0");
}

pql_class_params resolve_params(const std::string& preset, std::optional<double> lambda,
                                std::optional<double> mu, std::optional<double> delta,
                                std::optional<double> alpha) {
  pql_class_params out{lambda.value_or(1.0), mu.value_or(0.0), delta.value_or(0.0),
                       alpha.value_or(0.0)};
  if (!preset.empty()) {
    pql_preset_overrides ov{};
    ov.has_lambda = lambda.has_value();
    ov.lambda = out.lambda;
    ov.has_mu = mu.has_value();
    ov.mu = out.mu;
    ov.has_delta = delta.has_value();
    ov.delta = out.delta;
    ov.has_alpha = alpha.has_value();
    ov.alpha = out.alpha;
    check(pql_preset(preset.c_str(), &ov, &out));
  }
  check(pql_params_validate(&out));
  return out;
}

std::optional<double> scalar_of(const std::optional<std::string>& s, std::string_view what) {
  if (!s) return std::nullopt;
  return parse_double(*s, what);
}

pql_class_params scalar_params(const ParamOptions& p) {
  return resolve_params(p.preset, scalar_of(p.lambda, "lambda"), scalar_of(p.mu, "mu"),
                        scalar_of(p.delta, "delta"), scalar_of(p.alpha, "alpha"));
}

json params_json(const pql_class_params& c) {
  double xi = 0, c1 = 0, c2 = 0;
  check(pql_params_derived(&c, &xi, &c1, &c2));
  return {{"lambda", c.lambda}, {"mu", c.mu}, {"delta", c.delta}, {"alpha", c.alpha},
          {"xi", xi}, {"c1", c1}, {"c2", c2}};
}

// ---- lucas -----------------------------------------------------------------

struct LucasOptions {
  std::string p;
  std::string q;
  double x = 0.0;
  int k = 10;
  OutputOptions out;
};

int run_lucas(const LucasOptions& o) {
  const std::vector<double> pc = parse_list(o.p, "polynomial --p");
  const std::vector<double> qc = parse_list(o.q, "polynomial --q");
  if (o.k < 0) throw UsageError("--k must be >= 0");
  const double p = pql_eval_poly(pc.data(), pc.size(), o.x);
  const double q = pql_eval_poly(qc.data(), qc.size(), o.x);

  std::vector<double> rec(static_cast<std::size_t>(o.k) + 1);
  check(pql_lucas_sequence(p, q, o.k, rec.data(), rec.size()));
  SeriesHandle gen;
  check(pql_lucas_generating_series(p, q, static_cast<std::size_t>(o.k), &gen.ptr));
  const std::vector<double> series = series_values(gen.ptr);

  Table table({"k", "L_k", "L_k_series", "abs_diff"});
  bool ok = true;
  for (std::size_t k = 0; k < rec.size(); ++k) {
    const double diff = std::abs(rec[k] - series[k]);
    ok = ok && diff <= kLucasTolerance;
    table.add_row({static_cast<std::int64_t>(k), rec[k], series[k], diff});
  }
  emit_table(o.out, table, {{"x", o.x}, {"p", p}, {"q", q}, {"pass", ok}});
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---- operator --------------------------------------------------------------

struct OperatorOptions {
  ParamOptions params;
  std::string a = "0,0";
  std::size_t order = 10;
  bool random = false;
  std::uint64_t seed = 1;
  OutputOptions out;
};

double unit_draw(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

int run_operator(const OperatorOptions& o) {
  pql_class_params c{};
  std::vector<double> a;
  if (o.random) {
    std::mt19937_64 gen(o.seed);
    c.lambda = unit_draw(gen, 1, 3);
    c.mu = unit_draw(gen, 0, 3);
    c.delta = unit_draw(gen, 0, 2);
    a = {unit_draw(gen, -1, 1), unit_draw(gen, -1, 1)};
  } else {
    c = scalar_params(o.params);
    a = parse_list(o.a, "coefficient list --a");
  }
  if (a.size() < 2) throw UsageError("--a needs at least a2,a3");
  if (o.order < 2) throw UsageError("--order must be >= 2");

  pql_identity_report rep{};
  check(pql_coefficient_identities(&c, a[0], a[1], &rep));
  SeriesHandle fwd, inv;
  check(pql_apply_operator(&c, a.data(), a.size(), o.order, 0, &fwd.ptr));
  check(pql_apply_operator(&c, a.data(), a.size(), o.order, 1, &inv.ptr));

  const bool ok = rep.max_residual <= kIdentityTolerance;
  Table table({"coefficient", "pipeline", "closed_form", "residual"});
  const char* names[4] = {"z", "z2", "w", "w2"};
  for (int i = 0; i < 4; ++i) {
    table.add_row({std::string(names[i]), rep.pipeline[i], rep.closed_form[i], rep.residual[i]});
  }
  json extra;
  extra["params"] = params_json(c);
  extra["a"] = a;
  extra["coeff_z"] = rep.pipeline[0];
  extra["coeff_z2"] = rep.pipeline[1];
  extra["coeff_w"] = rep.pipeline[2];
  extra["coeff_w2"] = rep.pipeline[3];
  extra["residuals"] = std::vector<double>(rep.residual, rep.residual + 4);
  extra["max_residual"] = rep.max_residual;
  extra["pass"] = ok;
  extra["series_z"] = series_values(fwd.ptr);
  extra["series_w"] = series_values(inv.ptr);
  emit_table(o.out, table, std::move(extra));
  return ok ? kExitOk : kExitVerifyFailed;
}

// ---- member ----------------------------------------------------------------

struct MemberOptions {
  ParamOptions params;
  std::string mode = "operator";
  std::string a = "0";
  pql_disk_grid grid = pql_default_disk_grid();
  unsigned threads = 1;
  OutputOptions out;
};

int run_member(const MemberOptions& o) {
  const pql_class_params c = scalar_params(o.params);
  const std::vector<double> a = parse_list(o.a, "coefficient list --a");
  const pql_member_mode mode = o.mode == "starlike"  ? PQL_MEMBER_STARLIKE
                               : o.mode == "convex" ? PQL_MEMBER_CONVEX
                                                    : PQL_MEMBER_OPERATOR;
  pql_membership_report r{};
  check(pql_check_membership(&c, a.data(), a.size(), &o.grid, mode, o.threads, &r));

  Table table({"mode", "alpha", "pass", "min_real_part", "min_margin", "worst_re", "worst_im",
               "worst_on_inverse", "points_checked", "flagged_points"});
  table.add_row({o.mode, c.alpha, r.pass != 0, r.min_real_part, r.min_margin, r.worst_re,
                 r.worst_im, r.worst_on_inverse != 0,
                 static_cast<std::int64_t>(r.points_checked),
                 static_cast<std::int64_t>(r.flagged_points)});
  json extra;
  extra["params"] = params_json(c);
  extra["a"] = a;
  extra["grid"] = {{"r_max", o.grid.r_max}, {"radii", o.grid.radii},
                   {"angles", o.grid.angles}, {"inverse_order", o.grid.inverse_order}};
  extra["pass"] = r.pass != 0;
  extra["min_margin"] = r.min_margin;
  emit_table(o.out, table, std::move(extra));
  return r.pass ? kExitOk : kExitVerifyFailed;
}

// ---- bounds / fekete -------------------------------------------------------

struct SweepOptions {
  ParamOptions params;
  std::string p = "1";
  std::string q = "1";
  std::string x = "0";
  std::string upsilon = "1";
  OutputOptions out;
};

struct SweepPoint {
  pql_bound_inputs in;
  double x;
};

std::vector<SweepPoint> expand_sweep(const SweepOptions& o) {
  const std::vector<double> pc = parse_list(o.p, "polynomial --p");
  const std::vector<double> qc = parse_list(o.q, "polynomial --q");
  auto range_or = [](const std::optional<std::string>& s, std::string_view what) {
    return s ? std::optional<Range>(parse_range(*s, what)) : std::nullopt;
  };
  const auto lambda = range_or(o.params.lambda, "lambda");
  const auto mu = range_or(o.params.mu, "mu");
  const auto delta = range_or(o.params.delta, "delta");
  const auto alpha = scalar_of(o.params.alpha, "alpha");
  const Range xs = parse_range(o.x, "x");
  const Range ups = parse_range(o.upsilon, "upsilon");

  auto values = [](const std::optional<Range>& r) {
    std::vector<std::optional<double>> out;
    if (!r) return std::vector<std::optional<double>>{std::nullopt};
    for (double v : r->values()) out.emplace_back(v);
    return out;
  };

  std::vector<SweepPoint> points;
  for (const auto& l : values(lambda)) {
    for (const auto& m : values(mu)) {
      for (const auto& d : values(delta)) {
        const pql_class_params c = resolve_params(o.params.preset, l, m, d, alpha);
        for (double x : xs.values()) {
          const double p = pql_eval_poly(pc.data(), pc.size(), x);
          const double q = pql_eval_poly(qc.data(), qc.size(), x);
          for (double u : ups.values()) points.push_back({{c, p, q, u}, x});
        }
      }
    }
  }
  return points;
}

int run_bounds(const SweepOptions& o) {
  Table table({"lambda", "mu", "delta", "x", "p", "q", "upsilon", "bound_a2", "bound_a3",
               "fs_bound", "regime", "flags"});
  for (const SweepPoint& pt : expand_sweep(o)) {
    pql_bound_report a2{}, a3{}, fs{};
    check(pql_bound_a2(&pt.in, &a2));
    check(pql_bound_a3(&pt.in, &a3));
    check(pql_fekete_szego_bound(&pt.in, &fs));
    const pql_regime regime = a2.unbounded ? PQL_REGIME_DEGENERATE : fs.regime;
    const auto& c = pt.in.params;
    table.add_row({c.lambda, c.mu, c.delta, pt.x, pt.in.p, pt.in.q, pt.in.upsilon, a2.value,
                   a3.value, fs.value, std::string(pql_regime_name(regime)),
                   join_flags(a2.flags | a3.flags | fs.flags)});
  }
  emit_table(o.out, table);
  return kExitOk;
}

int run_fekete(const SweepOptions& o) {
  Table table({"lambda", "mu", "delta", "x", "p", "q", "upsilon", "theta", "phi", "fs_bound",
               "regime", "consistent_threshold", "stated_threshold", "flags"});
  for (const SweepPoint& pt : expand_sweep(o)) {
    pql_bound_report fs{};
    check(pql_fekete_szego_bound(&pt.in, &fs));
    const auto& c = pt.in.params;
    // Missing quantities (undefined phi, p = 0 thresholds) render as empty cells.
    auto opt = [&](int has, double v) -> Cell {
      if (!has) return std::string();
      return v;
    };
    table.add_row({c.lambda, c.mu, c.delta, pt.x, pt.in.p, pt.in.q, pt.in.upsilon, fs.theta,
                   opt(fs.has_phi, fs.phi), fs.value,
                   std::string(pql_regime_name(fs.regime)),
                   opt(fs.has_thresholds, fs.consistent_threshold),
                   opt(fs.has_thresholds, fs.stated_threshold), join_flags(fs.flags)});
  }
  emit_table(o.out, table);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyOptions {
  std::size_t draws = 50;
  std::uint64_t seed = 1;
  std::size_t grid_n = 21;
  std::string mode = "paper";
  unsigned threads = 1;
  bool point = false;
  SweepOptions single;
  OutputOptions out;
};

json ratio_summary(std::vector<double> r) {
  if (r.empty()) return json::object();
  std::sort(r.begin(), r.end());
  const std::size_t n = r.size();
  const double median = n % 2 ? r[n / 2] : 0.5 * (r[n / 2 - 1] + r[n / 2]);
  return {{"min", json_number(r.front())}, {"median", json_number(median)},
          {"max", json_number(r.back())}};
}

int run_verify(const VerifyOptions& o) {
  if (o.grid_n < 2) throw UsageError("--grid-n must be >= 2");
  const pql_constraint_mode mode = o.mode == "schwarz" ? PQL_MODE_SCHWARZ : PQL_MODE_PAPER;

  std::vector<pql_bound_inputs> inputs;
  if (o.point) {
    for (const SweepPoint& pt : expand_sweep(o.single)) inputs.push_back(pt.in);
  } else {
    inputs.resize(o.draws);
    check(pql_random_draws(o.seed, o.draws, inputs.data()));
  }

  Table table({"draw", "lambda", "mu", "delta", "p", "q", "upsilon", "functional", "supremum",
               "argmax_r1", "argmax_r2", "argmax_s1", "argmax_s2", "bound", "ratio", "mode", "pass"});
  std::vector<double> ratios[3];
  bool all_pass = true;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    pql_verify_report rep{};
    const pql_status st = pql_verify_bounds(&inputs[i], o.grid_n, mode, o.threads, &rep);
    if (st == PQL_ERR_DEGENERATE) {
      throw UsageError("verify point " + std::to_string(i) + " is degenerate: " +
                       pql_last_error());
    }
    check(st);
    all_pass = all_pass && rep.pass;
    for (int f = 0; f < 3; ++f) {
      const pql_sweep_report& s = rep.sweeps[f];
      ratios[f].push_back(s.ratio);
      const auto& c = inputs[i].params;
      table.add_row({static_cast<std::int64_t>(i), c.lambda, c.mu, c.delta, inputs[i].p,
                     inputs[i].q, inputs[i].upsilon,
                     std::string(pql_functional_name(s.functional)), s.supremum, s.argmax.r1,
                     s.argmax.r2, s.argmax.s1, s.argmax.s2, s.bound.value, s.ratio,
                     std::string(pql_mode_name(s.mode)), s.pass != 0});
    }
  }

  json summary;
  for (int f = 0; f < 3; ++f) {
    summary[pql_functional_name(static_cast<pql_functional>(f))] = ratio_summary(ratios[f]);
  }

  if (o.out.format == "json") {
    json extra;
    extra["mode"] = o.mode;
    extra["grid_n"] = o.grid_n;
    if (!o.point) extra["seed"] = o.seed;
    extra["draws"] = inputs.size();
    extra["pass"] = all_pass;
    extra["summary"] = summary;
    emit_table(o.out, table, std::move(extra));
  } else {
    emit_table(o.out, table);
    std::cerr << "tightness ratios (min/median/max): " << summary.dump() << '\n'
              << (all_pass ? "all draws pass dominance" : "DOMINANCE FAILURE") << '\n';
  }
  return all_pass ? kExitOk : kExitVerifyFailed;
}

void add_sweep_options(CLI::App* sub, SweepOptions& s) {
  add_param_options(sub, s.params, true);
  sub->add_option("--p", s.p, "p(x) ascending coefficients, e.g. 0,1 for x")->capture_default_str();
  sub->add_option("--q", s.q, "q(x) ascending coefficients")->capture_default_str();
  sub->add_option("--x", s.x, "evaluation point (value or start:stop:steps)")->capture_default_str();
  sub->add_option("--upsilon", s.upsilon, "Fekete-Szego weight (value or start:stop:steps)")
      ->capture_default_str();
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

// Replaces "--config FILE" with "--key value" pairs read from FILE. Command-line options win.
std::vector<std::string> expand_config(int argc, char** argv) {
  std::vector<std::string> in(argv + 1, argv + argc);
  std::vector<std::string> out;
  std::vector<std::string> files;
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == "--config") {
      if (i + 1 >= in.size()) throw UsageError("--config needs a file name");
      files.push_back(in[++i]);
    } else if (in[i].rfind("--config=", 0) == 0) {
      files.push_back(in[i].substr(9));
    } else {
      out.push_back(in[i]);
    }
  }
  auto given = [&](const std::string& key) {
    return std::any_of(out.begin(), out.end(), [&](const std::string& a) {
      return a == "--" + key || a.rfind("--" + key + "=", 0) == 0;
    });
  };
  std::vector<std::string> injected;
  for (const std::string& file : files) {
    std::ifstream cfg(file);
    if (!cfg) throw IoError("cannot read config file '" + file + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(cfg, line)) {
      ++lineno;
      const std::string t = trim(line);
      if (t.empty() || t[0] == '#' || t[0] == ';') continue;
      const auto eq = t.find('=');
      if (eq == std::string::npos) {
        throw UsageError(file + ":" + std::to_string(lineno) + ": expected key=value");
      }
      const std::string key = trim(std::string_view(t).substr(0, eq));
      const std::string value = trim(std::string_view(t).substr(eq + 1));
      if (key.empty()) throw UsageError(file + ":" + std::to_string(lineno) + ": empty key");
      if (given(key)) continue;
      if (value == "true" || value == "false") {
        if (value == "true") injected.push_back("--" + key);
      } else {
        injected.push_back("--" + key + "=" + value);
      }
    }
  }
  // Config options go right after the subcommand name so they bind to it.
  if (!injected.empty()) {
    const auto sub = std::find_if(out.begin(), out.end(),
                                  [](const std::string& a) { return a.rfind('-', 0) != 0; });
    const auto at = sub == out.end() ? out.end() : sub + 1;
    out.insert(at, injected.begin(), injected.end());
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pqlucas: (p,q)-Lucas bi-univalent coefficient bounds laboratory"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pql_version());
  app.footer("Any subcommand accepts --config FILE with one key=value line per long option\n"
             "(for example grid-n=31). Options given on the command line take precedence.");

  LucasOptions lucas;
  auto* lucas_cmd = app.add_subcommand("lucas", "Lucas sequence by recurrence and generating series");
  lucas_cmd->add_option("--p", lucas.p, "p(x) ascending coefficients")->required();
  lucas_cmd->add_option("--q", lucas.q, "q(x) ascending coefficients")->required();
  lucas_cmd->add_option("--x", lucas.x, "evaluation point")->capture_default_str();
  lucas_cmd->add_option("--k", lucas.k, "highest index K")->capture_default_str();
  add_output_options(lucas_cmd, lucas.out, "csv");

  OperatorOptions op;
  auto* op_cmd = app.add_subcommand("operator", "Operator coefficients against closed forms");
  add_param_options(op_cmd, op.params, false);
  op_cmd->add_option("--a", op.a, "a2,a3[,a4,...]")->capture_default_str();
  op_cmd->add_option("--order", op.order, "series truncation N")->capture_default_str();
  op_cmd->add_flag("--random", op.random, "draw parameters and a2, a3 from --seed");
  op_cmd->add_option("--seed", op.seed, "seed for --random")->capture_default_str();
  add_output_options(op_cmd, op.out, "csv");

  MemberOptions mem;
  auto* mem_cmd = app.add_subcommand("member", "Sampled real-part membership check");
  add_param_options(mem_cmd, mem.params, false);
  mem_cmd->add_option("--mode", mem.mode, "operator | starlike | convex")
      ->check(CLI::IsMember({"operator", "starlike", "convex"}))
      ->capture_default_str();
  mem_cmd->add_option("--a", mem.a, "a2,a3,...")->capture_default_str();
  mem_cmd->add_option("--r-max", mem.grid.r_max, "largest sampled radius")->capture_default_str();
  mem_cmd->add_option("--radii", mem.grid.radii, "radial samples")->capture_default_str();
  mem_cmd->add_option("--angles", mem.grid.angles, "angular samples")->capture_default_str();
  mem_cmd->add_option("--inverse-order", mem.grid.inverse_order,
                      "truncation of the inverse series")->capture_default_str();
  mem_cmd->add_option("--threads", mem.threads, "worker threads")->capture_default_str();
  add_output_options(mem_cmd, mem.out, "csv");

  SweepOptions bounds;
  auto* bounds_cmd = app.add_subcommand("bounds", "Coefficient and Fekete-Szego bound sweep");
  add_sweep_options(bounds_cmd, bounds);
  add_output_options(bounds_cmd, bounds.out, "csv");

  SweepOptions fekete;
  auto* fekete_cmd = app.add_subcommand("fekete", "Fekete-Szego bound detail sweep");
  add_sweep_options(fekete_cmd, fekete);
  add_output_options(fekete_cmd, fekete.out, "csv");

  VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Grid oracle against the closed-form bounds");
  verify_cmd->add_option("--draws", verify.draws, "random parameter draws")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "draw seed")->capture_default_str();
  verify_cmd->add_option("--grid-n", verify.grid_n, "lattice points per axis")->capture_default_str();
  verify_cmd->add_option("--mode", verify.mode, "paper | schwarz")
      ->check(CLI::IsMember({"paper", "schwarz"}))
      ->capture_default_str();
  verify_cmd->add_option("--threads", verify.threads, "worker threads")->capture_default_str();
  verify_cmd->add_flag("--point", verify.point,
                       "verify the sweep given by --p/--q/--x/--upsilon/--lambda/... instead of random draws");
  add_sweep_options(verify_cmd, verify.single);
  add_output_options(verify_cmd, verify.out, "json");

  std::vector<std::string> args;
  try {
    args = expand_config(argc, argv);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (lucas_cmd->parsed()) return run_lucas(lucas);
    if (op_cmd->parsed()) return run_operator(op);
    if (mem_cmd->parsed()) return run_member(mem);
    if (bounds_cmd->parsed()) return run_bounds(bounds);
    if (fekete_cmd->parsed()) return run_fekete(fekete);
    if (verify_cmd->parsed()) return run_verify(verify);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}

}  // namespace pqlucas::cli

int main(int argc, char** argv) { return pqlucas::cli::main(argc, argv); }
