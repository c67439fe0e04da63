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

#include "pqlucas/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <thread>

namespace pqlucas {
namespace {

struct Candidate {
  double value = -std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
  SchwarzSample sample;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

double axis(std::size_t i, std::size_t n) {
  if (i + 1 == n) return 1.0;
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(n - 1);
}

double evaluate(const BoundInputs& in, Functional f, const SchwarzSample& s) {
  switch (f) {
    case Functional::kAbsA2: return reconstruct(in, s).a2_abs;
    case Functional::kAbsA3: return std::abs(reconstruct(in, s).a3);
    case Functional::kFekete: return std::abs(fekete_value(in, s));
  }
  return 0.0;
}

BoundReport closed_form(const BoundInputs& in, Functional f) {
  switch (f) {
    case Functional::kAbsA2: return bound_a2(in);
    case Functional::kAbsA3: return bound_a3(in);
    case Functional::kFekete: return fekete_szego_bound(in);
  }
  return {};
}

double uniform(std::mt19937_64& gen, double lo, double hi) {
  const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

}  // namespace

std::string_view mode_name(ConstraintMode m) noexcept {
  return m == ConstraintMode::kPaper ? "paper" : "schwarz";
}

std::string_view functional_name(Functional f) noexcept {
  switch (f) {
    case Functional::kAbsA2: return "abs_a2";
    case Functional::kAbsA3: return "abs_a3";
    case Functional::kFekete: return "fekete";
  }
  return "unknown";
}

bool admissible(const SchwarzSample& s, ConstraintMode mode,
                double tol) noexcept {
  if (std::abs(s.r1 + s.s1) > tol) return false;
  for (double v : {s.r1, s.r2, s.s1, s.s2}) {
    if (std::abs(v) > 1.0 + tol) return false;
  }
  if (mode == ConstraintMode::kSchwarz) {
    if (std::abs(s.r2) > 1.0 - s.r1 * s.r1 + tol) return false;
    if (std::abs(s.s2) > 1.0 - s.s1 * s.s1 + tol) return false;
  }
  return true;
}

ReconstructedPair reconstruct(const BoundInputs& in, const SchwarzSample& s) {
  if (in.theta_vanishes()) throw DegenerateError("reconstruction degenerate");
  const double p = in.p;
  const double c1 = in.params.c1();
  ReconstructedPair out;
  out.a2_sq = p * p * p * (s.r2 + s.s2) / in.theta();
  out.a2_abs = std::sqrt(std::abs(out.a2_sq));
  out.a3 = p * p * (s.r1 * s.r1 + s.s1 * s.s1) / (2.0 * c1 * c1) +
           p * (s.r2 - s.s2) / (2.0 * in.params.c2());
  return out;
}

double fekete_value(const BoundInputs& in, const SchwarzSample& s) {
  const ReconstructedPair rp = reconstruct(in, s);
  return (1.0 - in.upsilon) * rp.a2_sq +
         in.p * (s.r2 - s.s2) / (2.0 * in.params.c2());
}

SweepReport sweep_max(const BoundInputs& in, Functional functional,
                      std::size_t grid_n, ConstraintMode mode,
                      unsigned threads) {
  if (grid_n < 2) throw std::invalid_argument("grid_n must be >= 2");
  if (in.theta_vanishes()) throw DegenerateError("reconstruction degenerate");

  const std::size_t n = grid_n;
  auto scan = [&](std::size_t i_begin, std::size_t i_end) {
    Candidate best;
    for (std::size_t i = i_begin; i < i_end; ++i) {
      const double r1 = axis(i, n);
      const double reach =
          mode == ConstraintMode::kSchwarz ? 1.0 - r1 * r1 : 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          const SchwarzSample s =
              SchwarzSample::linked(r1, reach * axis(j, n), reach * axis(k, n));
          const Candidate c{evaluate(in, functional, s), (i * n + j) * n + k, s};
          if (better(c, best)) best = c;
        }
      }
    }
    return best;
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  std::vector<Candidate> partial(workers);
  if (workers == 1) {
    partial[0] = scan(0, n);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = n * w / workers;
      const std::size_t end = n * (w + 1) / workers;
      pool.emplace_back([&, w, begin, end] { partial[w] = scan(begin, end); });
    }
  }
  Candidate best;
  for (const Candidate& c : partial) {
    if (better(c, best)) best = c;
  }

  SweepReport report;
  report.functional = functional;
  report.mode = mode;
  report.supremum = best.value;
  report.argmax = best.sample;
  report.points = n * n * n;
  report.bound = closed_form(in, functional);
  if (report.bound.unbounded) {
    report.ratio = 0.0;
  } else if (report.bound.value == 0.0) {
    report.ratio = report.supremum == 0.0
                       ? 1.0
                       : std::numeric_limits<double>::infinity();
  } else {
    report.ratio = report.supremum / report.bound.value;
  }
  report.pass = report.bound.unbounded ||
                report.supremum <= report.bound.value + kDominanceTolerance;
  return report;
}

VerifyReport verify_bounds(const BoundInputs& in, std::size_t grid_n,
                           ConstraintMode mode, unsigned threads) {
  VerifyReport out;
  out.inputs = in;
  out.pass = true;
  for (std::size_t i = 0; i < kAllFunctionals.size(); ++i) {
    out.sweeps[i] = sweep_max(in, kAllFunctionals[i], grid_n, mode, threads);
    out.pass = out.pass && out.sweeps[i].pass;
  }
  return out;
}

std::vector<BoundInputs> random_draws(std::uint64_t seed, std::size_t count,
                                      const DrawRanges& ranges) {
  std::mt19937_64 gen(seed);
  std::vector<BoundInputs> draws;
  draws.reserve(count);
  while (draws.size() < count) {
    BoundInputs in;
    in.params.lambda = uniform(gen, ranges.lambda_min, ranges.lambda_max);
    in.params.mu = uniform(gen, ranges.mu_min, ranges.mu_max);
    in.params.delta = uniform(gen, ranges.delta_min, ranges.delta_max);
    in.p = uniform(gen, ranges.p_min, ranges.p_max);
    in.q = uniform(gen, ranges.q_min, ranges.q_max);
    in.upsilon = uniform(gen, ranges.upsilon_min, ranges.upsilon_max);
    if (std::abs(in.p) < ranges.min_abs_p) continue;
    if (std::abs(in.theta()) < ranges.min_abs_theta) continue;
    draws.push_back(in);
  }
  return draws;
}

}  // namespace pqlucas
