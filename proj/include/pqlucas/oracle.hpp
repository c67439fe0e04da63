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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pqlucas/bounds.hpp"

namespace pqlucas {

// The free coefficients r1, r2 (of phi) and s1, s2 (of psi) that determine
// a2 and a3 once the two subordinations are written out.
struct SchwarzSample {
  double r1 = 0.0;
  double r2 = 0.0;
  double s1 = 0.0;
  double s2 = 0.0;

  // s1 = -r1 is forced by comparing the linear coefficients.
  static SchwarzSample linked(double r1, double r2, double s2) noexcept {
    return {r1, r2, -r1, s2};
  }
};

enum class ConstraintMode {
  kPaper,    // closed box |r_k|, |s_k| <= 1
  kSchwarz,  // additionally |r2| <= 1 - r1^2, |s2| <= 1 - s1^2
};

std::string_view mode_name(ConstraintMode m) noexcept;

bool admissible(const SchwarzSample& s, ConstraintMode mode,
                double tol = 1e-12) noexcept;

struct ReconstructedPair {
  double a2_sq = 0.0;   // p^3 (r2 + s2) / theta
  double a2_abs = 0.0;  // sqrt|a2_sq|
  double a3 = 0.0;      // p^2 (r1^2+s1^2)/(2C1^2) + p (r2 - s2)/(2C2)
};

// Throws DegenerateError ("reconstruction degenerate") when theta vanishes.
ReconstructedPair reconstruct(const BoundInputs& in, const SchwarzSample& s);

// a3 - upsilon a2^2 with a3 - a2^2 = p (r2 - s2)/(2 C2) and a2^2 taken from
// the r2 + s2 relation, so r1 drops out:
//   (1 - upsilon) p^3 (r2 + s2)/theta + p (r2 - s2)/(2 C2).
double fekete_value(const BoundInputs& in, const SchwarzSample& s);

enum class Functional { kAbsA2, kAbsA3, kFekete };

std::string_view functional_name(Functional f) noexcept;
inline constexpr std::array<Functional, 3> kAllFunctionals{
    Functional::kAbsA2, Functional::kAbsA3, Functional::kFekete};

struct SweepReport {
  Functional functional = Functional::kAbsA2;
  ConstraintMode mode = ConstraintMode::kPaper;
  double supremum = 0.0;
  SchwarzSample argmax;
  BoundReport bound;
  double ratio = 0.0;  // supremum / bound (1 when both vanish)
  bool pass = false;   // supremum <= bound + 1e-9
  std::size_t points = 0;
};

inline constexpr double kDominanceTolerance = 1e-9;

// Exhaustive search over a grid_n^3 lattice in (r1, r2, s2) with s1 = -r1.
// Every axis runs from -1 to 1 inclusive, so all box corners are visited; in
// Schwarz mode the r2 and s2 axes are rescaled by 1 - r1^2. Ties go to the
// lexicographically smallest lattice index, which keeps the result
// independent of the thread count.
SweepReport sweep_max(const BoundInputs& in, Functional functional,
                      std::size_t grid_n, ConstraintMode mode,
                      unsigned threads = 1);

struct VerifyReport {
  BoundInputs inputs;
  std::array<SweepReport, 3> sweeps;  // ordered as kAllFunctionals
  bool pass = false;
};

VerifyReport verify_bounds(const BoundInputs& in, std::size_t grid_n,
                           ConstraintMode mode, unsigned threads = 1);

// Ranges for random nondegenerate parameter draws.
struct DrawRanges {
  double lambda_min = 1.0, lambda_max = 3.0;
  double mu_min = 0.0, mu_max = 3.0;
  double delta_min = 0.0, delta_max = 2.0;
  double p_min = -2.0, p_max = 2.0;
  double q_min = -2.0, q_max = 2.0;
  double upsilon_min = -2.0, upsilon_max = 4.0;
  double min_abs_p = 0.05;      // keeps p away from zero
  double min_abs_theta = 0.05;  // keeps theta away from zero
};

// Deterministic for a given seed on every platform (no std distributions).
std::vector<BoundInputs> random_draws(std::uint64_t seed, std::size_t count,
                                      const DrawRanges& ranges = {});

}  // namespace pqlucas
