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
#include <complex>
#include <cstddef>

#include "pqlucas/series.hpp"

namespace pqlucas {

// Class parameters. alpha only enters the real-part membership checks.
struct ClassParams {
  double lambda = 1.0;
  double mu = 0.0;
  double delta = 0.0;
  double alpha = 0.0;

  // (2 lambda + mu) / (2 lambda + 1)
  double xi() const noexcept { return (2.0 * lambda + mu) / (2.0 * lambda + 1.0); }
  // mu + lambda + 2 xi delta
  double c1() const noexcept { return mu + lambda + 2.0 * xi() * delta; }
  // mu + 2 lambda + 2 xi delta
  double c2() const noexcept { return mu + 2.0 * lambda + 2.0 * xi() * delta; }

  // Throws std::invalid_argument unless lambda >= 1, mu >= 0, delta >= 0,
  // 0 <= alpha < 1 and all are finite.
  void validate() const;
};

// D[h](z) = (1-lambda)(h/z)^mu + lambda h'(h/z)^(mu-1) + xi delta z h''
// for the normalized function f, through z^N.
TruncatedSeries apply_operator(const ClassParams& params, const FunctionSpec& f,
                               std::size_t order);

// D applied to g = f^{-1}, through w^N. The inverse is the series reversion
// of f treated as a polynomial.
TruncatedSeries apply_operator_inverse_side(const ClassParams& params,
                                            const FunctionSpec& f,
                                            std::size_t order);

// D applied to an arbitrary normalized series h (h_0 = 0, h_1 = 1), which
// must carry order >= N + 1.
TruncatedSeries apply_operator_to_series(const ClassParams& params,
                                         const TruncatedSeries& h,
                                         std::size_t order);

// Closed forms for the first two coefficients of D[f] and D[f^{-1}].
struct CoefficientClosedForms {
  double z1;   // C1 a2
  double z2;   // (mu+2lambda)[((mu-1)/2) a2^2 + (1 + 6 delta/(2lambda+1)) a3]
  double w1;   // -C1 a2
  double w2;   // (mu+2lambda)[((mu+3)/2 + 12 delta/(2lambda+1)) a2^2
               //              - (1 + 6 delta/(2lambda+1)) a3]
};
CoefficientClosedForms closed_form_coefficients(const ClassParams& params,
                                                double a2, double a3) noexcept;

// Entries are ordered z1, z2, w1, w2.
struct IdentityResiduals {
  std::array<double, 4> pipeline{};
  std::array<double, 4> closed_form{};
  std::array<double, 4> residual{};

  double max_residual() const noexcept;
};

// Compares the series pipeline with the closed forms. f must carry a_2 and
// a_3; higher coefficients do not enter.
IdentityResiduals extract_coefficient_identities(const ClassParams& params,
                                                 const FunctionSpec& f);

enum class MembershipMode {
  kOperator,  // Re D[f](z) > alpha and Re D[g](w) > alpha
  kStarlike,  // Re z f'/f > alpha
  kConvex,    // Re 1 + z f''/f' > alpha
};

// Closed sub-disk sample: radii r_max*i/radii for i = 1..radii, angles
// 2 pi j/angles. The origin is skipped (every expression is 1 there).
struct DiskGrid {
  double r_max = 0.95;
  int radii = 64;
  int angles = 256;
  // Truncation used for the inverse side in operator mode.
  std::size_t inverse_order = kDefaultOrder;
};

struct MembershipReport {
  bool pass = false;
  double min_real_part = 0.0;
  double min_margin = 0.0;  // min_real_part - alpha
  std::complex<double> worst_point{};
  bool worst_on_inverse = false;
  std::size_t points_checked = 0;
  std::size_t flagged_points = 0;  // vanishing denominators, skipped
};

// Sampled real-part test. A pass is evidence of membership on the sampled
// disk, not a proof. The reduction is independent of the thread count.
MembershipReport check_membership_realpart(const ClassParams& params,
                                           const FunctionSpec& f,
                                           const DiskGrid& grid,
                                           MembershipMode mode,
                                           unsigned threads = 1);

}  // namespace pqlucas
