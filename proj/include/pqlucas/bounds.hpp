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

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqlucas/bi_operator.hpp"

namespace pqlucas {

// Raised when a quantity is asked for at a point where its closed form
// divides by zero.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Scalars p = p(x), q = q(x) plus the Fekete-Szego weight upsilon.
struct BoundInputs {
  ClassParams params;
  double p = 0.0;
  double q = 0.0;
  double upsilon = 1.0;

  double l1() const noexcept { return p; }
  double l2() const noexcept { return p * p + 2.0 * q; }

  // (mu+2lambda)[1+mu+12delta/(2lambda+1)] p^2 - 2 C1^2 (p^2 + 2q)
  double theta() const noexcept;
  // Relative test against the magnitude of the two terms of theta().
  bool theta_vanishes() const noexcept;
  // theta / p; empty when p = 0.
  std::optional<double> upsilon_x() const noexcept;
};

enum class Regime { kCase1, kCase2, kBoundary, kDegenerate };

std::string_view regime_name(Regime r) noexcept;

// Bit flags attached to a BoundReport.
enum BoundFlag : unsigned {
  kFlagDenominatorVanishes = 1u << 0,
  kFlagL1Zero = 1u << 1,
  kFlagUpsilonOneLimit = 1u << 2,
  kFlagStatedThresholdDiffers = 1u << 3,
  kFlagCorollaryInconsistent = 1u << 4,
};

std::string_view flag_text(BoundFlag flag) noexcept;
// Texts of every bit set in flags, in bit order.
std::vector<std::string> flag_texts(unsigned flags);

struct BoundReport {
  double value = 0.0;  // +inf when unbounded
  bool unbounded = false;
  Regime regime = Regime::kCase1;
  double theta = 0.0;
  std::optional<double> upsilon_x;
  unsigned flags = 0;

  // Fekete-Szego only.
  std::optional<double> phi;
  // |upsilon - 1| <= consistent_threshold selects case1; this is the
  // threshold at which |phi| = 1/(2 C2).
  std::optional<double> consistent_threshold;
  // |Upsilon(x)| / (2 C2), the threshold in its published form.
  // Reported alongside, never used to pick the branch.
  std::optional<double> stated_threshold;
};

// |a2| <= 2|p|^{3/2} / sqrt|theta|.
BoundReport bound_a2(const BoundInputs& in);
// |a3| <= p^2/C1^2 + |p|/C2.
BoundReport bound_a3(const BoundInputs& in);
// p^2 (1 - upsilon) / theta. Throws DegenerateError when theta vanishes.
double phi(const BoundInputs& in);
// |a3 - upsilon a2^2| <= 2|p| max(|phi|, 1/(2 C2)).
BoundReport fekete_szego_bound(const BoundInputs& in);

struct PresetOverrides {
  std::optional<double> lambda;
  std::optional<double> mu;
  std::optional<double> delta;
  std::optional<double> alpha;
};

// Named special cases of the class:
//   caglar      delta = 0
//   srivastava  delta = 0, mu = 1, lambda = 1
//   bistarlike  delta = 0, mu = 0, lambda = 1
//   mu1         mu = 1
// Free parameters come from overrides (defaults lambda = 1, mu = 0,
// delta = 0, alpha = 0). Overriding a pinned parameter with a different
// value, or an unknown name, throws std::invalid_argument.
ClassParams preset(std::string_view name, const PresetOverrides& overrides = {});

bool is_bistarlike(const ClassParams& params) noexcept;

// The bi-starlike corollary figures exactly as published. They disagree with
// the general bounds evaluated at (lambda, mu, delta) = (1, 0, 0) in the
// a3 term, the Fekete-Szego case1 constant and the threshold; kept only so
// the two can be reported side by side.
struct StatedBistarlikeCorollary {
  double a2 = 0.0;          // 2|p|^{3/2} / sqrt|2p^2 - 2(p^2+2q)|
  double a3 = 0.0;          // p^2 + |p|
  double fs_case1 = 0.0;    // |p|
  double fs_case2 = 0.0;    // 2|p|^3 |1-upsilon| / (4|q|)
  double threshold = 0.0;   // |q/p|
};
StatedBistarlikeCorollary stated_bistarlike_corollary(double p, double q,
                                                      double upsilon);

}  // namespace pqlucas
