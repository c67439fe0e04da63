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

#include "pqlucas/bounds.hpp"

#include <cmath>
#include <limits>

namespace pqlucas {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kThetaRelTol = 1e-12;
constexpr double kBoundaryTol = 1e-12;
constexpr double kUpsilonOneTol = 1e-12;

double theta_lead(const ClassParams& c) noexcept {
  return (c.mu + 2.0 * c.lambda) *
         (1.0 + c.mu + 12.0 * c.delta / (2.0 * c.lambda + 1.0));
}

BoundReport base_report(const BoundInputs& in) {
  BoundReport r;
  r.theta = in.theta();
  r.upsilon_x = in.upsilon_x();
  return r;
}

// num / den with the convention x/0 = inf for x > 0 and 0/0 = 0.
double safe_ratio(double num, double den) noexcept {
  if (den == 0.0) return num == 0.0 ? 0.0 : kInf;
  return num / den;
}

}  // namespace

double BoundInputs::theta() const noexcept {
  const double c1 = params.c1();
  return theta_lead(params) * p * p - 2.0 * c1 * c1 * l2();
}

bool BoundInputs::theta_vanishes() const noexcept {
  const double c1 = params.c1();
  const double scale =
      std::abs(theta_lead(params) * p * p) + std::abs(2.0 * c1 * c1 * l2());
  return std::abs(theta()) <= kThetaRelTol * scale;
}

std::optional<double> BoundInputs::upsilon_x() const noexcept {
  if (p == 0.0) return std::nullopt;
  return theta() / p;
}

std::string_view regime_name(Regime r) noexcept {
  switch (r) {
    case Regime::kCase1: return "case1";
    case Regime::kCase2: return "case2";
    case Regime::kBoundary: return "boundary";
    case Regime::kDegenerate: return "degenerate";
  }
  return "unknown";
}

std::string_view flag_text(BoundFlag flag) noexcept {
  switch (flag) {
    case kFlagDenominatorVanishes: return "denominator vanishes";
    case kFlagL1Zero: return "L1 zero forces a2 = 0 and a3 = 0";
    case kFlagUpsilonOneLimit: return "upsilon = 1 limit: phi -> 0";
    case kFlagStatedThresholdDiffers:
      return "stated threshold |Upsilon|/(2C2) selects the other branch";
    case kFlagCorollaryInconsistent:
      return "bi-starlike corollary value differs from the general bound";
  }
  return "unknown flag";
}

std::vector<std::string> flag_texts(unsigned flags) {
  std::vector<std::string> out;
  for (unsigned bit = 1; bit != 0 && bit <= flags; bit <<= 1) {
    if (flags & bit) out.emplace_back(flag_text(static_cast<BoundFlag>(bit)));
  }
  return out;
}

BoundReport bound_a2(const BoundInputs& in) {
  BoundReport r = base_report(in);
  if (in.p == 0.0) {
    r.value = 0.0;
    r.flags |= kFlagL1Zero;
    if (in.theta_vanishes()) r.flags |= kFlagDenominatorVanishes;
    return r;
  }
  if (in.theta_vanishes()) {
    r.value = kInf;
    r.unbounded = true;
    r.regime = Regime::kDegenerate;
    r.flags |= kFlagDenominatorVanishes;
    return r;
  }
  const double ap = std::abs(in.p);
  r.value = 2.0 * ap * std::sqrt(ap) / std::sqrt(std::abs(r.theta));
  return r;
}

BoundReport bound_a3(const BoundInputs& in) {
  BoundReport r = base_report(in);
  const double c1 = in.params.c1();
  r.value = in.p * in.p / (c1 * c1) + std::abs(in.p) / in.params.c2();
  if (in.p == 0.0) r.flags |= kFlagL1Zero;
  if (is_bistarlike(in.params) && in.p != 0.0) {
    r.flags |= kFlagCorollaryInconsistent;
  }
  return r;
}

double phi(const BoundInputs& in) {
  if (in.theta_vanishes()) {
    throw DegenerateError("phi undefined: coefficient-bound denominator vanishes");
  }
  return in.p * in.p * (1.0 - in.upsilon) / in.theta();
}

BoundReport fekete_szego_bound(const BoundInputs& in) {
  BoundReport r = base_report(in);
  const double c2 = in.params.c2();
  const double half = 1.0 / (2.0 * c2);
  const double ap = std::abs(in.p);
  const double gap = std::abs(in.upsilon - 1.0);

  if (in.p == 0.0) {
    r.value = 0.0;
    r.flags |= kFlagL1Zero;
    if (in.theta_vanishes()) r.flags |= kFlagDenominatorVanishes;
    return r;
  }
  if (in.theta_vanishes()) {
    r.flags |= kFlagDenominatorVanishes;
    if (gap <= kUpsilonOneTol) {
      r.value = ap / c2;
      r.phi = 0.0;
      r.flags |= kFlagUpsilonOneLimit;
    } else {
      r.value = kInf;
      r.unbounded = true;
      r.regime = Regime::kDegenerate;
    }
    return r;
  }

  const double ph = phi(in);
  r.phi = ph;
  r.value = 2.0 * ap * std::max(std::abs(ph), half);
  if (std::abs(std::abs(ph) - half) <= kBoundaryTol) {
    r.regime = Regime::kBoundary;
  } else {
    r.regime = std::abs(ph) < half ? Regime::kCase1 : Regime::kCase2;
  }

  const double consistent = half * std::abs(r.theta) / (ap * ap);
  const double stated = half * std::abs(*r.upsilon_x);
  r.consistent_threshold = consistent;
  r.stated_threshold = stated;
  if (r.regime != Regime::kBoundary && (gap <= consistent) != (gap <= stated)) {
    r.flags |= kFlagStatedThresholdDiffers;
  }
  if (is_bistarlike(in.params) && r.regime != Regime::kCase2) {
    r.flags |= kFlagCorollaryInconsistent;
  }
  return r;
}

ClassParams preset(std::string_view name, const PresetOverrides& overrides) {
  ClassParams c;
  c.lambda = overrides.lambda.value_or(1.0);
  c.mu = overrides.mu.value_or(0.0);
  c.delta = overrides.delta.value_or(0.0);
  c.alpha = overrides.alpha.value_or(0.0);

  auto pin = [&](double& slot, const std::optional<double>& ov, double value,
                 const char* field) {
    if (ov && *ov != value) {
      throw std::invalid_argument("preset '" + std::string(name) + "' fixes " +
                                  field);
    }
    slot = value;
  };

  if (name == "caglar") {
    pin(c.delta, overrides.delta, 0.0, "delta");
  } else if (name == "srivastava") {
    pin(c.delta, overrides.delta, 0.0, "delta");
    pin(c.mu, overrides.mu, 1.0, "mu");
    pin(c.lambda, overrides.lambda, 1.0, "lambda");
  } else if (name == "bistarlike") {
    pin(c.delta, overrides.delta, 0.0, "delta");
    pin(c.mu, overrides.mu, 0.0, "mu");
    pin(c.lambda, overrides.lambda, 1.0, "lambda");
  } else if (name == "mu1") {
    pin(c.mu, overrides.mu, 1.0, "mu");
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  c.validate();
  return c;
}

bool is_bistarlike(const ClassParams& params) noexcept {
  return params.lambda == 1.0 && params.mu == 0.0 && params.delta == 0.0;
}

StatedBistarlikeCorollary stated_bistarlike_corollary(double p, double q,
                                                      double upsilon) {
  const double ap = std::abs(p);
  const double aq = std::abs(q);
  StatedBistarlikeCorollary s;
  s.a2 = safe_ratio(2.0 * ap * std::sqrt(ap),
                    std::sqrt(std::abs(2.0 * p * p - 2.0 * (p * p + 2.0 * q))));
  s.a3 = p * p + ap;
  s.fs_case1 = ap;
  s.fs_case2 = safe_ratio(2.0 * ap * ap * ap * std::abs(1.0 - upsilon), 4.0 * aq);
  s.threshold = safe_ratio(aq, ap);
  return s;
}

}  // namespace pqlucas
