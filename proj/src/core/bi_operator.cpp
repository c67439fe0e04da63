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

#include "pqlucas/bi_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>
#include <vector>

namespace pqlucas {
namespace {

constexpr double kVanishing = 1e-14;

bool finite(double v) { return std::isfinite(v); }

// h(z)/z for a series with h_0 = 0.
TruncatedSeries shift_down(const TruncatedSeries& h, std::size_t order) {
  TruncatedSeries r(order);
  for (std::size_t k = 0; k <= order; ++k) r[k] = h[k + 1];
  return r;
}

// Values of a polynomial and its first two derivatives at one point.
struct Jet {
  Scalar value;
  Scalar d1;
  Scalar d2;
};

Jet evaluate_jet(std::span<const Scalar> c, Scalar z) {
  Jet j{0.0, 0.0, 0.0};
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    j.d2 = j.d2 * z + 2.0 * j.d1;
    j.d1 = j.d1 * z + j.value;
    j.value = j.value * z + *it;
  }
  return j;
}

struct PointResult {
  bool flagged = false;
  double real_part = 0.0;
};

PointResult evaluate_expression(const ClassParams& params, MembershipMode mode,
                                std::span<const Scalar> h, Scalar z) {
  const Jet j = evaluate_jet(h, z);
  Scalar value;
  switch (mode) {
    case MembershipMode::kStarlike:
      if (std::abs(j.value) < kVanishing) return {true, 0.0};
      value = z * j.d1 / j.value;
      break;
    case MembershipMode::kConvex:
      if (std::abs(j.d1) < kVanishing) return {true, 0.0};
      value = 1.0 + z * j.d2 / j.d1;
      break;
    case MembershipMode::kOperator: {
      const Scalar ratio = j.value / z;
      if (std::abs(ratio) < kVanishing) return {true, 0.0};
      // Principal branch for non-integer exponents.
      value = (1.0 - params.lambda) * std::pow(ratio, params.mu) +
              params.lambda * j.d1 * std::pow(ratio, params.mu - 1.0) +
              params.xi() * params.delta * z * j.d2;
      break;
    }
  }
  if (!std::isfinite(value.real())) return {true, 0.0};
  return {false, value.real()};
}

struct Extremum {
  double value = std::numeric_limits<double>::infinity();
  std::size_t index = std::numeric_limits<std::size_t>::max();
  std::size_t checked = 0;
  std::size_t flagged = 0;
};

}  // namespace

void ClassParams::validate() const {
  if (!finite(lambda) || !finite(mu) || !finite(delta) || !finite(alpha)) {
    throw std::invalid_argument("class parameters must be finite");
  }
  if (lambda < 1.0) throw std::invalid_argument("lambda must be >= 1");
  if (mu < 0.0) throw std::invalid_argument("mu must be >= 0");
  if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
  if (alpha < 0.0 || alpha >= 1.0) {
    throw std::invalid_argument("alpha must lie in [0, 1)");
  }
}

TruncatedSeries apply_operator_to_series(const ClassParams& params,
                                         const TruncatedSeries& h,
                                         std::size_t order) {
  if (h.order() < order + 1) {
    throw std::invalid_argument("operator input must carry order N + 1");
  }
  const TruncatedSeries ratio = shift_down(h, order);
  const TruncatedSeries dh = derivative(h).truncated(order);

  TruncatedSeries result =
      add(scale(pow_real(ratio, params.mu), 1.0 - params.lambda),
          scale(mul(dh, pow_real(ratio, params.mu - 1.0)), params.lambda));

  if (params.delta != 0.0 && order >= 1) {
    // z h''(z): coefficient k is (k+1) k h_{k+1}.
    TruncatedSeries zdd(order);
    for (std::size_t k = 1; k <= order; ++k) {
      zdd[k] = static_cast<double>((k + 1) * k) * h[k + 1];
    }
    result = add(result, scale(zdd, params.xi() * params.delta));
  }
  return result;
}

TruncatedSeries apply_operator(const ClassParams& params, const FunctionSpec& f,
                               std::size_t order) {
  return apply_operator_to_series(params, f.to_series(order + 1), order);
}

TruncatedSeries apply_operator_inverse_side(const ClassParams& params,
                                            const FunctionSpec& f,
                                            std::size_t order) {
  return apply_operator_to_series(params, revert_polynomial(f, order + 1),
                                  order);
}

CoefficientClosedForms closed_form_coefficients(const ClassParams& params,
                                                double a2, double a3) noexcept {
  const double lead = params.mu + 2.0 * params.lambda;
  const double two_lambda_one = 2.0 * params.lambda + 1.0;
  const double a3_factor = 1.0 + 6.0 * params.delta / two_lambda_one;
  const double c1 = params.c1();
  return {
      c1 * a2,
      lead * ((params.mu - 1.0) / 2.0 * a2 * a2 + a3_factor * a3),
      -c1 * a2,
      lead * (((params.mu + 3.0) / 2.0 + 12.0 * params.delta / two_lambda_one) *
                  a2 * a2 -
              a3_factor * a3),
  };
}

double IdentityResiduals::max_residual() const noexcept {
  return *std::max_element(residual.begin(), residual.end());
}

IdentityResiduals extract_coefficient_identities(const ClassParams& params,
                                                 const FunctionSpec& f) {
  if (f.a.size() < 2) {
    throw std::invalid_argument("coefficient identities need a2 and a3");
  }
  const FunctionSpec low{{f.a[0], f.a[1]}};
  const TruncatedSeries forward = apply_operator(params, low, 2);
  const TruncatedSeries inverse = apply_operator_inverse_side(params, low, 2);
  const CoefficientClosedForms cf =
      closed_form_coefficients(params, low.a[0], low.a[1]);

  IdentityResiduals out;
  out.pipeline = {forward[1].real(), forward[2].real(), inverse[1].real(),
                  inverse[2].real()};
  out.closed_form = {cf.z1, cf.z2, cf.w1, cf.w2};
  for (std::size_t i = 0; i < 4; ++i) {
    out.residual[i] = std::abs(out.pipeline[i] - out.closed_form[i]);
  }
  return out;
}

MembershipReport check_membership_realpart(const ClassParams& params,
                                           const FunctionSpec& f,
                                           const DiskGrid& grid,
                                           MembershipMode mode,
                                           unsigned threads) {
  if (!(grid.r_max > 0.0 && grid.r_max < 1.0) || grid.radii < 1 ||
      grid.angles < 1) {
    throw std::invalid_argument(
        "disk grid needs 0 < r_max < 1, radii >= 1, angles >= 1");
  }

  const TruncatedSeries forward = f.to_series(f.truncation());
  std::vector<TruncatedSeries> sides{forward};
  if (mode == MembershipMode::kOperator) {
    sides.push_back(revert_polynomial(f, std::max<std::size_t>(
                                             grid.inverse_order, 1)));
  }

  const auto radii = static_cast<std::size_t>(grid.radii);
  const auto angles = static_cast<std::size_t>(grid.angles);
  const std::size_t per_side = radii * angles;
  const std::size_t total = per_side * sides.size();

  auto scan = [&](std::size_t begin, std::size_t end) {
    Extremum e;
    for (std::size_t idx = begin; idx < end; ++idx) {
      const std::size_t side = idx / per_side;
      const std::size_t local = idx % per_side;
      const double r =
          grid.r_max * static_cast<double>(local / angles + 1) /
          static_cast<double>(radii);
      const double theta = 2.0 * std::numbers::pi *
                           static_cast<double>(local % angles) /
                           static_cast<double>(angles);
      const PointResult pr = evaluate_expression(
          params, mode, sides[side].coeffs(), std::polar(r, theta));
      if (pr.flagged) {
        ++e.flagged;
        continue;
      }
      ++e.checked;
      if (pr.real_part < e.value) {
        e.value = pr.real_part;
        e.index = idx;
      }
    }
    return e;
  };

  const unsigned workers =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(total)));
  std::vector<Extremum> partial(workers);
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = total * w / workers;
      const std::size_t end = total * (w + 1) / workers;
      if (workers == 1) {
        partial[w] = scan(begin, end);
      } else {
        pool.emplace_back([&, w, begin, end] { partial[w] = scan(begin, end); });
      }
    }
  }

  Extremum best;
  std::size_t checked = 0;
  std::size_t flagged = 0;
  for (const Extremum& e : partial) {
    checked += e.checked;
    flagged += e.flagged;
    if (e.value < best.value || (e.value == best.value && e.index < best.index)) {
      best.value = e.value;
      best.index = e.index;
    }
  }

  MembershipReport report;
  report.points_checked = checked;
  report.flagged_points = flagged;
  if (checked == 0) {
    // Nothing evaluable; report a failed check rather than a NaN margin.
    return report;
  }
  report.min_real_part = best.value;
  report.min_margin = best.value - params.alpha;
  report.pass = report.min_margin > 0.0;
  const std::size_t local = best.index % per_side;
  report.worst_on_inverse = best.index >= per_side;
  report.worst_point = std::polar(
      grid.r_max * static_cast<double>(local / angles + 1) /
          static_cast<double>(radii),
      2.0 * std::numbers::pi * static_cast<double>(local % angles) /
          static_cast<double>(angles));
  return report;
}

}  // namespace pqlucas
