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

#include "pqlucas/series.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace pqlucas {
namespace {

constexpr double kUnitTolerance = 1e-12;

std::size_t min_order(const TruncatedSeries& s, const TruncatedSeries& t) {
  return std::min(s.order(), t.order());
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<Scalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("series needs at least one coefficient");
  }
}

TruncatedSeries TruncatedSeries::constant(Scalar c, std::size_t order) {
  TruncatedSeries s(order);
  s[0] = c;
  return s;
}

TruncatedSeries TruncatedSeries::identity(std::size_t order) {
  TruncatedSeries s(order);
  if (order >= 1) s[1] = 1.0;
  return s;
}

TruncatedSeries TruncatedSeries::from_real(std::span<const double> coeffs) {
  return TruncatedSeries(std::vector<Scalar>(coeffs.begin(), coeffs.end()));
}

Scalar TruncatedSeries::evaluate(Scalar z) const noexcept {
  Scalar acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  const std::size_t n = std::min(order, this->order());
  return TruncatedSeries(
      std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + n + 1));
}

TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t) {
  TruncatedSeries r(min_order(s, t));
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = s[k] + t[k];
  return r;
}

TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t) {
  TruncatedSeries r(min_order(s, t));
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = s[k] - t[k];
  return r;
}

TruncatedSeries scale(const TruncatedSeries& s, Scalar c) {
  TruncatedSeries r(s.order());
  for (std::size_t k = 0; k <= r.order(); ++k) r[k] = c * s[k];
  return r;
}

TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t) {
  TruncatedSeries r(min_order(s, t));
  for (std::size_t n = 0; n <= r.order(); ++n) {
    Scalar acc = 0.0;
    for (std::size_t k = 0; k <= n; ++k) acc += s[k] * t[n - k];
    r[n] = acc;
  }
  return r;
}

TruncatedSeries divide(const TruncatedSeries& s, const TruncatedSeries& t) {
  if (t[0] == Scalar(0.0)) {
    throw SeriesError("series division requires a nonzero constant term");
  }
  TruncatedSeries r(min_order(s, t));
  for (std::size_t n = 0; n <= r.order(); ++n) {
    Scalar acc = s[n];
    for (std::size_t k = 1; k <= n; ++k) acc -= t[k] * r[n - k];
    r[n] = acc / t[0];
  }
  return r;
}

TruncatedSeries derivative(const TruncatedSeries& s) {
  if (s.order() == 0) {
    throw SeriesError("cannot differentiate constant at order 0");
  }
  TruncatedSeries r(s.order() - 1);
  for (std::size_t k = 0; k <= r.order(); ++k) {
    r[k] = static_cast<double>(k + 1) * s[k + 1];
  }
  return r;
}

TruncatedSeries log_series(const TruncatedSeries& s) {
  if (std::abs(s[0] - Scalar(1.0)) > kUnitTolerance) {
    throw SeriesError("series log requires unit constant term");
  }
  // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
  TruncatedSeries l(s.order());
  for (std::size_t n = 1; n <= s.order(); ++n) {
    Scalar acc = static_cast<double>(n) * s[n];
    for (std::size_t k = 1; k < n; ++k) {
      acc -= static_cast<double>(k) * l[k] * s[n - k];
    }
    l[n] = acc / static_cast<double>(n);
  }
  return l;
}

TruncatedSeries exp_series(const TruncatedSeries& t) {
  if (std::abs(t[0]) > kUnitTolerance) {
    throw SeriesError("series exp requires zero constant term");
  }
  // n e_n = sum_{k=1}^{n} k t_k e_{n-k}
  TruncatedSeries e(t.order());
  e[0] = 1.0;
  for (std::size_t n = 1; n <= t.order(); ++n) {
    Scalar acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
      acc += static_cast<double>(k) * t[k] * e[n - k];
    }
    e[n] = acc / static_cast<double>(n);
  }
  return e;
}

TruncatedSeries pow_real(const TruncatedSeries& s, double e) {
  if (std::abs(s[0] - Scalar(1.0)) > kUnitTolerance) {
    throw SeriesError("pow_real requires unit constant term");
  }
  if (e == 0.0) return TruncatedSeries::constant(1.0, s.order());
  return exp_series(scale(log_series(s), e));
}

TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner) {
  if (inner[0] != Scalar(0.0)) {
    throw SeriesError("composition requires inner(0)=0");
  }
  const std::size_t order = min_order(outer, inner);
  const TruncatedSeries in = inner.truncated(order);
  TruncatedSeries acc = TruncatedSeries::constant(outer[order], order);
  for (std::size_t k = order; k-- > 0;) {
    acc = mul(acc, in);
    acc[0] += outer[k];
  }
  return acc;
}

double FunctionSpec::coefficient(std::size_t n) const noexcept {
  if (n == 1) return 1.0;
  if (n < 2 || n - 2 >= a.size()) return 0.0;
  return a[n - 2];
}

TruncatedSeries FunctionSpec::to_series(std::size_t order) const {
  TruncatedSeries s(order);
  for (std::size_t n = 1; n <= order; ++n) s[n] = coefficient(n);
  return s;
}

TruncatedSeries FunctionSpec::over_z(std::size_t order) const {
  TruncatedSeries s(order);
  for (std::size_t n = 0; n <= order; ++n) s[n] = coefficient(n + 1);
  return s;
}

TruncatedSeries revert_polynomial(const FunctionSpec& f, std::size_t order) {
  // The w^k coefficient of f(g(w)) is g_k plus terms in g_2..g_{k-1}, so
  // each pass fixes one more coefficient.
  const TruncatedSeries fs = f.to_series(order);
  TruncatedSeries g = TruncatedSeries::identity(order);
  for (std::size_t k = 2; k <= order; ++k) {
    const TruncatedSeries fg = compose(fs, g);
    g[k] -= fg[k];
  }
  return g;
}

TruncatedSeries revert_series(const FunctionSpec& f, std::size_t order) {
  if (order < 1 || order > f.truncation() + 1) {
    throw std::invalid_argument(
        "revert_series order must lie in [1, truncation + 1], got " +
        std::to_string(order));
  }
  return revert_polynomial(f, order);
}

FunctionSpec alexander_transform(const FunctionSpec& f) {
  FunctionSpec out = f;
  for (std::size_t i = 0; i < out.a.size(); ++i) {
    out.a[i] /= static_cast<double>(i + 2);
  }
  return out;
}

}  // namespace pqlucas
