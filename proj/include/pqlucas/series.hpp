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

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace pqlucas {

using Scalar = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 10;

// Raised when a series operation's precondition on the coefficients fails.
class SeriesError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Taylor coefficients c_0..c_N of a power series, truncated at z^N.
// The coefficient vector always holds exactly order()+1 entries.
class TruncatedSeries {
 public:
  // Zero series of the given order.
  explicit TruncatedSeries(std::size_t order = 0);
  // Takes c_0..c_N; an empty list is rejected.
  explicit TruncatedSeries(std::vector<Scalar> coeffs);

  static TruncatedSeries constant(Scalar c, std::size_t order);
  // The series z (zero at order 0).
  static TruncatedSeries identity(std::size_t order);
  static TruncatedSeries from_real(std::span<const double> coeffs);

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  Scalar& operator[](std::size_t k) { return coeffs_[k]; }
  std::span<const Scalar> coeffs() const noexcept { return coeffs_; }

  // Point evaluation of the truncated polynomial (Horner).
  Scalar evaluate(Scalar z) const noexcept;
  TruncatedSeries truncated(std::size_t order) const;

 private:
  std::vector<Scalar> coeffs_;
};

// Result orders follow min(order_s, order_t); nothing is extrapolated.
TruncatedSeries add(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries sub(const TruncatedSeries& s, const TruncatedSeries& t);
TruncatedSeries scale(const TruncatedSeries& s, Scalar c);
TruncatedSeries mul(const TruncatedSeries& s, const TruncatedSeries& t);
// Requires t_0 != 0.
TruncatedSeries divide(const TruncatedSeries& s, const TruncatedSeries& t);

// k*c_k shifted down one place; order drops by one.
TruncatedSeries derivative(const TruncatedSeries& s);

// Series logarithm and exponential. log requires c_0 = 1; exp requires
// c_0 = 0. Both use the first-order recurrences obtained from
// (log s)' = s'/s and (exp t)' = t' exp t.
TruncatedSeries log_series(const TruncatedSeries& s);
TruncatedSeries exp_series(const TruncatedSeries& t);

// s^e = exp(e log s) for a series with unit constant term.
TruncatedSeries pow_real(const TruncatedSeries& s, double e);

// outer(inner(z)) by Horner's scheme. Requires inner_0 = 0.
TruncatedSeries compose(const TruncatedSeries& outer,
                        const TruncatedSeries& inner);

// Normalized function f(z) = z + a_2 z^2 + ... + a_M z^M. a holds a_2..a_M;
// a_0 = 0 and a_1 = 1 are implicit.
struct FunctionSpec {
  std::vector<double> a;

  // Highest index M carried (1 for f(z) = z).
  std::size_t truncation() const noexcept { return a.size() + 1; }
  // a_n for any n >= 0, zero beyond the truncation.
  double coefficient(std::size_t n) const noexcept;

  // f as a series of the given order.
  TruncatedSeries to_series(std::size_t order) const;
  // f(z)/z as a series of the given order (constant term 1).
  TruncatedSeries over_z(std::size_t order) const;
};

// Compositional inverse g of f with g(f(z)) = z + O(z^{M+1}); the series
// returned has order M. Requires 1 <= M <= f.truncation() + 1.
TruncatedSeries revert_series(const FunctionSpec& f, std::size_t order);

// Same, treating f as the polynomial it spells out (no bound on order).
TruncatedSeries revert_polynomial(const FunctionSpec& f, std::size_t order);

// Termwise integral of f(t)/t: a_n -> a_n / n.
FunctionSpec alexander_transform(const FunctionSpec& f);

}  // namespace pqlucas
