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

#include <cstddef>
#include <span>
#include <vector>

#include "pqlucas/series.hpp"

namespace pqlucas {

// Horner evaluation of c_0 + c_1 x + ... (ascending coefficients).
double eval_poly(std::span<const double> coeffs, double x) noexcept;

// Real polynomials p(x), q(x) together with the point x they are read at.
struct PolyPair {
  std::vector<double> p_coeffs;
  std::vector<double> q_coeffs;
  double x = 0.0;

  double p() const noexcept { return eval_poly(p_coeffs, x); }
  double q() const noexcept { return eval_poly(q_coeffs, x); }
};

// L_0..L_K of the (p,q)-Lucas sequence at a fixed x.
struct LucasSequence {
  std::vector<double> values;

  std::size_t max_index() const noexcept { return values.size() - 1; }
  double operator[](std::size_t k) const { return values[k]; }
};

// L_0 = 2, L_1 = p, L_k = p L_{k-1} + q L_{k-2}.
LucasSequence lucas_sequence(double p, double q, int max_index);
LucasSequence lucas_sequence(const PolyPair& pp, int max_index);

// Taylor expansion of (2 - p z) / (1 - p z - q z^2) through z^N, indexed
// from k = 0 so that coefficient k is L_k.
TruncatedSeries generating_series(double p, double q, std::size_t order);
TruncatedSeries generating_series(const PolyPair& pp, std::size_t order);

}  // namespace pqlucas
