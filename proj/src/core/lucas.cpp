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

#include "pqlucas/lucas.hpp"

#include <stdexcept>

namespace pqlucas {

double eval_poly(std::span<const double> coeffs, double x) noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

LucasSequence lucas_sequence(double p, double q, int max_index) {
  if (max_index < 0) {
    throw std::invalid_argument("lucas_sequence needs K >= 0");
  }
  LucasSequence seq;
  seq.values.resize(static_cast<std::size_t>(max_index) + 1);
  seq.values[0] = 2.0;
  if (max_index >= 1) seq.values[1] = p;
  for (std::size_t k = 2; k < seq.values.size(); ++k) {
    seq.values[k] = p * seq.values[k - 1] + q * seq.values[k - 2];
  }
  return seq;
}

LucasSequence lucas_sequence(const PolyPair& pp, int max_index) {
  return lucas_sequence(pp.p(), pp.q(), max_index);
}

TruncatedSeries generating_series(double p, double q, std::size_t order) {
  TruncatedSeries num(order);
  TruncatedSeries den(order);
  num[0] = 2.0;
  den[0] = 1.0;
  if (order >= 1) {
    num[1] = -p;
    den[1] = -p;
  }
  if (order >= 2) den[2] = -q;
  return divide(num, den);
}

TruncatedSeries generating_series(const PolyPair& pp, std::size_t order) {
  return generating_series(pp.p(), pp.q(), order);
}

}  // namespace pqlucas
