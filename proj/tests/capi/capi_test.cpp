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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "pqlucas/pqlucas.h"

namespace {

struct SeriesDeleter {
  void operator()(pql_series* s) const { pql_series_destroy(s); }
};
using Series = std::unique_ptr<pql_series, SeriesDeleter>;

Series make(const std::vector<double>& re) {
  pql_series* s = nullptr;
  EXPECT_EQ(pql_series_create(re.data(), nullptr, re.size(), &s), PQL_OK);
  return Series(s);
}

std::vector<double> coeffs(const pql_series* s) {
  std::vector<double> c(pql_series_order(s) + 1);
  EXPECT_EQ(pql_series_real_coeffs(s, c.data(), c.size()), PQL_OK);
  return c;
}

TEST(CApi, VersionAndStatusStrings) {
  EXPECT_STRNE(pql_version(), "");
  EXPECT_STREQ(pql_status_string(PQL_OK), "ok");
  EXPECT_STRNE(pql_status_string(PQL_ERR_DEGENERATE), pql_status_string(PQL_ERR_DOMAIN));
}

TEST(CApi, NullPointersAreRejected) {
  EXPECT_EQ(pql_series_create(nullptr, nullptr, 3, nullptr), PQL_ERR_NULL_POINTER);
  pql_bound_report r{};
  EXPECT_EQ(pql_bound_a2(nullptr, &r), PQL_ERR_NULL_POINTER);
  EXPECT_EQ(pql_preset(nullptr, nullptr, nullptr), PQL_ERR_NULL_POINTER);
  pql_series_destroy(nullptr);
}

TEST(CApi, SeriesArithmeticRoundTrip) {
  Series a = make({1, 2, 3});
  Series b = make({0, 1, -1});
  pql_series* sum = nullptr;
  pql_series* prod = nullptr;
  ASSERT_EQ(pql_series_add(a.get(), b.get(), &sum), PQL_OK);
  ASSERT_EQ(pql_series_mul(a.get(), b.get(), &prod), PQL_OK);
  Series s(sum), p(prod);
  EXPECT_EQ(coeffs(s.get()), (std::vector<double>{1, 3, 2}));
  // (1 + 2z + 3z^2)(z - z^2) = z + z^2 + ...
  EXPECT_EQ(coeffs(p.get()), (std::vector<double>{0, 1, 1}));

  double re = 0, im = 0;
  EXPECT_EQ(pql_series_coeff(a.get(), 2, &re, &im), PQL_OK);
  EXPECT_EQ(re, 3);
  EXPECT_EQ(im, 0);
  EXPECT_EQ(pql_series_coeff(a.get(), 3, &re, &im), PQL_ERR_INVALID_ARGUMENT);
}

TEST(CApi, DomainErrorsCarryMessage) {
  Series a = make({2, 1});
  pql_series* out = nullptr;
  EXPECT_EQ(pql_series_pow_real(a.get(), 0.5, &out), PQL_ERR_DOMAIN);
  EXPECT_EQ(out, nullptr);
  EXPECT_NE(std::string(pql_last_error()).find("unit constant"), std::string::npos);

  Series inner = make({1, 1});
  EXPECT_EQ(pql_series_compose(a.get(), inner.get(), &out), PQL_ERR_DOMAIN);
}

TEST(CApi, BufferTooSmall) {
  Series a = make({1, 2, 3});
  double buf[2];
  EXPECT_EQ(pql_series_real_coeffs(a.get(), buf, 2), PQL_ERR_BUFFER_TOO_SMALL);
  double lucas[3];
  EXPECT_EQ(pql_lucas_sequence(1, 1, 5, lucas, 3), PQL_ERR_BUFFER_TOO_SMALL);
}

TEST(CApi, ReversionMatchesCoefficientInversion) {
  const double a[3] = {0.2, -0.1, 0.05};
  pql_series* g = nullptr;
  ASSERT_EQ(pql_revert_series(a, 3, 4, &g), PQL_OK);
  Series gs(g);
  const auto b = coeffs(g);
  EXPECT_NEAR(b[2], -0.2, 1e-15);
  EXPECT_NEAR(b[3], 2 * 0.04 + 0.1, 1e-15);
  EXPECT_EQ(pql_revert_series(a, 3, 9, &g), PQL_ERR_INVALID_ARGUMENT);
}

TEST(CApi, LucasAndGeneratingSeriesAgree) {
  double rec[9];
  ASSERT_EQ(pql_lucas_sequence(1.5, -0.5, 8, rec, 9), PQL_OK);
  pql_series* g = nullptr;
  ASSERT_EQ(pql_lucas_generating_series(1.5, -0.5, 8, &g), PQL_OK);
  Series gs(g);
  const auto c = coeffs(g);
  for (int k = 0; k <= 8; ++k) EXPECT_NEAR(rec[k], c[k], 1e-12) << k;
  const double poly[2] = {0, 1};
  EXPECT_EQ(pql_eval_poly(poly, 2, 0.7), 0.7);
}

TEST(CApi, PresetsAndOverrides) {
  pql_class_params c{};
  ASSERT_EQ(pql_preset("bistarlike", nullptr, &c), PQL_OK);
  EXPECT_EQ(c.lambda, 1);
  EXPECT_EQ(c.mu, 0);
  pql_preset_overrides ov{};
  ov.has_lambda = 1;
  ov.lambda = 2;
  EXPECT_EQ(pql_preset("bistarlike", &ov, &c), PQL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(pql_preset("nonexistent", nullptr, &c), PQL_ERR_INVALID_ARGUMENT);

  double xi = 0, c1 = 0, c2 = 0;
  const pql_class_params p{2, 1, 0.5, 0};
  ASSERT_EQ(pql_params_derived(&p, &xi, &c1, &c2), PQL_OK);
  EXPECT_DOUBLE_EQ(xi, 1.0);
  EXPECT_DOUBLE_EQ(c1, 4.0);
  EXPECT_DOUBLE_EQ(c2, 6.0);
  const pql_class_params bad{0.5, 0, 0, 0};
  EXPECT_EQ(pql_params_validate(&bad), PQL_ERR_INVALID_ARGUMENT);
}

TEST(CApi, OperatorIdentityResidualsVanish) {
  const pql_class_params p{1.7, 0.6, 1.2, 0};
  pql_identity_report r{};
  ASSERT_EQ(pql_coefficient_identities(&p, 0.4, -0.3, &r), PQL_OK);
  EXPECT_LE(r.max_residual, 1e-12);
}

TEST(CApi, DegenerateInputsMapToStatusesAndFlags) {
  // Bi-starlike preset with q = 0 makes the radicand denominator vanish.
  pql_bound_inputs in{{1, 0, 0, 0}, 1.0, 0.0, 0.5};
  pql_bound_report r{};
  ASSERT_EQ(pql_bound_a2(&in, &r), PQL_OK);
  EXPECT_TRUE(r.unbounded);
  EXPECT_TRUE(std::isinf(r.value));
  EXPECT_EQ(r.regime, PQL_REGIME_DEGENERATE);
  EXPECT_TRUE(r.flags & PQL_FLAG_DENOMINATOR_VANISHES);
  double phi = 0;
  EXPECT_EQ(pql_phi(&in, &phi), PQL_ERR_DEGENERATE);

  pql_schwarz_sample s{0.1, 0.2, -0.1, 0.3};
  pql_reconstructed rec{};
  EXPECT_EQ(pql_reconstruct(&in, &s, &rec), PQL_ERR_DEGENERATE);

  in.p = 0;
  ASSERT_EQ(pql_bound_a3(&in, &r), PQL_OK);
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.flags & PQL_FLAG_L1_ZERO);
  EXPECT_STRNE(pql_flag_text(PQL_FLAG_L1_ZERO), "");
}

TEST(CApi, RandomDrawsAreSeeded) {
  std::vector<pql_bound_inputs> a(5), b(5), c(5);
  ASSERT_EQ(pql_random_draws(11, 5, a.data()), PQL_OK);
  ASSERT_EQ(pql_random_draws(11, 5, b.data()), PQL_OK);
  ASSERT_EQ(pql_random_draws(12, 5, c.data()), PQL_OK);
  EXPECT_EQ(std::memcmp(a.data(), b.data(), sizeof(pql_bound_inputs) * 5), 0);
  EXPECT_NE(a[0].p, c[0].p);
}

TEST(CApi, VerifyReportIsThreadIndependent) {
  pql_bound_inputs in{};
  ASSERT_EQ(pql_random_draws(3, 1, &in), PQL_OK);
  pql_verify_report one{}, four{};
  ASSERT_EQ(pql_verify_bounds(&in, 9, PQL_MODE_PAPER, 1, &one), PQL_OK);
  ASSERT_EQ(pql_verify_bounds(&in, 9, PQL_MODE_PAPER, 4, &four), PQL_OK);
  EXPECT_TRUE(one.pass);
  for (int f = 0; f < 3; ++f) {
    EXPECT_EQ(one.sweeps[f].supremum, four.sweeps[f].supremum);
    EXPECT_EQ(one.sweeps[f].argmax.r1, four.sweeps[f].argmax.r1);
    EXPECT_EQ(one.sweeps[f].points, 9u * 9u * 9u);
  }
  EXPECT_EQ(pql_verify_bounds(&in, 1, PQL_MODE_PAPER, 1, &one), PQL_ERR_INVALID_ARGUMENT);
}

}  // namespace
