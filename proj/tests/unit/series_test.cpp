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

#include <gtest/gtest.h>

#include <vector>

#include "test_support.hpp"

namespace pqlucas {
namespace {

using testing::Draw;

TruncatedSeries real_series(std::vector<double> c) {
  return TruncatedSeries::from_real(c);
}

void expect_coeffs(const TruncatedSeries& s, const std::vector<double>& want,
                   double tol = 1e-12) {
  ASSERT_EQ(s.order() + 1, want.size());
  for (std::size_t k = 0; k < want.size(); ++k) {
    EXPECT_NEAR(s[k].real(), want[k], tol) << "k=" << k;
    EXPECT_NEAR(s[k].imag(), 0.0, tol) << "k=" << k;
  }
}

TruncatedSeries random_series(Draw& d, std::size_t order) {
  std::vector<Scalar> c(order + 1);
  for (auto& v : c) v = {d(-1, 1), d(-1, 1)};
  return TruncatedSeries(c);
}

double max_diff(const TruncatedSeries& a, const TruncatedSeries& b) {
  double m = 0.0;
  for (std::size_t k = 0; k <= std::min(a.order(), b.order()); ++k) {
    m = std::max(m, std::abs(a[k] - b[k]));
  }
  return m;
}

TEST(SeriesAdd, Examples) {
  expect_coeffs(add(real_series({1, 1}), real_series({1, -1})), {2, 0});
  const auto s = real_series({0.3, -2, 5});
  expect_coeffs(add(TruncatedSeries(2), s), {0.3, -2, 5});
  expect_coeffs(add(real_series({2, 1, 3}), real_series({0, 1, -1})), {2, 2, 2});
}

TEST(SeriesAdd, OrderIsMinimum) {
  EXPECT_EQ(add(TruncatedSeries(5), TruncatedSeries(3)).order(), 3u);
  EXPECT_EQ(mul(TruncatedSeries(2), TruncatedSeries(7)).order(), 2u);
}

TEST(SeriesMul, Examples) {
  expect_coeffs(mul(real_series({1, 1, 0}), real_series({1, -1, 0})), {1, 0, -1});
  const auto s = real_series({0.5, 0.25, -1});
  expect_coeffs(mul(s, TruncatedSeries::constant(1.0, 2)), {0.5, 0.25, -1});
  // (1+z+z^2)^2 = 1 + 2z + 3z^2 + ... by hand convolution.
  const auto t = real_series({1, 1, 1});
  expect_coeffs(mul(t, t), {1, 2, 3});
}

TEST(SeriesRing, AxiomsOnRandomDraws) {
  Draw d(11);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_series(d, 8);
    const auto b = random_series(d, 8);
    const auto c = random_series(d, 8);
    EXPECT_LE(max_diff(add(a, b), add(b, a)), 1e-12);
    EXPECT_LE(max_diff(mul(a, b), mul(b, a)), 1e-12);
    EXPECT_LE(max_diff(add(add(a, b), c), add(a, add(b, c))), 1e-12);
    EXPECT_LE(max_diff(mul(mul(a, b), c), mul(a, mul(b, c))), 1e-12);
    EXPECT_LE(max_diff(mul(a, add(b, c)), add(mul(a, b), mul(a, c))), 1e-12);
  }
}

TEST(SeriesDivide, InvertsMultiplication) {
  Draw d(5);
  for (int trial = 0; trial < 20; ++trial) {
    auto t = random_series(d, 6);
    t[0] += 2.0;
    const auto s = random_series(d, 6);
    EXPECT_LE(max_diff(mul(divide(s, t), t), s), 1e-12);
  }
  EXPECT_THROW(divide(TruncatedSeries(2), TruncatedSeries(2)), SeriesError);
}

TEST(SeriesDerivative, Examples) {
  expect_coeffs(derivative(real_series({0, 1, 2, 3})), {1, 4, 9});
  expect_coeffs(derivative(TruncatedSeries::constant(5.0, 3)), {0, 0, 0});
}

TEST(SeriesDerivative, SecondDerivativeOfCubic) {
  const double a2 = 0.7;
  const double a3 = -0.3;
  const auto f = real_series({0, 1, a2, a3});
  expect_coeffs(derivative(derivative(f)), {2 * a2, 6 * a3});
}

TEST(SeriesDerivative, OrderZeroRejected) {
  try {
    derivative(TruncatedSeries::constant(1.0, 0));
    FAIL() << "expected SeriesError";
  } catch (const SeriesError& e) {
    EXPECT_STREQ(e.what(), "cannot differentiate constant at order 0");
  }
}

TEST(SeriesPowReal, Examples) {
  expect_coeffs(pow_real(real_series({1, 1, 0, 0}), 2.0), {1, 2, 1, 0});
  expect_coeffs(pow_real(real_series({1, 0.4, -0.2}), 0.0), {1, 0, 0});
}

TEST(SeriesPowReal, MatchesBinomialSeries) {
  // 1 + mu u + mu(mu-1)/2 u^2 with u = a2 z + a3 z^2, read off through z^2.
  const double mu = 0.5, a2 = 0.2, a3 = 0.1;
  const double c1 = mu * a2;
  const double c2 = mu * a3 + mu * (mu - 1.0) / 2.0 * a2 * a2;
  EXPECT_NEAR(c1, 0.1, 1e-15);
  EXPECT_NEAR(c2, 0.045, 1e-15);
  expect_coeffs(pow_real(real_series({1, a2, a3}), mu), {1, 0.1, 0.045}, 1e-14);
}

TEST(SeriesPowReal, IntegerPowerEqualsRepeatedProduct) {
  Draw d(23);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = random_series(d, 9);
    s[0] = 1.0;
    TruncatedSeries prod = TruncatedSeries::constant(1.0, 9);
    for (int m = 0; m <= 5; ++m) {
      const auto got = pow_real(s, m);
      for (std::size_t k = 0; k <= 9; ++k) {
        const double scale = std::max(1.0, std::abs(prod[k]));
        EXPECT_LE(std::abs(got[k] - prod[k]) / scale, 1e-11)
            << "m=" << m << " k=" << k;
      }
      prod = mul(prod, s);
    }
  }
}

TEST(SeriesPowReal, RejectsNonUnitConstant) {
  try {
    pow_real(real_series({2, 1}), 0.5);
    FAIL() << "expected SeriesError";
  } catch (const SeriesError& e) {
    EXPECT_STREQ(e.what(), "pow_real requires unit constant term");
  }
}

TEST(SeriesLogExp, RoundTrip) {
  Draw d(3);
  auto s = random_series(d, 10);
  s[0] = 1.0;
  EXPECT_LE(max_diff(exp_series(log_series(s)), s), 1e-12);
}

TEST(SeriesCompose, Examples) {
  // 1/(1-u) at u = z^2.
  const auto geometric = real_series({1, 1, 1, 1, 1});
  expect_coeffs(compose(geometric, real_series({0, 0, 1, 0, 0})), {1, 0, 1, 0, 1});
  expect_coeffs(compose(real_series({3, 2, 1}), TruncatedSeries(2)), {3, 0, 0});
}

TEST(SeriesCompose, SecondCoefficientPattern) {
  const double r1 = 0.6, r2 = -0.35;
  const auto outer = real_series({2, 1, 3});
  const auto inner = real_series({0, r1, r2});
  const auto c = compose(outer, inner);
  EXPECT_NEAR(c[2].real(), r2 + 3 * r1 * r1, 1e-15);
  EXPECT_NEAR(c[1].real(), r1, 1e-15);
}

TEST(SeriesCompose, RejectsNonzeroInnerConstant) {
  try {
    compose(real_series({1, 1}), real_series({0.1, 1}));
    FAIL() << "expected SeriesError";
  } catch (const SeriesError& e) {
    EXPECT_STREQ(e.what(), "composition requires inner(0)=0");
  }
}

TEST(RevertSeries, ClosedFormAtUnitCoefficients) {
  const auto g = revert_series(FunctionSpec{{1, 1, 1}}, 4);
  expect_coeffs(g, {0, 1, -1, 1, -1});
}

TEST(RevertSeries, IdentityStaysIdentity) {
  expect_coeffs(revert_series(FunctionSpec{{0, 0, 0}}, 4), {0, 1, 0, 0, 0});
}

TEST(RevertSeries, ComposesBackToIdentity) {
  const FunctionSpec f{{0.5, 0.25}};
  const auto g = revert_series(f, 3);
  EXPECT_NEAR(g[3].real(), 0.25, 1e-15);
  const auto gf = compose(g, f.to_series(3));
  expect_coeffs(gf, {0, 1, 0, 0}, 1e-12);
}

TEST(RevertSeries, RandomDrawsMatchClosedForms) {
  Draw d(101);
  for (int trial = 0; trial < 100; ++trial) {
    const double a2 = d(-0.3, 0.3), a3 = d(-0.3, 0.3), a4 = d(-0.3, 0.3);
    const FunctionSpec f{{a2, a3, a4, d(-0.3, 0.3), d(-0.3, 0.3)}};
    const auto g = revert_series(f, 6);
    EXPECT_NEAR(g[2].real(), -a2, 1e-12);
    EXPECT_NEAR(g[3].real(), 2 * a2 * a2 - a3, 1e-12);
    EXPECT_NEAR(g[4].real(), -(5 * a2 * a2 * a2 - 5 * a2 * a3 + a4), 1e-12);
    const auto gf = compose(g, f.to_series(6));
    const auto fg = compose(f.to_series(6), g);
    for (std::size_t k = 0; k <= 6; ++k) {
      const double want = k == 1 ? 1.0 : 0.0;
      EXPECT_LE(std::abs(gf[k] - want), 1e-10);
      EXPECT_LE(std::abs(fg[k] - want), 1e-10);
    }
  }
}

TEST(RevertSeries, OrderPrecondition) {
  const FunctionSpec f{{0.1, 0.2}};
  EXPECT_NO_THROW(revert_series(f, 4));
  EXPECT_THROW(revert_series(f, 5), std::invalid_argument);
  EXPECT_THROW(revert_series(f, 0), std::invalid_argument);
}

TEST(AlexanderTransform, Examples) {
  const auto t = alexander_transform(FunctionSpec{{1, 1}});
  ASSERT_EQ(t.a.size(), 2u);
  EXPECT_DOUBLE_EQ(t.a[0], 0.5);
  EXPECT_DOUBLE_EQ(t.a[1], 1.0 / 3.0);

  const auto zero = alexander_transform(FunctionSpec{{0, 0, 0}});
  for (double v : zero.a) EXPECT_EQ(v, 0.0);

  FunctionSpec koebe;
  for (int n = 2; n <= 12; ++n) koebe.a.push_back(n);
  for (double v : alexander_transform(koebe).a) EXPECT_DOUBLE_EQ(v, 1.0);
}

TEST(FunctionSpec, NormalizationIsImplicit) {
  const FunctionSpec f{{0.4}};
  const auto s = f.to_series(3);
  expect_coeffs(s, {0, 1, 0.4, 0});
  expect_coeffs(f.over_z(2), {1, 0.4, 0});
  EXPECT_EQ(f.truncation(), 2u);
}

}  // namespace
}  // namespace pqlucas
