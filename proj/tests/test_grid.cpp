// Copyright 2026 The hcm-gabor Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "hcm/grid.hpp"
#include "test_util.hpp"

namespace hcm {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(Grid, MakeGrid) {
  const GridSpec a = make_grid(4, 0, 2);
  EXPECT_EQ(a.cells(), 8);
  EXPECT_DOUBLE_EQ(a.width(), 0.25);
  EXPECT_EQ(make_grid(1, 0, 1).cells(), 1);
  const GridSpec c = make_grid(3, -1, 1);
  EXPECT_EQ(c.cells(), 6);
  EXPECT_DOUBLE_EQ(c.left(0), -1.0);
}

TEST(Grid, MakeGridErrors) {
  EXPECT_EQ(code_of([] { make_grid(0, 0, 1); }), ErrorCode::kInvalidBounds);
  EXPECT_EQ(code_of([] { make_grid(4, 1, 1); }), ErrorCode::kInvalidBounds);
  EXPECT_EQ(code_of([] { make_grid(4, 2, 1); }), ErrorCode::kInvalidBounds);
}

TEST(Grid, CommonRefinement) {
  const GridSpec g = common_grid(make_grid(4, 0, 2), make_grid(6, -1, 1));
  EXPECT_EQ(g, make_grid(12, -1, 2));
}

TEST(Grid, SampledFunctionLengthChecked) {
  EXPECT_THROW(SampledFunction(make_grid(2, 0, 1), std::vector<Complex>(3)), Error);
}

TEST(Grid, TranslateExamples) {
  const SampledFunction b = box(1);
  const SampledFunction moved = translate(b, Rational(1));
  EXPECT_EQ(moved.grid(), make_grid(1, 1, 2));
  EXPECT_EQ(moved[0], Complex(1.0));

  const SampledFunction half = translate(box(2), Rational(1, 2));
  EXPECT_EQ(half.grid(), make_grid(2, 0, 2));
  EXPECT_EQ(half.at_global(0), Complex(0.0));
  EXPECT_EQ(half.at_global(1), Complex(1.0));
  EXPECT_EQ(half.at_global(2), Complex(1.0));
  EXPECT_EQ(half.at_global(3), Complex(0.0));

  EXPECT_EQ(code_of([] { translate(box(2), Rational(1, 3)); }), ErrorCode::kIncompatibleShift);
}

TEST(Grid, ModulateExamples) {
  std::mt19937_64 rng(1);
  const SampledFunction f = testing::random_step(rng, 4, -1, 2);
  EXPECT_EQ(max_abs_diff(modulate(f, Rational(0)), f), 0.0);

  const SampledFunction m = modulate(box(4), Rational(1));
  const Complex expected[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int j = 0; j < 4; ++j) EXPECT_EQ(m[j], expected[j]) << j;
}

TEST(Grid, InnerProductExamples) {
  EXPECT_EQ(l2_inner(box(1), box(1)), Complex(1.0));
  EXPECT_EQ(l2_inner(box(1), box(1, 1, 2)), Complex(0.0));
  EXPECT_EQ(l2_inner(box(4, 0, 2), box(4, 1, 3)), Complex(1.0));
  // different rates meet on the common refinement
  EXPECT_NEAR(std::abs(l2_inner(box(2, 0, 2), indicator(3, Rational(1, 3), Rational(4, 3))) - 1.0), 0.0, 1e-15);
}

TEST(Grid, NormExamples) {
  EXPECT_EQ(l2_norm(box(8)), 1.0);
  EXPECT_EQ(max_abs_diff(pointwise_mul(box(4), box(4)), box(4)), 0.0);
  EXPECT_EQ(sup_norm(scale(box(4), 2.0)), 2.0);
  EXPECT_EQ(sup_norm(conjugate(scale(box(2), Complex(0, 3)))), 3.0);
  EXPECT_EQ(max_abs_diff(add(box(2), box(2, 1, 2)), box(2, 0, 2)), 0.0);
  EXPECT_EQ(max_abs_diff(subtract(box(2, 0, 2), box(2, 1, 2)), box(2)), 0.0);
}

TEST(Grid, FourierExamples) {
  EXPECT_NEAR(std::abs(fourier_quadrature(box(1), 0.0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(fourier_quadrature(box(1), 1.0)), 0.0, 1e-15);
  // finer grid, same function
  EXPECT_NEAR(std::abs(fourier_quadrature(box(16), 1.0)), 0.0, 1e-14);
  // closed form (1 − e^{−2πiv})/(2πiv) of the box
  for (double v : {0.3, -1.7, 2.5, 7.25}) {
    const Complex expected = (1.0 - std::polar(1.0, -2.0 * std::numbers::pi * v)) / Complex(0, 2.0 * std::numbers::pi * v);
    EXPECT_NEAR(std::abs(fourier_quadrature(box(8), v) - expected), 0.0, 1e-14) << v;
  }
  const std::vector<double> grid{0.0, 1.0};
  const auto vals = fourier_quadrature(box(1), grid);
  ASSERT_EQ(vals.size(), 2u);
}

TEST(Grid, IndicatorAndTrim) {
  const SampledFunction f = indicator(4, Rational(1, 4), Rational(5, 4));
  EXPECT_EQ(f.grid(), make_grid(4, 0, 2));
  EXPECT_NEAR(l2_norm(f), 1.0, 1e-15);
  SampledFunction padded = regrid(box(2, 1, 2), make_grid(4, -2, 5));
  EXPECT_EQ(trimmed(padded).grid(), make_grid(4, 1, 2));
  EXPECT_EQ(code_of([] { indicator(4, Rational(1, 3), Rational(1)); }), ErrorCode::kIncompatibleShift);
}

TEST(GridProperty, TranslateRoundTripIsExact) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 6, -3, 3, 4);
    const Rational s(static_cast<std::int64_t>(rng() % 37) - 18, 6);
    const SampledFunction back = translate(translate(f, s), -s);
    EXPECT_EQ(max_abs_diff(back, f), 0.0);
  }
}

TEST(GridProperty, ModulateRoundTrip) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 5, -3, 3, 4);
    const Rational c(static_cast<std::int64_t>(rng() % 41) - 20, 1 + static_cast<std::int64_t>(rng() % 7));
    const SampledFunction back = modulate(modulate(f, c), -c);
    for (std::int64_t j = 0; j < f.size(); ++j) {
      EXPECT_LE(std::abs(back[j] - f[j]), 8 * kEps * std::max(1.0, std::abs(f[j])));
    }
    EXPECT_NEAR(l2_norm(modulate(f, c)), l2_norm(f), 4 * kEps * l2_norm(f));
  }
}

TEST(GridProperty, InnerProductSymmetry) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 4, -2, 2, 3);
    const SampledFunction g = testing::random_support_step(rng, 6, -2, 2, 3);
    const Complex ff = l2_inner(f, f);
    EXPECT_GE(ff.real(), 0.0);
    EXPECT_EQ(ff.imag(), 0.0);
    EXPECT_NEAR(ff.real(), l2_norm(f) * l2_norm(f), 1e-12 * ff.real());
    EXPECT_NEAR(std::abs(l2_inner(f, g) - std::conj(l2_inner(g, f))), 0.0, 1e-13);
  }
}

TEST(GridProperty, FourierAtZeroIsTotalMass) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 8, -2, 2, 3);
    Complex mass{};
    for (const auto& v : f.values()) mass += v;
    mass *= f.grid().width();
    EXPECT_EQ(fourier_quadrature(f, 0.0), mass);
  }
}

TEST(GridProperty, FourierMatchesCellwiseOracle) {
  // independent per-cell closed form (e^{−2πi x1 v} − e^{−2πi x0 v}) / (−2πiv)
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 30; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 4, -2, 2, 3);
    for (double v : {0.37, -2.1, 5.5}) {
      Complex acc{};
      for (std::int64_t j = 0; j < f.size(); ++j) {
        const double x0 = f.grid().left(j);
        const double x1 = x0 + f.grid().width();
        const Complex w = Complex(0, -2.0 * std::numbers::pi * v);
        acc += f[j] * (std::exp(w * x1) - std::exp(w * x0)) / w;
      }
      EXPECT_NEAR(std::abs(fourier_quadrature(f, v) - acc), 0.0, 1e-12);
    }
  }
}

TEST(Grid, UnitPhaseQuarterTurnsExact) {
  EXPECT_EQ(unit_phase(1, 4), Complex(0, 1));
  EXPECT_EQ(unit_phase(2, 4), Complex(-1, 0));
  EXPECT_EQ(unit_phase(-1, 4), Complex(0, -1));
  EXPECT_EQ(unit_phase(6, 3), Complex(1, 0));
  EXPECT_EQ(unit_phase(3, -4), Complex(0, 1));
}

}  // namespace
}  // namespace hcm
