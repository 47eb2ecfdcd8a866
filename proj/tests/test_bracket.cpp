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
#include <random>
#include <vector>

#include "hcm/bracket.hpp"
#include "hcm/windows.hpp"
#include "test_util.hpp"

namespace hcm {
namespace {

double harmonic(std::int64_t k) {
  double h = 0.0;
  for (std::int64_t i = 1; i <= k; ++i) h += 1.0 / static_cast<double>(i);
  return h;
}

// Σ_{n=k+1}^{K} 1/(n(n−k)): the comb autocorrelation summed term by term.
double comb_autocorrelation(std::int64_t k, std::int64_t comb) {
  double s = 0.0;
  for (std::int64_t n = comb; n >= k + 1; --n) s += 1.0 / (static_cast<double>(n) * static_cast<double>(n - k));
  return s;
}

TEST(Bracket, BoxWithItself) {
  const PeriodicSample br = bracket(box(4), box(4), Rational(1));
  EXPECT_EQ(br.size(), 4);
  for (const auto& v : br.values) EXPECT_EQ(v, Complex(1.0));
}

TEST(Bracket, HarmonicCombAutocorrelation) {
  constexpr std::int64_t kComb = 400;
  const SampledFunction g = make_window(window::HarmonicComb{kComb}, 2);
  for (std::int64_t k = 1; k <= 6; ++k) {
    const PeriodicSample br = bracket(g, translate(g, Rational(k)), Rational(1));
    const double oracle = comb_autocorrelation(k, kComb);
    for (const auto& v : br.values) {
      EXPECT_NEAR(v.real(), oracle, 1e-13);
      EXPECT_EQ(v.imag(), 0.0);
    }
    // untruncated value H_k/k minus the telescoped tail (1/k)Σ_{j=K−k+1}^{K} 1/j ≤ 1/(K−k+1)
    double tail = 0.0;
    for (std::int64_t j = kComb - k + 1; j <= kComb; ++j) tail += 1.0 / static_cast<double>(j);
    tail /= static_cast<double>(k);
    EXPECT_NEAR(harmonic(k) / k - oracle, tail, 1e-13);
    EXPECT_LE(tail, 1.0 / static_cast<double>(kComb - k + 1));
  }
  EXPECT_NEAR(harmonic(2) / 2, 0.75, 1e-15);
  EXPECT_NEAR(harmonic(3) / 3, 11.0 / 18.0, 1e-15);
}

TEST(Bracket, IncompatiblePeriod) {
  try {
    bracket(box(4), box(4), Rational(1, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIncompatiblePeriod);
  }
  EXPECT_THROW(bracket_norm(box(4), Rational(1, 3)), Error);
  EXPECT_THROW(hcm_norm(box(4), Rational(1, 3)), Error);
}

TEST(Bracket, NormExamples) {
  for (const auto& v : bracket_norm(box(4), Rational(1)).values) EXPECT_EQ(v, Complex(1.0));
  for (const auto& v : bracket_norm(box(4, 0, 2), Rational(1)).values) EXPECT_EQ(v, Complex(std::sqrt(2.0)));
  for (const auto& v : bracket_norm(zeros(make_grid(4, -1, 2)), Rational(1, 2)).values) EXPECT_EQ(v, Complex(0.0));
}

TEST(Bracket, HcmNormExamples) {
  EXPECT_EQ(hcm_norm(box(8), Rational(1)), 1.0);
  for (std::int64_t k = 2; k <= 12; ++k) {
    EXPECT_EQ(hcm_norm_squared(make_window(window::Spikes{k}, 1024), Rational(1)), static_cast<double>(k)) << k;
  }
  for (std::int64_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(hcm_norm(make_window(window::DyadicLadder{k}, 128), Rational(1)), 1.0) << k;
  }
}

TEST(Bracket, AmalgamExamples) {
  for (auto q : {AmalgamExponent::kOne, AmalgamExponent::kTwo, AmalgamExponent::kInf}) {
    EXPECT_EQ(amalgam_norm(box(4), q), 1.0);
  }
  for (std::int64_t k : {1, 5, 30}) {
    EXPECT_NEAR(amalgam_norm(make_window(window::HarmonicComb{k}, 3), AmalgamExponent::kOne), harmonic(k), 1e-13);
  }
}

TEST(Bracket, AlgebraMulExamples) {
  EXPECT_EQ(max_abs_diff(algebra_mul(box(4), box(4)), box(4)), 0.0);
  std::mt19937_64 rng(3);
  const SampledFunction f = testing::random_step(rng, 4, 0, 4);
  EXPECT_EQ(sup_norm(algebra_mul(f, zeros(f.grid()))), 0.0);
}

TEST(Bracket, TailNormExamples) {
  std::vector<SampledFunction> dyadic, comb, constant;
  for (std::int64_t k = 1; k <= 8; ++k) {
    dyadic.push_back(make_window(window::DyadicLadder{k}, 512));
    comb.push_back(make_window(window::HarmonicComb{k}, 2));
    constant.push_back(box(2));
  }
  for (double t : tail_norms(dyadic, Rational(1))) EXPECT_EQ(t, 1.0);
  const auto ct = tail_norms(comb, Rational(1));
  for (std::size_t i = 0; i < ct.size(); ++i) EXPECT_NEAR(ct[i], 1.0 / static_cast<double>(i + 2), 1e-15);
  for (double t : tail_norms(constant, Rational(1))) EXPECT_EQ(t, 0.0);
}

TEST(Bracket, NormReportFields) {
  const NormReport r = norm_report(box(4, 0, 2), Rational(1));
  EXPECT_DOUBLE_EQ(r.hcm, std::sqrt(2.0));
  EXPECT_DOUBLE_EQ(r.l2, std::sqrt(2.0));
  EXPECT_EQ(r.sup, 1.0);
  EXPECT_EQ(r.amalgam_1, 2.0);
  EXPECT_DOUBLE_EQ(r.amalgam_2, std::sqrt(2.0));
  EXPECT_EQ(r.amalgam_inf, 1.0);
}

TEST(BracketProperty, ConjugateSymmetryAndCauchySchwarz) {
  std::mt19937_64 rng(21);
  const Rational periods[] = {Rational(1), Rational(1, 2), Rational(3, 2), Rational(2)};
  for (int trial = 0; trial < 200; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 4, -2, 2, 4);
    const SampledFunction g = testing::random_support_step(rng, 6, -2, 2, 4);
    const Rational a = periods[trial % 4];
    const PeriodicSample fg = bracket(f, g, a);
    const PeriodicSample gf = bracket(g, f, a);
    const PeriodicSample nf = bracket_norm(f, a);
    const PeriodicSample ng = bracket_norm(g, a);
    ASSERT_EQ(fg.size(), nf.size() * fg.n / nf.n);
    for (std::int64_t r = 0; r < fg.size(); ++r) {
      EXPECT_NEAR(std::abs(fg[r] - std::conj(gf[r])), 0.0, 1e-13);
      const std::int64_t p = r;
      const double bound = nf.at_global(p, fg.n).real() * ng.at_global(p, fg.n).real();
      EXPECT_LE(std::abs(fg[r]), bound * (1 + 1e-12) + 1e-15);
    }
  }
}

TEST(BracketProperty, PeriodicMultiplierFactorsOut) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 4, -2, 2, 4);
    const SampledFunction g = testing::random_support_step(rng, 4, -2, 2, 4);
    const SampledFunction phi_src = testing::random_step(rng, 4, 0, 1);
    const PeriodicSample phi = bracket(phi_src, box(4), Rational(1, 2));
    const PeriodicSample lhs = bracket(multiply_periodic(phi, f), g, Rational(1, 2));
    const PeriodicSample rhs = bracket(f, g, Rational(1, 2));
    for (std::int64_t r = 0; r < lhs.size(); ++r) {
      EXPECT_NEAR(std::abs(lhs[r] - phi[r] * rhs[r]), 0.0, 1e-12);
    }
  }
}

TEST(BracketProperty, BanachAlgebraPointwise) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const SampledFunction f = testing::random_step(rng, 4, 0, 4);
    const SampledFunction g = testing::random_step(rng, 4, 0, 4);
    const auto fg = bracket_square(algebra_mul(f, g), Rational(1));
    const auto ff = bracket_square(f, Rational(1));
    const auto gg = bracket_square(g, Rational(1));
    for (std::size_t r = 0; r < fg.size(); ++r) EXPECT_LE(fg[r], ff[r] * gg[r] * (1 + 1e-12));
    EXPECT_LE(hcm_norm(algebra_mul(f, g), Rational(1)),
              hcm_norm(f, Rational(1)) * hcm_norm(g, Rational(1)) * (1 + 1e-12));
  }
}

TEST(BracketProperty, NormChains) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 3, -3, 3, 5);
    const double h = hcm_norm(f, Rational(1));
    EXPECT_LE(l2_norm(f), h * (1 + 1e-12));
    EXPECT_LE(h, amalgam_norm(f, AmalgamExponent::kTwo) * (1 + 1e-12));
    EXPECT_LE(amalgam_norm(f, AmalgamExponent::kTwo), amalgam_norm(f, AmalgamExponent::kOne) * (1 + 1e-12));
    EXPECT_LE(amalgam_norm(f, AmalgamExponent::kInf), amalgam_norm(f, AmalgamExponent::kTwo) * (1 + 1e-12));
    // over a longer period the fold covers more length: ‖f‖² ≤ p·‖f‖²_p
    EXPECT_LE(l2_norm(f), std::sqrt(2.0) * hcm_norm(f, Rational(2)) * (1 + 1e-12));
  }
}

TEST(BracketProperty, FoldIntegratesToEnergy) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 50; ++trial) {
    const SampledFunction f = testing::random_support_step(rng, 4, -3, 3, 5);
    for (Rational a : {Rational(1), Rational(1, 2), Rational(5, 4)}) {
      const auto sq = bracket_square(f, a);
      double acc = 0.0;
      for (double s : sq) acc += s;
      acc *= f.grid().width();
      EXPECT_NEAR(acc, l2_norm(f) * l2_norm(f), 1e-12 * acc);
    }
  }
}

}  // namespace
}  // namespace hcm
