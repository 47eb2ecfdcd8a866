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

// Frame perturbation certificates.
//
// Christensen–Heil: if {f_i} is a frame with bounds A ≤ B and the
// differences {f_i − g_i} are Bessel with bound R < A, then {g_i} is a frame
// with lower bound A(1 − √(R/A))². Two upper bounds are reported: the form
// B(1 − √(R/A))² that appears in the original statement, and the standard
// (√B + √R)², which is the one safe to rely on.

#pragma once

#include <cmath>
#include <cstdint>
#include <string>

#include "hcm/bracket.hpp"
#include "hcm/error.hpp"
#include "hcm/gabor.hpp"
#include "hcm/grid.hpp"

namespace hcm {

struct PerturbationCertificate {
  double base_lower = 0.0;    // A
  double base_upper = 0.0;    // B
  double perturbation_bound = 0.0;  // R
  double certified_lower = 0.0;
  double certified_upper_paper = 0.0;
  double certified_upper_conservative = 0.0;
  bool valid = false;
  std::string r_method;  // how R was obtained
  bool empirical = false;  // A, B or R came from sampled test functions
};

inline PerturbationCertificate ch_bounds(double a, double b, double r) {
  if (!(a > 0.0) || !(b >= a)) {
    throw Error(ErrorCode::kInvalidBounds, "need A > 0 and B >= A");
  }
  if (!(r >= 0.0)) throw Error(ErrorCode::kInvalidBounds, "need R >= 0");
  PerturbationCertificate cert;
  cert.base_lower = a;
  cert.base_upper = b;
  cert.perturbation_bound = r;
  cert.valid = r < a;
  cert.certified_upper_conservative = b + r + 2.0 * std::sqrt(b * r);
  if (cert.valid) {
    const double shrink = (1.0 - std::sqrt(r / a)) * (1.0 - std::sqrt(r / a));
    cert.certified_lower = a * shrink;
    cert.certified_upper_paper = b * shrink;
  }
  return cert;
}

namespace detail {

inline constexpr std::int64_t kFallbackTrials = 64;
inline constexpr std::uint64_t kFallbackSeed = 0;

// q such that lat = (1/q, 1), if any.
inline std::optional<std::int64_t> multiplier_order(const GaborLattice& lat) {
  if (lat.b != Rational(1) || lat.a.num() != 1) return std::nullopt;
  return lat.a.den();
}

inline FrameBoundsReport lattice_bounds(const SampledFunction& g, const GaborLattice& lat, bool allow_empirical) {
  if (const auto q = multiplier_order(lat)) {
    const std::int64_t rate = working_rate(lat, g.n(), g.n());
    const SampledFunction gg = at_rate(g, rate);
    return *q == 1 ? frame_bounds_zak(gg) : frame_bounds_multiplier(gg, *q);
  }
  if (!allow_empirical) {
    throw Error(ErrorCode::kUnsupportedLattice,
                "no Zak multiplier for lattice (" + lat.a.str() + ", " + lat.b.str() + ")");
  }
  return aframe_bounds_empirical(g, lat, kFallbackTrials, kFallbackSeed);
}

}  // namespace detail

// Certificate for the window h as a perturbation of g: R is the upper frame
// bound of (h − g, a, b).
inline PerturbationCertificate additive_certify(const SampledFunction& g, const SampledFunction& h,
                                                const GaborLattice& lat, bool allow_empirical = true) {
  const FrameBoundsReport base = detail::lattice_bounds(g, lat, allow_empirical);
  const SampledFunction diff = subtract(h, g);
  const bool zero = sup_norm(diff) == 0.0;
  const FrameBoundsReport pert = zero ? FrameBoundsReport{} : detail::lattice_bounds(diff, lat, allow_empirical);
  PerturbationCertificate cert = ch_bounds(base.lower, base.upper, zero ? 0.0 : pert.upper);
  cert.r_method = std::string(to_string(zero ? base.method : pert.method));
  cert.empirical = base.method == BoundsMethod::kAframeEmpirical || pert.method == BoundsMethod::kAframeEmpirical;
  return cert;
}

// The product window f·g where f = 1 + deviation.
inline SampledFunction multiplicative_window(const SampledFunction& g, const SampledFunction& deviation) {
  const SampledFunction prod = pointwise_mul(deviation, g);
  return add(g, prod);
}

// Certificate for (f·g, a, b) with f = 1 + deviation, deviation compactly
// supported: R = ‖f − 1‖²_{L∞_{1/b}(ℓ2)}·B bounds the upper frame bound of
// ((f−1)g, a, b) through the ideal inequality.
inline PerturbationCertificate multiplicative_certify(const SampledFunction& g, const SampledFunction& deviation,
                                                      const GaborLattice& lat, bool allow_empirical = true) {
  const FrameBoundsReport base = detail::lattice_bounds(g, lat, allow_empirical);
  const std::int64_t rate = working_rate(lat, deviation.n(), deviation.n());
  const double dev = hcm_norm(at_rate(deviation, rate), Rational(1) / lat.b);
  PerturbationCertificate cert = ch_bounds(base.lower, base.upper, dev * dev * base.upper);
  cert.r_method = "hcm_ideal";
  cert.empirical = base.method == BoundsMethod::kAframeEmpirical;
  return cert;
}

}  // namespace hcm
