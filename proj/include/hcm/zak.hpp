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

// Discrete Zak transform.
//
// The primary convention is Z(f)(t,v) = Σ_k f(t+k)·e^{-2πikv}. For a step
// function on rate N, Z is constant in t on each of the N cells of [0,1) and a
// trigonometric polynomial in v, so sampling v at n_v ≥ (number of integer
// translates in the support) points is alias free and Parseval holds exactly
// on the sample grid.
//
// The scaled form Z_λ(f)(t,v) = λ^{1/2}·Σ_k f(λ(t−k))·e^{2πikv} is available
// through zak_lambda(). At λ = 1 the substitution k → −k turns it into the
// primary form, so both produce the same image.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hcm/error.hpp"
#include "hcm/grid.hpp"
#include "hcm/rational.hpp"

namespace hcm {

// Samples Z(f)(i/n_t, j/n_v), stored row-major (row = t index).
struct ZakImage {
  std::int64_t n_t = 1;
  std::int64_t n_v = 1;
  Rational lambda{1};
  // Smallest translate index k of the source support (primary convention);
  // the inverse reconstructs translates k_origin .. k_origin + n_v − 1.
  std::int64_t k_origin = 0;
  std::vector<Complex> values;

  Complex operator()(std::int64_t i, std::int64_t j) const {
    return values[static_cast<std::size_t>(i * n_v + j)];
  }
  Complex& operator()(std::int64_t i, std::int64_t j) { return values[static_cast<std::size_t>(i * n_v + j)]; }
};

struct WindowedZakImage {
  ZakImage base;  // already carries the e^{-2πitv} factor
  Rational shift_x{0};
};

namespace detail {

// w[r] = e^{sign·2πi r/n}.
inline std::vector<Complex> phase_table(std::int64_t n, int sign) {
  std::vector<Complex> w(static_cast<std::size_t>(n));
  for (std::int64_t r = 0; r < n; ++r) w[static_cast<std::size_t>(r)] = unit_phase(sign * r, n);
  return w;
}

}  // namespace detail

// Number of integer translates [lo, hi) covers; the smallest alias-free n_v.
inline std::int64_t zak_span(const SampledFunction& f) { return f.grid().hi - f.grid().lo; }

inline ZakImage zak(const SampledFunction& f, std::int64_t n_v = 0) {
  const auto& g = f.grid();
  const std::int64_t span = zak_span(f);
  if (n_v == 0) n_v = span;
  if (n_v < span) {
    throw Error(ErrorCode::kAliasing, "n_v = " + std::to_string(n_v) + " is below the support length " +
                                          std::to_string(span));
  }
  ZakImage z{g.n, n_v, Rational(1), g.lo, std::vector<Complex>(static_cast<std::size_t>(g.n * n_v))};
  const auto w = detail::phase_table(n_v, -1);
  for (std::int64_t i = 0; i < g.n; ++i) {
    for (std::int64_t k = g.lo; k < g.hi; ++k) {
      const Complex fv = f[(k - g.lo) * g.n + i];
      if (fv == Complex{}) continue;
      const std::int64_t kr = positive_mod(k, n_v);
      for (std::int64_t j = 0; j < n_v; ++j) {
        z(i, j) += fv * w[static_cast<std::size_t>((kr * j) % n_v)];
      }
    }
  }
  return z;
}

// Z_λ(f)(t,v) = λ^{1/2}·Σ_k f(λ(t−k))·e^{2πikv}, sampled at t = i/(λN) so that
// each t cell maps onto exactly one cell of f.
inline ZakImage zak_lambda(const SampledFunction& f, Rational lambda, std::int64_t n_v = 0) {
  const auto& g = f.grid();
  if (lambda <= Rational(0)) throw Error(ErrorCode::kIncompatibleScale, "lambda must be positive");
  const auto n_t_opt = lambda.times_integer(g.n);
  if (!n_t_opt) {
    throw Error(ErrorCode::kIncompatibleScale,
                "lambda " + lambda.str() + " times rate " + std::to_string(g.n) + " is not an integer");
  }
  const std::int64_t n_t = *n_t_opt;
  // Term k reads global cell i − k·n_t; nonzero only for k in [k_min, k_max].
  const std::int64_t k_min = ceil_div(0 - (g.end_index() - 1), n_t);
  const std::int64_t k_max = floor_div((n_t - 1) - g.first_index(), n_t);
  const std::int64_t count = std::max<std::int64_t>(k_max - k_min + 1, 1);
  if (n_v == 0) n_v = count;
  if (n_v < count) {
    throw Error(ErrorCode::kAliasing, "n_v = " + std::to_string(n_v) + " is below the translate count " +
                                          std::to_string(count));
  }
  ZakImage z{n_t, n_v, lambda, -k_max, std::vector<Complex>(static_cast<std::size_t>(n_t * n_v))};
  const double amp = std::sqrt(lambda.to_double());
  const auto w = detail::phase_table(n_v, +1);
  for (std::int64_t i = 0; i < n_t; ++i) {
    for (std::int64_t k = k_min; k <= k_max; ++k) {
      const Complex fv = f.at_global(i - k * n_t);
      if (fv == Complex{}) continue;
      const std::int64_t kr = positive_mod(k, n_v);
      for (std::int64_t j = 0; j < n_v; ++j) {
        z(i, j) += amp * fv * w[static_cast<std::size_t>((kr * j) % n_v)];
      }
    }
  }
  return z;
}

// f(t_i + k) = (1/n_v)·Σ_j Z(t_i, v_j)·e^{2πikv_j} for k in
// [k_origin, k_origin + n_v).
inline SampledFunction inverse_zak(const ZakImage& z) {
  if (z.lambda != Rational(1)) {
    throw Error(ErrorCode::kInvalidArgument, "inverse_zak expects a unit-scale image");
  }
  SampledFunction f(make_grid(z.n_t, z.k_origin, z.k_origin + z.n_v));
  const auto w = detail::phase_table(z.n_v, +1);
  const double inv = 1.0 / static_cast<double>(z.n_v);
  for (std::int64_t k = z.k_origin; k < z.k_origin + z.n_v; ++k) {
    const std::int64_t kr = positive_mod(k, z.n_v);
    for (std::int64_t i = 0; i < z.n_t; ++i) {
      Complex acc{};
      for (std::int64_t j = 0; j < z.n_v; ++j) acc += z(i, j) * w[static_cast<std::size_t>((kr * j) % z.n_v)];
      f[(k - z.k_origin) * z.n_t + i] = acc * inv;
    }
  }
  return f;
}

// Z(f) at t = cell/N, for any integer cell (not only [0, N)), and
// v = num/den, evaluated from the defining sum.
inline Complex zak_at(const SampledFunction& f, std::int64_t cell, std::int64_t v_num, std::int64_t v_den) {
  const auto& g = f.grid();
  Complex acc{};
  const std::int64_t k_lo = ceil_div(g.first_index() - cell, g.n);
  const std::int64_t k_hi = floor_div(g.end_index() - 1 - cell, g.n);
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    acc += f.at_global(cell + k * g.n) * unit_phase(-k * v_num, v_den);
  }
  return acc;
}

// Z(f) at t = cell/N and real v.
inline Complex zak_at(const SampledFunction& f, std::int64_t cell, double v) {
  const auto& g = f.grid();
  Complex acc{};
  const std::int64_t k_lo = ceil_div(g.first_index() - cell, g.n);
  const std::int64_t k_hi = floor_div(g.end_index() - 1 - cell, g.n);
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    acc += f.at_global(cell + k * g.n) * unit_phase_minus(static_cast<double>(k) * v);
  }
  return acc;
}

// Σ_{k=k_lo}^{k_hi} f(t+k)·e^{-2πikv} for a callable f: the defining sum for
// functions that are not grid steps.
template <typename Fn>
Complex zak_eval(Fn&& fn, double t, double v, std::int64_t k_lo, std::int64_t k_hi) {
  Complex acc{};
  for (std::int64_t k = k_lo; k <= k_hi; ++k) {
    acc += Complex(fn(t + static_cast<double>(k))) * unit_phase_minus(static_cast<double>(k) * v);
  }
  return acc;
}

struct QuasiPeriodicity {
  double defect = 0.0;
  // Z(f)(t+1, v) = e^{phase_sign·2πiv}·Z(f)(t, v).
  int phase_sign = +1;
};

// Checks Z(t+1,v) = e^{2πiv}Z(t,v) and Z(t,v+1) = Z(t,v), with both sides
// evaluated from the defining sum on [1,2)×[0,1) and [0,1)×[1,2).
inline QuasiPeriodicity quasi_periodicity_defect(const SampledFunction& f, std::int64_t n_v = 0) {
  if (n_v == 0) n_v = std::max<std::int64_t>(zak_span(f), 8);
  QuasiPeriodicity out;
  for (std::int64_t i = 0; i < f.n(); ++i) {
    for (std::int64_t j = 0; j < n_v; ++j) {
      const Complex base = zak_at(f, i, j, n_v);
      const Complex shifted_t = zak_at(f, i + f.n(), j, n_v);
      const Complex shifted_v = zak_at(f, i, j + n_v, n_v);
      out.defect = std::max(out.defect, std::abs(shifted_t - unit_phase(j, n_v) * base));
      out.defect = std::max(out.defect, std::abs(shifted_v - base));
    }
  }
  return out;
}

// f̂(v) = ∫_0^1 Z(f)(t,v)e^{-2πitv}dt, integrating each constant t cell exactly.
inline Complex fourier_via_zak(const SampledFunction& f, double v) {
  const std::int64_t n = f.n();
  Complex acc{};
  for (std::int64_t i = 0; i < n; ++i) {
    const Complex zv = zak_at(f, i, v);
    if (zv == Complex{}) continue;
    acc += zv * unit_phase_minus(static_cast<double>(i) / static_cast<double>(n) * v);
  }
  return acc * cell_fourier_integral(v, 1.0 / static_cast<double>(n));
}

// ∫∫_{[0,1)²} |Z|², which equals ‖f‖² on an alias-free image.
inline double zak_energy(const ZakImage& z) {
  double acc = 0.0;
  for (const auto& v : z.values) acc += std::norm(v);
  return acc / static_cast<double>(z.n_t * z.n_v);
}

// max_t ∫_0^1 |Z(t,v)|² dv, which equals hcm_norm(f,1)² on an alias-free image.
inline double zak_fold_max(const ZakImage& z) {
  double m = 0.0;
  for (std::int64_t i = 0; i < z.n_t; ++i) {
    double acc = 0.0;
    for (std::int64_t j = 0; j < z.n_v; ++j) acc += std::norm(z(i, j));
    m = std::max(m, acc / static_cast<double>(z.n_v));
  }
  return m;
}

inline double zak_sup(const ZakImage& z) {
  double m = 0.0;
  for (const auto& v : z.values) m = std::max(m, std::abs(v));
  return m;
}

inline double zak_inf(const ZakImage& z) {
  double m = std::abs(z.values.front());
  for (const auto& v : z.values) m = std::min(m, std::abs(v));
  return m;
}

// 𝒱¹_g(f)(t,v,x) = Z(f·T_x g)(t,v)·e^{-2πitv}.
inline WindowedZakImage windowed_zak(const SampledFunction& f, const SampledFunction& g, Rational x,
                                     std::int64_t n_v = 0) {
  const std::int64_t rate = std::lcm(f.n(), g.n());
  const SampledFunction shifted = translate(regrid(g, make_grid(rate, g.grid().lo, g.grid().hi)), x);
  const SampledFunction product = pointwise_mul(f, shifted);
  ZakImage z = zak(product, std::max(n_v, zak_span(product)));
  for (std::int64_t i = 0; i < z.n_t; ++i) {
    for (std::int64_t j = 0; j < z.n_v; ++j) z(i, j) *= unit_phase(-i * j, z.n_t * z.n_v);
  }
  return WindowedZakImage{std::move(z), x};
}

// g ∗₁ f: the function whose Zak transform is Z(g)·Z(f). n_v is raised to the
// alias-free size of the product if needed.
inline SampledFunction zak_convolve(const SampledFunction& g, const SampledFunction& f, std::int64_t n_v = 0) {
  const std::int64_t rate = std::lcm(g.n(), f.n());
  const SampledFunction gg = regrid(g, make_grid(rate, g.grid().lo, g.grid().hi));
  const SampledFunction ff = regrid(f, make_grid(rate, f.grid().lo, f.grid().hi));
  n_v = std::max(n_v, zak_span(gg) + zak_span(ff) - 1);
  const ZakImage zg = zak(gg, n_v);
  ZakImage zf = zak(ff, n_v);
  for (std::size_t e = 0; e < zf.values.size(); ++e) zf.values[e] *= zg.values[e];
  zf.k_origin = gg.grid().lo + ff.grid().lo;
  return inverse_zak(zf);
}

}  // namespace hcm
