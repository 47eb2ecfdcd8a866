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

// Bracket products and the norms built on them.
//
// The bracket ⟨f,g⟩_a(x) = Σ_k f(x−ka)·conj(g(x−ka)) is an a-periodic
// function. On the grid it is a fold of the cellwise product f·conj(g) onto
// the a·N residues of the global cell index, so one period [0, a) is stored.

#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "hcm/error.hpp"
#include "hcm/grid.hpp"
#include "hcm/rational.hpp"

namespace hcm {

// One period [0, period) of a period-periodic step function at rate n.
struct PeriodicSample {
  Rational period{1};
  std::int64_t n = 1;
  std::vector<Complex> values;

  std::int64_t size() const { return static_cast<std::int64_t>(values.size()); }
  Complex operator[](std::int64_t r) const { return values[static_cast<std::size_t>(r)]; }

  // Value on global cell p of a grid whose rate is a multiple of n.
  Complex at_global(std::int64_t p, std::int64_t rate) const {
    return values[static_cast<std::size_t>(positive_mod(floor_div(p, rate / n), size()))];
  }

  double max_real() const {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, v.real());
    return m;
  }
};

inline PeriodicSample constant_periodic(Rational period, std::int64_t n, Complex value) {
  const auto len = period.times_integer(n);
  if (period <= Rational(0) || !len) {
    throw Error(ErrorCode::kIncompatiblePeriod, "period " + period.str() + " is not a multiple of 1/" +
                                                    std::to_string(n));
  }
  return PeriodicSample{period, n, std::vector<Complex>(static_cast<std::size_t>(*len), value)};
}

namespace detail {

inline std::int64_t period_cells(Rational period, std::int64_t n) {
  if (period <= Rational(0)) throw Error(ErrorCode::kIncompatiblePeriod, "period must be positive");
  const auto m = period.times_integer(n);
  if (!m) {
    throw Error(ErrorCode::kIncompatiblePeriod,
                "period " + period.str() + " is not a multiple of 1/" + std::to_string(n));
  }
  return *m;
}

}  // namespace detail

// ⟨f,g⟩_a sampled on one period. The grid is the common refinement of f and g;
// a·N must be an integer there.
inline PeriodicSample bracket(const SampledFunction& f, const SampledFunction& g, Rational a) {
  const GridSpec grid = common_grid(f.grid(), g.grid());
  const std::int64_t m = detail::period_cells(a, grid.n);
  PeriodicSample out{a, grid.n, std::vector<Complex>(static_cast<std::size_t>(m))};
  const std::int64_t lo = std::max(f.grid().lo, g.grid().lo) * grid.n;
  const std::int64_t hi = std::min(f.grid().hi, g.grid().hi) * grid.n;
  for (std::int64_t p = lo; p < hi; ++p) {
    const Complex fv = f.at_global(p, grid.n);
    if (fv == Complex{}) continue;
    out.values[static_cast<std::size_t>(positive_mod(p, m))] += fv * std::conj(g.at_global(p, grid.n));
  }
  return out;
}

// Σ_k |f(x−ka)|² on one period; real and nonnegative by construction.
inline std::vector<double> bracket_square(const SampledFunction& f, Rational a) {
  const std::int64_t m = detail::period_cells(a, f.n());
  std::vector<double> out(static_cast<std::size_t>(m), 0.0);
  const std::int64_t base = f.grid().first_index();
  for (std::int64_t j = 0; j < f.size(); ++j) {
    out[static_cast<std::size_t>(positive_mod(base + j, m))] += std::norm(f[j]);
  }
  return out;
}

// ‖f‖_a(x) = sqrt(⟨f,f⟩_a(x)).
inline PeriodicSample bracket_norm(const SampledFunction& f, Rational a) {
  const auto sq = bracket_square(f, a);
  PeriodicSample out{a, f.n(), {}};
  out.values.reserve(sq.size());
  for (double s : sq) out.values.emplace_back(std::sqrt(s), 0.0);
  return out;
}

// ‖f‖²_{L∞_period(ℓ2)}: the grid maximum of the folded energy.
inline double hcm_norm_squared(const SampledFunction& f, Rational period) {
  const auto sq = bracket_square(f, period);
  return *std::max_element(sq.begin(), sq.end());
}

inline double hcm_norm(const SampledFunction& f, Rational period) { return std::sqrt(hcm_norm_squared(f, period)); }

enum class AmalgamExponent { kOne, kTwo, kInf };

// ‖f‖_{W(L∞, ℓq)} over the integer tiles [k, k+1).
inline double amalgam_norm(const SampledFunction& f, AmalgamExponent q) {
  const auto& g = f.grid();
  double acc = 0.0;
  for (std::int64_t k = 0; k < g.hi - g.lo; ++k) {
    double tile_sup = 0.0;
    for (std::int64_t r = 0; r < g.n; ++r) tile_sup = std::max(tile_sup, std::abs(f[k * g.n + r]));
    switch (q) {
      case AmalgamExponent::kOne: acc += tile_sup; break;
      case AmalgamExponent::kTwo: acc += tile_sup * tile_sup; break;
      case AmalgamExponent::kInf: acc = std::max(acc, tile_sup); break;
    }
  }
  return q == AmalgamExponent::kTwo ? std::sqrt(acc) : acc;
}

struct NormReport {
  double hcm = 0.0;
  double l2 = 0.0;
  double sup = 0.0;
  double amalgam_1 = 0.0;
  double amalgam_2 = 0.0;
  double amalgam_inf = 0.0;
};

inline NormReport norm_report(const SampledFunction& f, Rational period = Rational(1)) {
  return NormReport{hcm_norm(f, period),
                    l2_norm(f),
                    sup_norm(f),
                    amalgam_norm(f, AmalgamExponent::kOne),
                    amalgam_norm(f, AmalgamExponent::kTwo),
                    amalgam_norm(f, AmalgamExponent::kInf)};
}

// Pointwise product in the Banach algebra L∞_1(ℓ2). The submultiplicative
// bound ‖fg‖ ≤ ‖f‖·‖g‖ always holds; debug builds assert it.
inline SampledFunction algebra_mul(const SampledFunction& f, const SampledFunction& g) {
  SampledFunction out = pointwise_mul(f, g);
  assert(hcm_norm(out, Rational(1)) <= hcm_norm(f, Rational(1)) * hcm_norm(g, Rational(1)) * (1 + 1e-12) + 1e-300);
  return out;
}

// φ·f for a periodic step φ.
inline SampledFunction multiply_periodic(const PeriodicSample& phi, const SampledFunction& f) {
  const std::int64_t rate = std::lcm(phi.n, f.n());
  const GridSpec grid = make_grid(rate, f.grid().lo, f.grid().hi);
  SampledFunction out(grid);
  for (std::int64_t j = 0; j < out.size(); ++j) {
    const std::int64_t p = grid.first_index() + j;
    out[j] = f.at_global(p, rate) * phi.at_global(p, rate);
  }
  return out;
}

// hcm_norm(g_{K+1} − g_K) for consecutive members of a truncation family.
inline std::vector<double> tail_norms(std::span<const SampledFunction> family, Rational period) {
  std::vector<double> out;
  for (std::size_t i = 0; i + 1 < family.size(); ++i) {
    out.push_back(hcm_norm(subtract(family[i + 1], family[i]), period));
  }
  return out;
}

}  // namespace hcm
