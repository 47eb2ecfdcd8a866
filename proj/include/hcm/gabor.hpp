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

// Gabor systems (g, a, b) on rational lattices.
//
// On a grid of rate N the modulations E_{mb} only see N/b distinct phase
// classes, and summing e^{2πimb(x−y)} over one class gives N/b exactly when
// x ≡ y (mod 1/b) and zero otherwise. With the Δ-weighted inner product this
// makes the direct operators (sums over m and n) and their compressed bracket
// forms (sums over n only) identical finite computations, so each is an
// oracle for the other.
//
// Every operation works at the working rate lcm(lattice rate, window rates).

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hcm/bracket.hpp"
#include "hcm/error.hpp"
#include "hcm/grid.hpp"
#include "hcm/rational.hpp"
#include "hcm/zak.hpp"

namespace hcm {

struct GaborLattice {
  Rational a{1};  // time step
  Rational b{1};  // frequency step
  std::int64_t n = 1;

  friend bool operator==(const GaborLattice&, const GaborLattice&) = default;
};

namespace detail {

inline void check_lattice_rate(const GaborLattice& lat, std::int64_t rate) {
  if (lat.a <= Rational(0) || lat.b <= Rational(0)) {
    throw Error(ErrorCode::kIncompatibleLattice, "lattice steps must be positive");
  }
  if (!lat.a.times_integer(rate)) {
    throw Error(ErrorCode::kIncompatibleLattice,
                "a = " + lat.a.str() + " is not a multiple of 1/" + std::to_string(rate));
  }
  if (!(Rational(1) / lat.b).times_integer(rate)) {
    throw Error(ErrorCode::kIncompatibleLattice,
                "N/b is not an integer for N = " + std::to_string(rate) + ", b = " + lat.b.str());
  }
}

}  // namespace detail

inline GaborLattice make_lattice(Rational a, Rational b, std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::kIncompatibleLattice, "lattice rate must be positive");
  GaborLattice lat{a, b, n};
  detail::check_lattice_rate(lat, n);
  return lat;
}

// Rate on which f and g are both steps and the lattice is grid exact.
inline std::int64_t working_rate(const GaborLattice& lat, std::int64_t f_rate, std::int64_t g_rate) {
  const std::int64_t rate = std::lcm(lat.n, std::lcm(f_rate, g_rate));
  detail::check_lattice_rate(lat, rate);
  return rate;
}

// Number of distinct modulation classes N/b.
inline std::int64_t modulation_count(const GaborLattice& lat, std::int64_t rate) {
  return *(Rational(1) / lat.b).times_integer(rate);
}

inline SampledFunction at_rate(const SampledFunction& f, std::int64_t rate) {
  if (f.n() == rate) return f;
  return regrid(f, make_grid(rate, f.grid().lo, f.grid().hi));
}

struct TranslateRange {
  std::int64_t lo = 0;  // inclusive
  std::int64_t hi = -1;  // inclusive
  std::int64_t count() const { return std::max<std::int64_t>(hi - lo + 1, 0); }
};

// Translates n for which supp(T_{na} g) meets supp(f).
inline TranslateRange translates_meeting(const GridSpec& f, const GridSpec& g, Rational a) {
  // n·a ∈ (f.lo − g.hi, f.hi − g.lo)
  const std::int64_t lo = floor_div((f.lo - g.hi) * a.den(), a.num()) + 1;
  const std::int64_t hi = ceil_div((f.hi - g.lo) * a.den(), a.num()) - 1;
  return {lo, hi};
}

// E_{mb} T_{na} g, with m taken modulo N/b.
inline SampledFunction atom(const SampledFunction& g, const GaborLattice& lat, std::int64_t m, std::int64_t n) {
  const std::int64_t rate = working_rate(lat, g.n(), g.n());
  const std::int64_t classes = modulation_count(lat, rate);
  const SampledFunction shifted = translate(at_rate(g, rate), lat.a * Rational(n));
  return modulate(shifted, lat.b * Rational(positive_mod(m, classes)));
}

// c(m, n) = ⟨f, E_{mb}T_{na}g⟩ for m in [0, N/b) and n over the translates
// meeting supp f.
struct CoefficientGrid {
  std::int64_t n = 1;  // working rate
  std::int64_t m_count = 1;
  TranslateRange range;
  std::vector<Complex> values;  // m-major

  Complex operator()(std::int64_t m, std::int64_t k) const {
    return values[static_cast<std::size_t>(m * range.count() + (k - range.lo))];
  }
  Complex& operator()(std::int64_t m, std::int64_t k) {
    return values[static_cast<std::size_t>(m * range.count() + (k - range.lo))];
  }
};

inline CoefficientGrid analysis(const SampledFunction& f, const SampledFunction& g, const GaborLattice& lat) {
  const std::int64_t rate = working_rate(lat, f.n(), g.n());
  const SampledFunction ff = at_rate(f, rate);
  const SampledFunction gg = at_rate(g, rate);
  const std::int64_t classes = modulation_count(lat, rate);
  const std::int64_t step = *lat.a.times_integer(rate);
  CoefficientGrid c{rate, classes, translates_meeting(ff.grid(), gg.grid(), lat.a), {}};
  c.values.assign(static_cast<std::size_t>(classes * c.range.count()), Complex{});
  const auto w = detail::phase_table(classes, -1);
  const double dx = 1.0 / static_cast<double>(rate);
  for (std::int64_t k = c.range.lo; k <= c.range.hi; ++k) {
    for (std::int64_t j = 0; j < ff.size(); ++j) {
      const std::int64_t p = ff.grid().first_index() + j;
      const Complex prod = ff[j] * std::conj(gg.at_global(p - k * step));
      if (prod == Complex{}) continue;
      const std::int64_t r = positive_mod(p, classes);
      for (std::int64_t m = 0; m < classes; ++m) c(m, k) += prod * w[static_cast<std::size_t>((m * r) % classes)];
    }
  }
  for (auto& v : c.values) v *= dx;
  return c;
}

namespace detail {

// Dense accumulator over an integer-bounded support at a fixed rate.
struct Accumulator {
  SampledFunction f;
  void add(std::int64_t p, Complex v) { f[p - f.grid().first_index()] += v; }
};

inline Accumulator translates_hull(const GridSpec& g, Rational a, TranslateRange range, std::int64_t rate) {
  if (range.count() == 0) return Accumulator{SampledFunction(make_grid(rate, 0, 1))};
  const Rational lo = Rational(g.lo) + a * Rational(range.lo);
  const Rational hi = Rational(g.hi) + a * Rational(range.hi);
  return Accumulator{SampledFunction(make_grid(rate, floor_div(lo.num(), lo.den()), ceil_div(hi.num(), hi.den())))};
}

}  // namespace detail

// Σ_{m,n} c(m,n)·E_{mb}T_{na}g.
inline SampledFunction synthesis(const CoefficientGrid& c, const SampledFunction& g, const GaborLattice& lat) {
  const std::int64_t rate = working_rate(lat, c.n, g.n());
  if (rate != c.n) throw Error(ErrorCode::kIncompatibleLattice, "coefficients were computed at a coarser rate");
  const SampledFunction gg = at_rate(g, rate);
  const std::int64_t classes = c.m_count;
  const std::int64_t step = *lat.a.times_integer(rate);
  auto acc = detail::translates_hull(gg.grid(), lat.a, c.range, rate);
  const auto w = detail::phase_table(classes, +1);
  std::vector<Complex> by_residue(static_cast<std::size_t>(classes));
  for (std::int64_t k = c.range.lo; k <= c.range.hi; ++k) {
    // by_residue[r] = Σ_m c(m,k)·e^{2πimr/(N/b)}
    for (std::int64_t r = 0; r < classes; ++r) {
      Complex s{};
      for (std::int64_t m = 0; m < classes; ++m) s += c(m, k) * w[static_cast<std::size_t>((m * r) % classes)];
      by_residue[static_cast<std::size_t>(r)] = s;
    }
    for (std::int64_t j = 0; j < gg.size(); ++j) {
      if (gg[j] == Complex{}) continue;
      const std::int64_t y = gg.grid().first_index() + j + k * step;
      acc.add(y, gg[j] * by_residue[static_cast<std::size_t>(positive_mod(y, classes))]);
    }
  }
  return acc.f;
}

// S f = Σ_{m,n} ⟨f, g_{m,n}⟩ g_{m,n}, evaluated without any bracket folding.
inline SampledFunction frame_op_direct(const SampledFunction& f, const SampledFunction& g, const GaborLattice& lat) {
  return synthesis(analysis(f, g, lat), g, lat);
}

// 𝒯*_g f = √(1/b)·Σ_k ⟨f, T_{ka}g⟩_{1/b}·e_k with e_k = 1 on [k/b, (k+1)/b).
inline SampledFunction frame_transform_compressed(const SampledFunction& f, const SampledFunction& g,
                                                  const GaborLattice& lat) {
  const std::int64_t rate = working_rate(lat, f.n(), g.n());
  const SampledFunction ff = at_rate(f, rate);
  const SampledFunction gg = at_rate(g, rate);
  const std::int64_t classes = modulation_count(lat, rate);
  const Rational period = Rational(1) / lat.b;
  const double amp = std::sqrt(period.to_double());
  const auto range = translates_meeting(ff.grid(), gg.grid(), lat.a);
  if (range.count() == 0) return SampledFunction(make_grid(rate, 0, 1));
  SampledFunction out(make_grid(rate, floor_div(range.lo * classes, rate), ceil_div((range.hi + 1) * classes, rate)));
  for (std::int64_t k = range.lo; k <= range.hi; ++k) {
    const PeriodicSample br = bracket(ff, translate(gg, lat.a * Rational(k)), period);
    for (std::int64_t r = 0; r < classes; ++r) {
      out[k * classes + r - out.grid().first_index()] = amp * br[r];
    }
  }
  return out;
}

// 𝒯_g f = √(1/b)·Σ_k ⟨f, e_k⟩_{1/b}·T_{ka}g.
inline SampledFunction preframe_compressed(const SampledFunction& f, const SampledFunction& g,
                                           const GaborLattice& lat) {
  const std::int64_t rate = working_rate(lat, f.n(), g.n());
  const SampledFunction ff = at_rate(f, rate);
  const SampledFunction gg = at_rate(g, rate);
  const std::int64_t classes = modulation_count(lat, rate);
  const std::int64_t step = *lat.a.times_integer(rate);
  const double amp = std::sqrt((Rational(1) / lat.b).to_double());
  const TranslateRange tiles{floor_div(ff.grid().first_index(), classes),
                             floor_div(ff.grid().end_index() - 1, classes)};
  auto acc = detail::translates_hull(gg.grid(), lat.a, tiles, rate);
  for (std::int64_t k = tiles.lo; k <= tiles.hi; ++k) {
    for (std::int64_t j = 0; j < gg.size(); ++j) {
      if (gg[j] == Complex{}) continue;
      const std::int64_t y = gg.grid().first_index() + j + k * step;
      // ⟨f, e_k⟩_{1/b}(y) is f on tile k at the residue of y.
      const Complex coeff = ff.at_global(k * classes + positive_mod(y, classes));
      if (coeff != Complex{}) acc.add(y, amp * coeff * gg[j]);
    }
  }
  return acc.f;
}

// S_g f = (1/b)·Σ_k ⟨f, T_{ka}g⟩_{1/b}·T_{ka}g.
inline SampledFunction frame_op_compressed(const SampledFunction& f, const SampledFunction& g,
                                           const GaborLattice& lat) {
  const std::int64_t rate = working_rate(lat, f.n(), g.n());
  const SampledFunction ff = at_rate(f, rate);
  const SampledFunction gg = at_rate(g, rate);
  const Rational period = Rational(1) / lat.b;
  const double weight = period.to_double();
  const auto range = translates_meeting(ff.grid(), gg.grid(), lat.a);
  auto acc = detail::translates_hull(gg.grid(), lat.a, range, rate);
  for (std::int64_t k = range.lo; k <= range.hi; ++k) {
    const SampledFunction shifted = translate(gg, lat.a * Rational(k));
    const PeriodicSample br = bracket(ff, shifted, period);
    for (std::int64_t j = 0; j < shifted.size(); ++j) {
      if (shifted[j] == Complex{}) continue;
      const std::int64_t y = shifted.grid().first_index() + j;
      acc.add(y, weight * br.at_global(y, rate) * shifted[j]);
    }
  }
  return acc.f;
}

enum class BoundsMethod { kZakUnit, kZakMultiplierQ, kAframeEmpirical, kDirectEigen };

inline std::string_view to_string(BoundsMethod m) {
  switch (m) {
    case BoundsMethod::kZakUnit: return "zak_unit";
    case BoundsMethod::kZakMultiplierQ: return "zak_multiplier_q";
    case BoundsMethod::kAframeEmpirical: return "aframe_empirical";
    case BoundsMethod::kDirectEigen: return "direct_eigen";
  }
  return "unknown";
}

// Frame bound estimates. The Zak methods report bounds of the squared
// multiplier Σ_r |Z(T_{r/q}g)|², which are the spectral bounds of S.
struct FrameBoundsReport {
  double lower = 0.0;
  double upper = 0.0;
  BoundsMethod method = BoundsMethod::kZakUnit;
  GridSpec grid;
  GaborLattice lattice;
  std::optional<std::int64_t> trials;
  std::optional<std::uint64_t> seed;
};

// v samples used when a Zak grid supremum stands in for an essential
// supremum over v; |Z| is a trigonometric polynomial of degree < span.
inline std::int64_t bounds_sample_count(std::int64_t span) { return std::max<std::int64_t>(256, 16 * span); }

struct ZakMultiplier {
  std::int64_t n_t = 1;
  std::int64_t n_v = 1;
  std::vector<double> values;  // row-major, row = t index

  double operator()(std::int64_t i, std::int64_t j) const { return values[static_cast<std::size_t>(i * n_v + j)]; }
};

// Σ_{r=0}^{q−1} |Z(T_{r/q} g)|², the symbol of S for the lattice (1/q, 1).
inline ZakMultiplier zak_multiplier(const SampledFunction& g, std::int64_t q, std::int64_t n_v = 0) {
  if (q <= 0 || g.n() % q != 0) {
    throw Error(ErrorCode::kIncompatibleLattice,
                "shifts by 1/" + std::to_string(q) + " are not grid exact at rate " + std::to_string(g.n()));
  }
  std::vector<SampledFunction> shifted;
  std::int64_t span = 0;
  for (std::int64_t r = 0; r < q; ++r) {
    shifted.push_back(translate(g, Rational(r, q)));
    span = std::max(span, zak_span(shifted.back()));
  }
  if (n_v == 0) n_v = bounds_sample_count(span);
  ZakMultiplier out{g.n(), n_v, std::vector<double>(static_cast<std::size_t>(g.n() * n_v), 0.0)};
  for (const auto& h : shifted) {
    const ZakImage z = zak(h, n_v);
    for (std::size_t e = 0; e < z.values.size(); ++e) out.values[e] += std::norm(z.values[e]);
  }
  return out;
}

inline FrameBoundsReport frame_bounds_multiplier(const SampledFunction& g, std::int64_t q, std::int64_t n_v = 0) {
  const ZakMultiplier mult = zak_multiplier(g, q, n_v);
  const auto [lo, hi] = std::minmax_element(mult.values.begin(), mult.values.end());
  return FrameBoundsReport{*lo, *hi, BoundsMethod::kZakMultiplierQ, g.grid(),
                           GaborLattice{Rational(1, q), Rational(1), g.n()}, std::nullopt, std::nullopt};
}

// Bounds for (g, 1, 1): min and max of |Z(g)|² over the grid.
inline FrameBoundsReport frame_bounds_zak(const SampledFunction& g, std::int64_t n_v = 0) {
  FrameBoundsReport rep = frame_bounds_multiplier(g, 1, n_v);
  rep.method = BoundsMethod::kZakUnit;
  return rep;
}

// f / ‖f‖_{period} where the bracket norm exceeds threshold, 0 elsewhere.
inline SampledFunction normalize_by_bracket(const SampledFunction& f, Rational period, double threshold = 1e-9) {
  const auto sq = bracket_square(f, period);
  const std::int64_t m = static_cast<std::int64_t>(sq.size());
  SampledFunction out = f;
  for (std::int64_t j = 0; j < out.size(); ++j) {
    const double nrm = std::sqrt(sq[static_cast<std::size_t>(positive_mod(f.grid().first_index() + j, m))]);
    out[j] = nrm > threshold ? out[j] / nrm : Complex{};
  }
  return out;
}

namespace detail {

inline SampledFunction random_step(const GridSpec& grid, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  SampledFunction f(grid);
  for (auto& v : f.values()) {
    const double re = normal(rng);
    const double im = normal(rng);
    v = Complex(re, im);
  }
  return f;
}

inline FrameBoundsReport pointwise_ratio_bounds(const SampledFunction& g, const GaborLattice& lat, std::int64_t trials,
                                                std::uint64_t seed, bool normalize) {
  if (trials < 1) throw Error(ErrorCode::kInvalidArgument, "trials must be at least 1");
  const std::int64_t rate = working_rate(lat, g.n(), g.n());
  const SampledFunction gg = at_rate(g, rate);
  const Rational period = Rational(1) / lat.b;
  const std::int64_t margin = ceil_div(period.num(), period.den());
  const GridSpec test_grid = make_grid(rate, gg.grid().lo - margin, gg.grid().hi + margin);
  const auto range = translates_meeting(test_grid, gg.grid(), lat.a);
  std::vector<SampledFunction> translates;
  for (std::int64_t k = range.lo; k <= range.hi; ++k) translates.push_back(translate(gg, lat.a * Rational(k)));

  double lower = std::numeric_limits<double>::infinity();
  double upper = 0.0;
  bool any = false;
  for (std::int64_t t = 0; t < trials; ++t) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(t)};
    std::mt19937_64 rng(seq);
    const SampledFunction raw = random_step(test_grid, rng);
    const auto raw_sq = bracket_square(raw, period);
    const SampledFunction f = normalize ? normalize_by_bracket(raw, period) : raw;
    const auto f_sq = normalize ? bracket_square(f, period) : raw_sq;
    std::vector<double> energy(raw_sq.size(), 0.0);
    for (const auto& h : translates) {
      const PeriodicSample br = bracket(f, h, period);
      for (std::size_t r = 0; r < energy.size(); ++r) energy[r] += std::norm(br.values[r]);
    }
    for (std::size_t r = 0; r < energy.size(); ++r) {
      if (std::sqrt(raw_sq[r]) <= 1e-9) continue;
      const double ratio = period.to_double() * energy[r] / f_sq[r];
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
      any = true;
    }
  }
  if (!any) throw Error(ErrorCode::kNoValidPoints, "every test function vanished");
  return FrameBoundsReport{lower, upper, BoundsMethod::kAframeEmpirical, gg.grid(), lat, trials, seed};
}

}  // namespace detail

// Pointwise bracket frame ratios (1/b)·Σ_n |⟨f, T_{na}g⟩_{1/b}(x)|² / ‖f‖²_{1/b}(x)
// over seeded random step test functions. The extremes are inner estimates of
// the Gabor frame bounds.
inline FrameBoundsReport aframe_bounds_empirical(const SampledFunction& g, const GaborLattice& lat,
                                                 std::int64_t trials, std::uint64_t seed) {
  return detail::pointwise_ratio_bounds(g, lat, trials, seed, false);
}

// Same ratios after normalizing each test function to unit bracket norm,
// i.e. tested inside the unit ball of L∞_{1/b}(ℓ2).
inline FrameBoundsReport modular_frame_check(const SampledFunction& g, const GaborLattice& lat, std::int64_t trials,
                                             std::uint64_t seed) {
  return detail::pointwise_ratio_bounds(g, lat, trials, seed, true);
}

// Extreme eigenvalues of S compressed to functions supported on [lo, hi).
// These lie inside the true frame bounds and approach them as the window
// grows.
inline FrameBoundsReport frame_bounds_direct(const SampledFunction& g, const GaborLattice& lat, std::int64_t lo,
                                             std::int64_t hi) {
  const std::int64_t rate = working_rate(lat, g.n(), g.n());
  const GridSpec window = make_grid(rate, lo, hi);
  const std::int64_t cells = window.cells();
  Eigen::MatrixXcd s(cells, cells);
  for (std::int64_t q = 0; q < cells; ++q) {
    SampledFunction e(window);
    e[q] = 1.0;
    const SampledFunction col = frame_op_direct(e, g, lat);
    for (std::int64_t p = 0; p < cells; ++p) s(p, q) = col.at_global(window.first_index() + p, rate);
  }
  const Eigen::MatrixXcd herm = 0.5 * (s + s.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(herm, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return FrameBoundsReport{ev.minCoeff(), ev.maxCoeff(), BoundsMethod::kDirectEigen, window, lat, std::nullopt,
                           std::nullopt};
}

// ‖g‖_{X_Z} = sup |Z(g)| over the grid.
inline double bessel_xz_norm(const SampledFunction& g, std::int64_t n_v = 0) {
  if (n_v == 0) n_v = bounds_sample_count(zak_span(g));
  return zak_sup(zak(g, n_v));
}

struct CcjPartialSums {
  std::vector<double> two_sided;   // entry K−1: max_x Σ_{|k|≤K} |⟨g, T_k g⟩₁(x)|
  std::vector<double> one_sided;   // entry K−1: max_x Σ_{k=1}^{K} |⟨g, T_k g⟩₁(x)|
  std::vector<double> squares;     // entry K−1: max_x Σ_{k=1}^{K} |⟨g, T_k g⟩₁(x)|²
  bool nonnegative_real = true;    // the criterion's hypothesis on g
};

// Partial sums of the autocorrelation series Σ_k |⟨g, T_k g⟩₁|.
inline CcjPartialSums ccj_partial_sums(const SampledFunction& g, std::int64_t terms) {
  if (terms < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one term");
  CcjPartialSums out;
  for (const auto& v : g.values()) {
    if (v.imag() != 0.0 || v.real() < 0.0) out.nonnegative_real = false;
  }
  const auto abs_bracket = [&](std::int64_t k) {
    const PeriodicSample br = bracket(g, translate(g, Rational(k)), Rational(1));
    std::vector<double> a(br.values.size());
    for (std::size_t r = 0; r < a.size(); ++r) a[r] = std::abs(br.values[r]);
    return a;
  };
  std::vector<double> two = abs_bracket(0);
  std::vector<double> one(two.size(), 0.0);
  std::vector<double> sq(two.size(), 0.0);
  const auto max_of = [](const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); };
  for (std::int64_t k = 1; k <= terms; ++k) {
    const auto pos = abs_bracket(k);
    const auto neg = abs_bracket(-k);
    for (std::size_t r = 0; r < two.size(); ++r) {
      two[r] += pos[r] + neg[r];
      one[r] += pos[r];
      sq[r] += pos[r] * pos[r];
    }
    out.two_sided.push_back(max_of(two));
    out.one_sided.push_back(max_of(one));
    out.squares.push_back(max_of(sq));
  }
  return out;
}

}  // namespace hcm
