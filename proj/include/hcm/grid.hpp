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

// Uniform-grid model of compactly supported functions on the real line.
//
// A SampledFunction with rate N and support [lo, hi) is the piecewise
// constant function equal to values[j] on [lo + j/N, lo + (j+1)/N) and zero
// elsewhere. Cells are addressed either locally (j) or by their global index
// p = lo·N + j, so that cell p covers [p/N, (p+1)/N) independently of the
// support. Binary operations work on the common refinement: the lcm of the
// two rates and the union of the two supports.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hcm/error.hpp"
#include "hcm/rational.hpp"

namespace hcm {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

constexpr std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

constexpr std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// e^{2πi·num/den}, reduced exactly modulo 1 first. Quarter turns come out
// exact, so phases that should cancel do cancel bit for bit.
inline Complex unit_phase(std::int64_t num, std::int64_t den) {
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t r = positive_mod(num, den);
  if (r == 0) return {1.0, 0.0};
  if (4 * static_cast<__int128>(r) % den == 0) {
    switch (static_cast<int>(4 * static_cast<__int128>(r) / den)) {
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, kTwoPi * static_cast<double>(r) / static_cast<double>(den));
}

// e^{-2πi·x} for real x, reduced modulo 1 before the trig call.
inline Complex unit_phase_minus(double x) {
  const double r = x - std::round(x);
  return std::polar(1.0, -kTwoPi * r);
}

// ∫_0^width e^{-2πisv} ds in closed form.
inline Complex cell_fourier_integral(double v, double width) {
  const double z = std::numbers::pi * width * v;
  const double sinc = (z == 0.0) ? 1.0 : std::sin(z) / z;
  return width * sinc * std::polar(1.0, -z);
}

struct GridSpec {
  std::int64_t n = 1;   // samples per unit
  std::int64_t lo = 0;  // support is [lo, hi) in units of the real line
  std::int64_t hi = 1;

  std::int64_t cells() const { return n * (hi - lo); }
  double width() const { return 1.0 / static_cast<double>(n); }
  std::int64_t first_index() const { return lo * n; }
  std::int64_t end_index() const { return hi * n; }
  double left(std::int64_t j) const { return static_cast<double>(lo * n + j) / static_cast<double>(n); }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

inline GridSpec make_grid(std::int64_t n, std::int64_t lo, std::int64_t hi) {
  if (n <= 0) throw Error(ErrorCode::kInvalidBounds, "samples per unit must be positive");
  if (hi <= lo) {
    throw Error(ErrorCode::kInvalidBounds,
                "support [" + std::to_string(lo) + ", " + std::to_string(hi) + ") is empty");
  }
  return GridSpec{n, lo, hi};
}

inline GridSpec common_grid(const GridSpec& a, const GridSpec& b) {
  return make_grid(std::lcm(a.n, b.n), std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

class SampledFunction {
 public:
  SampledFunction() : SampledFunction(GridSpec{}) {}
  explicit SampledFunction(GridSpec grid)
      : grid_(make_grid(grid.n, grid.lo, grid.hi)), values_(static_cast<std::size_t>(grid_.cells())) {}
  SampledFunction(GridSpec grid, std::vector<Complex> values)
      : grid_(make_grid(grid.n, grid.lo, grid.hi)), values_(std::move(values)) {
    if (static_cast<std::int64_t>(values_.size()) != grid_.cells()) {
      throw Error(ErrorCode::kInvalidArgument, "expected " + std::to_string(grid_.cells()) +
                                                   " values, got " + std::to_string(values_.size()));
    }
  }

  const GridSpec& grid() const { return grid_; }
  std::int64_t n() const { return grid_.n; }
  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }
  Complex operator[](std::int64_t j) const { return values_[static_cast<std::size_t>(j)]; }
  Complex& operator[](std::int64_t j) { return values_[static_cast<std::size_t>(j)]; }

  // Value on global cell p of this function's own rate; zero off support.
  Complex at_global(std::int64_t p) const {
    const std::int64_t j = p - grid_.first_index();
    if (j < 0 || j >= size()) return {};
    return values_[static_cast<std::size_t>(j)];
  }

  // Value on global cell p of a finer grid whose rate is a multiple of n().
  Complex at_global(std::int64_t p, std::int64_t rate) const {
    return at_global(floor_div(p, rate / grid_.n));
  }

 private:
  GridSpec grid_;
  std::vector<Complex> values_;
};

// Re-express f on a grid whose rate is a multiple of f's and whose support
// contains f's.
inline SampledFunction regrid(const SampledFunction& f, const GridSpec& target) {
  if (target.n % f.n() != 0 || target.lo > f.grid().lo || target.hi < f.grid().hi) {
    throw Error(ErrorCode::kInvalidArgument, "target grid does not refine the source grid");
  }
  SampledFunction out(target);
  for (std::int64_t j = 0; j < out.size(); ++j) out[j] = f.at_global(target.first_index() + j, target.n);
  return out;
}

// Smallest integer-bounded support holding every nonzero cell.
inline SampledFunction trimmed(const SampledFunction& f) {
  std::int64_t first = f.size(), last = -1;
  for (std::int64_t j = 0; j < f.size(); ++j) {
    if (f[j] != Complex{}) {
      first = std::min(first, j);
      last = j;
    }
  }
  const auto& g = f.grid();
  if (last < 0) return SampledFunction(make_grid(g.n, 0, 1));
  const std::int64_t lo = floor_div(g.first_index() + first, g.n);
  const std::int64_t hi = ceil_div(g.first_index() + last + 1, g.n);
  SampledFunction out(make_grid(g.n, lo, hi));
  for (std::int64_t j = 0; j < out.size(); ++j) out[j] = f.at_global(lo * g.n + j);
  return out;
}

inline SampledFunction zeros(const GridSpec& grid) { return SampledFunction(grid); }

// Indicator of [from, to) on rate n; endpoints must be grid points.
inline SampledFunction indicator(std::int64_t n, Rational from, Rational to) {
  const auto p0 = from.times_integer(n);
  const auto p1 = to.times_integer(n);
  if (!p0 || !p1) throw Error(ErrorCode::kIncompatibleShift, "indicator endpoints are not grid points");
  if (*p1 <= *p0) throw Error(ErrorCode::kInvalidBounds, "empty indicator interval");
  SampledFunction out(make_grid(n, floor_div(*p0, n), ceil_div(*p1, n)));
  for (std::int64_t p = *p0; p < *p1; ++p) out[p - out.grid().first_index()] = 1.0;
  return out;
}

// 1 on [lo, hi).
inline SampledFunction box(std::int64_t n, std::int64_t lo = 0, std::int64_t hi = 1) {
  return indicator(n, Rational(lo), Rational(hi));
}

inline SampledFunction translate(const SampledFunction& f, Rational shift) {
  const auto& g = f.grid();
  const auto cells = shift.times_integer(g.n);
  if (!cells) {
    throw Error(ErrorCode::kIncompatibleShift,
                "shift " + shift.str() + " is not a multiple of 1/" + std::to_string(g.n));
  }
  const std::int64_t lo = floor_div(g.first_index() + *cells, g.n);
  const std::int64_t hi = ceil_div(g.end_index() + *cells, g.n);
  SampledFunction out(make_grid(g.n, lo, hi));
  const std::int64_t offset = g.first_index() + *cells - out.grid().first_index();
  for (std::int64_t j = 0; j < f.size(); ++j) out[j + offset] = f[j];
  return out;
}

// Multiplies cell j by e^{2πi·c·t_j}, t_j the left endpoint of the cell.
inline SampledFunction modulate(const SampledFunction& f, Rational c) {
  SampledFunction out = f;
  const auto& g = f.grid();
  const std::int64_t den = c.den() * g.n;
  for (std::int64_t j = 0; j < f.size(); ++j) {
    const __int128 num = static_cast<__int128>(c.num()) * (g.first_index() + j);
    out[j] *= unit_phase(static_cast<std::int64_t>(num % den), den);
  }
  return out;
}

template <typename Op>
SampledFunction combine(const SampledFunction& f, const SampledFunction& g, Op op) {
  const GridSpec grid = common_grid(f.grid(), g.grid());
  SampledFunction out(grid);
  for (std::int64_t j = 0; j < out.size(); ++j) {
    const std::int64_t p = grid.first_index() + j;
    out[j] = op(f.at_global(p, grid.n), g.at_global(p, grid.n));
  }
  return out;
}

inline SampledFunction add(const SampledFunction& f, const SampledFunction& g) {
  return combine(f, g, std::plus<>{});
}

inline SampledFunction subtract(const SampledFunction& f, const SampledFunction& g) {
  return combine(f, g, std::minus<>{});
}

inline SampledFunction pointwise_mul(const SampledFunction& f, const SampledFunction& g) {
  return combine(f, g, std::multiplies<>{});
}

inline SampledFunction scale(const SampledFunction& f, Complex c) {
  SampledFunction out = f;
  for (auto& v : out.values()) v *= c;
  return out;
}

inline SampledFunction conjugate(const SampledFunction& f) {
  SampledFunction out = f;
  for (auto& v : out.values()) v = std::conj(v);
  return out;
}

// Δ·Σ f·conj(g) on the common refinement.
inline Complex l2_inner(const SampledFunction& f, const SampledFunction& g) {
  const GridSpec grid = common_grid(f.grid(), g.grid());
  Complex acc{};
  for (std::int64_t p = grid.first_index(); p < grid.end_index(); ++p) {
    acc += f.at_global(p, grid.n) * std::conj(g.at_global(p, grid.n));
  }
  return acc * grid.width();
}

inline double l2_norm(const SampledFunction& f) {
  double acc = 0.0;
  for (const auto& v : f.values()) acc += std::norm(v);
  return std::sqrt(acc * f.grid().width());
}

inline double sup_norm(const SampledFunction& f) {
  double m = 0.0;
  for (const auto& v : f.values()) m = std::max(m, std::abs(v));
  return m;
}

// Largest cellwise |f − g| on the common refinement.
inline double max_abs_diff(const SampledFunction& f, const SampledFunction& g) {
  const GridSpec grid = common_grid(f.grid(), g.grid());
  double m = 0.0;
  for (std::int64_t p = grid.first_index(); p < grid.end_index(); ++p) {
    m = std::max(m, std::abs(f.at_global(p, grid.n) - g.at_global(p, grid.n)));
  }
  return m;
}

// f̂(v) = ∫ f(t)e^{-2πitv}dt, integrating the exponential exactly over each
// cell so the result is exact for the step model.
inline Complex fourier_quadrature(const SampledFunction& f, double v) {
  const auto& g = f.grid();
  Complex acc{};
  for (std::int64_t j = 0; j < f.size(); ++j) {
    if (f[j] == Complex{}) continue;
    const double x = static_cast<double>(g.first_index() + j) / static_cast<double>(g.n) * v;
    acc += f[j] * unit_phase_minus(x);
  }
  return acc * cell_fourier_integral(v, g.width());
}

inline std::vector<Complex> fourier_quadrature(const SampledFunction& f, std::span<const double> v_grid) {
  std::vector<Complex> out;
  out.reserve(v_grid.size());
  for (double v : v_grid) out.push_back(fourier_quadrature(f, v));
  return out;
}

}  // namespace hcm
