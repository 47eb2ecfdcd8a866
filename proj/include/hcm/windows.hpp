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

// Built-in windows. Infinite series are truncated at a caller-chosen K, which
// is part of the window's identity.
//
//   box              1 on [0,1)
//   dyadic:K         Σ_{k=0}^{K} 1 on [k + 2^{-(k+1)}, k + 2^{-k})
//   spikes:K         Σ_{k=1}^{K} 1 on [k, k + 1/k²), widths rounded up to whole cells
//   harmonic:K       Σ_{n=1}^{K} (1/n)·1 on [n, n+1)
//   cusp             x^{-1/3} on [0,1), stored as exact cell averages
//   gauss:s,w        exp(-π(x/s)²) on [-w, w), sampled at cell midpoints

#pragma once

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numbers>
#include <string>
#include <string_view>
#include <variant>

#include "hcm/error.hpp"
#include "hcm/grid.hpp"

namespace hcm {

namespace window {
struct Box {};
struct DyadicLadder {
  std::int64_t k = 1;
};
struct Spikes {
  std::int64_t k = 1;
};
struct HarmonicComb {
  std::int64_t k = 1;
};
struct Cusp {};
struct Gaussian {
  double sigma = 1.0;
  std::int64_t half_width = 4;
};
}  // namespace window

using WindowKind =
    std::variant<window::Box, window::DyadicLadder, window::Spikes, window::HarmonicComb, window::Cusp, window::Gaussian>;

namespace detail {

inline SampledFunction dyadic_ladder(std::int64_t k_max, std::int64_t n) {
  if (k_max < 0) throw Error(ErrorCode::kInvalidArgument, "dyadic ladder needs K >= 0");
  if (k_max >= 62 || n % (std::int64_t{1} << (k_max + 1)) != 0) {
    throw Error(ErrorCode::kResolutionTooCoarse,
                "dyadic:" + std::to_string(k_max) + " needs a rate divisible by 2^" + std::to_string(k_max + 1));
  }
  SampledFunction f(make_grid(n, 0, k_max + 1));
  for (std::int64_t k = 0; k <= k_max; ++k) {
    const std::int64_t from = n >> (k + 1);
    const std::int64_t to = n >> k;
    for (std::int64_t r = from; r < to; ++r) f[k * n + r] = 1.0;
  }
  return f;
}

inline SampledFunction spikes(std::int64_t k_max, std::int64_t n) {
  if (k_max < 1) throw Error(ErrorCode::kInvalidArgument, "spikes need K >= 1");
  SampledFunction f(make_grid(n, 1, k_max + 1));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    const std::int64_t width = std::min(ceil_div(n, k * k), n);
    for (std::int64_t r = 0; r < width; ++r) f[(k - 1) * n + r] = 1.0;
  }
  return f;
}

inline SampledFunction harmonic_comb(std::int64_t k_max, std::int64_t n) {
  if (k_max < 1) throw Error(ErrorCode::kInvalidArgument, "harmonic comb needs K >= 1");
  SampledFunction f(make_grid(n, 1, k_max + 1));
  for (std::int64_t k = 1; k <= k_max; ++k) {
    for (std::int64_t r = 0; r < n; ++r) f[(k - 1) * n + r] = 1.0 / static_cast<double>(k);
  }
  return f;
}

inline SampledFunction cusp(std::int64_t n) {
  SampledFunction f(make_grid(n, 0, 1));
  // average of x^{-1/3} over [j/n, (j+1)/n] = (3/2)·n·(x1^{2/3} − x0^{2/3})
  const double dn = static_cast<double>(n);
  for (std::int64_t j = 0; j < n; ++j) {
    const double x0 = static_cast<double>(j) / dn;
    const double x1 = static_cast<double>(j + 1) / dn;
    f[j] = 1.5 * dn * (std::cbrt(x1 * x1) - std::cbrt(x0 * x0));
  }
  return f;
}

inline SampledFunction gaussian(double sigma, std::int64_t half_width, std::int64_t n) {
  if (!(sigma > 0.0)) throw Error(ErrorCode::kInvalidArgument, "gaussian sigma must be positive");
  if (half_width < 1) throw Error(ErrorCode::kInvalidArgument, "gaussian half width must be >= 1");
  SampledFunction f(make_grid(n, -half_width, half_width));
  for (std::int64_t j = 0; j < f.size(); ++j) {
    const double x = f.grid().left(j) + 0.5 / static_cast<double>(n);
    f[j] = std::exp(-std::numbers::pi * (x / sigma) * (x / sigma));
  }
  return f;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace detail

inline SampledFunction make_window(const WindowKind& kind, std::int64_t n) {
  if (n <= 0) throw Error(ErrorCode::kInvalidBounds, "samples per unit must be positive");
  return std::visit(detail::overloaded{
                        [&](const window::Box&) { return box(n); },
                        [&](const window::DyadicLadder& w) { return detail::dyadic_ladder(w.k, n); },
                        [&](const window::Spikes& w) { return detail::spikes(w.k, n); },
                        [&](const window::HarmonicComb& w) { return detail::harmonic_comb(w.k, n); },
                        [&](const window::Cusp&) { return detail::cusp(n); },
                        [&](const window::Gaussian& w) { return detail::gaussian(w.sigma, w.half_width, n); },
                    },
                    kind);
}

inline std::string window_spec(const WindowKind& kind) {
  return std::visit(detail::overloaded{
                        [](const window::Box&) { return std::string("box"); },
                        [](const window::DyadicLadder& w) { return "dyadic:" + std::to_string(w.k); },
                        [](const window::Spikes& w) { return "spikes:" + std::to_string(w.k); },
                        [](const window::HarmonicComb& w) { return "harmonic:" + std::to_string(w.k); },
                        [](const window::Cusp&) { return std::string("cusp"); },
                        [](const window::Gaussian& w) {
                          char buf[64];
                          std::snprintf(buf, sizeof(buf), "gauss:%.17g,%lld", w.sigma,
                                        static_cast<long long>(w.half_width));
                          return std::string(buf);
                        },
                    },
                    kind);
}

// Parses "box", "dyadic:K", "spikes:K", "harmonic:K", "cusp", "gauss:sigma,halfwidth".
inline WindowKind parse_window(std::string_view spec) {
  const auto bad = [&]() { return Error(ErrorCode::kParse, "bad window spec '" + std::string(spec) + "'"); };
  const auto to_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw bad();
    return v;
  };
  const auto to_double = [&](std::string_view s) {
    try {
      std::size_t used = 0;
      const std::string str(s);
      const double v = std::stod(str, &used);
      if (used != str.size()) throw bad();
      return v;
    } catch (const std::logic_error&) {
      throw bad();
    }
  };
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  if (name == "box" && !has_arg) return window::Box{};
  if (name == "cusp" && !has_arg) return window::Cusp{};
  if (name == "dyadic" && has_arg) return window::DyadicLadder{to_int(arg)};
  if (name == "spikes" && has_arg) return window::Spikes{to_int(arg)};
  if (name == "harmonic" && has_arg) return window::HarmonicComb{to_int(arg)};
  if (name == "gauss" && has_arg) {
    const auto comma = arg.find(',');
    if (comma == std::string_view::npos) throw bad();
    const double sigma = to_double(arg.substr(0, comma));
    const double hw = to_double(arg.substr(comma + 1));
    return window::Gaussian{sigma, static_cast<std::int64_t>(std::ceil(hw))};
  }
  throw bad();
}

}  // namespace hcm
