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

// JSON and CSV serialization of the toolkit's value types.

#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "hcm/bracket.hpp"
#include "hcm/error.hpp"
#include "hcm/gabor.hpp"
#include "hcm/grid.hpp"
#include "hcm/perturb.hpp"
#include "hcm/zak.hpp"
#include "json.hpp"

namespace hcm {

using Json = nlohmann::json;

// {"n": N, "lo": lo, "hi": hi, "re": [...], "im": [...]}
inline void to_json(Json& j, const SampledFunction& f) {
  std::vector<double> re, im;
  re.reserve(static_cast<std::size_t>(f.size()));
  im.reserve(static_cast<std::size_t>(f.size()));
  for (const auto& v : f.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j = Json{{"n", f.grid().n}, {"lo", f.grid().lo}, {"hi", f.grid().hi}, {"re", re}, {"im", im}};
}

inline SampledFunction sampled_function_from_json(const Json& j) {
  try {
    const GridSpec grid = make_grid(j.at("n").get<std::int64_t>(), j.at("lo").get<std::int64_t>(),
                                    j.at("hi").get<std::int64_t>());
    const auto re = j.at("re").get<std::vector<double>>();
    const auto im = j.contains("im") ? j.at("im").get<std::vector<double>>() : std::vector<double>(re.size(), 0.0);
    if (static_cast<std::int64_t>(re.size()) != grid.cells() || im.size() != re.size()) {
      throw Error(ErrorCode::kParse, "expected " + std::to_string(grid.cells()) + " values in re and im");
    }
    std::vector<Complex> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) values[i] = Complex(re[i], im[i]);
    return SampledFunction(grid, std::move(values));
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kParse) throw;
    throw Error(ErrorCode::kParse, e.what());
  }
}

inline void to_json(Json& j, const NormReport& r) {
  j = Json{{"hcm", r.hcm},
           {"l2", r.l2},
           {"sup", r.sup},
           {"amalgam", Json{{"1", r.amalgam_1}, {"2", r.amalgam_2}, {"inf", r.amalgam_inf}}}};
}

inline void to_json(Json& j, const FrameBoundsReport& r) {
  j = Json{{"lower", r.lower},
           {"upper", r.upper},
           {"method", std::string(to_string(r.method))},
           {"n", r.grid.n},
           {"a", r.lattice.a.str()},
           {"b", r.lattice.b.str()},
           {"trials", r.trials ? Json(*r.trials) : Json(nullptr)},
           {"seed", r.seed ? Json(*r.seed) : Json(nullptr)}};
}

inline void to_json(Json& j, const PerturbationCertificate& c) {
  j = Json{{"base_lower", c.base_lower},
           {"base_upper", c.base_upper},
           {"perturbation_bound", c.perturbation_bound},
           {"certified_lower", c.certified_lower},
           {"certified_upper_paper", c.certified_upper_paper},
           {"certified_upper_conservative", c.certified_upper_conservative},
           {"valid", c.valid},
           {"method", c.r_method},
           {"empirical", c.empirical}};
}

inline void to_json(Json& j, const PeriodicSample& p) {
  std::vector<double> re, im;
  for (const auto& v : p.values) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  j = Json{{"period", p.period.str()}, {"n", p.n}, {"re", re}, {"im", im}};
}

inline void to_json(Json& j, const ZakImage& z) {
  Json re = Json::array(), im = Json::array();
  for (std::int64_t i = 0; i < z.n_t; ++i) {
    std::vector<double> row_re, row_im;
    for (std::int64_t k = 0; k < z.n_v; ++k) {
      row_re.push_back(z(i, k).real());
      row_im.push_back(z(i, k).imag());
    }
    re.push_back(row_re);
    im.push_back(row_im);
  }
  j = Json{{"n_t", z.n_t}, {"n_v", z.n_v}, {"lambda", z.lambda.str()}, {"k_origin", z.k_origin},
           {"re", re},     {"im", im}};
}

// |Z| as n_t rows of n_v comma-separated values, 17 significant digits.
inline std::string zak_magnitude_csv(const ZakImage& z) {
  std::string out;
  char buf[32];
  for (std::int64_t i = 0; i < z.n_t; ++i) {
    for (std::int64_t k = 0; k < z.n_v; ++k) {
      std::snprintf(buf, sizeof(buf), "%.17g", std::abs(z(i, k)));
      if (k > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

}  // namespace hcm
