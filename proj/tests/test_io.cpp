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

#include <random>
#include <sstream>
#include <string>

#include "hcm/io.hpp"
#include "test_util.hpp"

namespace hcm {
namespace {

TEST(Io, SampledFunctionRoundTrip) {
  std::mt19937_64 rng(81);
  const SampledFunction f = testing::random_step(rng, 3, -2, 1);
  const Json j = f;
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("lo"), -2);
  EXPECT_EQ(j.at("hi"), 1);
  EXPECT_EQ(j.at("re").size(), 9u);
  const SampledFunction back = sampled_function_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back.grid(), f.grid());
  EXPECT_EQ(max_abs_diff(back, f), 0.0);
}

TEST(Io, ImaginaryPartOptional) {
  const Json j = Json::parse(R"({"n": 2, "lo": 0, "hi": 1, "re": [1.0, 0.5]})");
  const SampledFunction f = sampled_function_from_json(j);
  EXPECT_EQ(f[1], Complex(0.5));
}

TEST(Io, MalformedFunctionsAreParseErrors) {
  for (const char* text : {R"({"n": 2, "lo": 0, "hi": 1, "re": [1.0]})",
                           R"({"n": 2, "lo": 0, "hi": 1, "re": [1.0, 2.0], "im": [0.0]})",
                           R"({"n": 2, "lo": 0, "re": [1.0, 2.0]})",
                           R"({"n": 0, "lo": 0, "hi": 1, "re": []})",
                           R"({"n": 2, "lo": 1, "hi": 1, "re": []})",
                           R"({"n": "two", "lo": 0, "hi": 1, "re": [1, 2]})"}) {
    try {
      sampled_function_from_json(Json::parse(text));
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kParse) << text;
    }
  }
}

TEST(Io, NormReportSchema) {
  const Json j = norm_report(box(4, 0, 2));
  EXPECT_DOUBLE_EQ(j.at("hcm").get<double>(), std::sqrt(2.0));
  EXPECT_EQ(j.at("sup"), 1.0);
  EXPECT_EQ(j.at("amalgam").at("1"), 2.0);
  EXPECT_TRUE(j.at("amalgam").contains("2"));
  EXPECT_TRUE(j.at("amalgam").contains("inf"));
  EXPECT_TRUE(j.contains("l2"));
}

TEST(Io, FrameBoundsSchema) {
  const Json z = frame_bounds_zak(box(16));
  EXPECT_EQ(z.at("lower"), 1.0);
  EXPECT_EQ(z.at("upper"), 1.0);
  EXPECT_EQ(z.at("method"), "zak_unit");
  EXPECT_EQ(z.at("n"), 16);
  EXPECT_EQ(z.at("a"), "1/1");
  EXPECT_EQ(z.at("b"), "1/1");
  EXPECT_TRUE(z.at("trials").is_null());
  EXPECT_TRUE(z.at("seed").is_null());
  const Json e = aframe_bounds_empirical(box(4), make_lattice(Rational(1, 2), Rational(1, 2), 4), 3, 9);
  EXPECT_EQ(e.at("method"), "aframe_empirical");
  EXPECT_EQ(e.at("a"), "1/2");
  EXPECT_EQ(e.at("trials"), 3);
  EXPECT_EQ(e.at("seed"), 9);
}

TEST(Io, CertificateSchema) {
  const Json c = ch_bounds(1.0, 1.0, 0.04);
  for (const char* key : {"base_lower", "base_upper", "perturbation_bound", "certified_lower", "certified_upper_paper",
                          "certified_upper_conservative", "valid", "method", "empirical"}) {
    EXPECT_TRUE(c.contains(key)) << key;
  }
}

TEST(Io, PeriodicSampleSchema) {
  const Json p = bracket(box(2), box(2), Rational(1, 2));
  EXPECT_EQ(p.at("period"), "1/2");
  EXPECT_EQ(p.at("n"), 2);
  EXPECT_EQ(p.at("re").size(), 1u);
  EXPECT_EQ(p.at("re")[0], 2.0);
}

TEST(Io, ZakImageJsonAndCsv) {
  SampledFunction f(make_grid(2, 0, 2), {1.0 / 3.0, 2.0, 0.0, 0.0});
  const ZakImage z = zak(f, 3);
  const Json j = z;
  EXPECT_EQ(j.at("n_t"), 2);
  EXPECT_EQ(j.at("n_v"), 3);
  EXPECT_EQ(j.at("lambda"), "1/1");
  EXPECT_EQ(j.at("re").size(), 2u);
  EXPECT_EQ(j.at("re")[0].size(), 3u);
  EXPECT_EQ(j.at("im")[1].size(), 3u);
  const std::string csv = zak_magnitude_csv(z);
  EXPECT_EQ(csv, "0.33333333333333331,0.33333333333333331,0.33333333333333331\n2,2,2\n");
}

}  // namespace
}  // namespace hcm
