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

// Batch front end: hcmtool <command> [flags]. Every run prints one JSON report
// on stdout. Exit status is 0 on success, 2 on a parse error and 3 when the
// grid or lattice is incompatible with the request.

#pragma once

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hcm/hcm.hpp"
#include "hcm/io.hpp"

namespace hcm::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct Options {
  std::string window = "box";
  std::string file;
  std::int64_t n = 16;
  std::string a = "1";
  std::string b = "1";
  std::int64_t q = 0;
  std::int64_t trials = 64;
  std::uint64_t seed = 0;
  std::string csv;
  std::string json;
  // command specific
  std::int64_t n_v = 0;
  std::string with;
  std::string shift = "0";
  std::int64_t terms = 10;
  std::string mode = "multiplicative";
  std::string other = "box";
  double other_scale = 1.0;
  std::string dev = "box";
  double dev_scale = 0.2;
  std::string demo;
};

namespace detail {

inline SampledFunction load_window(const Options& opt) {
  if (!opt.file.empty()) {
    std::ifstream in(opt.file);
    if (!in) throw Error(ErrorCode::kParse, "cannot open " + opt.file);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
    return sampled_function_from_json(j);
  }
  return make_window(parse_window(opt.window), opt.n);
}

inline Json window_inputs(const Options& opt) {
  Json j;
  if (!opt.file.empty()) {
    j["file"] = opt.file;
  } else {
    j["window"] = opt.window;
  }
  j["n"] = opt.n;
  return j;
}

inline double harmonic_number(std::int64_t k) {
  double h = 0.0;
  for (std::int64_t i = k; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

inline Json run_zak(const Options& opt, Json& inputs) {
  const SampledFunction f = load_window(opt);
  inputs["n_v"] = opt.n_v;
  const ZakImage z = zak(f, opt.n_v);
  if (!opt.csv.empty()) {
    std::ofstream out(opt.csv);
    out << zak_magnitude_csv(z);
  }
  return Json{{"image", z},
              {"sup_abs", zak_sup(z)},
              {"inf_abs", zak_inf(z)},
              {"energy", zak_energy(z)},
              {"l2_norm_squared", l2_norm(f) * l2_norm(f)}};
}

inline Json run_bounds(const Options& opt, Json& inputs) {
  const SampledFunction g = load_window(opt);
  const GaborLattice lat = make_lattice(Rational::parse(opt.a), Rational::parse(opt.b), g.n());
  inputs["a"] = lat.a.str();
  inputs["b"] = lat.b.str();
  const bool multiplier = lat.b == Rational(1) && lat.a.num() == 1;
  if (multiplier) {
    const std::int64_t q = lat.a.den();
    if (opt.q != 0 && opt.q != q) {
      throw Error(ErrorCode::kIncompatibleLattice, "--q " + std::to_string(opt.q) + " disagrees with a = " + lat.a.str());
    }
    inputs["q"] = q;
    return q == 1 ? Json(frame_bounds_zak(g)) : Json(frame_bounds_multiplier(g, q));
  }
  inputs["trials"] = opt.trials;
  inputs["seed"] = opt.seed;
  return aframe_bounds_empirical(g, lat, opt.trials, opt.seed);
}

inline Json run_bracket(const Options& opt, Json& inputs) {
  const SampledFunction f = load_window(opt);
  const SampledFunction other = opt.with.empty() ? f : make_window(parse_window(opt.with), opt.n);
  const Rational shift = Rational::parse(opt.shift);
  const Rational period = Rational::parse(opt.a);
  inputs["with"] = opt.with.empty() ? Json(nullptr) : Json(opt.with);
  inputs["shift"] = shift.str();
  inputs["period"] = period.str();
  const PeriodicSample br = bracket(f, translate(other, shift), period);
  double lo = br.values.front().real(), hi = lo, spread = 0.0;
  for (const auto& v : br.values) {
    lo = std::min(lo, v.real());
    hi = std::max(hi, v.real());
    spread = std::max(spread, std::abs(v - br.values.front()));
  }
  return Json{{"bracket", br}, {"min_real", lo}, {"max_real", hi}, {"constant", spread <= 1e-12}};
}

inline Json run_norms(const Options& opt, Json& inputs) {
  const SampledFunction f = load_window(opt);
  const Rational period = Rational(1) / Rational::parse(opt.b);
  inputs["period"] = period.str();
  return norm_report(f, period);
}

inline Json run_bessel(const Options& opt, Json& inputs) {
  const SampledFunction g = load_window(opt);
  inputs["terms"] = opt.terms;
  const CcjPartialSums sums = ccj_partial_sums(g, opt.terms);
  std::vector<double> increments;
  bool monotone = true;
  for (std::size_t k = 0; k < sums.one_sided.size(); ++k) {
    const double prev = k == 0 ? 0.0 : sums.one_sided[k - 1];
    increments.push_back(sums.one_sided[k] - prev);
    if (increments.back() <= 0.0) monotone = false;
  }
  return Json{{"xz_norm", bessel_xz_norm(g)},
              {"hcm_norm", hcm_norm(g, Rational(1))},
              {"ccj_two_sided", sums.two_sided},
              {"ccj_one_sided", sums.one_sided},
              {"ccj_squares", sums.squares},
              {"increments", increments},
              {"monotone_growth", monotone},
              {"nonnegative_real", sums.nonnegative_real}};
}

inline Json run_perturb(const Options& opt, Json& inputs) {
  const SampledFunction g = load_window(opt);
  const GaborLattice lat = make_lattice(Rational::parse(opt.a), Rational::parse(opt.b), g.n());
  inputs["a"] = lat.a.str();
  inputs["b"] = lat.b.str();
  inputs["mode"] = opt.mode;
  Json out;
  SampledFunction perturbed = g;
  if (opt.mode == "multiplicative") {
    const SampledFunction dev = scale(make_window(parse_window(opt.dev), opt.n), opt.dev_scale);
    inputs["dev"] = opt.dev;
    inputs["dev_scale"] = opt.dev_scale;
    out["certificate"] = multiplicative_certify(g, dev, lat);
    perturbed = multiplicative_window(g, dev);
  } else if (opt.mode == "additive") {
    const SampledFunction h = scale(make_window(parse_window(opt.other), opt.n), opt.other_scale);
    inputs["other"] = opt.other;
    inputs["other_scale"] = opt.other_scale;
    out["certificate"] = additive_certify(g, h, lat);
    perturbed = h;
  } else {
    throw Error(ErrorCode::kParse, "unknown perturbation mode '" + opt.mode + "'");
  }
  if (lat.b == Rational(1) && lat.a.num() == 1) {
    out["perturbed_bounds"] = lat.a.den() == 1 ? frame_bounds_zak(perturbed) : frame_bounds_multiplier(perturbed, lat.a.den());
  }
  return out;
}

// ---- demos --------------------------------------------------------------

inline Json demo_dyadic_frame() {
  constexpr std::int64_t kK = 10;
  constexpr std::int64_t kN = 2048;
  const SampledFunction g = make_window(window::DyadicLadder{kK}, kN);
  const ZakImage z = zak(g);
  double covered_defect = 0.0, uncovered_max = 0.0;
  for (std::int64_t i = 0; i < z.n_t; ++i) {
    for (std::int64_t j = 0; j < z.n_v; ++j) {
      if (i == 0) {
        uncovered_max = std::max(uncovered_max, std::abs(z(i, j)));
      } else {
        covered_defect = std::max(covered_defect, std::abs(std::abs(z(i, j)) - 1.0));
      }
    }
  }
  std::vector<SampledFunction> family;
  std::vector<double> xz;
  for (std::int64_t k = 0; k <= kK; ++k) {
    family.push_back(make_window(window::DyadicLadder{k}, kN));
    xz.push_back(bessel_xz_norm(family.back()));
  }
  const auto tails = tail_norms(family, Rational(1));
  const FrameBoundsReport bounds = frame_bounds_zak(g);
  bool pass = covered_defect <= 1e-12 && uncovered_max <= 1e-12;
  for (double t : tails) pass = pass && std::abs(t - 1.0) <= 1e-12;
  for (double x : xz) pass = pass && std::abs(x - 1.0) <= 1e-12;
  return Json{{"K", kK},
              {"n", kN},
              {"covered_abs_defect", covered_defect},
              {"uncovered_max_abs", uncovered_max},
              {"tail_norms", tails},
              {"xz_norms", xz},
              {"bounds", bounds},
              {"pass", pass}};
}

inline Json demo_harmonic_not_bessel() {
  constexpr std::int64_t kComb = 1000000;
  constexpr std::int64_t kTerms = 10;
  const SampledFunction g = make_window(window::HarmonicComb{kComb}, 1);
  const CcjPartialSums sums = ccj_partial_sums(g, kTerms);
  std::vector<double> brackets, expected;
  double tail_budget = 0.0;
  for (std::int64_t k = 1; k <= kTerms; ++k) {
    brackets.push_back(bracket(g, translate(g, Rational(k)), Rational(1)).values.front().real());
    expected.push_back(harmonic_number(k) / static_cast<double>(k));
    tail_budget += 1.0 / static_cast<double>(kComb - k + 1);
  }
  const double h = harmonic_number(kTerms);
  double h2 = 0.0;
  for (std::int64_t k = 1; k <= kTerms; ++k) h2 += 1.0 / static_cast<double>(k * k);
  const double closed_form = (h * h + h2) / 2.0;
  bool monotone = true;
  for (std::size_t k = 1; k < sums.one_sided.size(); ++k) monotone = monotone && sums.one_sided[k] > sums.one_sided[k - 1];
  double square_bound = 0.0;
  for (double e : expected) square_bound += e * e;
  const double s10 = sums.one_sided.back();
  const bool pass = std::abs(s10 - closed_form) <= tail_budget + 1e-12 && monotone &&
                    sums.squares.back() <= square_bound + 1e-12;
  return Json{{"comb_terms", kComb},
              {"brackets", brackets},
              {"expected_untruncated", expected},
              {"ccj_one_sided", sums.one_sided},
              {"ccj_squares", sums.squares},
              {"s_10", s10},
              {"s_10_untruncated", closed_form},
              {"truncation_budget", tail_budget},
              {"monotone_growth", monotone},
              {"pass", pass}};
}

inline Json demo_spikes_unbounded() {
  constexpr std::int64_t kN = 1024;
  Json rows = Json::array();
  bool pass = true;
  for (std::int64_t k = 2; k <= 12; ++k) {
    const SampledFunction f = make_window(window::Spikes{k}, kN);
    const double hcm2 = hcm_norm_squared(f, Rational(1));
    const double l2sq = l2_norm(f) * l2_norm(f);
    const double sup = sup_norm(f);
    pass = pass && hcm2 == static_cast<double>(k) && sup == 1.0 && l2sq <= std::numbers::pi * std::numbers::pi / 6.0;
    rows.push_back(Json{{"K", k}, {"hcm_squared", hcm2}, {"sup", sup}, {"l2_squared", l2sq}});
  }
  return Json{{"n", kN}, {"rows", rows}, {"pass", pass}};
}

inline Json demo_cusp_fourier() {
  constexpr std::int64_t kN = 4096;
  const SampledFunction f = make_window(window::Cusp{}, kN);
  const double at_zero = std::abs(fourier_quadrature(f, 0.0));
  double inner_max = 0.0;
  for (int i = 0; i < 1024; ++i) {
    const double v = -1.0 + 2.0 * i / 1023.0;
    inner_max = std::max(inner_max, std::abs(fourier_quadrature(f, v)));
  }
  double outer_ratio = 0.0;
  for (int i = 1; i <= 1024; ++i) {
    const double v = 1.0 + 19.0 * i / 1024.0;
    outer_ratio = std::max(outer_ratio, std::abs(fourier_quadrature(f, v)) / (2.0 * std::pow(v, -2.0 / 3.0)));
  }
  const bool pass = std::abs(at_zero - 1.5) <= 1e-6 && inner_max <= 2.0 && outer_ratio <= 1.0;
  return Json{{"n", kN},
              {"abs_fhat_0", at_zero},
              {"max_abs_fhat_inner", inner_max},
              {"max_ratio_to_envelope_outer", outer_ratio},
              {"pass", pass}};
}

inline Json demo_box_halfstep() {
  constexpr std::int64_t kN = 16;
  const SampledFunction g = box(kN);
  const FrameBoundsReport bounds = frame_bounds_multiplier(g, 2);
  const GaborLattice lat = make_lattice(Rational(1, 2), Rational(1), kN);
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  SampledFunction f(make_grid(kN, -1, 3));
  for (auto& v : f.values()) {
    const double re = normal(rng);
    v = Complex(re, normal(rng));
  }
  const double defect = max_abs_diff(frame_op_direct(f, g, lat), scale(f, 2.0));
  const bool pass = std::abs(bounds.lower - 2.0) <= 1e-12 && std::abs(bounds.upper - 2.0) <= 1e-12 && defect <= 1e-12;
  return Json{{"bounds", bounds}, {"frame_op_defect", defect}, {"pass", pass}};
}

inline Json demo_mult_perturb() {
  constexpr std::int64_t kN = 16;
  const SampledFunction g = box(kN);
  const SampledFunction dev = scale(box(kN), 0.2);
  const GaborLattice lat = make_lattice(Rational(1), Rational(1), kN);
  const PerturbationCertificate cert = multiplicative_certify(g, dev, lat);
  const FrameBoundsReport truth = frame_bounds_zak(multiplicative_window(g, dev));
  const bool pass = cert.valid && std::abs(cert.certified_lower - 0.64) <= 1e-12 &&
                    std::abs(truth.lower - 1.44) <= 1e-12 && std::abs(truth.upper - 1.44) <= 1e-12 &&
                    truth.lower >= cert.certified_lower;
  return Json{{"certificate", cert}, {"true_bounds", truth}, {"pass", pass}};
}

inline Json run_demo(const Options& opt, Json& inputs) {
  inputs = Json{{"name", opt.demo}};
  if (opt.demo == "dyadic-frame") return demo_dyadic_frame();
  if (opt.demo == "harmonic-not-bessel") return demo_harmonic_not_bessel();
  if (opt.demo == "spikes-unbounded") return demo_spikes_unbounded();
  if (opt.demo == "cusp-fourier") return demo_cusp_fourier();
  if (opt.demo == "box-halfstep") return demo_box_halfstep();
  if (opt.demo == "mult-perturb") return demo_mult_perturb();
  throw Error(ErrorCode::kParse, "unknown demo '" + opt.demo + "'");
}

inline int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kInvalidArgument:
      return 2;
    default:
      return 3;
  }
}

}  // namespace detail

// Runs one command. args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Bracket-product and Zak toolkit for Gabor systems", "hcmtool"};
  app.require_subcommand(1);

  const auto add_window = [&](CLI::App* sub) {
    auto* w = sub->add_option("--window", opt.window, "built-in window spec");
    auto* f = sub->add_option("--file", opt.file, "SampledFunction JSON file");
    w->excludes(f);
    sub->add_option("--n", opt.n, "samples per unit")->check(CLI::PositiveNumber);
    sub->add_option("--json", opt.json, "also write the report here");
  };
  const auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--a", opt.a, "time step P/Q");
    sub->add_option("--b", opt.b, "frequency step P/Q");
    sub->add_option("--q", opt.q, "multiplier order for a = 1/q");
    sub->add_option("--trials", opt.trials, "empirical trials")->check(CLI::PositiveNumber);
    sub->add_option("--seed", opt.seed, "empirical seed");
  };

  auto* zak_cmd = app.add_subcommand("zak", "Zak transform of a window");
  add_window(zak_cmd);
  zak_cmd->add_option("--nv", opt.n_v, "v samples (default: support length)");
  zak_cmd->add_option("--csv", opt.csv, "write |Z| as CSV");

  auto* bounds_cmd = app.add_subcommand("bounds", "frame bounds of (g, a, b)");
  add_window(bounds_cmd);
  add_lattice(bounds_cmd);

  auto* bracket_cmd = app.add_subcommand("bracket", "bracket product <f, T_s h>_a");
  add_window(bracket_cmd);
  bracket_cmd->add_option("--with", opt.with, "second window (default: same)");
  bracket_cmd->add_option("--shift", opt.shift, "translate the second window by P/Q");
  bracket_cmd->add_option("--a", opt.a, "period P/Q");

  auto* norms_cmd = app.add_subcommand("norms", "module, L2, sup and amalgam norms");
  add_window(norms_cmd);
  norms_cmd->add_option("--b", opt.b, "frequency step; the module period is 1/b");

  auto* bessel_cmd = app.add_subcommand("bessel", "X_Z norm and autocorrelation partial sums");
  add_window(bessel_cmd);
  bessel_cmd->add_option("--terms", opt.terms, "number of partial sums")->check(CLI::PositiveNumber);

  auto* perturb_cmd = app.add_subcommand("perturb", "perturbation certificate");
  add_window(perturb_cmd);
  add_lattice(perturb_cmd);
  perturb_cmd->add_option("--mode", opt.mode, "multiplicative or additive");
  perturb_cmd->add_option("--dev", opt.dev, "deviation window f - 1 (multiplicative)");
  perturb_cmd->add_option("--dev-scale", opt.dev_scale, "scale of the deviation window");
  perturb_cmd->add_option("--other", opt.other, "perturbed window h (additive)");
  perturb_cmd->add_option("--other-scale", opt.other_scale, "scale of the perturbed window");

  auto* demo_cmd = app.add_subcommand("demo", "reproduce a named example");
  demo_cmd->add_option("name", opt.demo, "dyadic-frame | harmonic-not-bessel | spikes-unbounded | "
                                         "cusp-fourier | box-halfstep | mult-perturb")
      ->required();
  demo_cmd->add_option("--json", opt.json, "also write the report here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  const auto start = std::chrono::steady_clock::now();
  Json inputs = detail::window_inputs(opt);
  Json results;
  try {
    if (command == "zak") results = detail::run_zak(opt, inputs);
    else if (command == "bounds") results = detail::run_bounds(opt, inputs);
    else if (command == "bracket") results = detail::run_bracket(opt, inputs);
    else if (command == "norms") results = detail::run_norms(opt, inputs);
    else if (command == "bessel") results = detail::run_bessel(opt, inputs);
    else if (command == "perturb") results = detail::run_perturb(opt, inputs);
    else results = detail::run_demo(opt, inputs);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return detail::exit_code(e.code());
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const Json report{{"tool_version", kToolVersion},
                    {"command", command},
                    {"inputs", inputs},
                    {"results", results},
                    {"timing_ms", elapsed}};
  const std::string text = report.dump(2);
  out << text << "\n";
  if (!opt.json.empty()) {
    std::ofstream file(opt.json);
    file << text << "\n";
  }
  return 0;
}

}  // namespace hcm::cli
