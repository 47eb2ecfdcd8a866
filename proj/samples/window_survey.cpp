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

// Prints module norm, L2 norm and integer-lattice frame bounds for a few
// built-in windows.

#include <cstdio>

#include "hcm/hcm.hpp"

int main() {
  constexpr std::int64_t kN = 64;
  const char* specs[] = {"box", "dyadic:4", "spikes:6", "harmonic:8", "gauss:1,4"};
  std::printf("%-12s %10s %10s %10s %10s\n", "window", "hcm", "l2", "A", "B");
  for (const char* spec : specs) {
    const hcm::SampledFunction g = hcm::make_window(hcm::parse_window(spec), kN);
    const hcm::FrameBoundsReport fb = hcm::frame_bounds_zak(g);
    std::printf("%-12s %10.6f %10.6f %10.6f %10.6f\n", spec, hcm::hcm_norm(g, hcm::Rational(1)),
                hcm::l2_norm(g), fb.lower, fb.upper);
  }
  return 0;
}
