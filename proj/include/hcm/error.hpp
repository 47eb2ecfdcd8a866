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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcm {

enum class ErrorCode {
  kInvalidBounds,
  kIncompatibleShift,
  kIncompatiblePeriod,
  kIncompatibleScale,
  kIncompatibleLattice,
  kUnsupportedLattice,
  kAliasing,
  kNoValidPoints,
  kResolutionTooCoarse,
  kParse,
  kInvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidBounds: return "invalid-bounds";
    case ErrorCode::kIncompatibleShift: return "incompatible-shift";
    case ErrorCode::kIncompatiblePeriod: return "incompatible-period";
    case ErrorCode::kIncompatibleScale: return "incompatible-scale";
    case ErrorCode::kIncompatibleLattice: return "incompatible-lattice";
    case ErrorCode::kUnsupportedLattice: return "unsupported-lattice";
    case ErrorCode::kAliasing: return "aliasing-error";
    case ErrorCode::kNoValidPoints: return "no-valid-points";
    case ErrorCode::kResolutionTooCoarse: return "resolution-too-coarse";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
  }
  return "unknown";
}

// All library failures are reported through this type; code() identifies
// the failure class so front ends can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hcm
