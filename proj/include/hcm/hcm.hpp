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

// Umbrella header for the toolkit.

#pragma once

#include "hcm/bracket.hpp"
#include "hcm/error.hpp"
#include "hcm/gabor.hpp"
#include "hcm/grid.hpp"
#include "hcm/perturb.hpp"
#include "hcm/rational.hpp"
#include "hcm/windows.hpp"
#include "hcm/zak.hpp"
