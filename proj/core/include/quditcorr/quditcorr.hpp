// Copyright 2026 The quditcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "quditcorr/bell.hpp"
#include "quditcorr/entropy.hpp"
#include "quditcorr/error.hpp"
#include "quditcorr/json_io.hpp"
#include "quditcorr/linalg.hpp"
#include "quditcorr/maps.hpp"
#include "quditcorr/monotonicity.hpp"
#include "quditcorr/optimize.hpp"
#include "quditcorr/random.hpp"
#include "quditcorr/report.hpp"
#include "quditcorr/tomography.hpp"
