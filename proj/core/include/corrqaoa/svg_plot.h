// Copyright 2026 The corrqaoa Authors
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


#ifndef CORRQAOA_SVG_PLOT_H_
#define CORRQAOA_SVG_PLOT_H_

#include <string>
#include <vector>

#include "corrqaoa/sweep.h"

namespace corrqaoa {

/// Two-panel SVG: AR against p (one line per model and kappa, log x axis
/// when every p is positive) and AR against kappa (one line per model and
/// p). Failed records are skipped.
std::string render_svg(const std::vector<ExperimentRecord>& records);

}  // namespace corrqaoa

#endif  // CORRQAOA_SVG_PLOT_H_
