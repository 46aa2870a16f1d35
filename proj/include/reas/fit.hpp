// Copyright 2026 The reas-sim Authors
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

#ifndef REAS_FIT_HPP
#define REAS_FIT_HPP

#include <optional>
#include <utility>
#include <vector>

namespace reas {

struct ScalingFit {
  double exponent = 0;
  double intercept = 0;  // log-space intercept
  double r_squared = 0;
  double window_lo = 0;
  double window_hi = 0;
  int points_used = 0;
};

// Least squares on (log x, log y); exponent = slope. Points outside the
// window are excluded. Requires at least 3 positive points in the window.
ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& points,
                         std::optional<std::pair<double, double>> window = {});

// Index of the first point whose local log-log slope falls below the
// threshold; returns points.size() when none does. Points must be sorted by x.
size_t saturation_knee(const std::vector<std::pair<double, double>>& points,
                       double slope_threshold);

}  // namespace reas

#endif  // REAS_FIT_HPP
