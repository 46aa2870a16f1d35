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

#include "reas/fit.hpp"

#include <cmath>
#include <stdexcept>

namespace reas {

ScalingFit fit_power_law(const std::vector<std::pair<double, double>>& points,
                         std::optional<std::pair<double, double>> window) {
  std::vector<std::pair<double, double>> logs;
  double lo = window ? window->first : -1e300;
  double hi = window ? window->second : 1e300;
  for (const auto& [x, y] : points) {
    if (x < lo || x > hi) continue;
    if (x <= 0 || y <= 0)
      throw std::invalid_argument("power-law fit needs positive values");
    logs.push_back({std::log(x), std::log(y)});
  }
  if (logs.size() < 3)
    throw std::invalid_argument("power-law fit needs at least 3 points in window");

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : logs) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double n = static_cast<double>(logs.size());
  double denom = n * sxx - sx * sx;
  if (std::abs(denom) < 1e-12)
    throw std::invalid_argument("degenerate x values in fit window");
  ScalingFit fit;
  fit.exponent = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.exponent * sx) / n;
  double ss_res = 0, ss_tot = 0, ybar = sy / n;
  for (const auto& [x, y] : logs) {
    double pred = fit.intercept + fit.exponent * x;
    ss_res += (y - pred) * (y - pred);
    ss_tot += (y - ybar) * (y - ybar);
  }
  fit.r_squared = ss_tot > 0 ? 1.0 - ss_res / ss_tot : 1.0;
  fit.points_used = static_cast<int>(logs.size());
  fit.window_lo = std::exp(logs.front().first);
  fit.window_hi = std::exp(logs.back().first);
  return fit;
}

size_t saturation_knee(const std::vector<std::pair<double, double>>& points,
                       double slope_threshold) {
  for (size_t i = 0; i + 1 < points.size(); ++i) {
    double dx = std::log(points[i + 1].first) - std::log(points[i].first);
    double dy = std::log(points[i + 1].second) - std::log(points[i].second);
    if (dx <= 0) throw std::invalid_argument("points must be sorted in x");
    if (dy / dx < slope_threshold) return i + 1;
  }
  return points.size();
}

}  // namespace reas
