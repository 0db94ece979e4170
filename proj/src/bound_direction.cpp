// Copyright 2026 The gwbounds Authors
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

#include <string>

#include "gwb/classify_f3.hpp"
#include "gwb/classify_gp.hpp"
#include "gwb/errors.hpp"
#include "gwb/fl_bounds.hpp"

namespace gwb {
namespace {

constexpr int kScanPoints = 2048;
constexpr double kScanTol = 1e-12;

BoundDirection ProvedUpper(const OffspringModel& model, const FixedPoint& fp) {
  const GapScan scan = scan_fl_gap(model, 0.0, fp.p_inf, kScanPoints, kScanTol);
  if (scan.min_value < -kScanTol) {
    throw InconsistencyError("bound_direction: " + model.describe() +
                             " is UpperOnS but phi < phi_FL somewhere on [0, P_inf]");
  }
  BoundDirection d;
  d.kind = DirectionKind::kUpperOnS;
  return d;
}

BoundDirection FromF3(const OffspringModel& model) {
  const auto& t = model.as<FiniteThree>();
  BoundDirection d;
  if (t.p3 == 0.0) {
    d.kind = DirectionKind::kUpperOnS;
    return d;
  }
  const F3Class c = classify_f3(t.p0, t.p2, t.p3);
  switch (c.region) {
    case F3Region::kLowerBoundOnP:
      d.kind = DirectionKind::kUpperOnS;
      break;
    case F3Region::kUpperBoundOnP:
      d.kind = DirectionKind::kLowerOnS;
      break;
    case F3Region::kSwitches:
      if (c.switch_n) {
        d.kind = DirectionKind::kSwitchesAt;
        d.switch_n = c.switch_n;
      } else {
        d.kind = DirectionKind::kLowerOnS;
        d.note = "switch region without an observed switch (f <= 0 on [0, P_inf])";
      }
      break;
  }
  return d;
}

BoundDirection FromScan(const OffspringModel& model, const FixedPoint& fp) {
  const GapScan scan = scan_fl_gap(model, 0.0, fp.p_inf, kScanPoints, kScanTol);
  BoundDirection d;
  d.conjectured = true;
  d.note = "outside the threshold range; classified from the sign scan";
  if (scan.min_value >= -kScanTol) {
    d.kind = DirectionKind::kUpperOnS;
  } else if (scan.max_value <= kScanTol) {
    d.kind = DirectionKind::kLowerOnS;
  } else {
    d.kind = DirectionKind::kSwitchesAt;
    d.switch_n = switch_generation(model);
  }
  return d;
}

}  // namespace

BoundDirection bound_direction(const OffspringModel& model) {
  const FixedPoint fp = extinction_probability(model);
  if (model.is<FiniteThree>()) return FromF3(model);
  if (model.is<GeneralizedPoisson>()) {
    const auto& g = model.as<GeneralizedPoisson>();
    if (g.lambda == 0.0) return ProvedUpper(model, fp);
    const double s = g.mu / (1.0 - g.lambda) - 1.0;
    try {
      return classify_gp(s, g.lambda);
    } catch (const ConvergenceError&) {
      return FromScan(model, fp);
    }
  }
  return ProvedUpper(model, fp);
}

}  // namespace gwb
