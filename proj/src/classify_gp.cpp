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

#include "gwb/classify_gp.hpp"

#include <cmath>
#include <functional>

#include "gwb/errors.hpp"

namespace gwb {
namespace {

constexpr double kLambdaHi = 0.6;
constexpr double kBisectTol = 1e-11;
constexpr double kScanTol = 1e-12;
constexpr int kScanPoints = 2048;

void CheckS(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("gp: s must be > 0");
}

void CheckLambda(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0)) throw DomainError("gp: lambda must be in [0,1)");
}

double Bisect(const std::function<double(double)>& g, const char* what) {
  double lo = 0.0;
  double hi = kLambdaHi;
  const double glo = g(lo);
  const double ghi = g(hi);
  if (!(glo * ghi < 0.0)) {
    throw ConvergenceError(std::string("gp_thresholds: no sign change of ") + what +
                           " for lambda in [0, 0.6]");
  }
  const bool lo_pos = glo > 0.0;
  const int cap = max_iter(200);
  for (int i = 0; i < cap && hi - lo > kBisectTol; ++i) {
    const double mid = 0.5 * (lo + hi);
    if ((g(mid) > 0.0) == lo_pos) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

OffspringModel gp_model(double s, double lambda) {
  CheckS(s);
  CheckLambda(lambda);
  return OffspringModel::generalized_poisson((1.0 + s) * (1.0 - lambda), lambda);
}

double gp_f0(double s, double lambda) {
  const OffspringModel model = gp_model(s, lambda);
  const FLParams fl = matching_fl(extinction_probability(model));
  return pgf_eval(model, 0.0) - fl.rho;
}

double gp_c1_quantity(double s, double lambda) {
  const FixedPoint fp = extinction_probability(gp_model(s, lambda));
  return (1.0 + s) * fp.gamma - 1.0;
}

double gp_f2_at_p(double s, double lambda) {
  const OffspringModel model = gp_model(s, lambda);
  const FixedPoint fp = extinction_probability(model);
  const FLParams fl = matching_fl(fp);
  return pgf_derivative(model, fp.p_inf, 2) - fl_pgf_derivative(fl, fp.p_inf, 2);
}

double gp_f2_at_p_numeric(double s, double lambda, double h) {
  const OffspringModel model = gp_model(s, lambda);
  const FixedPoint fp = extinction_probability(model);
  const FLParams fl = matching_fl(fp);
  const double p = fp.p_inf;
  auto d2 = [&](double step) {
    return (fl_gap(model, fl, p + step) - 2.0 * fl_gap(model, fl, p) +
            fl_gap(model, fl, p - step)) /
           (step * step);
  };
  return (4.0 * d2(0.5 * h) - d2(h)) / 3.0;
}

GPThresholds gp_thresholds(double s) {
  CheckS(s);
  GPThresholds t{};
  t.s = s;
  t.lambda_c0 = Bisect([s](double l) { return gp_f0(s, l); }, "f_GP(0)");
  t.lambda_c1 = Bisect([s](double l) { return gp_c1_quantity(s, l); }, "(1+s)gamma-1");
  t.lambda_c2 = Bisect([s](double l) { return gp_f2_at_p(s, l); }, "f_GP''(P_inf)");
  t.approx_c0 = 0.25915 + 0.1997 * s;
  t.approx_c1 = 0.25 * (1.0 + 0.75 * s);
  t.approx_c2 = 0.25 + 0.202 * s;
  return t;
}

BoundDirection classify_gp(double s, double lambda) {
  CheckS(s);
  CheckLambda(lambda);
  const OffspringModel model = gp_model(s, lambda);
  const FixedPoint fp = extinction_probability(model);
  BoundDirection d;
  if (lambda == 0.0) {
    d.kind = DirectionKind::kUpperOnS;
    d.note = "Poisson case";
  } else {
    const GPThresholds t = gp_thresholds(s);
    d.conjectured = true;
    if (lambda < t.lambda_c2) {
      d.kind = DirectionKind::kUpperOnS;
    } else if (lambda > t.lambda_c0) {
      d.kind = DirectionKind::kLowerOnS;
    } else {
      d.kind = DirectionKind::kSwitchesAt;
      d.switch_n = switch_generation(model);
      if (!d.switch_n) d.note = "no switch detected before gamma^n < 1e-12";
    }
  }
  const GapScan scan = scan_fl_gap(model, 0.0, fp.p_inf, kScanPoints, kScanTol);
  const bool ok = (d.kind == DirectionKind::kUpperOnS && scan.min_value >= -kScanTol) ||
                  (d.kind == DirectionKind::kLowerOnS && scan.max_value <= kScanTol) ||
                  d.kind == DirectionKind::kSwitchesAt;
  if (!ok) {
    throw InconsistencyError(std::string("classify_gp: class ") +
                             direction_kind_name(d.kind) +
                             " disagrees with the sign scan of f_GP on [0, P_inf]");
  }
  return d;
}

}  // namespace gwb
