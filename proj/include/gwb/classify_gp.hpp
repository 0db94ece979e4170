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

#ifndef GWB_CLASSIFY_GP_HPP_
#define GWB_CLASSIFY_GP_HPP_

#include "gwb/fl_bounds.hpp"
#include "gwb/offspring.hpp"

namespace gwb {

struct GPThresholds {
  double s;
  double lambda_c0;
  double lambda_c1;
  double lambda_c2;
  double approx_c0;
  double approx_c1;
  double approx_c2;
};

// Generalized Poisson with mean 1 + s: mu = (1 + s)(1 - lambda).
OffspringModel gp_model(double s, double lambda);

// phi_GP(0) - phi_FL(0).
double gp_f0(double s, double lambda);
// (1 + s) gamma - 1.
double gp_c1_quantity(double s, double lambda);
// phi_GP''(P_inf) - phi_FL''(P_inf).
double gp_f2_at_p(double s, double lambda);
// Same quantity by a Richardson-extrapolated central second difference.
double gp_f2_at_p_numeric(double s, double lambda, double h = 1e-4);

GPThresholds gp_thresholds(double s);

BoundDirection classify_gp(double s, double lambda);

}  // namespace gwb

#endif  // GWB_CLASSIFY_GP_HPP_
