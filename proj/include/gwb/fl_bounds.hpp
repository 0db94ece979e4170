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

#ifndef GWB_FL_BOUNDS_HPP_
#define GWB_FL_BOUNDS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "gwb/offspring.hpp"

namespace gwb {

struct FLParams {
  double pi;
  double rho;
};

double fl_mean(const FLParams& fl);
double fl_gamma(const FLParams& fl);
double fl_pgf(const FLParams& fl, double x);
// k-th derivative of the fractional-linear pgf, k in {0,1,2,3}.
double fl_pgf_derivative(const FLParams& fl, double x, int order);
FLParams fl_params_of(const OffspringModel& model);

// Parameters of the n-fold composition.
FLParams fl_iterate_params(const FLParams& fl, int n);
// S^(n) = S_inf / (1 - m^-n (1 - S_inf)).
double fl_survival_by_n(const FLParams& fl, int n);

// Fractional-linear pgf with the same fixed point and slope there.
FLParams matching_fl(const FixedPoint& fp);

double sn_fl_bound(const OffspringModel& model, int n);
double sn_simple_bound(const OffspringModel& model, int n);
double sn_pollak_bound(const OffspringModel& model, int n);

enum class AgrestiSide { kUpper, kLower };

// v(x, m) on [0, 1); the limit value at x = 1.
double agresti_v_poisson(double m, double x);
// sup v (kUpper) or inf v (kLower).
double agresti_pi_poisson(double m, AgrestiSide side);
// S-form bound from the bounding function with the given side.
double agresti_sn_bound_poisson(double m, AgrestiSide side, int n);

struct BoundReport {
  int n;
  double exact;
  double fl_bound;
  double simple_bound;
  double pollak_bound;
  std::optional<double> agresti_bound;
};

BoundReport bound_report(const OffspringModel& model, int n);

int t_eps_exact(const OffspringModel& model, double eps);
// ln((1 + 1/eps) P_inf) / (-ln gamma), clamped at 0.
double t_eps_fl(const FixedPoint& fp, double eps);
double t_eps_fl(const FLParams& fl, double eps);
int t_app(const FixedPoint& fp, double eps);

enum class DirectionKind { kUpperOnS, kLowerOnS, kSwitchesAt, kUndetermined };
const char* direction_kind_name(DirectionKind kind);

struct BoundDirection {
  DirectionKind kind = DirectionKind::kUndetermined;
  std::optional<int> switch_n;
  bool conjectured = false;
  std::string note;
};

// f(x) = phi(x) - phi_FL(x) with the matching FL pgf.
double fl_gap(const OffspringModel& model, const FLParams& fl, double x);

struct GapScan {
  double min_value;
  double max_value;
  int sign_changes;
};
// Uniform grid of `points` nodes over [lo, hi].
GapScan scan_fl_gap(const OffspringModel& model, double lo, double hi, int points,
                    double tol = 1e-12);

// First n at which the sign of S_FL^(n) - S^(n) differs from its sign at n = 1.
std::optional<int> switch_generation(const OffspringModel& model);

BoundDirection bound_direction(const OffspringModel& model);

double bin_coeff_cf(int n, int j, int k);
double nb_coeff_cg(int r, int j, double zeta);

}  // namespace gwb

#endif  // GWB_FL_BOUNDS_HPP_
