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

#ifndef GWB_SPECFUN_HPP_
#define GWB_SPECFUN_HPP_

namespace gwb {

struct ToleranceConfig {
  double abs_tol = 1e-14;
  int max_iter = 100;
};

// Principal branch of w * exp(w) = z, z >= -1/e.
double lambert_w0(double z, const ToleranceConfig& tol = {});

// E1(x) = int_x^inf exp(-t) / t dt, x > 0.
double exp_integral_e1(double x);

// exp(x) * E1(x), evaluated without forming exp(x) for large x.
double exp_e1(double x);

// Tail t of the continued fraction exp(x) E1(x) = 1 / (x + 1 - t), with
// t = 1 / (x + 3 - 4 / (x + 5 - 9 / (x + 7 - ...))). Valid for x >= 1.
double e1_cf_tail(double x);

}  // namespace gwb

#endif  // GWB_SPECFUN_HPP_
