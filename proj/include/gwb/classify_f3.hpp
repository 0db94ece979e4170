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

#ifndef GWB_CLASSIFY_F3_HPP_
#define GWB_CLASSIFY_F3_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwb/offspring.hpp"

namespace gwb {

struct F3Thresholds {
  double p0_plus;
  double p0_r;
  double p0_gamma;
  bool plus_admissible;
  bool gamma_admissible;
};

enum class F3Region { kLowerBoundOnP, kSwitches, kUpperBoundOnP };
const char* f3_region_name(F3Region region);

struct F3Class {
  F3Region region;
  int case_label;           // 1..5
  std::string subcase;      // "i", "ii", "iii" in case 3, else empty
  std::array<int, 3> sign_profile;  // sign of f at 0, P/2, (P+1)/2
  F3Thresholds thresholds;
  FixedPoint fp;
  std::optional<int> switch_n;
};

F3Thresholds thresholds_f3(double p2, double p3);

// Region R: p0 > 0, p2 >= 0, p3 > 0, p0 + p2 + p3 <= 1, p0 < p2 + 2 p3.
bool in_region_f3(double p0, double p2, double p3);

// rho of the matching fractional-linear pgf.
double rho_f3(double p0, double p2, double p3);

F3Class classify_f3(double p0, double p2, double p3);

// f(x) = phi(x) - phi_FL(x) in factorized form.
std::vector<double> f3_sign_values(double p0, double p2, double p3,
                                   const std::vector<double>& xs);

struct F3Volumes {
  double lower;
  double switches;
  double upper;
  long long samples;
  std::uint64_t seed;
};

F3Volumes f3_region_volumes(long long samples, std::uint64_t seed = 42);

std::pair<FixedPoint, F3Class> f3_p3zero(double p0, double p2);

}  // namespace gwb

#endif  // GWB_CLASSIFY_F3_HPP_
