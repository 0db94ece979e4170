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

#include "gwb/classify_f3.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gwb/errors.hpp"
#include "gwb/fl_bounds.hpp"

namespace gwb {
namespace {

constexpr double kTie = 1e-12;
constexpr double kScanTol = 1e-12;
constexpr int kScanPoints = 4096;

F3Region RegionOf(double p0, const F3Thresholds& t) {
  if (p0 >= t.p0_r - kTie) return F3Region::kLowerBoundOnP;
  if (p0 <= t.p0_gamma + kTie) return F3Region::kUpperBoundOnP;
  return F3Region::kSwitches;
}

int CaseOf(double p0, const F3Thresholds& t) {
  if (p0 > t.p0_r + kTie) return 1;
  if (p0 >= t.p0_r - kTie) return 2;
  if (p0 > t.p0_gamma + kTie) return 3;
  if (p0 >= t.p0_gamma - kTie) return 4;
  return 5;
}

int SignOf(double v) {
  constexpr double kZero = 1e-15;
  return v > kZero ? 1 : (v < -kZero ? -1 : 0);
}

double GapFactorized(double p2, double p3, double p, double x) {
  const double a = p2 + p3;
  const double k = a + 2.0 * p3 * p;
  const double d = p - x;
  return (1.0 - x) * d * d * (-p3 + k * (a + p3 * p + p3 * x)) / (1.0 + k * d);
}

double GapP3Zero(double p0, double p2, double x) {
  const double u = p0 - p2 * x;
  return (1.0 - x) * u * u / (1.0 + p0 - p2 * x);
}

double ExtinctionF3(double p0, double p2, double p3) {
  const double a = p2 + p3;
  return 2.0 * p0 / (std::sqrt(4.0 * p0 * p3 + a * a) + a);
}

void CheckRegion(double p0, double p2, double p3) {
  if (!in_region_f3(p0, p2, p3)) {
    throw DomainError(
        "f3: (p0,p2,p3) outside region R (p0>0, p2>=0, p3>0, p0+p2+p3<=1, p0<p2+2p3)");
  }
}

}  // namespace

const char* f3_region_name(F3Region region) {
  switch (region) {
    case F3Region::kLowerBoundOnP:
      return "LowerBoundOnP";
    case F3Region::kSwitches:
      return "Switches";
    case F3Region::kUpperBoundOnP:
      return "UpperBoundOnP";
  }
  return "Switches";
}

F3Thresholds thresholds_f3(double p2, double p3) {
  if (!(p3 > 0.0)) throw DomainError("thresholds_f3: p3 must be > 0");
  if (!(p2 >= 0.0)) throw DomainError("thresholds_f3: p2 must be >= 0");
  const double a = p2 + p3;
  const double b = p2 + 3.0 * p3;
  F3Thresholds t{};
  t.p0_plus = (p3 - a * a) / (4.0 * p3);
  t.p0_r = 0.5 - (a / (8.0 * p3)) * (a + std::sqrt(8.0 * p3 + a * a));
  t.p0_gamma =
      0.5 - (2.0 * a * a + b * std::sqrt(8.0 * p3 + b * b) - b * b) / (8.0 * p3);
  t.plus_admissible = t.p0_plus > 0.0;
  t.gamma_admissible = t.p0_gamma > 0.0;
  return t;
}

bool in_region_f3(double p0, double p2, double p3) {
  return p0 > 0.0 && p2 >= 0.0 && p3 > 0.0 && p0 + p2 + p3 <= 1.0 + 1e-15 &&
         p0 < p2 + 2.0 * p3;
}

double rho_f3(double p0, double p2, double p3) {
  const double a = p2 + p3;
  const double d = std::sqrt(4.0 * p0 * p3 + a * a);
  return 2.0 * p0 * d / (a + (1.0 + 2.0 * p0) * d);
}

std::vector<double> f3_sign_values(double p0, double p2, double p3,
                                   const std::vector<double>& xs) {
  if (p3 == 0.0) {
    if (!(p0 > 0.0 && p0 < p2 && p0 + p2 <= 1.0)) {
      throw DomainError("f3: p3 = 0 requires 0 < p0 < p2 and p0 + p2 <= 1");
    }
  } else {
    CheckRegion(p0, p2, p3);
  }
  const double p = ExtinctionF3(p0, p2, p3);
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) {
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("f3_sign_values: x must be in [0,1]");
    out.push_back(p3 == 0.0 ? GapP3Zero(p0, p2, x) : GapFactorized(p2, p3, p, x));
  }
  return out;
}

F3Class classify_f3(double p0, double p2, double p3) {
  CheckRegion(p0, p2, p3);
  const OffspringModel model = OffspringModel::finite_three(p0, p2, p3);
  F3Class c{};
  c.fp = extinction_probability(model);
  c.thresholds = thresholds_f3(p2, p3);
  c.region = RegionOf(p0, c.thresholds);
  c.case_label = CaseOf(p0, c.thresholds);
  if (c.case_label == 3) {
    const double plus = c.thresholds.p0_plus;
    c.subcase = p0 > plus + kTie ? "i" : (p0 >= plus - kTie ? "ii" : "iii");
  }
  const double p = c.fp.p_inf;
  const auto prof = f3_sign_values(p0, p2, p3, {0.0, 0.5 * p, 0.5 * (p + 1.0)});
  for (int i = 0; i < 3; ++i) c.sign_profile[i] = SignOf(prof[i]);

  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  int changes = 0;
  int last = 0;
  for (int i = 0; i < kScanPoints; ++i) {
    const double x = static_cast<double>(i) / (kScanPoints - 1);
    const double f = GapFactorized(p2, p3, p, x);
    lo = std::min(lo, f);
    hi = std::max(hi, f);
    const int s = f > kScanTol ? 1 : (f < -kScanTol ? -1 : 0);
    if (s != 0) {
      if (last != 0 && s != last) ++changes;
      last = s;
    }
  }
  const double f0 = GapFactorized(p2, p3, p, 0.0);
  bool ok = true;
  switch (c.region) {
    case F3Region::kLowerBoundOnP:
      ok = lo >= -kScanTol;
      break;
    case F3Region::kUpperBoundOnP:
      ok = hi <= kScanTol;
      break;
    case F3Region::kSwitches:
      ok = changes <= 1 && f0 <= kScanTol;
      break;
  }
  if (!ok) {
    throw InconsistencyError("classify_f3: threshold class " +
                             std::string(f3_region_name(c.region)) +
                             " disagrees with the sign scan of f");
  }
  if (c.region == F3Region::kSwitches) c.switch_n = switch_generation(model);
  return c;
}

F3Volumes f3_region_volumes(long long samples, std::uint64_t seed) {
  if (samples < 1) throw DomainError("f3_region_volumes: samples must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  long long counts[3] = {0, 0, 0};
  long long accepted = 0;
  while (accepted < samples) {
    const double p0 = unif(rng);
    const double p2 = unif(rng);
    const double p3 = unif(rng);
    if (!(p3 > 0.0) || !in_region_f3(p0, p2, p3)) continue;
    ++accepted;
    ++counts[static_cast<int>(RegionOf(p0, thresholds_f3(p2, p3)))];
  }
  const double n = static_cast<double>(samples);
  const double lower = counts[0] / n;
  const double switches = counts[1] / n;
  return F3Volumes{lower, switches, 1.0 - lower - switches, samples, seed};
}

std::pair<FixedPoint, F3Class> f3_p3zero(double p0, double p2) {
  if (!(p0 > 0.0 && p0 < p2 && p0 + p2 <= 1.0)) {
    throw DomainError("f3_p3zero: requires 0 < p0 < p2 and p0 + p2 <= 1");
  }
  const double p = p0 / p2;
  const FixedPoint fp{p, 1.0 - p, 1.0 + p0 - p2};
  F3Class c{};
  c.fp = fp;
  c.region = F3Region::kLowerBoundOnP;
  c.case_label = 1;
  const double nan = std::numeric_limits<double>::quiet_NaN();
  c.thresholds = F3Thresholds{nan, nan, nan, false, false};
  const double xs[3] = {0.0, 0.5 * p, 0.5 * (p + 1.0)};
  for (int i = 0; i < 3; ++i) c.sign_profile[i] = SignOf(GapP3Zero(p0, p2, xs[i]));
  return {fp, c};
}

}  // namespace gwb
