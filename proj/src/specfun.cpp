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

#include "gwb/specfun.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "gwb/errors.hpp"

namespace gwb {
namespace {

constexpr double kE = 2.718281828459045;
constexpr double kInvE = 0.36787944117144233;
constexpr double kEulerGamma = 0.57721566490153286;
constexpr double kBranchSlack = 1e-15;
constexpr double kSeriesCutoff = 1e-3;
constexpr double kTiny = 1e-300;

// Expansion about the branch point in p = sqrt(2 (e z + 1)).
double BranchSeries(double p) {
  constexpr double c3 = 11.0 / 72.0;
  constexpr double c4 = -43.0 / 540.0;
  constexpr double c5 = 769.0 / 17280.0;
  constexpr double c6 = -221.0 / 8505.0;
  return -1.0 +
         p * (1.0 + p * (-1.0 / 3.0 + p * (c3 + p * (c4 + p * (c5 + p * c6)))));
}

double InitialGuess(double z, double p) {
  if (z < -0.32) return BranchSeries(p);
  if (z < 3.0) {
    const double l = std::log1p(z);
    return l * (1.0 - std::log1p(l) / (2.0 + l));
  }
  const double l = std::log(z);
  const double ll = std::log(l);
  return l - ll + ll / l;
}

double E1Series(double x) {
  double term = 1.0;
  double sum = 0.0;
  for (int k = 1; k < 200; ++k) {
    term *= -x / k;
    const double add = term / k;
    sum += add;
    if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
  }
  return -kEulerGamma - std::log(x) - sum;
}

}  // namespace

double lambert_w0(double z, const ToleranceConfig& tol) {
  if (std::isnan(z)) throw DomainError("lambert_w0: z is NaN");
  const double q = z + kInvE;
  if (q < 0.0) {
    if (q >= -kBranchSlack) return -1.0;
    throw DomainError("lambert_w0: z < -1/e (z=" + std::to_string(z) + ")");
  }
  if (z == 0.0) return 0.0;
  if (std::isinf(z)) return z;
  const double p = std::sqrt(2.0 * kE * q);
  if (p < kSeriesCutoff) return BranchSeries(p);

  double w = InitialGuess(z, p);
  for (int i = 0; i < tol.max_iter; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double dw = f / denom;
    w -= dw;
    if (std::fabs(dw) <= 1e-16 * (1.0 + std::fabs(w))) break;
  }
  const double resid = std::fabs(w * std::exp(w) - z);
  if (resid > tol.abs_tol * std::fmax(1.0, std::fabs(z))) {
    throw ConvergenceError("lambert_w0: residual above tolerance");
  }
  return w;
}

double e1_cf_tail(double x) {
  // Modified Lentz on g = b1 + a2 / (b2 + a3 / (b3 + ...)), t = 1 / g,
  // with b_k = x + 2k + 1 and a_k = -k^2.
  double f = x + 3.0;
  double c = f;
  double d = 0.0;
  for (int k = 2; k < 10000; ++k) {
    const double a = -static_cast<double>(k) * k;
    const double b = x + 2.0 * k + 1.0;
    d = b + a * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    c = b + a / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

double exp_e1(double x) {
  if (!(x > 0.0)) throw DomainError("exp_e1: x must be > 0");
  if (x < 1.0) return std::exp(x) * E1Series(x);
  if (std::isinf(x)) return 0.0;
  return 1.0 / (x + 1.0 - e1_cf_tail(x));
}

double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainError("exp_integral_e1: x must be > 0");
  if (x < 1.0) return E1Series(x);
  return std::exp(-x) * exp_e1(x);
}

}  // namespace gwb
