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

#ifndef GWB_SINF_ESTIMATES_HPP_
#define GWB_SINF_ESTIMATES_HPP_

#include <optional>
#include <string>

#include "gwb/offspring.hpp"

namespace gwb {

enum class SeriesFamily {
  kPoisson,
  kBinomial,
  kNegBinomial,
  kGeneralizedPoisson,
  kFractionalLinear,
};

// Family with its non-s parameter; the mean is 1 + s.
struct FamilySpec {
  SeriesFamily family = SeriesFamily::kPoisson;
  int n = 0;
  int r = 0;
  double lambda = 0.0;
  double pi = 0.0;

  static FamilySpec poisson();
  static FamilySpec binomial(int n);
  static FamilySpec neg_binomial(int r);
  static FamilySpec generalized_poisson(double lambda);
  static FamilySpec fractional_linear(double pi);
  std::string label() const;
};

struct MuDerivatives {
  double mu20, mu21, mu22, mu30, mu31, mu40;
};

struct SeriesCoeffs {
  double theta, delta2, delta3, gamma2, gamma3;
};

// Model with parameter map: Poisson m = 1 + s, Binomial p = (1 + s)/n,
// NegBinomial p = r/(r + 1 + s), GP mu = (1 + s)(1 - lambda),
// FL rho = pi (1 + s) - s.
OffspringModel model_at(const FamilySpec& spec, double s);

MuDerivatives mu_derivatives(const FamilySpec& spec);
SeriesCoeffs sinf_series(const MuDerivatives& mu);

// theta s - delta2 s^2 + delta3 s^3 truncated at `order`.
double sinf_series_eval(const FamilySpec& spec, double s, int order);
// 1 - s + gamma2 s^2 - gamma3 s^3 truncated at `order`.
double gamma_series_eval(const FamilySpec& spec, double s, int order);

int t_ser(const FamilySpec& spec, double s, double eps);
// First-order approximation of P^(n) / P_inf.
double pn_ratio_series(const FamilySpec& spec, double s, int n);

double beta_bound(const Moments& mo);

enum class QuineMode { kStrict, kReport };

struct QuineBounds {
  double lower;
  std::optional<double> upper;
  bool condition_met;
};

// kStrict throws ApplicabilityError unless 2 beta < min(1, 3b/(2c)).
QuineBounds quine_bounds(const OffspringModel& model, QuineMode mode = QuineMode::kStrict);

// Throws ApplicabilityError unless 8c(m - 1) < 3b^2.
double dn_upper(const Moments& mo);

struct SinfBounds {
  double beta;
  double quine_lower;
  std::optional<double> quine_upper;
  bool quine_condition_met;
  std::optional<double> dn_upper;
  std::string dn_note;
  double series3;
  double haldane;
  double exact;
};

SinfBounds sinf_bounds(const FamilySpec& spec, double s);

}  // namespace gwb

#endif  // GWB_SINF_ESTIMATES_HPP_
