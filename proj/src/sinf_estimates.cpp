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

#include "gwb/sinf_estimates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "gwb/classify_gp.hpp"
#include "gwb/errors.hpp"

namespace gwb {
namespace {

void CheckS(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) throw DomainError("series: s must be > 0");
}

// mu_k0 = a_k, mu_k1 = k a_k, mu_k2 = k (k - 1) a_k for phi^(k)(1; s) = a_k (1 + s)^k.
MuDerivatives PowerFamily(double a2, double a3, double a4) {
  return MuDerivatives{a2, 2.0 * a2, 2.0 * a2, a3, 3.0 * a3, a4};
}

}  // namespace

FamilySpec FamilySpec::poisson() { return FamilySpec{}; }

FamilySpec FamilySpec::binomial(int n) {
  FamilySpec f;
  f.family = SeriesFamily::kBinomial;
  f.n = n;
  return f;
}

FamilySpec FamilySpec::neg_binomial(int r) {
  FamilySpec f;
  f.family = SeriesFamily::kNegBinomial;
  f.r = r;
  return f;
}

FamilySpec FamilySpec::generalized_poisson(double lambda) {
  FamilySpec f;
  f.family = SeriesFamily::kGeneralizedPoisson;
  f.lambda = lambda;
  return f;
}

FamilySpec FamilySpec::fractional_linear(double pi) {
  FamilySpec f;
  f.family = SeriesFamily::kFractionalLinear;
  f.pi = pi;
  return f;
}

std::string FamilySpec::label() const {
  std::ostringstream os;
  switch (family) {
    case SeriesFamily::kPoisson:
      os << "poisson";
      break;
    case SeriesFamily::kBinomial:
      os << "binomial(n=" << n << ")";
      break;
    case SeriesFamily::kNegBinomial:
      os << "negbinomial(r=" << r << ")";
      break;
    case SeriesFamily::kGeneralizedPoisson:
      os << "gp(lambda=" << lambda << ")";
      break;
    case SeriesFamily::kFractionalLinear:
      os << "fl(pi=" << pi << ")";
      break;
  }
  return os.str();
}

OffspringModel model_at(const FamilySpec& spec, double s) {
  CheckS(s);
  switch (spec.family) {
    case SeriesFamily::kPoisson:
      return OffspringModel::poisson(1.0 + s);
    case SeriesFamily::kBinomial:
      return OffspringModel::binomial(spec.n, (1.0 + s) / spec.n);
    case SeriesFamily::kNegBinomial:
      return OffspringModel::neg_binomial(spec.r, spec.r / (spec.r + 1.0 + s));
    case SeriesFamily::kGeneralizedPoisson:
      return gp_model(s, spec.lambda);
    case SeriesFamily::kFractionalLinear:
      return OffspringModel::fractional_linear(spec.pi, spec.pi * (1.0 + s) - s);
  }
  throw DomainError("model_at: unknown family");
}

MuDerivatives mu_derivatives(const FamilySpec& spec) {
  switch (spec.family) {
    case SeriesFamily::kPoisson:
      return PowerFamily(1.0, 1.0, 1.0);
    case SeriesFamily::kBinomial: {
      if (spec.n < 2) throw DomainError("mu_derivatives: binomial n must be >= 2");
      const double n = spec.n;
      return PowerFamily((n - 1.0) / n, (n - 1.0) * (n - 2.0) / (n * n),
                         (n - 1.0) * (n - 2.0) * (n - 3.0) / (n * n * n));
    }
    case SeriesFamily::kNegBinomial: {
      if (spec.r < 1) throw DomainError("mu_derivatives: negbinomial r must be >= 1");
      const double r = spec.r;
      return PowerFamily((r + 1.0) / r, (r + 1.0) * (r + 2.0) / (r * r),
                         (r + 1.0) * (r + 2.0) * (r + 3.0) / (r * r * r));
    }
    case SeriesFamily::kGeneralizedPoisson: {
      const double l = spec.lambda;
      if (!(l >= 0.0 && l < 1.0)) throw DomainError("mu_derivatives: lambda must be in [0,1)");
      const double q = 1.0 - l;
      const double q2 = q * q;
      const double q4 = q2 * q2;
      MuDerivatives mu{};
      mu.mu20 = 1.0 / q2;
      mu.mu21 = 1.0 + 1.0 / q2;
      mu.mu22 = 2.0;
      mu.mu30 = (1.0 + 2.0 * l) / q4;
      mu.mu31 = (3.0 - 3.0 * l * l + 4.0 * l * l * l - l * l * l * l) / q4;
      mu.mu40 = (1.0 + 6.0 * l + 9.0 * l * l - l * l * l * l) / (q4 * q2);
      return mu;
    }
    case SeriesFamily::kFractionalLinear: {
      const double p = spec.pi;
      if (!(p > 0.0 && p < 1.0)) throw DomainError("mu_derivatives: pi must be in (0,1)");
      const double c = p / (1.0 - p);
      const double f2 = 2.0 * c;
      const double f3 = 6.0 * c * c;
      const double f4 = 24.0 * c * c * c;
      return MuDerivatives{f2, f2, 0.0, f3, f3, f4};
    }
  }
  throw DomainError("mu_derivatives: unknown family");
}

SeriesCoeffs sinf_series(const MuDerivatives& mu) {
  if (!(mu.mu20 > 0.0)) throw DomainError("sinf_series: mu20 must be > 0");
  const double a = mu.mu20;
  const double a2 = a * a;
  const double a3 = a2 * a;
  SeriesCoeffs c{};
  c.theta = 2.0 / a;
  c.delta2 = (6.0 * a * mu.mu21 - 4.0 * mu.mu30) / (3.0 * a3);
  c.delta3 = (18.0 * a2 * mu.mu21 * mu.mu21 - 9.0 * a3 * mu.mu22 + 16.0 * mu.mu30 * mu.mu30 -
              36.0 * a * mu.mu21 * mu.mu30 + 12.0 * a2 * mu.mu31 - 6.0 * a * mu.mu40) /
             (9.0 * a3 * a2);
  c.gamma2 = 2.0 * mu.mu30 / (3.0 * a2);
  c.gamma3 = 2.0 / (9.0 * a2 * a2) *
             (6.0 * a * mu.mu21 * mu.mu30 - 4.0 * mu.mu30 * mu.mu30 - 3.0 * a2 * mu.mu31 +
              3.0 * a * mu.mu40);
  return c;
}

double sinf_series_eval(const FamilySpec& spec, double s, int order) {
  if (order < 1 || order > 3) throw DomainError("sinf_series_eval: order must be 1, 2 or 3");
  const SeriesCoeffs c = sinf_series(mu_derivatives(spec));
  double v = c.theta * s;
  if (order >= 2) v -= c.delta2 * s * s;
  if (order >= 3) v += c.delta3 * s * s * s;
  return v;
}

double gamma_series_eval(const FamilySpec& spec, double s, int order) {
  if (order < 1 || order > 3) throw DomainError("gamma_series_eval: order must be 1, 2 or 3");
  const SeriesCoeffs c = sinf_series(mu_derivatives(spec));
  double v = 1.0 - s;
  if (order >= 2) v += c.gamma2 * s * s;
  if (order >= 3) v -= c.gamma3 * s * s * s;
  return v;
}

int t_ser(const FamilySpec& spec, double s, double eps) {
  CheckS(s);
  if (!(eps > 0.0)) throw DomainError("t_ser: eps must be > 0");
  const SeriesCoeffs c = sinf_series(mu_derivatives(spec));
  const double t = (1.0 / s - 0.5 + c.gamma2) * std::log1p(1.0 / eps) - c.theta;
  return static_cast<int>(std::ceil(t));
}

double pn_ratio_series(const FamilySpec& spec, double s, int n) {
  CheckS(s);
  if (n < 0) throw DomainError("pn_ratio_series: n must be >= 0");
  const SeriesCoeffs c = sinf_series(mu_derivatives(spec));
  const double nt = n + c.theta;
  return 1.0 - c.theta / nt +
         n * (c.theta * (n + 1.0) + 2.0 * c.delta2 - 2.0 * c.theta * c.gamma2) * s /
             (2.0 * nt * nt);
}

double beta_bound(const Moments& mo) {
  if (!(mo.m > 1.0 && mo.b > 0.0)) throw DomainError("beta_bound: requires m > 1 and b > 0");
  return 2.0 * (mo.m - 1.0) / mo.b;
}

QuineBounds quine_bounds(const OffspringModel& model, QuineMode mode) {
  const Moments mo = moments(model);
  const double beta = beta_bound(mo);
  const double b = mo.b;
  const double c = mo.c;
  const double limit =
      c > 0.0 ? std::min(1.0, 3.0 * b / (2.0 * c)) : 1.0;
  QuineBounds q{};
  q.condition_met = 2.0 * beta < limit;
  if (!q.condition_met && mode == QuineMode::kStrict) {
    throw ApplicabilityError("2*beta < min(1, 3b/(2c))", 2.0 * beta, limit);
  }
  const double x = 1.0 - 2.0 * beta;
  q.lower = x >= -1.0
                ? beta + beta * beta * detail::pgf_derivative_ext(model, x, 3) / (3.0 * b)
                : std::numeric_limits<double>::quiet_NaN();
  const double k = 1.0 - 4.0 * c * beta / (3.0 * b);
  if (k > 0.0) q.upper = beta + beta * beta * (c / (3.0 * b)) * std::pow(k, -1.5);
  return q;
}

double dn_upper(const Moments& mo) {
  const double lhs = 8.0 * mo.c * (mo.m - 1.0);
  const double rhs = 3.0 * mo.b * mo.b;
  if (!(lhs < rhs)) throw ApplicabilityError("8c(m-1) < 3b^2", lhs, rhs);
  return 4.0 * (mo.m - 1.0) /
         (mo.b + std::sqrt(mo.b * mo.b - 8.0 * mo.c * (mo.m - 1.0) / 3.0));
}

SinfBounds sinf_bounds(const FamilySpec& spec, double s) {
  const OffspringModel model = model_at(spec, s);
  const Moments mo = moments(model);
  SinfBounds out{};
  out.beta = beta_bound(mo);
  const QuineBounds q = quine_bounds(model, QuineMode::kReport);
  out.quine_lower = q.lower;
  out.quine_upper = q.upper;
  out.quine_condition_met = q.condition_met;
  try {
    out.dn_upper = dn_upper(mo);
  } catch (const ApplicabilityError& e) {
    out.dn_note = e.what();
  }
  out.series3 = sinf_series_eval(spec, s, 3);
  out.haldane = sinf_series_eval(spec, s, 1);
  out.exact = extinction_probability(model).s_inf;
  return out;
}

}  // namespace gwb
