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

#include "gwb/genetics.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>

#include "gwb/errors.hpp"
#include "gwb/specfun.hpp"

namespace gwb {
namespace {

double BinomialPmf(int n, int k, double p, double log_norm) {
  if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return k == n ? 1.0 : 0.0;
  const double lp = log_norm - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0) +
                    k * std::log(p) + (n - k) * std::log1p(-p);
  return std::exp(lp);
}

void CheckTrait(const TraitModel& tm) {
  if (!(tm.theta_mut >= 0.0)) throw DomainError("trait: theta_mut must be >= 0");
  if (!(tm.alpha > 0.0)) throw DomainError("trait: alpha must be > 0");
  if (!(tm.s_sel > 0.0)) throw DomainError("trait: s must be > 0");
  if (tm.pop_size < 1) throw DomainError("trait: N must be >= 1");
}

}  // namespace

double mutant_density(double a, double x) {
  if (!(a > 0.0)) throw DomainError("mutant_density: a must be > 0");
  if (!(x >= 0.0 && x < 1.0)) throw DomainError("mutant_density: x must be in [0,1)");
  const double y = 1.0 - x;
  return a / (y * y) * std::exp(-a * x / y);
}

double within_variance(double a) {
  if (!(a > 0.0)) throw DomainError("within_variance: a must be > 0");
  if (a < 1.0) return a * (1.0 + a) * exp_e1(a) - a;
  const double t = e1_cf_tail(a);
  return a * t / (a + 1.0 - t);
}

double vg_tau(const TraitModel& tm, const OffspringModel& model, double tau) {
  CheckTrait(tm);
  if (!(tau > 0.0)) throw DomainError("vg_tau: tau must be > 0");
  const double m = moments(model).m;
  const double fit = std::exp(tm.s_sel * tm.alpha);
  if (std::fabs(m - fit) > 1e-9 * fit) {
    throw DomainError("vg_tau: model mean must equal exp(s*alpha)");
  }
  const double log_m = std::log(m);
  const long long last = static_cast<long long>(std::floor(tau + 0.5));
  double x = 0.0;
  double sum = 0.0;
  for (long long k = 0; k <= last; ++k) {
    if (k > 0) x = pgf_eval(model, x);
    const double lo = k == 0 ? 0.0 : k - 0.5;
    const double hi = std::min(k + 0.5, tau);
    if (hi <= lo) break;
    const double s_k = 1.0 - x;
    const double a = tm.pop_size * s_k * std::exp(-log_m * static_cast<double>(k));
    if (!(a > 1e-300)) break;
    sum += (hi - lo) * s_k * within_variance(a);
  }
  return tm.theta_mut * tm.alpha * tm.alpha * sum;
}

double v1_inf(double pop_size, double s_alpha, double s_inf) {
  if (!(pop_size > 0.0 && s_alpha > 0.0 && s_inf > 0.0)) {
    throw DomainError("v1_inf: arguments must be > 0");
  }
  const double x = pop_size * s_inf;
  return x * exp_e1(x) / s_alpha;
}

VgInf vg_inf(const TraitModel& tm, const FamilySpec& spec) {
  CheckTrait(tm);
  const double sa = tm.s_sel * tm.alpha;
  const OffspringModel model = model_at(spec, std::expm1(sa));
  VgInf out{};
  out.s_inf = extinction_probability(model).s_inf;
  out.v1 = v1_inf(tm.pop_size, sa, out.s_inf);
  const double a2 = tm.alpha * tm.alpha;
  out.leading = tm.theta_mut * out.s_inf * a2 * out.v1;
  const SeriesCoeffs c = sinf_series(mu_derivatives(spec));
  out.simple = tm.theta_mut * a2 * (c.theta - c.delta2 * sa);
  out.response = tm.s_sel * out.simple;
  return out;
}

double wf_fixation_exact(const WFModel& wf) {
  const int n = wf.pop_size;
  if (n < 2) throw DomainError("wf_fixation_exact: N must be >= 2");
  if (n > kWfMaxSize) {
    throw SizeError("wf_fixation_exact: N=" + std::to_string(n) +
                    " exceeds the dense solve budget of " + std::to_string(kWfMaxSize));
  }
  if (!(wf.s_sel > -1.0)) throw DomainError("wf_fixation_exact: s must be > -1");
  const double s = wf.s_sel;
  const int t = n - 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Identity(t, t);
  Eigen::VectorXd r(t);
  const double log_norm = std::lgamma(n + 1.0);
  for (int i = 1; i <= t; ++i) {
    const double x = static_cast<double>(i) / n;
    const double xp = x * (1.0 + s) / (1.0 + s * x);
    for (int j = 1; j <= t; ++j) a(i - 1, j - 1) -= BinomialPmf(n, j, xp, log_norm);
    r(i - 1) = BinomialPmf(n, n, xp, log_norm);
  }
  const Eigen::VectorXd u = a.partialPivLu().solve(r);
  return u(0);
}

double wf_fixation_diffusion(const WFModel& wf) {
  if (wf.pop_size < 1) throw DomainError("wf_fixation_diffusion: N must be >= 1");
  if (!(wf.effective_size > 0.0)) throw DomainError("wf_fixation_diffusion: Ne must be > 0");
  if (wf.s_sel == 0.0) throw DomainError("wf_fixation_diffusion: s must be nonzero");
  const double s = wf.s_sel;
  return std::expm1(-2.0 * s * wf.effective_size / wf.pop_size) /
         std::expm1(-2.0 * s * wf.effective_size);
}

double wf_fixation_A(int pop_size, double s, double a1, double a2) {
  if (pop_size < 1) throw DomainError("wf_fixation_A: N must be >= 1");
  const double a = a1 * s + a2 * s * s;
  if (a == 0.0) throw DomainError("wf_fixation_A: A(s) must be nonzero");
  return std::expm1(-a) / std::expm1(-a * pop_size);
}

double improved_a2(int pop_size, double s) {
  if (pop_size < 1 || s == 0.0) throw DomainError("improved_a2: requires N >= 1, s != 0");
  return -2.0 / 3.0 - 1.0 / (3.0 * pop_size * s);
}

double effective_size(int pop_size, const Moments& mo) {
  if (pop_size < 1 || !(mo.var > 0.0)) throw DomainError("effective_size: requires var > 0");
  return pop_size * mo.m / mo.var;
}

double scaling_exponent(double pop_size, double s, double c) {
  if (!(pop_size > 1.0 && s > 0.0 && c > 0.0) || c == s) {
    throw DomainError("scaling_exponent: requires N > 1, s > 0, C > 0, C != s");
  }
  return std::log(pop_size) / (std::log(c) - std::log(s));
}

}  // namespace gwb
