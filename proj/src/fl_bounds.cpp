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

#include "gwb/fl_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gwb/errors.hpp"

namespace gwb {
namespace {

constexpr int kSupGrid = 4096;
constexpr double kGoldenTol = 1e-12;

void CheckFl(const FLParams& fl) {
  if (!(fl.pi > 0.0 && fl.pi < 1.0 && fl.rho > 0.0 && fl.rho < 1.0)) {
    throw DomainError("fl: pi and rho must be in (0,1)");
  }
}

double Choose(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

double PoissonPhi2(double m, double x) { return m * m * std::exp(-m * (1.0 - x)); }

template <class F>
double GoldenMin(F f, double a, double b) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a);
  double d = a + g * (b - a);
  double fc = f(c);
  double fd = f(d);
  while (b - a > kGoldenTol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return f(0.5 * (a + b));
}

}  // namespace

double fl_mean(const FLParams& fl) { return (1.0 - fl.rho) / (1.0 - fl.pi); }

double fl_gamma(const FLParams& fl) { return (1.0 - fl.pi) / (1.0 - fl.rho); }

double fl_pgf(const FLParams& fl, double x) {
  return (fl.rho + x * (1.0 - fl.pi - fl.rho)) / (1.0 - fl.pi * x);
}

double fl_pgf_derivative(const FLParams& fl, double x, int order) {
  if (order == 0) return fl_pgf(fl, x);
  double fact = 1.0;
  for (int i = 2; i <= order; ++i) fact *= i;
  return (1.0 - fl.pi) * (1.0 - fl.rho) * fact * std::pow(fl.pi, order - 1) /
         std::pow(1.0 - fl.pi * x, order + 1);
}

FLParams fl_params_of(const OffspringModel& model) {
  if (!model.is<FractionalLinear>()) throw DomainError("fl_params_of: not an FL model");
  const auto& f = model.as<FractionalLinear>();
  return FLParams{f.pi, f.rho};
}

FLParams fl_iterate_params(const FLParams& fl, int n) {
  CheckFl(fl);
  if (n < 1) throw DomainError("fl_iterate_params: n must be >= 1");
  const double m = fl_mean(fl);
  if (m == 1.0) throw DomainError("fl_iterate_params: m_FL must differ from 1");
  const double mn = std::pow(m, -n);
  const double den = fl.pi - fl.rho * mn;
  return FLParams{fl.pi * (1.0 - mn) / den, fl.rho * (1.0 - mn) / den};
}

double fl_survival_by_n(const FLParams& fl, int n) {
  CheckFl(fl);
  if (!(fl.rho < fl.pi)) throw DomainError("fl_survival_by_n: requires rho < pi");
  if (n < 0) throw DomainError("fl_survival_by_n: n must be >= 0");
  const double s_inf = 1.0 - fl.rho / fl.pi;
  const double mn = std::pow(fl_mean(fl), -n);
  return s_inf / (1.0 - mn * (1.0 - s_inf));
}

FLParams matching_fl(const FixedPoint& fp) {
  const double p = fp.p_inf;
  const double g = fp.gamma;
  if (!(p > 0.0 && p < 1.0 && g > 0.0 && g < 1.0)) {
    throw DomainError("matching_fl: requires 0 < P_inf < 1 and 0 < gamma < 1");
  }
  const double pi = (1.0 - g) / (1.0 - p * g);
  return FLParams{pi, p * pi};
}

double sn_fl_bound(const OffspringModel& model, int n) {
  if (n < 0) throw DomainError("sn_fl_bound: n must be >= 0");
  const FixedPoint fp = extinction_probability(model);
  return fp.s_inf / (1.0 - std::pow(fp.gamma, n) * fp.p_inf);
}

double sn_simple_bound(const OffspringModel& model, int n) {
  if (n < 0) throw DomainError("sn_simple_bound: n must be >= 0");
  const FixedPoint fp = extinction_probability(model);
  return fp.s_inf + fp.p_inf * std::pow(fp.gamma, n);
}

double sn_pollak_bound(const OffspringModel& model, int n) {
  if (n < 1) throw DomainError("sn_pollak_bound: n must be >= 1");
  const FixedPoint fp = extinction_probability(model);
  const double g = fp.gamma;
  const double gn = std::pow(g, n);
  const double b = pgf_derivative(model, fp.p_inf, 2);
  const double d = 2.0 * (1.0 - g) * fp.p_inf /
                   (2.0 * (1.0 - g) + b * fp.p_inf * (1.0 - gn) / g);
  return fp.s_inf + d * gn;
}

double agresti_v_poisson(double m, double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("agresti_v_poisson: x must be in [0,1]");
  const OffspringModel model = OffspringModel::poisson(m);
  const FixedPoint fp = extinction_probability(model);
  const double p = fp.p_inf;
  const double g = fp.gamma;
  if (x == 1.0) {
    const double b = p * PoissonPhi2(m, p);
    return b / (2.0 * g + b);
  }
  const double f = pgf_eval(model, p * x) / p;
  return (f - 1.0 + g * (1.0 - x)) / (x * f - x + g * (1.0 - x));
}

double agresti_pi_poisson(double m, AgrestiSide side) {
  if (!(m > 1.0)) throw DomainError("agresti_pi_poisson: m must be > 1");
  std::vector<double> v(kSupGrid + 1);
  for (int i = 0; i <= kSupGrid; ++i) {
    v[i] = agresti_v_poisson(m, static_cast<double>(i) / kSupGrid);
  }
  for (int i = 1; i <= kSupGrid; ++i) {
    if (v[i] > v[i - 1] + 1e-9 * std::fabs(v[i - 1])) {
      throw ConvergenceError("agresti_pi_poisson: v(x, m) is not monotone decreasing");
    }
  }
  const double sign = (side == AgrestiSide::kLower) ? 1.0 : -1.0;
  int best = 0;
  for (int i = 1; i <= kSupGrid; ++i) {
    if (sign * v[i] < sign * v[best]) best = i;
  }
  if (best == 0 || best == kSupGrid) return v[best];
  const double a = static_cast<double>(std::max(best - 1, 0)) / kSupGrid;
  const double b = static_cast<double>(std::min(best + 1, kSupGrid)) / kSupGrid;
  const double refined =
      sign * GoldenMin([&](double x) { return sign * agresti_v_poisson(m, x); }, a, b);
  return (sign * refined < sign * v[best]) ? refined : v[best];
}

double agresti_sn_bound_poisson(double m, AgrestiSide side, int n) {
  if (n < 0) throw DomainError("agresti_sn_bound_poisson: n must be >= 0");
  const FixedPoint fp = extinction_probability(OffspringModel::poisson(m));
  const double pi = agresti_pi_poisson(m, side);
  const double g = fp.gamma;
  const double rho = 1.0 - g * (1.0 - pi);
  const double q = rho / pi;
  const double gn = std::pow(g, n);
  const double y = (1.0 - gn) / (1.0 - gn / q);
  return 1.0 - fp.p_inf * y;
}

BoundReport bound_report(const OffspringModel& model, int n) {
  if (n < 1) throw DomainError("bound_report: n must be >= 1");
  BoundReport r{};
  r.n = n;
  r.exact = 1.0 - iterate_extinction(model, n);
  r.fl_bound = sn_fl_bound(model, n);
  r.simple_bound = sn_simple_bound(model, n);
  r.pollak_bound = sn_pollak_bound(model, n);
  if (model.is<Poisson>()) {
    r.agresti_bound =
        agresti_sn_bound_poisson(model.as<Poisson>().m, AgrestiSide::kLower, n);
  }
  return r;
}

int t_eps_exact(const OffspringModel& model, double eps) {
  if (!(eps > 0.0)) throw DomainError("t_eps_exact: eps must be > 0");
  const FixedPoint fp = extinction_probability(model);
  const double target = (1.0 + eps) * fp.s_inf;
  const int cap = max_iter(10000000);
  double x = 0.0;
  for (int n = 1; n <= cap; ++n) {
    x = pgf_eval(model, x);
    if (1.0 - x <= target) return n;
  }
  throw ConvergenceError("t_eps_exact: iteration cap exceeded");
}

double t_eps_fl(const FixedPoint& fp, double eps) {
  if (!(eps > 0.0)) throw DomainError("t_eps_fl: eps must be > 0");
  const double arg = (1.0 + 1.0 / eps) * fp.p_inf;
  if (arg <= 1.0) return 0.0;
  return std::log(arg) / -std::log(fp.gamma);
}

double t_eps_fl(const FLParams& fl, double eps) {
  CheckFl(fl);
  const double p = fl.rho / fl.pi;
  return t_eps_fl(FixedPoint{p, 1.0 - p, fl_gamma(fl)}, eps);
}

int t_app(const FixedPoint& fp, double eps) {
  return static_cast<int>(std::ceil(t_eps_fl(fp, eps)));
}

const char* direction_kind_name(DirectionKind kind) {
  switch (kind) {
    case DirectionKind::kUpperOnS:
      return "UpperOnS";
    case DirectionKind::kLowerOnS:
      return "LowerOnS";
    case DirectionKind::kSwitchesAt:
      return "SwitchesAt";
    case DirectionKind::kUndetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

double fl_gap(const OffspringModel& model, const FLParams& fl, double x) {
  return detail::pgf_derivative_ext(model, x, 0) - fl_pgf(fl, x);
}

GapScan scan_fl_gap(const OffspringModel& model, double lo, double hi, int points,
                    double tol) {
  if (points < 2) throw DomainError("scan_fl_gap: points must be >= 2");
  const FLParams fl = matching_fl(extinction_probability(model));
  GapScan out{std::numeric_limits<double>::infinity(),
              -std::numeric_limits<double>::infinity(), 0};
  int last = 0;
  for (int i = 0; i < points; ++i) {
    const double x = lo + (hi - lo) * i / (points - 1);
    const double f = fl_gap(model, fl, x);
    out.min_value = std::min(out.min_value, f);
    out.max_value = std::max(out.max_value, f);
    const int sign = (f > tol) ? 1 : ((f < -tol) ? -1 : 0);
    if (sign != 0) {
      if (last != 0 && sign != last) ++out.sign_changes;
      last = sign;
    }
  }
  return out;
}

std::optional<int> switch_generation(const OffspringModel& model) {
  const FixedPoint fp = extinction_probability(model);
  const int cap = max_iter(100000);
  double x = 0.0;
  double gn = 1.0;
  int first = 0;
  for (int n = 1; n <= cap; ++n) {
    x = pgf_eval(model, x);
    gn *= fp.gamma;
    if (gn < 1e-12) break;
    const double bound = fp.s_inf / (1.0 - gn * fp.p_inf);
    const double d = bound - (1.0 - x);
    if (std::fabs(d) < 1e-16) continue;
    const int sign = d > 0.0 ? 1 : -1;
    if (first == 0) {
      first = sign;
    } else if (sign != first) {
      return n;
    }
  }
  return std::nullopt;
}

double bin_coeff_cf(int n, int j, int k) {
  if (n < 2 || j < 0 || k < 0 || j > n - 2 || k > n - 2) {
    throw DomainError("bin_coeff_cf: requires 0 <= j, k <= n - 2");
  }
  return Choose(n, j + 2) * (k + 1) - n * Choose(k + 1, j + 2);
}

double nb_coeff_cg(int r, int j, double zeta) {
  if (r < 1 || j < 0 || j > r - 1) throw DomainError("nb_coeff_cg: requires 0 <= j <= r - 1");
  if (!(zeta > 0.0 && zeta < 1.0)) throw DomainError("nb_coeff_cg: zeta must be in (0,1)");
  double sum = 0.0;
  for (int k = 0; k <= r - 2; ++k) {
    sum += std::pow(zeta, k) * (k + 1) *
           (2.0 * r * (1 + j) - static_cast<double>(2 + j) * k - 2.0);
  }
  sum += std::pow(zeta, r - 1) / (1.0 - zeta) * r * (r + 1) * j;
  return sum / (2.0 * (j + 2));
}

}  // namespace gwb
