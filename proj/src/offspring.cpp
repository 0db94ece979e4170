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

#include "gwb/offspring.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "gwb/errors.hpp"
#include "gwb/specfun.hpp"

namespace gwb {
namespace {

constexpr double kProbSlack = 1e-14;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void Require(bool ok, const std::string& msg) {
  if (!ok) throw DomainError(msg);
}

bool Finite(double v) { return std::isfinite(v); }

double Falling(int n, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= static_cast<double>(n - i);
  return r;
}

double Rising(int r, int k) {
  double v = 1.0;
  for (int i = 0; i < k; ++i) v *= static_cast<double>(r + i);
  return v;
}

double Factorial(int k) {
  double v = 1.0;
  for (int i = 2; i <= k; ++i) v *= i;
  return v;
}

double GpDerivative(const GeneralizedPoisson& g, double x, int order) {
  const double mu = g.mu;
  const double lam = g.lambda;
  if (lam == 0.0) return std::pow(mu, order) * std::exp(-mu * (1.0 - x));
  if (x == 0.0 && order == 0) return std::exp(-mu);
  const double w = (x == 1.0) ? -lam : lambert_w0(-x * lam * std::exp(-lam));
  const double phi = std::exp(-mu * (1.0 + w / lam));
  if (order == 0) return phi;
  const double v1 = -std::exp(-lam - w) / (1.0 + w);
  const double h1 = -mu * v1;
  if (order == 1) return h1 * phi;
  const double h2 = mu * lam * v1 * v1 * (2.0 + w) / (1.0 + w);
  if (order == 2) return (h2 + h1 * h1) * phi;
  const double h3 = -mu * lam * lam * v1 * v1 * v1 *
                    (2.0 * (2.0 + w) * (2.0 + w) + 1.0) / ((1.0 + w) * (1.0 + w));
  return (h3 + 3.0 * h1 * h2 + h1 * h1 * h1) * phi;
}

double DerivativeImpl(const OffspringModel& model, double x, int order) {
  return std::visit(
      Overloaded{
          [&](const Poisson& p) {
            return std::pow(p.m, order) * std::exp(-p.m * (1.0 - x));
          },
          [&](const Binomial& b) {
            if (order > b.n) return 0.0;
            const double base = 1.0 - b.p + b.p * x;
            return Falling(b.n, order) * std::pow(b.p, order) *
                   std::pow(base, b.n - order);
          },
          [&](const NegBinomial& nb) {
            const double q = 1.0 - nb.p;
            return Rising(nb.r, order) * std::pow(q, order) *
                   std::pow(nb.p, nb.r) * std::pow(1.0 - q * x, -(nb.r + order));
          },
          [&](const FractionalLinear& f) {
            const double den = 1.0 - f.pi * x;
            if (order == 0) return (f.rho + x * (1.0 - f.pi - f.rho)) / den;
            return (1.0 - f.pi) * (1.0 - f.rho) * Factorial(order) *
                   std::pow(f.pi, order - 1) / std::pow(den, order + 1);
          },
          [&](const FiniteThree& t) {
            switch (order) {
              case 0:
                return t.p0 + x * (t.p1 + x * (t.p2 + x * t.p3));
              case 1:
                return t.p1 + x * (2.0 * t.p2 + 3.0 * t.p3 * x);
              case 2:
                return 2.0 * t.p2 + 6.0 * t.p3 * x;
              default:
                return 6.0 * t.p3;
            }
          },
          [&](const GeneralizedPoisson& g) { return GpDerivative(g, x, order); },
      },
      model.family());
}

double Mean(const Family& f) {
  return std::visit(
      Overloaded{
          [](const Poisson& p) { return p.m; },
          [](const Binomial& b) { return b.n * b.p; },
          [](const NegBinomial& nb) { return nb.r * (1.0 - nb.p) / nb.p; },
          [](const FractionalLinear& f) { return (1.0 - f.rho) / (1.0 - f.pi); },
          [](const FiniteThree& t) { return t.p1 + 2.0 * t.p2 + 3.0 * t.p3; },
          [](const GeneralizedPoisson& g) { return g.mu / (1.0 - g.lambda); },
      },
      f);
}

void Validate(Family& f) {
  std::visit(
      Overloaded{
          [](Poisson& p) { Require(Finite(p.m) && p.m > 1.0, "poisson: m must be > 1"); },
          [](Binomial& b) {
            Require(b.n >= 2, "binomial: n must be >= 2");
            Require(b.p > 0.0 && b.p < 1.0, "binomial: p must be in (0,1)");
          },
          [](NegBinomial& nb) {
            Require(nb.r >= 1, "negbinomial: r must be >= 1");
            Require(nb.p > 0.0 && nb.p < 1.0, "negbinomial: p must be in (0,1)");
          },
          [](FractionalLinear& f) {
            Require(f.pi > 0.0 && f.pi < 1.0, "fl: pi must be in (0,1)");
            Require(f.rho > 0.0 && f.rho < 1.0, "fl: rho must be in (0,1)");
            Require(f.rho < f.pi, "fl: supercritical requires rho < pi");
          },
          [](FiniteThree& t) {
            Require(Finite(t.p0) && Finite(t.p2) && Finite(t.p3), "f3: non-finite p");
            Require(t.p0 > 0.0, "f3: p0 must be > 0");
            Require(t.p2 >= 0.0 && t.p3 >= 0.0, "f3: p2, p3 must be >= 0");
            if (t.p1 < 0.0 && t.p1 > -kProbSlack) t.p1 = 0.0;
            Require(t.p1 >= 0.0, "f3: p0 + p2 + p3 must be <= 1");
            Require(t.p0 + t.p1 < 1.0, "f3: p0 + p1 must be < 1");
          },
          [](GeneralizedPoisson& g) {
            Require(Finite(g.mu) && g.mu > 0.0, "gp: mu must be > 0");
            Require(g.lambda >= 0.0 && g.lambda < 1.0, "gp: lambda must be in [0,1)");
          },
      },
      f);
  Require(Mean(f) > 1.0, "model is not supercritical (mean <= 1)");
}

double Newton(const OffspringModel& model, double x) {
  for (int i = 0; i < 60; ++i) {
    const double g = DerivativeImpl(model, x, 0) - x;
    const double dg = DerivativeImpl(model, x, 1) - 1.0;
    if (dg == 0.0) break;
    const double dx = g / dg;
    x -= dx;
    if (std::fabs(dx) <= 1e-17 + 1e-16 * std::fabs(x)) break;
  }
  return x;
}

double Bisect(const OffspringModel& model) {
  double lo = 0.0;
  double hi = 1.0 - 1e-9;
  if (DerivativeImpl(model, hi, 0) - hi >= 0.0) {
    throw ConvergenceError("extinction_probability: no sign change on [0, 1-1e-9]");
  }
  const int cap = max_iter(200);
  for (int i = 0; i < cap && hi - lo > 1e-6; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (DerivativeImpl(model, mid, 0) - mid > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  if (hi - lo > 1e-6) throw ConvergenceError("extinction_probability: bisection cap");
  return 0.5 * (lo + hi);
}

}  // namespace

OffspringModel::OffspringModel(Family family) : family_(std::move(family)) {
  Validate(family_);
}

OffspringModel OffspringModel::poisson(double m) { return OffspringModel(Poisson{m}); }
OffspringModel OffspringModel::binomial(int n, double p) {
  return OffspringModel(Binomial{n, p});
}
OffspringModel OffspringModel::neg_binomial(int r, double p) {
  return OffspringModel(NegBinomial{r, p});
}
OffspringModel OffspringModel::fractional_linear(double pi, double rho) {
  return OffspringModel(FractionalLinear{pi, rho});
}
OffspringModel OffspringModel::finite_three(double p0, double p2, double p3) {
  return OffspringModel(FiniteThree{p0, 1.0 - p0 - p2 - p3, p2, p3});
}
OffspringModel OffspringModel::generalized_poisson(double mu, double lambda) {
  return OffspringModel(GeneralizedPoisson{mu, lambda});
}

std::string OffspringModel::name() const {
  return std::visit(Overloaded{
                        [](const Poisson&) { return std::string("poisson"); },
                        [](const Binomial&) { return std::string("binomial"); },
                        [](const NegBinomial&) { return std::string("negbinomial"); },
                        [](const FractionalLinear&) { return std::string("fl"); },
                        [](const FiniteThree&) { return std::string("f3"); },
                        [](const GeneralizedPoisson&) { return std::string("gp"); },
                    },
                    family_);
}

std::string OffspringModel::describe() const {
  std::ostringstream os;
  os.precision(10);
  std::visit(
      Overloaded{
          [&](const Poisson& p) { os << "poisson(m=" << p.m << ")"; },
          [&](const Binomial& b) { os << "binomial(n=" << b.n << ", p=" << b.p << ")"; },
          [&](const NegBinomial& nb) {
            os << "negbinomial(r=" << nb.r << ", p=" << nb.p << ")";
          },
          [&](const FractionalLinear& f) {
            os << "fl(pi=" << f.pi << ", rho=" << f.rho << ")";
          },
          [&](const FiniteThree& t) {
            os << "f3(p0=" << t.p0 << ", p1=" << t.p1 << ", p2=" << t.p2
               << ", p3=" << t.p3 << ")";
          },
          [&](const GeneralizedPoisson& g) {
            os << "gp(mu=" << g.mu << ", lambda=" << g.lambda << ")";
          },
      },
      family_);
  return os.str();
}

double pgf_eval(const OffspringModel& model, double x) {
  return pgf_derivative(model, x, 0);
}

double pgf_derivative(const OffspringModel& model, double x, int order) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("pgf: x must be in [0,1]");
  if (order < 0 || order > 3) throw DomainError("pgf: order must be in {0,1,2,3}");
  return DerivativeImpl(model, x, order);
}

namespace detail {
double pgf_derivative_ext(const OffspringModel& model, double x, int order) {
  if (!(x >= -1.0 && x <= 1.0)) throw DomainError("pgf: x must be in [-1,1]");
  if (order < 0 || order > 3) throw DomainError("pgf: order must be in {0,1,2,3}");
  return DerivativeImpl(model, x, order);
}
}  // namespace detail

Moments moments(const OffspringModel& model) {
  Moments mo{};
  mo.m = Mean(model.family());
  mo.b = DerivativeImpl(model, 1.0, 2);
  mo.c = DerivativeImpl(model, 1.0, 3);
  mo.var = mo.b + mo.m - mo.m * mo.m;
  if (const auto* g = std::get_if<GeneralizedPoisson>(&model.family())) {
    mo.var = g->mu / std::pow(1.0 - g->lambda, 3);
  }
  return mo;
}

FixedPoint extinction_probability(const OffspringModel& model) {
  double p = 0.0;
  bool exact_gamma = false;
  double gamma = 0.0;
  const Family& f = model.family();
  if (const auto* fl = std::get_if<FractionalLinear>(&f)) {
    p = fl->rho / fl->pi;
    gamma = (1.0 - fl->pi) / (1.0 - fl->rho);
    exact_gamma = true;
  } else if (const auto* po = std::get_if<Poisson>(&f)) {
    p = Newton(model, -lambert_w0(-po->m * std::exp(-po->m)) / po->m);
  } else if (const auto* t = std::get_if<FiniteThree>(&f)) {
    const double a = t->p2 + t->p3;
    const double d = std::sqrt(4.0 * t->p0 * t->p3 + a * a);
    p = Newton(model, 2.0 * t->p0 / (d + a));
    if (t->p3 == 0.0) {
      gamma = 1.0 + t->p0 - t->p2;
      exact_gamma = true;
    }
  } else {
    p = Newton(model, Bisect(model));
  }
  if (!(p > 0.0 && p < 1.0)) {
    throw ConvergenceError("extinction_probability: root outside (0,1)");
  }
  const double resid = std::fabs(DerivativeImpl(model, p, 0) - p);
  if (resid > 1e-13) throw ConvergenceError("extinction_probability: residual > 1e-13");
  if (!exact_gamma) gamma = DerivativeImpl(model, p, 1);
  return FixedPoint{p, 1.0 - p, gamma};
}

double iterate_extinction(const OffspringModel& model, int n) {
  if (n < 0) throw DomainError("iterate_extinction: n must be >= 0");
  double x = 0.0;
  for (int i = 0; i < n; ++i) x = DerivativeImpl(model, x, 0);
  return x;
}

std::vector<double> survival_curve(const OffspringModel& model, int n_max) {
  if (n_max < 1) throw DomainError("survival_curve: n_max must be >= 1");
  std::vector<double> s(static_cast<size_t>(n_max) + 1);
  double x = 0.0;
  s[0] = 1.0;
  for (int i = 1; i <= n_max; ++i) {
    x = DerivativeImpl(model, x, 0);
    s[static_cast<size_t>(i)] = 1.0 - x;
  }
  return s;
}

double binomial_xi(const OffspringModel& model, const FixedPoint& fp) {
  if (!model.is<Binomial>()) throw DomainError("binomial_xi: not a binomial model");
  return std::pow(fp.p_inf, 1.0 / model.as<Binomial>().n);
}

double negbinomial_zeta(const OffspringModel& model, const FixedPoint& fp) {
  if (!model.is<NegBinomial>()) throw DomainError("negbinomial_zeta: not a NB model");
  return std::pow(fp.p_inf, 1.0 / model.as<NegBinomial>().r);
}

double binomial_gamma_from_xi(int n, double xi) {
  const double xn = std::pow(xi, n);
  return n * xn * (1.0 - xi) / (xi * (1.0 - xn));
}

double negbinomial_gamma_from_zeta(int r, double zeta) {
  const double zr = std::pow(zeta, r);
  return r * (1.0 - zeta) * zr / (1.0 - zr);
}

}  // namespace gwb
