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

#ifndef GWB_OFFSPRING_HPP_
#define GWB_OFFSPRING_HPP_

#include <string>
#include <variant>
#include <vector>

namespace gwb {

struct Poisson {
  double m;
};
struct Binomial {
  int n;
  double p;
};
struct NegBinomial {
  int r;
  double p;
};
struct FractionalLinear {
  double pi;
  double rho;
};
struct FiniteThree {
  double p0, p1, p2, p3;
};
struct GeneralizedPoisson {
  double mu;
  double lambda;
};

using Family = std::variant<Poisson, Binomial, NegBinomial, FractionalLinear,
                            FiniteThree, GeneralizedPoisson>;

// Supercritical offspring distribution. Construction validates parameters.
class OffspringModel {
 public:
  explicit OffspringModel(Family family);

  static OffspringModel poisson(double m);
  static OffspringModel binomial(int n, double p);
  static OffspringModel neg_binomial(int r, double p);
  static OffspringModel fractional_linear(double pi, double rho);
  static OffspringModel finite_three(double p0, double p2, double p3);
  static OffspringModel generalized_poisson(double mu, double lambda);

  const Family& family() const { return family_; }
  std::string name() const;
  std::string describe() const;

  template <typename T>
  bool is() const {
    return std::holds_alternative<T>(family_);
  }
  template <typename T>
  const T& as() const {
    return std::get<T>(family_);
  }

 private:
  Family family_;
};

struct Moments {
  double m;
  double var;
  double b;  // phi''(1-)
  double c;  // phi'''(1-)
};

struct FixedPoint {
  double p_inf;
  double s_inf;
  double gamma;
};

double pgf_eval(const OffspringModel& model, double x);
double pgf_derivative(const OffspringModel& model, double x, int order);
Moments moments(const OffspringModel& model);
FixedPoint extinction_probability(const OffspringModel& model);

// P^(n) = phi^(n)(0).
double iterate_extinction(const OffspringModel& model, int n);
// S^(0..n_max).
std::vector<double> survival_curve(const OffspringModel& model, int n_max);

// xi = P_inf^(1/n) for Binomial, zeta = P_inf^(1/r) for NegBinomial.
double binomial_xi(const OffspringModel& model, const FixedPoint& fp);
double negbinomial_zeta(const OffspringModel& model, const FixedPoint& fp);
// Closed-form rates through xi and zeta.
double binomial_gamma_from_xi(int n, double xi);
double negbinomial_gamma_from_zeta(int r, double zeta);

namespace detail {
// Evaluation without the [0, 1] domain check, for x in [-1, 1].
double pgf_derivative_ext(const OffspringModel& model, double x, int order);
}  // namespace detail

}  // namespace gwb

#endif  // GWB_OFFSPRING_HPP_
