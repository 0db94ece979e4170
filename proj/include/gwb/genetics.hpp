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

#ifndef GWB_GENETICS_HPP_
#define GWB_GENETICS_HPP_

#include "gwb/offspring.hpp"
#include "gwb/sinf_estimates.hpp"

namespace gwb {

struct TraitModel {
  double theta_mut;  // mutations per generation in the whole population
  double alpha;      // mutation effect
  double s_sel;      // selection strength; fitness m = exp(s_sel * alpha)
  int pop_size;      // N
};

struct WFModel {
  int pop_size;
  double s_sel;
  double effective_size;
};

// g_a(x) = a / (1 - x)^2 exp(-a x / (1 - x)).
double mutant_density(double a, double x);
// w(a) = a (1 + a) e^a E1(a) - a = int_0^1 x (1 - x) g_a(x) dx.
double within_variance(double a);

// Theta alpha^2 int_0^tau S^([t]) w(a_[t]) dt with a_k = N S^(k) / m^k.
double vg_tau(const TraitModel& tm, const OffspringModel& model, double tau);

// (1 / (s alpha)) x e^x E1(x) with x = N S_inf.
double v1_inf(double pop_size, double s_alpha, double s_inf);

struct VgInf {
  double leading;   // Theta S_inf alpha^2 V1_inf
  double simple;    // Theta alpha^2 (theta - delta2 s alpha)
  double response;  // s * simple
  double s_inf;
  double v1;
};

// Evaluates the family at mean exp(s alpha).
VgInf vg_inf(const TraitModel& tm, const FamilySpec& spec);

double wf_fixation_exact(const WFModel& wf);
double wf_fixation_diffusion(const WFModel& wf);
// (1 - e^-A) / (1 - e^-AN), A = a1 s + a2 s^2.
double wf_fixation_A(int pop_size, double s, double a1, double a2);
// a2 = -2/3 - 1/(3 N s).
double improved_a2(int pop_size, double s);

// N m / sigma^2.
double effective_size(int pop_size, const Moments& mo);
// K with N s^K = C^K.
double scaling_exponent(double pop_size, double s, double c);

constexpr int kWfMaxSize = 5000;

}  // namespace gwb

#endif  // GWB_GENETICS_HPP_
