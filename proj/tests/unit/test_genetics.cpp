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
#include <doctest.h>

#include <cmath>

#include "gwb/errors.hpp"
#include "gwb/genetics.hpp"
#include "gwb/offspring.hpp"
#include "gwb/sinf_estimates.hpp"
#include "property_checks.hpp"

TEST_CASE("mutant density normalization and within variance quadrature") {
  const auto r = gwb::testing::mutant_density_quadrature();
  INFO(r.first_violation);
  CHECK(r.violations == 0);
  CHECK(gwb::within_variance(1.0) == doctest::Approx(0.192695).epsilon(1e-5));
  CHECK(gwb::within_variance(1e-3) > 0.0);
  CHECK_THROWS_AS(gwb::within_variance(0.0), gwb::DomainError);
}

TEST_CASE("within variance is continuous across evaluation branches") {
  const double lo = gwb::within_variance(1.0 - 1e-9);
  const double hi = gwb::within_variance(1.0 + 1e-9);
  CHECK(lo == doctest::Approx(hi).epsilon(1e-8));
}

TEST_CASE("Wright-Fisher fixation values") {
  const double exact = gwb::wf_fixation_exact({1000, 0.1, 1000.0});
  CHECK(exact == doctest::Approx(0.1761).epsilon(1e-3));
  CHECK(gwb::wf_fixation_exact({100, 0.1, 100.0}) == doctest::Approx(0.17584).epsilon(1e-3));
  CHECK(gwb::wf_fixation_diffusion({1000, 0.1, 2000.0}) == doctest::Approx(0.3297).epsilon(1e-3));
  CHECK(gwb::wf_fixation_diffusion({1000, 0.1, 200.0}) == doctest::Approx(0.0392).epsilon(3e-3));
  CHECK(gwb::wf_fixation_A(1000, 0.1, 2.0, gwb::improved_a2(1000, 0.1)) ==
        doctest::Approx(0.1758).epsilon(1e-3));
  CHECK(gwb::wf_fixation_A(100, 0.1, 2.0, gwb::improved_a2(100, 0.1)) ==
        doctest::Approx(0.1755).epsilon(1e-3));
  CHECK_THROWS_AS(gwb::wf_fixation_exact({gwb::kWfMaxSize + 1, 0.1, 1.0}), gwb::SizeError);
}

TEST_CASE("A-form with a2 = 0 equals diffusion") {
  for (int n : {50, 500}) {
    for (double s : {0.01, 0.1}) {
      CHECK(gwb::wf_fixation_A(n, s, 2.0, 0.0) ==
            doctest::Approx(gwb::wf_fixation_diffusion({n, s, static_cast<double>(n)}))
                .epsilon(1e-14));
    }
  }
}

TEST_CASE("diffusion is an upper bound on exact fixation") {
  for (int n : {50, 100, 500, 1000}) {
    for (double s : {0.02, 0.1, 0.2}) {
      const gwb::WFModel wf{n, s, static_cast<double>(n)};
      CAPTURE(n);
      CAPTURE(s);
      CHECK(gwb::wf_fixation_exact(wf) <= gwb::wf_fixation_diffusion(wf));
    }
  }
}

TEST_CASE("branching survival is close to diffusion fixation") {
  const double diffusion = gwb::wf_fixation_diffusion({1000, 0.1, 1000.0});
  const double poi = gwb::extinction_probability(gwb::OffspringModel::poisson(1.1)).s_inf;
  CHECK(std::fabs(poi - diffusion) <= 0.006);
  const double bin =
      gwb::extinction_probability(gwb::OffspringModel::binomial(1000, 1.1 / 1000)).s_inf;
  CHECK(bin == doctest::Approx(0.1763).epsilon(1e-3));
}

TEST_CASE("genetic variance accumulates monotonically and converges") {
  const gwb::TraitModel tm{1.0, 1.0, 0.05, 200};
  const auto model = gwb::model_at(gwb::FamilySpec::poisson(), std::expm1(0.05));
  double prev = 0.0;
  for (double tau : {1.0, 5.0, 20.0, 100.0, 400.0, 1600.0}) {
    const double v = gwb::vg_tau(tm, model, tau);
    CHECK(v >= prev - 1e-12);
    prev = v;
  }
  CHECK(std::fabs(gwb::vg_tau(tm, model, 3200.0) - prev) <= 1e-8 * prev);
}

TEST_CASE("stationary variance approximations agree to second order") {
  // Poisson: leading - simple = (theta/2) s alpha - 1/(N s alpha) + O((s alpha)^2).
  double prev = 0.0;
  for (double s = 0.04; s > 0.002; s *= 0.5) {
    const gwb::TraitModel tm{1.0, 1.0, s, 100000000};
    const auto v = gwb::vg_inf(tm, gwb::FamilySpec::poisson());
    const double rem = (v.leading - v.simple - (s - 1.0 / (tm.pop_size * s))) / (s * s);
    CHECK(std::fabs(rem) < 2.0);
    if (prev != 0.0) CHECK(rem == doctest::Approx(prev).epsilon(0.02));
    prev = rem;
    CHECK(v.response == doctest::Approx(tm.s_sel * v.simple));
  }
  const gwb::TraitModel tiny{1.0, 1.0, 1e-6, 1000000000};
  CHECK(gwb::vg_inf(tiny, gwb::FamilySpec::poisson()).simple == doctest::Approx(2.0).epsilon(1e-5));
  CHECK(gwb::v1_inf(200, 0.01, 1.0) * 0.01 == doctest::Approx(0.995049).epsilon(1e-5));
}

TEST_CASE("stationary variance matches a long accumulation") {
  const gwb::TraitModel tm{1.0, 0.05, 0.1, 100000};
  const auto model = gwb::model_at(gwb::FamilySpec::poisson(), std::expm1(0.005));
  const auto v = gwb::vg_inf(tm, gwb::FamilySpec::poisson());
  CHECK(gwb::vg_tau(tm, model, 1e5) == doctest::Approx(v.leading).epsilon(0.01));
}

TEST_CASE("effective size and scaling diagnostics") {
  const auto mo = gwb::moments(gwb::OffspringModel::neg_binomial(2, 0.6));
  CHECK(gwb::effective_size(1000, mo) == doctest::Approx(1000 * mo.m / mo.var));
  const double k = gwb::scaling_exponent(1e4, 0.01, 1.0);
  CHECK(1e4 * std::pow(0.01, k) == doctest::Approx(1.0));
}
