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
#include "gwb/specfun.hpp"
#include "property_checks.hpp"

namespace {

double WByBisection(double z) {
  double lo = -1.0;
  double hi = std::max(1.0, std::log1p(z) + 1.0);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid * std::exp(mid) < z) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double E1ByQuadrature(double x) {
  // E1(x) = int_0^1 exp(-x/u)/u du.
  return gwb::testing::integrate(
      [x](double u) { return u <= 0.0 ? 0.0 : std::exp(-x / u) / u; }, 0.0, 1.0, 1e-15);
}

}  // namespace

TEST_CASE("lambert_w0 matches bisection") {
  for (double z : {-0.36, -0.3, -0.1, -1e-6, 0.0, 1e-8, 0.5, 1.0, 2.718281828459045, 10.0,
                   1e3, 1e8}) {
    const double w = gwb::lambert_w0(z);
    CHECK(w == doctest::Approx(WByBisection(z)).epsilon(1e-13));
    CHECK(w * std::exp(w) == doctest::Approx(z).epsilon(1e-13));
  }
  CHECK(gwb::lambert_w0(0.0) == 0.0);
  CHECK(gwb::lambert_w0(std::exp(1.0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("lambert_w0 near the branch point") {
  const double z = -std::exp(-1.0);
  CHECK(gwb::lambert_w0(z) == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(gwb::lambert_w0(z + 1e-12) == doctest::Approx(WByBisection(z + 1e-12)).epsilon(1e-6));
}

TEST_CASE("lambert_w0 rejects z below -1/e") {
  CHECK_THROWS_AS(gwb::lambert_w0(-0.5), gwb::DomainError);
  CHECK_THROWS_AS(gwb::lambert_w0(std::nan("")), gwb::DomainError);
}

TEST_CASE("exponential integral matches quadrature") {
  for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 20.0}) {
    CHECK(gwb::exp_integral_e1(x) == doctest::Approx(E1ByQuadrature(x)).epsilon(1e-10));
  }
  CHECK(gwb::exp_integral_e1(1.0) == doctest::Approx(0.21938393439552029).epsilon(1e-14));
}

TEST_CASE("scaled exponential integral is finite for large arguments") {
  for (double x : {10.0, 50.0, 500.0, 1e6}) {
    const double v = gwb::exp_e1(x);
    CHECK(std::isfinite(v));
    CHECK(v < 1.0 / x);
    CHECK(v > 1.0 / (x + 1.0));
  }
  CHECK(gwb::exp_e1(5.0) == doctest::Approx(std::exp(5.0) * gwb::exp_integral_e1(5.0)));
  CHECK_THROWS_AS(gwb::exp_e1(0.0), gwb::DomainError);
}
