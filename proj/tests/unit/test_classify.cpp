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
#include <random>

#include "gwb/classify_f3.hpp"
#include "gwb/classify_gp.hpp"
#include "gwb/errors.hpp"
#include "gwb/fl_bounds.hpp"
#include "gwb/offspring.hpp"

namespace {

double Gap(double p0, double p2, double p3, double x) {
  const auto model = gwb::OffspringModel::finite_three(p0, p2, p3);
  return gwb::fl_gap(model, gwb::matching_fl(gwb::extinction_probability(model)), x);
}

template <typename F>
void ForRandomRegionPoints(int count, std::uint64_t seed, F f) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int found = 0;
  while (found < count) {
    const double p0 = u(rng);
    const double p2 = u(rng);
    const double p3 = u(rng);
    if (!gwb::in_region_f3(p0, p2, p3)) continue;
    ++found;
    f(p0, p2, p3);
  }
}

}  // namespace

TEST_CASE("finite-three examples") {
  const auto a = gwb::classify_f3(0.2, 0.2, 0.1);
  CHECK(a.region == gwb::F3Region::kLowerBoundOnP);
  CHECK(a.case_label == 1);
  CHECK(a.fp.p_inf == doctest::Approx(0.5 * (std::sqrt(17.0) - 3.0)));
  const auto e = gwb::classify_f3(0.11, 0.11, 0.055);
  CHECK(e.region == gwb::F3Region::kSwitches);
  const auto g = gwb::classify_f3(0.09, 0.09, 0.045);
  CHECK(g.region == gwb::F3Region::kUpperBoundOnP);
  CHECK_FALSE(g.switch_n.has_value());
  const auto c = gwb::classify_f3(0.13, 0.13, 0.065);
  CHECK(c.region == gwb::F3Region::kSwitches);
  REQUIRE(c.switch_n.has_value());
  CHECK(*c.switch_n >= 1);
}

TEST_CASE("finite-three panel values of f at zero") {
  CHECK(Gap(0.13, 0.13, 0.065, 0.0) == doctest::Approx(-0.000811).epsilon(1e-2));
  CHECK(Gap(0.10, 0.10, 0.05, 0.0) == doctest::Approx(-0.003756).epsilon(1e-2));
  const double critical = 0.5 * (1.0 - 3.0 / std::sqrt(17.0));
  CHECK(std::fabs(Gap(critical, critical, 0.5 * critical, 0.0)) < 1e-12);
}

TEST_CASE("factorized sign values agree with the direct gap") {
  ForRandomRegionPoints(300, 7, [](double p0, double p2, double p3) {
    const auto fp = gwb::extinction_probability(gwb::OffspringModel::finite_three(p0, p2, p3));
    const std::vector<double> xs = {0.0, 0.5 * fp.p_inf, 0.5 * (1.0 + fp.p_inf)};
    const auto fact = gwb::f3_sign_values(p0, p2, p3, xs);
    for (size_t i = 0; i < xs.size(); ++i) {
      const double direct = Gap(p0, p2, p3, xs[i]);
      if (std::fabs(direct) < 1e-10) continue;
      CHECK((fact[i] > 0.0) == (direct > 0.0));
    }
  });
}

TEST_CASE("threshold relations on a grid") {
  for (int i = 1; i < 50; ++i) {
    for (int j = 1; j < 50; ++j) {
      const double p2 = 0.02 * i;
      const double p3 = 0.02 * j;
      if (p2 + p3 >= 1.0) continue;
      const auto t = gwb::thresholds_f3(p2, p3);
      CAPTURE(p2);
      CAPTURE(p3);
      if (t.gamma_admissible) CHECK(t.p0_gamma < t.p0_r);
      if (std::fabs(p2 - (std::sqrt(p3) - p3)) < 1e-9) continue;
      CHECK((t.p0_plus < t.p0_r) == (t.p0_plus > 0.0));
      CHECK((t.p0_plus > 0.0) == (p2 < std::sqrt(p3) - p3));
    }
  }
}

TEST_CASE("classification agrees with a numeric scan on random points") {
  int disagreements = 0;
  ForRandomRegionPoints(10000, 11, [&](double p0, double p2, double p3) {
    const auto c = gwb::classify_f3(p0, p2, p3);
    const auto model = gwb::OffspringModel::finite_three(p0, p2, p3);
    const auto scan = gwb::scan_fl_gap(model, 0.0, 1.0, 4096);
    bool ok = scan.sign_changes <= 1;
    if (c.region == gwb::F3Region::kLowerBoundOnP) ok = ok && scan.min_value >= -1e-12;
    if (c.region == gwb::F3Region::kUpperBoundOnP) ok = ok && scan.max_value <= 1e-12;
    if (!ok) ++disagreements;
  });
  CHECK(disagreements == 0);
}

TEST_CASE("curvature at the fixed point follows the p0_plus rule") {
  int checked = 0;
  ForRandomRegionPoints(2000, 13, [&](double p0, double p2, double p3) {
    const auto t = gwb::thresholds_f3(p2, p3);
    if (std::fabs(p0 - t.p0_plus) < 1e-3) return;
    const double p = gwb::extinction_probability(
                         gwb::OffspringModel::finite_three(p0, p2, p3)).p_inf;
    const double h = 1e-3 * std::min(p, 1.0 - p);
    const double f2 = (Gap(p0, p2, p3, p + h) - 2.0 * Gap(p0, p2, p3, p) +
                       Gap(p0, p2, p3, p - h)) / (h * h);
    if (std::fabs(f2) < 1e-6) return;
    ++checked;
    CHECK((f2 > 0.0) == (p0 > t.p0_plus));
  });
  CHECK(checked > 1000);
}

TEST_CASE("no region point has p0 above rho with gamma times m at least one") {
  ForRandomRegionPoints(5000, 17, [](double p0, double p2, double p3) {
    const auto fp = gwb::extinction_probability(gwb::OffspringModel::finite_three(p0, p2, p3));
    const double m = (1.0 - p0 - p2 - p3) + 2.0 * p2 + 3.0 * p3;
    CHECK_FALSE((p0 >= gwb::rho_f3(p0, p2, p3) && fp.gamma * m >= 1.0));
  });
}

TEST_CASE("finite-three without three offspring") {
  const auto [fp, c] = gwb::f3_p3zero(0.1, 0.3);
  CHECK(fp.p_inf == doctest::Approx(1.0 / 3.0));
  CHECK(fp.gamma == doctest::Approx(0.8));
  CHECK(c.region == gwb::F3Region::kLowerBoundOnP);
  CHECK(c.sign_profile[0] == 1);
  CHECK_THROWS_AS(gwb::f3_p3zero(0.3, 0.1), gwb::DomainError);
}

TEST_CASE("region volumes are reproducible for a seed") {
  const auto a = gwb::f3_region_volumes(20000, 5);
  const auto b = gwb::f3_region_volumes(20000, 5);
  CHECK(a.lower == b.lower);
  CHECK(a.switches == b.switches);
  CHECK(a.lower + a.switches + a.upper == doctest::Approx(1.0));
  CHECK(a.lower == doctest::Approx(0.866).epsilon(0.03));
}

TEST_CASE("generalized Poisson thresholds") {
  const auto t = gwb::gp_thresholds(0.3);
  CHECK(t.lambda_c1 == doctest::Approx(0.30160).epsilon(1e-3));
  CHECK(t.lambda_c2 == doctest::Approx(0.30596).epsilon(1e-3));
  CHECK(t.lambda_c0 == doctest::Approx(0.31433).epsilon(1e-3));
  CHECK(t.lambda_c1 < t.lambda_c2);
  CHECK(t.lambda_c2 < t.lambda_c0);
  CHECK(std::fabs(gwb::gp_f0(0.3, t.lambda_c0)) < 1e-9);
  CHECK(std::fabs(gwb::gp_f2_at_p(0.3, t.lambda_c2)) < 1e-8);
}

TEST_CASE("analytic curvature matches Richardson differences") {
  for (double s : {0.1, 0.3}) {
    for (double lambda : {0.1, 0.3, 0.6}) {
      CHECK(gwb::gp_f2_at_p(s, lambda) ==
            doctest::Approx(gwb::gp_f2_at_p_numeric(s, lambda)).epsilon(1e-6));
    }
  }
}

TEST_CASE("generalized Poisson classes at s = 0.1") {
  CHECK(gwb::classify_gp(0.1, 0.0).kind == gwb::DirectionKind::kUpperOnS);
  CHECK(gwb::classify_gp(0.1, 0.1).kind == gwb::DirectionKind::kUpperOnS);
  const auto mid = gwb::classify_gp(0.1, 0.276);
  CHECK(mid.kind == gwb::DirectionKind::kSwitchesAt);
  CHECK(mid.conjectured);
  REQUIRE(mid.switch_n.has_value());
  CHECK(gwb::classify_gp(0.1, 0.5).kind == gwb::DirectionKind::kLowerOnS);
  CHECK(gwb::classify_gp(0.1, 0.9).kind == gwb::DirectionKind::kLowerOnS);
  CHECK(gwb::classify_gp(0.3, 0.5).kind == gwb::DirectionKind::kLowerOnS);
}
