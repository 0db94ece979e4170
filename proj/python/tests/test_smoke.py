# Copyright 2026 The gwbounds Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import gwbounds as gw


def test_poisson_survival_matches_known_value():
    fp = gw.extinction_probability(gw.OffspringModel.poisson(1.1))
    assert fp.s_inf == pytest.approx(0.17613, abs=1e-5)
    assert gw.pgf_eval(gw.OffspringModel.poisson(1.1), fp.p_inf) == pytest.approx(fp.p_inf)


def test_fl_bound_dominates_survival():
    model = gw.OffspringModel.binomial(5, 0.3)
    curve = gw.survival_curve(model, 30)
    for n in range(1, 31):
        assert curve[n] <= gw.sn_fl_bound(model, n) * (1 + 1e-12)


def test_matching_fl():
    fl = gw.matching_fl(gw.extinction_probability(gw.OffspringModel.poisson(1.5)))
    assert fl.pi == pytest.approx(0.506, abs=1e-3)
    assert fl.rho == pytest.approx(0.211, abs=1e-3)


def test_classifiers():
    assert gw.classify_f3(0.2, 0.2, 0.1).region == "LowerBoundOnP"
    assert gw.classify_f3(0.09, 0.09, 0.045).region == "UpperBoundOnP"
    assert gw.classify_gp(0.3, 0.5).kind == "LowerOnS"
    t = gw.gp_thresholds(0.3)
    assert t.lambda_c1 < t.lambda_c2 < t.lambda_c0


def test_tables():
    t3 = gw.table(3)
    assert t3["rows"][1][3] == 458
    assert gw.to_csv(1).startswith("m,bound,n=1")


def test_domain_error():
    with pytest.raises(gw.DomainError):
        gw.OffspringModel.poisson(0.5)
    with pytest.raises(ValueError):
        gw.lambert_w0(-1.0)


def test_applicability_error_carries_condition():
    mo = gw.moments(gw.model_at(gw.FamilySpec.generalized_poisson(0.9), 0.2))
    with pytest.raises(gw.ApplicabilityError) as info:
        gw.dn_upper(mo)
    assert "8c" in info.value.condition
    assert info.value.lhs >= info.value.rhs


def test_sinf_bounds_skip_inapplicable_upper_bound():
    b = gw.sinf_bounds(gw.FamilySpec.generalized_poisson(0.9), 0.2)
    assert b.dn_upper is None
    assert b.exact == pytest.approx(0.00466, abs=1e-5)


def test_wright_fisher():
    assert gw.wf_fixation_exact(100, 0.1) == pytest.approx(0.17584, abs=1e-4)
    assert gw.wf_fixation_diffusion(1000, 0.1, Ne=2000) == pytest.approx(0.3297, abs=1e-4)
    assert gw.within_variance(1.0) == pytest.approx(2 * math.e * gw.exp_integral_e1(1.0) - 1)
