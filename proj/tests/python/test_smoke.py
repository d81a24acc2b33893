# SPDX-License-Identifier: Apache-2.0
import math

import pytest

import qillum


def test_version_string():
    assert isinstance(qillum.__version__, str) and qillum.__version__


def test_helstrom_matches_closed_form():
    params = qillum.ScenarioParams(eta=0.1, b=0.01, d=4)
    pair = qillum.unentangled_pair(params, qillum.SignalSpec.uniform(4))
    assert abs(qillum.helstrom(pair).p_error - 0.4505) < 1e-10
    ent = qillum.entangled_pair(params)
    assert abs(qillum.helstrom(ent).p_error - 0.450125) < 1e-10


def test_entangled_bound_is_reduced_noise_bound():
    ent = qillum.chernoff_analytic_entangled(0.01, 0.1, 8)
    unent = qillum.chernoff_analytic_unentangled(0.01, 0.1 / 8)
    assert ent.q == unent.q
    assert ent.s_star == unent.s_star


def test_numeric_bound_near_analytic():
    params = qillum.ScenarioParams(eta=0.01, b=0.1, d=1)
    pair = qillum.unentangled_pair(params, qillum.SignalSpec.uniform(1))
    numeric = qillum.chernoff_numeric(pair)
    analytic = qillum.chernoff_analytic_unentangled(0.01, 0.1)
    assert abs(numeric.q - analytic.q) < 5 * (0.1**2 + 0.01 * 0.1)


def test_campaign_repeats_under_fixed_seed():
    model = qillum.conditional_probs(
        qillum.ScenarioParams(eta=0.1, b=0.01, d=2), qillum.Kind.Unentangled
    )
    config = qillum.TrialConfig(seed=11, replicas=200)
    first = qillum.campaign(model, qillum.Truth.Present, config)
    second = qillum.campaign(model, qillum.Truth.Present, config)
    assert first.mean_shots == second.mean_shots
    assert first.error_rate == second.error_rate
    assert first.replicas == 200
    assert math.isfinite(first.ci95_halfwidth)


def test_scan_image_shape_and_determinism():
    board = qillum.ReflectivityMap.checkerboard(4, 4, 0.0, 0.1)
    config = qillum.ImagingConfig(
        shots_per_pixel=200,
        kind=qillum.Kind.Unentangled,
        thermal_weight=0.01,
        mode_count=2,
        threshold=0.05,
        seed=1,
    )
    result = qillum.scan_image(board, config)
    assert (result.width, result.height) == (4, 4)
    assert len(result.detected) == 16
    assert result.yes_fraction == qillum.scan_image(board, config).yes_fraction


def test_domain_errors_surface_as_python_exceptions():
    with pytest.raises(RuntimeError):
        qillum.trials_needed(1.0, 0.01)
    with pytest.raises(RuntimeError):
        qillum.ScenarioParams(eta=-0.5, b=0.01)
