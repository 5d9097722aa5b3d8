"""Unit tests for the spectral layer: transforms, multipliers, adapted pairs."""

import math

import numpy as np
import pytest

from carleson_lab.fourier import (
    CoeffVector,
    _synthesize_direct,
    adapted_pair,
    amu_symbol,
    analytic_projection,
    analyze,
    evaluate,
    hilbert,
    multiplier,
    poisson_dilate,
    synthesize,
)
from carleson_lab.measures import atom_disk, lebesgue_disk, power_disk

from conftest import random_coeff_vector, rng_for


def test_coeff_vector_basics():
    u = CoeffVector.from_map({-2: 1j, 0: 2.0, 1: -1.0}, 2)
    assert u[-2] == 1j and u[0] == 2.0 and u[1] == -1.0
    assert u[5] == 0.0  # out of range reads as zero
    assert u.ns.tolist() == [-2, -1, 0, 1, 2]
    with pytest.raises(ValueError):
        CoeffVector(2, np.zeros(4))
    with pytest.raises(ValueError):
        CoeffVector.from_map({3: 1.0}, 2)


def test_coeff_vector_arithmetic_and_pad():
    u = CoeffVector.basis(1)
    v = CoeffVector.basis(-3)
    w = u + v
    assert w.n_max == 3 and w[1] == 1.0 and w[-3] == 1.0
    assert (2.0 * u)[1] == 2.0
    assert (u - u).is_zero()
    with pytest.raises(ValueError):
        w.pad_to(1)


def test_is_analytic():
    assert CoeffVector.basis(3).is_analytic()
    assert not CoeffVector.basis(-1).is_analytic()
    assert CoeffVector.basis(0).is_analytic()


def test_round_trip():
    rng = rng_for(0)
    u = random_coeff_vector(rng, 16)
    for m in (33, 64, 100):
        v = analyze(synthesize(u, m), 16)
        assert np.max(np.abs(v.coeffs - u.coeffs)) < 1e-12


def test_synthesize_matches_direct_oracle():
    rng = rng_for(1)
    for m in (17, 32, 50, 128):
        u = random_coeff_vector(rng, 8)
        fast = synthesize(u, m).samples
        slow = _synthesize_direct(u, m).samples
        assert np.max(np.abs(fast - slow)) < 1e-12


def test_size_guards():
    u = CoeffVector.basis(8)
    with pytest.raises(ValueError):
        synthesize(u, 16)  # need m >= 17
    g = synthesize(u, 17)
    with pytest.raises(ValueError):
        analyze(g, 9)


def test_evaluate_matches_dilated_synthesis():
    rng = rng_for(2)
    u = random_coeff_vector(rng, 8)
    m = 32
    r = 0.7
    g = synthesize(poisson_dilate(u, r), m)
    for k in (0, 5, 19):
        theta = 2.0 * math.pi * k / m
        z = r * complex(math.cos(theta), math.sin(theta))
        assert abs(evaluate(u, z) - g.samples[k]) < 1e-12
    with pytest.raises(ValueError):
        evaluate(u, 1.0 + 0.0j)


def test_poisson_dilate_guards():
    u = CoeffVector.basis(1)
    with pytest.raises(ValueError):
        poisson_dilate(u, 1.5)
    assert poisson_dilate(u, 0.5)[1] == 0.5


def test_hilbert_and_projection():
    u = CoeffVector.from_map({-1: 2.0, 0: 3.0, 1: 4.0}, 1)
    h = hilbert(u)
    assert h[-1] == -2.0 and h[0] == 0.0 and h[1] == 4.0
    p = analytic_projection(u)
    assert p[-1] == 0.0 and p[0] == 3.0 and p[1] == 4.0


def test_multiplier_symbol_forms():
    u = CoeffVector.from_map({-1: 1.0, 1: 1.0}, 1)
    v = multiplier(u, lambda n: n * n)
    assert v[-1] == 1.0 and v[1] == 1.0 and v[0] == 0.0
    v2 = multiplier(u, {-1: 2.0, 0: 0.0, 1: 3.0})
    assert v2[-1] == 2.0 and v2[1] == 3.0
    with pytest.raises(ValueError):
        multiplier(u, {0: 1.0})  # missing indices


def test_amu_symbol_lebesgue():
    a = amu_symbol(lebesgue_disk(), 2)
    # sigma_1 = 1/4, so a(1) = sqrt(2/pi)
    assert a[1] == pytest.approx(math.sqrt(2.0 / math.pi), rel=1e-12)
    assert a[-1] == a[1]
    assert a[0] == pytest.approx(1.0 / math.sqrt(math.pi), rel=1e-12)


def test_amu_symbol_strong_decay_stays_finite():
    a = amu_symbol(atom_disk(0.5), 700)
    assert math.isfinite(a[700]) and a[700] > 0.0


def test_adapted_pair_default():
    pair = adapted_pair(lebesgue_disk(), 4)
    # sigma_2 = 1/6, so a(2) = sqrt(3/pi)
    assert pair.a[2] == pytest.approx(math.sqrt(3.0 / math.pi), rel=1e-12)
    assert pair.b[2] == 1.0 and pair.b[-2] == -1.0 and pair.b[0] == 0.0
    assert pair.c_b == 1.0


def test_adapted_pair_custom_b():
    pair = adapted_pair(lebesgue_disk(), 2, b_choice=lambda n: 2.0 * np.sign(n))
    assert pair.c_b == 2.0
    for n in (1, 2, -1, -2):
        sig = 1.0 / (2.0 * abs(n) + 2.0)
        lhs = abs(pair.a[n]) ** 2 * pair.b[n] * np.sign(n)
        assert lhs == pytest.approx(1.0 / (2.0 * math.pi * sig), rel=1e-12)


def test_adapted_pair_rejects_bad_b():
    mu = lebesgue_disk()
    with pytest.raises(ValueError):
        adapted_pair(mu, 2, b_choice=lambda n: 0.0)
    with pytest.raises(ValueError):
        adapted_pair(mu, 2, b_choice=lambda n: -np.sign(n))


def test_adapted_pair_interior_measure():
    # measures supported away from the boundary still have positive moments
    pair = adapted_pair(power_disk(-0.5, b=0.9), 16)
    assert all(math.isfinite(pair.a[n]) for n in range(-16, 17))


def test_adapted_pair_rejects_degenerate_measure():
    from carleson_lab.measures import RadialMeasure

    with pytest.raises(ValueError):
        adapted_pair(RadialMeasure(atoms=((0.0, 1.0),)), 2)


def test_coeff_vector_json_round_trip():
    rng = rng_for(3)
    u = random_coeff_vector(rng, 5)
    v = CoeffVector.from_dict(u.to_dict())
    assert np.array_equal(u.coeffs, v.coeffs) and v.n_max == 5
