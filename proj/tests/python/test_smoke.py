import cmath
import math

import pytest

_popuc = pytest.importorskip("_popuc")


def test_trivial_spectrum_roots_of_unity():
    # alpha == 0, tau = 1, n = 5: zeros at the 6th roots of unity
    angles, zeros = _popuc.popuc_zeros([0, 0, 0, 0, 0], 1)
    assert len(angles) == 6
    for k, theta in enumerate(angles):
        assert theta == pytest.approx((k + 1) * math.pi / 3, abs=1e-10)
    for z in zeros:
        assert abs(abs(z) - 1) < 1e-10


def test_hessenberg_round_trip():
    alphas, tau = _popuc.random_parameters(6, 123)
    G = _popuc.build_hessenberg(alphas, tau)
    ralphas, rtau = _popuc.recover_parameters(G)
    assert max(abs(x - y) for x, y in zip(alphas, ralphas)) < 1e-10
    assert abs(tau - rtau) < 1e-10


def test_dissipative_system_identities():
    alphas, tau = _popuc.random_parameters(5, 7)
    zeta = _popuc.default_zeta(alphas, tau)
    sys = _popuc.assemble_system(alphas, tau, zeta)
    A, H, K = sys["A"], sys["H"], sys["K"]
    assert abs(A - (H + 1j * K)).max() < 1e-12
    angles, zeros = _popuc.popuc_zeros(alphas, tau)
    for eta in zeros:
        assert _popuc.cot_identity_residual(alphas, tau, zeta, eta) < 1e-8


def test_popuc_eval_matches_zeros():
    alphas, tau = _popuc.random_parameters(4, 99)
    angles, zeros = _popuc.popuc_zeros(alphas, tau)
    for z in zeros:
        assert abs(_popuc.popuc_eval(alphas, tau, z)) < 1e-8


def test_table1_family_angles():
    angles = _popuc.family_angles("table1", -9.0, n=5)
    assert angles[0] == pytest.approx(0.185831, abs=5e-6)
    assert angles[4] == pytest.approx(1.11515, abs=5e-6)


def test_classify_and_track_table1():
    pc = _popuc.classify("table1", -9.0, n=5)
    assert pc["label"] == "I++&H-"
    assert pc["predicted"] == "counterclockwise"
    grid = [-9.0 + 0.1 * k for k in range(11)]
    path = _popuc.track("table1", grid, n=5)
    for row in path["unwrapped"]:
        assert all(b > a for a, b in zip(row, row[1:]))


def test_hypergeometric_clockwise():
    pc = _popuc.classify("hypergeom", 2.0, n=3, a=1.0)
    assert pc["predicted"] == "clockwise"
    zeros0 = sorted(cmath.phase(z) % (2 * math.pi) for z in _popuc.hypergeometric_zeros(1.0, 1.0, 4))
    assert len(zeros0) == 4


def test_input_validation():
    with pytest.raises(ValueError):
        _popuc.popuc_zeros([1.5], 1)  # |alpha| >= 1
    with pytest.raises(ValueError):
        _popuc.popuc_zeros([0.5], 0.5)  # |tau| != 1
