import math

import numpy as np
import pytest

import liouville_lab as ll


def test_sqrt2_units():
    d = ll.units([-2, 0, 1])
    assert d["signature"] == [2, 0]
    assert d["positive_free"] == [[3, 2]]
    assert d["monodromy"] == [[[3, 4], [2, 3]]]
    t = d["gamma"][0]
    assert abs(t[0] - math.log(3 + 2 * math.sqrt(2))) <= 1e-10
    assert abs(t[1] - math.log(3 - 2 * math.sqrt(2))) <= 1e-10


def test_gaussian_units():
    d = ll.units([1, 0, 1], 20)
    assert d["rank"] == 0
    assert sorted(map(tuple, d["torsion"])) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert d["monodromy"] == [[[0, -1], [1, 0]]]


def test_cotamed_structure():
    rng = np.random.default_rng(5)
    O = ll.standard_omega(4)
    P = np.eye(4) + 0.3 * rng.standard_normal((4, 4))
    Pi = np.linalg.inv(P)
    A0 = Pi.T @ O @ Pi
    A1 = 2.0 * A0
    assert ll.cotamed_exists(A0, A1)
    J = ll.construct_cotamed(A0, A1)
    assert np.abs(J @ J + np.eye(4)).max() <= 1e-8
    assert ll.tames(A0, J) and ll.tames(A1, J)
    blocks = ll.pencil_reduce(A0, A1)["blocks"]
    assert all(abs(b["lambda"] - 2) <= 1e-9 for b in blocks)
    assert not ll.cotamed_exists(A0, -A0)


def test_pfaffian_and_cayley():
    O = ll.standard_omega(4)
    assert abs(abs(ll.pfaffian(O)) - 1) <= 1e-14
    J0 = np.array([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]], dtype=float)
    R = np.eye(4)
    R[0, 2] = 0.1
    J = R @ J0 @ np.linalg.inv(R)
    back = ll.cayley_inverse(J0, ll.cayley_map(J0, J))
    assert np.abs(back - J).max() <= 1e-12


def test_pair_certificate_and_cli():
    c = ll.pair_certificate("totreal:3")
    assert c["verdict"] == "positive"
    assert c["dim"] == 5
    assert (c["contact_plus"], c["contact_minus"]) == ("positive", "negative")
    code, rep = ll.run_json("numfield", "--poly", "-2,0,1", "--monodromy")
    assert code == 0
    assert rep["verdict"] == "pass"


def test_errors():
    with pytest.raises(ll.InputError):
        ll.units([-1, 0, 1])
    with pytest.raises(ValueError):
        ll.pair_certificate("nope:1")
    with pytest.raises(ll.NumericalError):
        ll.units([-46, 0, 1], 50)
    code, _, _ = ll.run(["frobnicate"])
    assert code == 2
