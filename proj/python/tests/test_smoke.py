from fractions import Fraction

import json

import pytest

import hallkit


def test_classical_polynomial():
    p = hallkit.classical_hall_poly([1, 1], [1], [1, 1, 1])
    assert p["human"] == "T^2+T+1"
    assert hallkit.coefficients(p) == [1, 1, 1]


def test_segre_example():
    rho = [[[1, 1], 1], [[1, 1, 1], 1], [[2, 1], 1]]
    sigma = [[[1], 1], [[1], 1]]
    tau = [[[1, 1, 1], 1], [[2, 1, 1], 1], [[2, 1], 1]]
    p = hallkit.segre_hall_poly(rho, sigma, tau)
    assert p["human"] == "2T^2+2T+1"
    assert hallkit.evaluate(p, 3) == 25
    assert hallkit.coefficients(hallkit.n_sigma_poly(sigma)) == [0, Fraction(-1, 2), Fraction(1, 2)]


def test_decomposition_polynomial_is_not_integral():
    p = hallkit.decomp_hall_poly({"regular": [[[1], 1], [[1], 1]]}, {"P": [0]}, {"P": [2]})
    assert hallkit.coefficients(p) == [0, Fraction(1, 2), Fraction(1, 2)]


def test_universal_polynomial():
    a2 = lambda *labels: {"quiver": "a2", "labels": list(labels)}
    assert hallkit.universal_hall_poly(a2([1, 0]), a2([0, 1]), a2([1, 1]))["human"] == "1"


def test_hall_number_and_grassmannian():
    p0 = hallkit.kronecker_module("P", 0, 3)
    i0 = hallkit.kronecker_module("I", 0, 3)
    p1 = hallkit.kronecker_module("P", 1, 3)
    p2 = hallkit.kronecker_module("P", 2, 3)
    assert hallkit.grassmannian(p2, [0, 1]) == 13
    table = hallkit.classify("kronecker", 3, [1, 1])
    # the split module has both orders of I_0 and P_0; regulars only the one with P_0 as submodule
    regular = [
        c["rep"]
        for c in table["classes"]
        if hallkit.hall_number(i0, p0, c["rep"]) == 1 and hallkit.hall_number(p0, i0, c["rep"]) == 0
    ]
    assert len(regular) == 4
    assert all(hallkit.hall_number(r, p0, p1) == 1 for r in regular)


def test_sweeps_and_example():
    rs = hallkit.verify("green", "jordan", 2, [3])
    assert rs and all(r["pass"] for r in rs)
    ex = hallkit.example(3)
    assert all(r["pass"] for r in ex)


def test_errors():
    with pytest.raises(hallkit.InputError):
        hallkit.classical_hall_poly([1, -1], [1], [1])
    with pytest.raises(ValueError):
        hallkit.verify("green", "jordan", 6, [2])


def test_cli_round_trip():
    code, out, _ = hallkit.run_cli(["--quiet", "hallpoly", "--classical", "[1,1]", "[1]", "[1,1,1]"])
    assert code == 0
    assert json.loads(out)["poly"]["coeffs"] == ["1/1", "1/1", "1/1"]
    code, _, err = hallkit.run_cli(["example", "--q", "2"])
    assert code == 2 and "input error" in err
