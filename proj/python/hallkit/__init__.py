"""Hall numbers and Hall polynomials of quiver representations over finite fields."""

from fractions import Fraction

from ._core import (
    BudgetError,
    InputError,
    VerificationError,
    a_sigma_poly,
    classical_hall_poly,
    classify,
    decomp_hall_poly,
    example,
    grassmannian,
    hall_number,
    kronecker_module,
    n_sigma_poly,
    run_cli,
    segre_hall_poly,
    universal_hall_poly,
    verify,
)


def coefficients(poly):
    """Ascending coefficients of a returned polynomial as Fractions."""
    return [Fraction(c) for c in poly["coeffs"]]


def evaluate(poly, q):
    return sum(c * q**i for i, c in enumerate(coefficients(poly)))
