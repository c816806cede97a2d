"""Exact computations for finite-dimensional Hom-Lie superalgebras over Q."""

from .algebra import (
    HomLieSuperAlgebra,
    VerificationReport,
    abelian,
    check_hom_jacobi,
    check_multiplicative,
    check_regular,
    verify,
    yau_twist,
)
from .fixtures import FIXTURE_NAMES, load_fixture
from .io import load, parse, serialize
from .linalg import Matrix, Subspace

__all__ = [
    "FIXTURE_NAMES",
    "HomLieSuperAlgebra",
    "Matrix",
    "Subspace",
    "VerificationReport",
    "abelian",
    "check_hom_jacobi",
    "check_multiplicative",
    "check_regular",
    "load",
    "load_fixture",
    "parse",
    "serialize",
    "verify",
    "yau_twist",
]
