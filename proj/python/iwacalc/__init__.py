"""Exact p-adic series, logarithmic matrices and Iwasawa invariants."""

import json as _json

from ._iwacalc import (
    DomainError,
    Error,
    FrobeniusData,
    PrecisionError,
    SchemaError,
    Series,
    UsageError,
    ValidationError,
    build_frobenius,
    cyclotomic_product,
    cyclotomic_shifted,
    frobenius_from_ap,
    log_over_px,
)
from . import _iwacalc

__all__ = [
    "DomainError",
    "Error",
    "FrobeniusData",
    "PrecisionError",
    "SchemaError",
    "Series",
    "UsageError",
    "ValidationError",
    "build_frobenius",
    "convergence_run",
    "cyclotomic_product",
    "cyclotomic_shifted",
    "determinant_identity_check",
    "euler_characteristic_exponent",
    "frobenius_from_ap",
    "functional_equation_compare",
    "log_over_px",
    "logarithmic_matrix",
    "verify_orthogonality",
    "weierstrass",
]


def logarithmic_matrix(fd, n, side="primal", D=None, N=None):
    D = 2 * fd.p * fd.p if D is None else D
    N = fd.N if N is None else N
    return _json.loads(_iwacalc.logarithmic_matrix(fd, n, side, D, N))


def verify_orthogonality(fd, n, D=None, N=None):
    D = 2 * fd.p * fd.p if D is None else D
    N = fd.N if N is None else N
    return _json.loads(_iwacalc.verify_orthogonality(fd, n, D, N))


def determinant_identity_check(fd, n, D=None, N=None):
    D = 2 * fd.p * fd.p if D is None else D
    N = fd.N if N is None else N
    return _json.loads(_iwacalc.determinant_identity_check(fd, n, D, N))


def convergence_run(fd, n_max=6, D=None, N=None):
    D = 2 * fd.p * fd.p if D is None else D
    N = fd.N if N is None else N
    return _json.loads(_iwacalc.convergence_run(fd, n_max, D, N))


def weierstrass(f):
    return _json.loads(_iwacalc.weierstrass(f))


def functional_equation_compare(fX, fY):
    return _json.loads(_iwacalc.functional_equation_compare(fX, fY))


def euler_characteristic_exponent(p, m, e, deg_f, n_level, g, g_minus):
    return _iwacalc.euler_characteristic_exponent(p, m, e, deg_f, n_level, g, g_minus)
