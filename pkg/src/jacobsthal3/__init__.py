"""Exact third-order Jacobsthal and Jacobsthal-Lucas numbers and matrices."""
from .exact import Cyclo, CycloMat3, Mat3, format_rational, parse_rational
from .exceptions import (
    BadParams,
    BadRange,
    DivisionByZero,
    IdentityMismatch,
    NonRationalResult,
    SingularMatrix,
    UnknownIdentity,
    UnsupportedSequence,
)
from .identities import IdentityReport, verify, verify_all
from .matrix import MatFamily, MatMethod, matrix_term
from .scalar import SeqId, term_binet, term_binet_cyclotomic, term_range, term_recurrence, v3

__version__ = "0.1.0"

__all__ = [
    "BadParams",
    "BadRange",
    "Cyclo",
    "CycloMat3",
    "DivisionByZero",
    "IdentityMismatch",
    "IdentityReport",
    "Mat3",
    "MatFamily",
    "MatMethod",
    "NonRationalResult",
    "SeqId",
    "SingularMatrix",
    "UnknownIdentity",
    "UnsupportedSequence",
    "format_rational",
    "matrix_term",
    "parse_rational",
    "term_binet",
    "term_binet_cyclotomic",
    "term_range",
    "term_recurrence",
    "v3",
    "verify",
    "verify_all",
]
