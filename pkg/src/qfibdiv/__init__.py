"""Exact q-Fibonacci polynomials and finite-range checks of their divisibility properties."""

from .polyint import IntPoly, divrem, parse, pretty, serialize
from .qcore import Residue, cyclo_spectrum, cyclotomic, q_binom, q_int, residue
from .qfib import SCHUR_F, SCHUR_G, FamilyId, cassini, four_term, fib, fib_sum, int_fib, matrix_product, vp
from .verify import ClaimId, VerificationReport, scan_conjecture, verify_claim

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "divrem",
    "parse",
    "pretty",
    "serialize",
    "Residue",
    "cyclo_spectrum",
    "cyclotomic",
    "q_binom",
    "q_int",
    "residue",
    "SCHUR_F",
    "SCHUR_G",
    "FamilyId",
    "cassini",
    "four_term",
    "fib",
    "fib_sum",
    "int_fib",
    "matrix_product",
    "vp",
    "ClaimId",
    "VerificationReport",
    "scan_conjecture",
    "verify_claim",
]
