"""Galois-ring arithmetic and generalized extended Hamming codes over Z_(2^n)."""
from __future__ import annotations

__version__ = "0.1.0"

from .code import (
    Codeword,
    GEHCode,
    NotACodewordError,
    WeightReport,
    build_code,
    double_embed,
    mu_project,
    weight_report,
)
from .constructions import (
    CASES,
    build_p4_case,
    build_p8_word,
    check_gamma_dependencies,
    find_supports,
    hamming_weight4_word,
    hamming_weight6_word,
    match_case,
)
from .ring import (
    GaloisRing,
    NotAUnitError,
    NotPrimitiveError,
    RingElement,
    RingMismatchError,
    eta,
    frobenius,
    lift_primitive,
    make_ring,
    mu,
    recompose,
    tau,
    two_adic_decompose,
)
from .search import ABOVE_BOUND, BudgetExceeded, SearchSpec, classify_min_lee, min_weight
from .verify import verify_theorems
