"""Exact checks and constructions for left-symmetric conformal algebras."""

from ._core import (
    Algebra,
    Datum,
    IoError,
    PreconditionError,
    build_unified,
    check_bicrossed,
    check_crossed,
    check_datum,
    check_flag,
    check_lie,
    check_lsca,
    dflc_membership,
    parse_poly,
    run,
    search_equiv,
    solve_derivations,
    subadjacent,
)

__all__ = [
    "Algebra",
    "Datum",
    "IoError",
    "PreconditionError",
    "build_unified",
    "check_bicrossed",
    "check_crossed",
    "check_datum",
    "check_flag",
    "check_lie",
    "check_lsca",
    "dflc_membership",
    "parse_poly",
    "run",
    "search_equiv",
    "solve_derivations",
    "subadjacent",
]
