"""Exact invariants of Brieskorn spheres and plumbed homology spheres.

Seifert invariants and canonical negative-definite plumbings, the
Neumann-Siebenmann mu-bar and Rokhlin invariants via Wu classes, and
homology-level Kirby calculus (blow-ups, blow-downs, greedy reduction,
surgery-curve search).  All arithmetic is exact.
"""

from __future__ import annotations

from .families import (
    FamilyId,
    FamilyVerification,
    IterationVerification,
    brieskorn_params,
    family_plumbing,
    verify_family,
    verify_iteration,
)
from .kirby import (
    BLACK,
    GRAY,
    AmbiguousTarget,
    Component,
    FramedLinkMatrix,
    FramingNotUnit,
    IterationCap,
    NotLinked,
    SearchHit,
    blow_down,
    blow_up,
    family_step,
    gray_plumbing,
    reduce,
    reduce_with_trace,
    surgery_search,
    unlink_blowup,
)
from .lattice import (
    Mod2Failure,
    SymmetricIntMatrix,
    determinant,
    inertia,
    signature,
    smith_invariant_factors,
    solve_mod2,
)
from .plumbing import (
    InvariantReport,
    MuBarNotDivisible,
    PlumbingGraph,
    WuUndefined,
    intersection_matrix,
    is_homology_sphere,
    mu_bar,
    report,
    rokhlin,
    star,
    wu_class,
    wu_square,
)
from .seifert import (
    SeifertData,
    brieskorn_seifert,
    canonical_plumbing,
    eval_neg_continued_fraction,
    neg_continued_fraction,
    plumbing_to_seifert,
    plumbings_isomorphic,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousTarget",
    "BLACK",
    "Component",
    "FamilyId",
    "FamilyVerification",
    "FramedLinkMatrix",
    "FramingNotUnit",
    "GRAY",
    "InvariantReport",
    "IterationCap",
    "IterationVerification",
    "Mod2Failure",
    "MuBarNotDivisible",
    "NotLinked",
    "PlumbingGraph",
    "SearchHit",
    "SeifertData",
    "SymmetricIntMatrix",
    "WuUndefined",
    "blow_down",
    "blow_up",
    "brieskorn_params",
    "brieskorn_seifert",
    "canonical_plumbing",
    "determinant",
    "eval_neg_continued_fraction",
    "family_plumbing",
    "family_step",
    "gray_plumbing",
    "inertia",
    "intersection_matrix",
    "is_homology_sphere",
    "mu_bar",
    "neg_continued_fraction",
    "plumbing_to_seifert",
    "plumbings_isomorphic",
    "reduce",
    "reduce_with_trace",
    "report",
    "rokhlin",
    "signature",
    "smith_invariant_factors",
    "solve_mod2",
    "star",
    "surgery_search",
    "unlink_blowup",
    "verify_family",
    "verify_iteration",
    "wu_class",
    "wu_square",
]
