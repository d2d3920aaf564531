"""Exact invariants of twist subgroups of mapping class groups of
nonorientable surfaces."""

from ._nmcg import (
    DomainError,
    abelianize,
    explain,
    invariant_factors,
    polygon_word,
    reidemeister_schreier,
    simplify,
    smith_normal_form,
    subgroup_indices,
    surface_h1,
    twist_generators,
    twist_h1,
    verify_representation,
)

__all__ = [
    "DomainError",
    "abelianize",
    "explain",
    "invariant_factors",
    "polygon_word",
    "reidemeister_schreier",
    "simplify",
    "smith_normal_form",
    "subgroup_indices",
    "surface_h1",
    "twist_generators",
    "twist_h1",
    "verify_representation",
]
