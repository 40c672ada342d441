"""Words, canonical permutations, and letter-count quotients."""

from monoidcats._core import (
    DomainError,
    Morphism,
    Permutation,
    Word,
    canonical_class_word,
    compose,
    concat,
    enumerate_hom,
    equiv,
    fiber_map,
    hom_cardinality,
    is_iso,
    morphism,
    occ,
    parikh,
    pos,
    q_morphism_rep,
    sigma,
    truncation_dot,
    truncation_riguet_report,
    verify,
    word,
)

__all__ = [
    "DomainError",
    "Morphism",
    "Permutation",
    "Word",
    "canonical_class_word",
    "compose",
    "concat",
    "enumerate_hom",
    "equiv",
    "fiber_map",
    "hom_cardinality",
    "is_iso",
    "morphism",
    "occ",
    "parikh",
    "pos",
    "q_morphism_rep",
    "sigma",
    "truncation_dot",
    "truncation_riguet_report",
    "verify",
    "word",
]
