"""Exact-arithmetic certification of Cohen-Macaulayness, duality, and
cohomology jump loci for simplicial, toric, and arrangement data."""

from ._core import (  # noqa: F401
    JumplociError,
    SimplicialComplex,
    alexander_dual,
    aomoto_cohomology,
    bgg_check,
    certify_bestvina_brady,
    certify_toric,
    circuits,
    compose,
    flag_complex,
    fox_jacobian,
    fox_twisted_cohomology,
    induced_subcomplex,
    is_cohen_macaulay,
    link,
    orlik_solomon_dims,
    projective_resonance,
    raag_degree1,
    reduced_homology,
    simplicial_wedge,
    stanley_reisner_dims,
    toric_characteristic,
    toric_resonance,
)

__all__ = [
    "JumplociError",
    "SimplicialComplex",
    "alexander_dual",
    "aomoto_cohomology",
    "bgg_check",
    "certify_bestvina_brady",
    "certify_toric",
    "circuits",
    "compose",
    "flag_complex",
    "fox_jacobian",
    "fox_twisted_cohomology",
    "induced_subcomplex",
    "is_cohen_macaulay",
    "link",
    "orlik_solomon_dims",
    "projective_resonance",
    "raag_degree1",
    "reduced_homology",
    "simplicial_wedge",
    "stanley_reisner_dims",
    "toric_characteristic",
    "toric_resonance",
]
