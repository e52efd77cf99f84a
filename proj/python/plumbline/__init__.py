"""Lattice cohomology, Abel maps and generic line bundles on normal surface singularities."""

from ._core import (
    DomainError,
    Graph,
    Seifert,
    corpus_names,
    delta_identity,
    det_mc_is_c1_power,
    si_constraint_rank,
    si_dim_im_generic,
    si_pg,
)

__all__ = [
    "DomainError",
    "Graph",
    "Seifert",
    "corpus_names",
    "delta_identity",
    "det_mc_is_c1_power",
    "si_constraint_rank",
    "si_dim_im_generic",
    "si_pg",
]
