"""Widths, maximum antichains and Sperner certificates for posets built from quiver representations."""
from __future__ import annotations

from .errors import (
    AmbientMismatch,
    BadLength,
    BadOrientation,
    CycleError,
    DomainError,
    NotAPath,
    NotGraded,
    ParamRange,
    PosetError,
    QuiverError,
    SizeLimit,
    UnknownLabel,
)
from .fq import PrimeField, Subspace, gaussian_binomial, gaussian_int, rref, subspace_leq, subspaces
from .intervals import (
    Interval,
    IntervalPoset,
    antichain_alternating,
    antichain_alternating_even,
    antichain_linear,
    antichain_zigzag,
    chain_decomposition_alternating,
    chain_decomposition_alternating_even,
    chain_decomposition_zigzag,
    embeds,
    interval_poset,
    intervals,
)
from .pointed import (
    PointedRep,
    PointedSet,
    direct_sum,
    enumerate_pointed_subreps,
    pointed_star_sperner,
    star_indecomposable,
    verify_chain_product_iso,
)
from .poset import (
    ChainDecomposition,
    FinitePoset,
    WidthResult,
    build_poset,
    chain_product,
    check_grading,
    dilworth_width,
    direct_product,
    hasse_dot,
    is_sperner,
    max_level,
    scd_chain_product,
    verify_antichain,
    verify_chain_decomposition,
    verify_scd,
)
from .quiver import PathOrientation, Quiver, StarShape, path_quiver, star_quiver
from .stanley import RationalMatrix, down_matrix, rational_rank, stanley_certificate, up_matrix, verify_commutator
from .subrep import Flag, SubrepPoset, subrep_poset

__all__ = [name for name in dir() if not name.startswith("_")]
