"""Exact integer Cech cohomology of 3-dimensional, codimension-3 canonical projection tilings."""

__version__ = "0.1.0"

from .arrangement import Arrangement, Subtorus, build_arrangement, intersect_subtori
from .assemble import CohomologyResult, cohomology, verify_mod_p
from .config import TilingConfig, list_presets, load_config, load_preset
from .exactlin import AbelianGroup, IntMatrix, Sublattice, cokernel, hnf, snf
from .skgroups import S3Status

__all__ = [
    "AbelianGroup",
    "Arrangement",
    "CohomologyResult",
    "IntMatrix",
    "S3Status",
    "Sublattice",
    "Subtorus",
    "TilingConfig",
    "build_arrangement",
    "cohomology",
    "cokernel",
    "hnf",
    "intersect_subtori",
    "list_presets",
    "load_config",
    "load_preset",
    "snf",
    "verify_mod_p",
]
