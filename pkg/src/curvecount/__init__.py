"""Exact counts of plane curves with tangency conditions, plus a tacnode lab.

The reducible and irreducible generalized Severi degrees come from
:mod:`curvecount.severi` and :mod:`curvecount.irreducible`.
:mod:`curvecount.tacnode` studies the versal deformation of a tacnode
through exact discriminants.
"""

from .classical import NCConfig, SalmonDegrees, limit_dual_check, salmon, triple_point_check
from .irreducible import count_irr, decompositions, product_degree
from .polyarith import MultiPoly, UniPoly, discriminant, parse_multi, parse_uni, resultant
from .rootfield import RootOfTwo
from .severi import CountTable, InvalidKeyError, SeveriKey, count, dimension, expand, key
from .tacnode import (
    NodeProfile,
    VersalPoint,
    chebyshev,
    fiber_discriminant,
    node_profile,
    nu_gamma,
    psi_point,
    swallowtail,
)
from .tally import Tally, TallyError, parse_tally, tally

__version__ = "0.1.0"

__all__ = [
    "CountTable",
    "InvalidKeyError",
    "MultiPoly",
    "NCConfig",
    "NodeProfile",
    "RootOfTwo",
    "SalmonDegrees",
    "SeveriKey",
    "Tally",
    "TallyError",
    "UniPoly",
    "VersalPoint",
    "chebyshev",
    "count",
    "count_irr",
    "decompositions",
    "dimension",
    "discriminant",
    "expand",
    "fiber_discriminant",
    "key",
    "limit_dual_check",
    "node_profile",
    "nu_gamma",
    "parse_multi",
    "parse_tally",
    "parse_uni",
    "product_degree",
    "psi_point",
    "resultant",
    "salmon",
    "swallowtail",
    "tally",
    "triple_point_check",
]
