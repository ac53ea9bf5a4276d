"""Flag simplicial complexes: construction, classification and face-number bounds."""
from __future__ import annotations

__version__ = "0.1.0"

from .core import (
    EMPTY, VOID, Complex, FVector, GammaVector, HVector, dehn_sommerville_check,
    euler_characteristic, f_from_h, f_vector, from_facets, gamma_vector, h_from_gamma,
    h_vector, join, link, restriction, suspension,
)
from .errors import (
    ClassError, FlagcombError, FlagcombWarning, FormatError, GammaUndefinedError,
    MalformedFaceError, NotAFaceError, ParameterError,
)
from .flag import (
    Graph, clique_complex, clique_f_vector, complexes_isomorphic, find_isomorphism,
    is_flag, is_isomorphic, maximal_cliques, one_skeleton,
)
from .classify import (
    betti_numbers, classify, is_eulerian, is_homology_manifold, is_homology_sphere,
    is_normal_pseudomanifold, is_pseudomanifold,
)
from .report import Report

__all__ = [
    "EMPTY", "VOID", "Complex", "FVector", "GammaVector", "HVector", "Graph", "Report",
    "ClassError", "FlagcombError", "FlagcombWarning", "FormatError", "GammaUndefinedError",
    "MalformedFaceError", "NotAFaceError", "ParameterError",
    "betti_numbers", "classify", "clique_complex", "clique_f_vector", "complexes_isomorphic",
    "dehn_sommerville_check", "euler_characteristic", "f_from_h", "f_vector", "find_isomorphism",
    "from_facets", "gamma_vector", "h_from_gamma", "h_vector", "is_eulerian", "is_flag",
    "is_homology_manifold", "is_homology_sphere", "is_isomorphic", "is_normal_pseudomanifold",
    "is_pseudomanifold", "join", "link", "maximal_cliques", "one_skeleton", "restriction",
    "suspension",
]
