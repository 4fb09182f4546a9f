"""Exact representation theory of the repetitive 2-Kronecker algebra.

Modules over finite windows of the repetitive quiver, its Frobenius
structure (syzygies, shifts, AR translate, stable Hom and Ext^1), string
modules, and versal deformation rings over k[t]/(t^n) — all in exact
arithmetic over Q or F_p.
"""

from .scalars import Field, RATIONALS, TruncatedRing, field_from_name
from .linalg import Matrix, kernel_basis, rank, solve
from .quiver import Arrow, QuiverWindow, Vertex, make_window, parse_arrow, parse_vertex
from .representation import (
    Morphism,
    Representation,
    UndecidedIndecomposability,
    UndecidedIsomorphism,
    direct_sum,
    end_algebra,
    hom_basis,
    hom_dim,
    is_indecomposable,
    is_isomorphic,
    validate,
    zero_representation,
)
from .frobenius import (
    FrobeniusInvariantError,
    ar_translate,
    cosyzygy,
    dualize,
    ext1_dim,
    indecomposable_projective,
    injective_hull,
    is_projective,
    nakayama_shift,
    projective_cover,
    stable_hom_dim,
    syzygy,
    top,
)
from .strings import (
    Letter,
    StringWord,
    enumerate_strings,
    orbit_graph,
    parse_string,
    simple,
    string_label,
    string_module,
)
from .deformation import (
    ClassificationReport,
    DeformationInvariantError,
    FirstOrderClass,
    Lift,
    Obstruction,
    apply_gauge,
    classify_versal_ring,
    extend_lift,
    first_order_lifts,
    lift_from_tangent,
    trivial_lift,
    truncate_lift,
    verify_thm1_invariants,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
