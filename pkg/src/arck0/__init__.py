"""Exact combinatorics of arcs on a marked circle and their Grothendieck groups."""

from .circle import INFINITE, CircleModel, MarkedPoint
from .arcs import (
    Arc,
    InducedTriangle,
    ext1_dim,
    induced_triangles,
    maybe_arc,
    quadrilateral_sides,
    suspend,
)
from .tilting import (
    ExchangePair,
    InsufficientDepthError,
    Relation,
    StandardTilting,
    build_standard_tilting,
    exchange_pair,
    is_interior,
    mutate,
    palu_relations,
)
from .snf import GroupPresentation, IntMatrix, cokernel_presentation, smith_normal_form
from .k0 import (
    InsufficientWindowError,
    K0Class,
    K0Report,
    OracleQuotient,
    VerificationError,
    class_same_segment,
    compute_k0_cn,
    euler_oracle,
    parity_class,
    relation_matrix,
    standard_basis_arcs,
)
from .completion import (
    CompletionModel,
    CompletionReport,
    compute_k0_completed,
    f_matrix,
    is_kernel_object,
    kernel_generator_arc,
    verify_f_oracle,
)
from .render import render_svg

__all__ = [
    "INFINITE",
    "CircleModel",
    "MarkedPoint",
    "Arc",
    "InducedTriangle",
    "ext1_dim",
    "induced_triangles",
    "maybe_arc",
    "quadrilateral_sides",
    "suspend",
    "ExchangePair",
    "InsufficientDepthError",
    "Relation",
    "StandardTilting",
    "build_standard_tilting",
    "exchange_pair",
    "is_interior",
    "mutate",
    "palu_relations",
    "GroupPresentation",
    "IntMatrix",
    "cokernel_presentation",
    "smith_normal_form",
    "InsufficientWindowError",
    "K0Class",
    "K0Report",
    "OracleQuotient",
    "VerificationError",
    "class_same_segment",
    "compute_k0_cn",
    "euler_oracle",
    "parity_class",
    "relation_matrix",
    "standard_basis_arcs",
    "CompletionModel",
    "CompletionReport",
    "compute_k0_completed",
    "f_matrix",
    "is_kernel_object",
    "kernel_generator_arc",
    "verify_f_oracle",
    "render_svg",
]
