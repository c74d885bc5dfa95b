"""Exact combinatorics of sl3 module categories: weights, tensor products, action graphs."""

from .categories import CategoryId, Functor
from .errors import (
    EmptyWindowError,
    InvalidVertexError,
    NoKnownMapError,
    NotSemisimpleCategoryError,
    WindowTooSmallError,
)
from .weights import (
    ALPHA,
    BETA,
    RHO,
    CosetClass,
    OutsideCosetError,
    Region,
    Weight,
    WeylElem,
    category_of_simple,
    dot,
    dot_orbit,
    integral,
    is_singular,
    region,
    stabilizer,
    weight_from_json,
    weight_to_json,
)
from .grothendieck import (
    Poly2,
    dim,
    dim_triangle_row,
    kostant_p,
    tensor,
    tensor_table,
    tensor_with_f,
    tensor_with_g,
    to_ubasis,
    upoly,
    verma_mult,
)
from .graphs import (
    ActionGraph,
    Box,
    Edge,
    LONG,
    canonical_rep,
    generate,
    graph_from_json,
    in_edges_f,
    in_edges_g,
    interior,
    out_edges_f,
    out_edges_g,
    vertex_set,
)
from .eigvec import d_object, d_simple, pf_value, verma_quotient_d
from .verify import (
    CheckReport,
    check_commute,
    check_iso_family,
    check_middle_iso,
    check_n1_n2_distinct,
    check_pf,
    check_strong_connectivity,
    check_theta_positivity,
    check_transpose,
    default_box,
    iso_map,
    middle_iso,
    middle_iso_inv,
    run_checks,
)

__version__ = "0.1.0"
