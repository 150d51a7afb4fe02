"""Divisible designs by lifting in finite projective spaces, with exhaustive verification."""

from .designs import Design, EmbeddedDesign, Params
from .errors import ConstructionError, DocumentError
from .gf import GF, field_from_order
from .guards import DEFAULT_LIMITS, GuardExceeded, Limits
from .generators import (
    code_point_set,
    elliptic_quadric,
    embed_in_nrc,
    exponent_sequences,
    fano_design,
    min_covering_degree,
    trivial_design,
    veronese_map,
    veronese_variety,
)
from .lifting import (
    LiftingContext,
    act,
    affine_model_equivalent,
    affine_polynomial_design,
    brute_orbit,
    brute_stabilizer_count,
    build_lifted_design,
    build_sections_design,
    embedded_base_from_design,
    enumerate_group,
    orbit,
    predicted_params,
    product_lift,
    section_blocks,
    stabilizer_size,
    transversal_mapper,
)
from .linalg import Matrix
from .projective import (
    Subspace,
    canonical_embed,
    enumerate_points,
    hyperplanes,
    is_independent,
    normalize,
    project_through_vertex,
    span,
    vertex_subspace,
)
from .verify import Fingerprint, check_axioms, check_hypersimple, fingerprint, lambda_histogram
from .witt import witt12_embedding, witt24_embedding

__version__ = "0.1.0"

__all__ = [
    "GF",
    "field_from_order",
    "Matrix",
    "Subspace",
    "Design",
    "EmbeddedDesign",
    "Params",
    "Limits",
    "DEFAULT_LIMITS",
    "GuardExceeded",
    "ConstructionError",
    "DocumentError",
    "normalize",
    "enumerate_points",
    "span",
    "is_independent",
    "vertex_subspace",
    "project_through_vertex",
    "canonical_embed",
    "hyperplanes",
    "exponent_sequences",
    "veronese_map",
    "veronese_variety",
    "min_covering_degree",
    "elliptic_quadric",
    "code_point_set",
    "trivial_design",
    "embed_in_nrc",
    "fano_design",
    "witt12_embedding",
    "witt24_embedding",
    "LiftingContext",
    "act",
    "orbit",
    "transversal_mapper",
    "stabilizer_size",
    "predicted_params",
    "build_lifted_design",
    "build_sections_design",
    "section_blocks",
    "brute_orbit",
    "brute_stabilizer_count",
    "enumerate_group",
    "embedded_base_from_design",
    "product_lift",
    "affine_polynomial_design",
    "affine_model_equivalent",
    "check_axioms",
    "lambda_histogram",
    "check_hypersimple",
    "fingerprint",
    "Fingerprint",
]
