"""Exact Randić index analysis of connected graphs with a given cyclomatic number."""

from .enumerator import EnumSpec, EnumerationError, count_graphs, enumerate_graphs
from .exact_radical import RadicalValue, sign, to_decimal
from .families import FamilyError, FamilySpec, construct_member, enumerate_members, family_signature, is_member
from .graph6 import Graph6Error, parse_graph6, write_graph6
from .graph_core import (
    DegreeProfile,
    EdgeTypeSignature,
    Graph,
    GraphError,
    automorphism_orbits,
    canonical_code,
    canonical_form,
    cyclomatic_number,
    degree_profile,
    edge_type_signature,
    is_connected,
)
from .randic import (
    FamilyParameterError,
    FamilyValueId,
    family_deficit,
    family_value,
    randic_exact,
    randic_float,
    randic_of_signature,
)
from .transforms import TransformError, TransformSite, apply_transform, delta_randic, find_sites
from .verifier import (
    CLAIMS,
    COUNTEREXAMPLE,
    PASS,
    ClaimError,
    ExtremalReport,
    VerificationResult,
    check_degree_identities,
    check_mii_bound,
    extremal_search,
    probe_transform_monotonicity,
    verify_claim,
)

__version__ = "0.1.0"
