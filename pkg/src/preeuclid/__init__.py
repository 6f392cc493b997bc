"""Decompose linear operators on spaces with a bilinear form via an associated digraph."""

from .decompose import (Component, Decomposition, VerificationReport, brute_force_invariant_subset,
                        brute_force_split, decompose, decomposing_split, f_support_digraph,
                        indecomposable_oracle, invariant_subset, is_f_indecomposable, is_minimal,
                        minimality_oracle, verify_decomposition)
from .equivalence import (ComparisonReport, Verdict, compare_bases, decomposition_signature,
                          find_f_equivalence, is_f_equivalence)
from .errors import (DomainError, FieldMismatchError, InputError, InvariantViolation,
                     PreEuclidError, ScalarParseError, SchemaError, SearchLimitError, ShapeError,
                     SingularMatrixError, StructureError)
from .graph import (AssocGraph, Partition, Provenance, build_graph, find_asymmetric_edge,
                    find_isomorphism, is_connected, is_weakly_symmetric, strong_components,
                    to_dot, weak_components, weakly_symmetric_oracle)
from .io import BasisChange, parse_problem
from .matrix import Matrix, mat_inverse, mat_mul
from .scalar import Field, Scalar, scalar_format, scalar_parse
from .structure import StructureSpec, apply_operator, bilinear_eval, change_basis, load_space

__version__ = "0.1.0"
