"""Graded Lie algebras generated by extremal elements.

Exact-arithmetic construction of the graded algebras presented by the
four families of generator graphs, their matrix realizations inside
the classical algebras (transvections and Siegel transvections), and a
certification pipeline that normalises realizations to a canonical
gauge, recovers defining parameters, and certifies isomorphisms by
explicit verified basis correspondences.
"""

__version__ = "0.1.0"

from .fields import (DEFAULT_PRIME, NoSquareRoot, PrimeField,
                     QuadraticExtension, QQ, RationalField, lift_element)
from .graphs import (build_family_graph, catalog, expected_catalog_size,
                     graph_from_edges)
from .presentation import TruncatedAtCap, build_L0, evaluate_monomial
from .extremal import (ExtremalCertificate, check_premet, classify_pair,
                       exp_ad, extremal_form_value, fixtriangle, is_extremal)
from .realizations import (InvalidParameters, MatrixLieAlgebra,
                           build_generators, lie_closure)
from .certify import (CertReport, CertifyError, ConditionViolated,
                      FormMismatch, MatchCertificate, NoRootInField,
                      NormalizationFailed, PsiVector, StructureMismatch,
                      certify_family, check_genericity, match_algebras,
                      normalize_generators, psi, solve_param_B,
                      solve_params_D)
from .acceptance import run_all

__all__ = [
    "DEFAULT_PRIME", "NoSquareRoot", "PrimeField", "QuadraticExtension",
    "QQ", "RationalField", "lift_element",
    "build_family_graph", "catalog", "expected_catalog_size",
    "graph_from_edges",
    "TruncatedAtCap", "build_L0", "evaluate_monomial",
    "ExtremalCertificate", "check_premet", "classify_pair", "exp_ad",
    "extremal_form_value", "fixtriangle", "is_extremal",
    "InvalidParameters", "MatrixLieAlgebra", "build_generators",
    "lie_closure",
    "CertReport", "CertifyError", "ConditionViolated", "FormMismatch",
    "MatchCertificate", "NoRootInField", "NormalizationFailed",
    "PsiVector", "StructureMismatch", "certify_family",
    "check_genericity", "match_algebras", "normalize_generators", "psi",
    "solve_param_B", "solve_params_D",
    "run_all",
]
