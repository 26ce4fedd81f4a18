"""Exact computations with Lie algebras, their enveloping algebras and chain groups."""
from .lie import LieAlgebra, LieError, Subspace, Functional
from .enveloping import Enveloping, TruncatedIdeal
from .representations import MatrixRep, InducedModule, kernel_truncated, certification_bound
from .orbit import dixmier_ideal, vergne_polarization, check_relation
from .highest_weight import root_system, verma, simple_quotient, minimal_primitive_truncated
from .chain import ChainPresentation, AbelianGroup, abelian_invariants, can_check

__version__ = "0.1.0"
