"""Exact computations for generalized module extension algebras A⋈X.

Finite-dimensional algebras over Q, their bimodules and dual towers,
derivations and first cohomology, block decompositions of derivations on
A⋈X, and decidable forms of the weak-amenability characterisations.
"""
from .core import (
    AlgebraicModule,
    AxiomError,
    Bimodule,
    FiniteAlgebra,
    StructureError,
    ValidationReport,
    algebra,
    multiply,
    regular_bimodule,
    validate_algebra,
    validate_algebraic_module,
    validate_bimodule,
)
from .constructions import (
    ProductAlgebra,
    bowtie,
    direct_sum,
    module_extension,
    self_bowtie,
    t_lau,
    theta_lau,
    unitization,
)
from .duals import dual_bimodule, iterated_dual, product_dual_actions
from .cohomology import derivation_space, h1_dim, is_n_weakly_amenable
from .decomposition import assemble, decompose, decompose_unital, find_certificate

__version__ = "0.1.0"

__all__ = [
    "AlgebraicModule", "AxiomError", "Bimodule", "FiniteAlgebra", "StructureError", "ValidationReport", "algebra",
    "multiply", "regular_bimodule", "validate_algebra", "validate_algebraic_module", "validate_bimodule",
    "ProductAlgebra", "bowtie", "direct_sum", "module_extension", "self_bowtie", "t_lau", "theta_lau", "unitization",
    "dual_bimodule", "iterated_dual", "product_dual_actions", "derivation_space", "h1_dim", "is_n_weakly_amenable",
    "assemble", "decompose", "decompose_unital", "find_certificate",
]
