"""Exact integer linear algebra for polynomial identities.

Multilinear polynomials over the integers, ring models with additive
torsion, Hermite/Smith lattice arithmetic, integral Specht modules, and
the codimension theory connecting them -- all in exact arithmetic, with
a CLI for machine-readable reports.
"""

from .lattices import (
    AbelianInvariants,
    LatticeBuilder,
    SubmoduleLattice,
    TransformBuilder,
    cokernel_invariants,
    evaluation_kernel,
    field_rank,
    hnf,
    image_invariants,
    kernel_basis,
    lattice_quotient_invariants,
    smith_normal_form,
)
from .multilinear import (
    CommutatorWord,
    MultilinearPoly,
    bracket_poly,
    commutator,
    decompose,
    monomial_order,
    proper_basis,
    recompose,
)
from .rings import (
    RingElement,
    RingModel,
    cyclic_ring,
    direct_sum,
    evaluate,
    generator_tuples,
    grassmann,
    ut2,
)
from .specht import (
    PartitionPair,
    hook_number,
    induce_mod,
    op_A,
    op_R,
    pair,
    partitions,
    polytabloid,
    psi,
    specht_character,
    specht_lattice,
    specht_series,
    valid_pairs,
    young_expected,
)
from .pitheory import (
    CLAIMS,
    BudgetExceeded,
    CodimReport,
    VerificationOutcome,
    consequence_lattice,
    drensky_filtration,
    kernel_lattice,
    multilinear_consequences,
    ordinary_codim,
    proper_codim,
    run_claim,
    verify_field_props,
    verify_grassmann,
    verify_proper_ordinary,
    verify_ut2,
    verify_young,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianInvariants",
    "BudgetExceeded",
    "CLAIMS",
    "CodimReport",
    "CommutatorWord",
    "LatticeBuilder",
    "MultilinearPoly",
    "PartitionPair",
    "RingElement",
    "RingModel",
    "SubmoduleLattice",
    "TransformBuilder",
    "VerificationOutcome",
    "bracket_poly",
    "cokernel_invariants",
    "commutator",
    "consequence_lattice",
    "cyclic_ring",
    "decompose",
    "direct_sum",
    "drensky_filtration",
    "evaluate",
    "evaluation_kernel",
    "field_rank",
    "generator_tuples",
    "grassmann",
    "hnf",
    "hook_number",
    "image_invariants",
    "induce_mod",
    "kernel_basis",
    "kernel_lattice",
    "lattice_quotient_invariants",
    "monomial_order",
    "multilinear_consequences",
    "op_A",
    "op_R",
    "ordinary_codim",
    "pair",
    "partitions",
    "polytabloid",
    "proper_basis",
    "proper_codim",
    "psi",
    "recompose",
    "run_claim",
    "smith_normal_form",
    "specht_character",
    "specht_lattice",
    "specht_series",
    "ut2",
    "valid_pairs",
    "verify_field_props",
    "verify_grassmann",
    "verify_proper_ordinary",
    "verify_ut2",
    "verify_young",
    "young_expected",
]
