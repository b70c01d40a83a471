"""Exact Lie-theory toolkit for period domains of bounded symmetric domains.

Root systems and Weyl orbits (:mod:`rootsys`), characters and plethysm
(:mod:`repchar`), Schur-functor combinatorics (:mod:`schur`), the domain
catalog with its graded-ideal checks (:mod:`pvhs`) and a matrix model of
iterated Higgs fields (:mod:`higgs`).
"""

from .higgs import build_model, higgs_sweep, iterated_rank, membership_in_Ik, theta_matrix
from .pvhs import (
    DomainSpec,
    catalog,
    generating_check,
    image_J_k,
    kernel_I_k,
    strata_dimension_typeA,
    sym_tangent,
    verify_weight_bound,
)
from .repchar import (
    Decomposition,
    IrrepLabel,
    WeightMultiset,
    decompose,
    exterior_power,
    symmetric_power,
    tensor_product,
    weight_system,
    weyl_dimension,
)
from .rootsys import (
    RootSystem,
    Weight,
    build_root_system,
    coroot_pairing,
    product_system,
    simple_reflection,
    strongly_orthogonal_cascade,
    weyl_orbit,
)
from .schur import cauchy_sym, lr_coefficients, partitions, pieri_cols, pieri_rows, sym_of_ext, sym_of_sym

__version__ = "0.1.0"

__all__ = [
    "Decomposition",
    "DomainSpec",
    "IrrepLabel",
    "RootSystem",
    "Weight",
    "WeightMultiset",
    "build_model",
    "build_root_system",
    "catalog",
    "cauchy_sym",
    "coroot_pairing",
    "decompose",
    "exterior_power",
    "generating_check",
    "higgs_sweep",
    "image_J_k",
    "iterated_rank",
    "kernel_I_k",
    "lr_coefficients",
    "membership_in_Ik",
    "partitions",
    "pieri_cols",
    "pieri_rows",
    "product_system",
    "simple_reflection",
    "strata_dimension_typeA",
    "strongly_orthogonal_cascade",
    "sym_of_ext",
    "sym_of_sym",
    "sym_tangent",
    "symmetric_power",
    "tensor_product",
    "theta_matrix",
    "verify_weight_bound",
    "weight_system",
    "weyl_dimension",
    "weyl_orbit",
]
