"""Exact Gel'fand-Tsetlin bases of Hermitean monogenic polynomials."""
from .ck import InitialDatum, InvalidDatum, ck_extend, initial_data_decomposition
from .dimensions import dim_A, dim_B, dim_M, kernel_dim_oracle, monogenic_dim, monogenic_dim_oracle
from .fischer import GramMatrix, fischer, gram
from .fock import SpinorVector, annihilate, create, euclid_generator
from .gt import BasisFamily, GTLabel, closed_form_n2, gt_basis, monogenic_basis
from .operators import apply_dirac, apply_upz, apply_upzd, is_hermitean_monogenic, laplacian, mul_zdvec, mul_zvec
from .poly import SpaceDescriptor, SpinorPolynomial
from .scalar import GaussianRational

__version__ = "0.1.0"

__all__ = [
    "BasisFamily",
    "GTLabel",
    "GaussianRational",
    "GramMatrix",
    "InitialDatum",
    "InvalidDatum",
    "SpaceDescriptor",
    "SpinorPolynomial",
    "SpinorVector",
    "annihilate",
    "apply_dirac",
    "apply_upz",
    "apply_upzd",
    "ck_extend",
    "closed_form_n2",
    "create",
    "dim_A",
    "dim_B",
    "dim_M",
    "euclid_generator",
    "fischer",
    "gram",
    "gt_basis",
    "initial_data_decomposition",
    "is_hermitean_monogenic",
    "kernel_dim_oracle",
    "laplacian",
    "monogenic_basis",
    "monogenic_dim",
    "monogenic_dim_oracle",
    "mul_zdvec",
    "mul_zvec",
]
