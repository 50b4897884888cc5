"""Exact dimension calculus for rational equivariant elliptic cohomology.

Computes EC_T^*(CP(V)) for complex circle representations V and
EC_{T^2}^*(S^W) for torus representation spheres, via fiber-type divisors on
E x E, together with the finite-subgroup combinatorics of T^2 used by the
algebraic models.
"""

from .divisor import CohDims, Divisor, coh_dims, divisor_of_rep, euler_char, is_ample, pairing
from .ellcoh import GradedDims, LesTable, d_invariant, ec_cp, ec_t2_sphere, ec_t_point, les_table
from .lattice import FiniteSubgroup, TorsionPoint, subgroup_from_generators
from .reps import Character, CircleRep, TorusRep, parse_circle_rep, parse_torus_rep, tensor_with_w

__all__ = [
    "Character",
    "CircleRep",
    "CohDims",
    "Divisor",
    "FiniteSubgroup",
    "GradedDims",
    "LesTable",
    "TorsionPoint",
    "TorusRep",
    "coh_dims",
    "d_invariant",
    "divisor_of_rep",
    "ec_cp",
    "ec_t2_sphere",
    "ec_t_point",
    "euler_char",
    "is_ample",
    "les_table",
    "pairing",
    "parse_circle_rep",
    "parse_torus_rep",
    "subgroup_from_generators",
    "tensor_with_w",
]
