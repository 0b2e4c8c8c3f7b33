"""
Exact computations for the dual pair spo(2n|1) x osp(2|2) acting on
S(E) = S(C^{2n|1} ⊗ C^{1|1}): supersymmetric polynomials, the differential
operators of both algebras, explicit highest weight vectors and a fully
audited decomposition of the harmonics.
"""

from .decompose import AuditFailure, DecompositionReport, IsotypicEntry, decompose_harmonic, harmonic_basis
from .diffops import DiffOp, apply, compose, supercommutator
from .liealg import build_gl_big, build_gl_small, build_osp22, build_spo, is_hwv, weight_of
from .superpoly import SuperMonomial, SuperPoly, VarSpace, parse_poly

__version__ = "0.1.0"

__all__ = [
    "AuditFailure", "DecompositionReport", "IsotypicEntry", "decompose_harmonic", "harmonic_basis",
    "DiffOp", "apply", "compose", "supercommutator",
    "build_gl_big", "build_gl_small", "build_osp22", "build_spo", "is_hwv", "weight_of",
    "SuperMonomial", "SuperPoly", "VarSpace", "parse_poly",
]
