"""Exact counts of rational curves in P^n meeting generic linear subspaces,
and canonical degrees of the one-dimensional incidence families."""
from .degrees import Engine, MemoStore, check_eq7, check_eq8, degree_count, m_section
from .genera import GenusReport, ThickeningSpec, canonical_degree, choose_thickening, genus_report
from .gw import gw_invariant
from .model import DimensionMismatch, InvalidInput, Problem, canonicalize, excess_dimension, moduli_dimension
from .schubert import line_count

__all__ = [
    "DimensionMismatch", "Engine", "GenusReport", "InvalidInput", "MemoStore", "Problem",
    "ThickeningSpec", "canonical_degree", "canonicalize", "check_eq7", "check_eq8",
    "choose_thickening", "degree_count", "excess_dimension", "genus_report", "gw_invariant",
    "line_count", "m_section", "moduli_dimension",
]
