"""Tools for finite monounary algebras: structure, isomorphism, orbits,
homogeneity classification, and a symbolic calculus for the classified
ultrahomogeneous shapes."""

__version__ = "0.1.0"

from .core import FiniteMonounary, PartialMonounary, StructureReport, structure_report, validate

__all__ = [
    "FiniteMonounary",
    "PartialMonounary",
    "StructureReport",
    "structure_report",
    "validate",
    "__version__",
]
