"""Semigroup topologies on the bicyclic monoid and its relatives."""

from .core import B, Box, Domain, DomainError, Elem, Z, anti_iso, down_set, inverse, mul, mul_oracle, nat_leq, up_set
from .families import Family, IndexSet, parse_family
from .report import CertReport, Status

__all__ = [
    "B", "Box", "CertReport", "Domain", "DomainError", "Elem", "Family", "IndexSet", "Status", "Z",
    "anti_iso", "down_set", "inverse", "mul", "mul_oracle", "nat_leq", "parse_family", "up_set",
]
