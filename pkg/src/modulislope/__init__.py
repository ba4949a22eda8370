"""Exact divisor-class calculus on the moduli spaces of curves Mbar_g and Mbar_{g,1}."""

from .picard import (
    INFINITY,
    DivisorClass,
    PartialDivisorClass,
    PointedDivisorClass,
    Space,
    Unknown,
    linear_combine,
    make_class,
    slope,
)
from .scalar import GenusPolynomial, Rational, format_rational, parse_rational

__all__ = [
    "INFINITY",
    "DivisorClass",
    "GenusPolynomial",
    "PartialDivisorClass",
    "PointedDivisorClass",
    "Rational",
    "Space",
    "Unknown",
    "format_rational",
    "linear_combine",
    "make_class",
    "parse_rational",
    "slope",
]

__version__ = "0.1.0"
