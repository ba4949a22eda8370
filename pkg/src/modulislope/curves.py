"""Test curves in the moduli spaces, as intersection functionals.

A :class:`CurveClass` is just the list of its intersection numbers with the
basis divisors.  No family geometry (base points, sections) is modelled.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .picard import (
    LAMBDA,
    PSI,
    ClassError,
    IndeterminateError,
    Space,
    Unknown,
    check_basis_name,
    delta,
)
from .scalar import format_rational, rational

K3_GENERA = range(2, 12)


@dataclass(frozen=True)
class CurveClass:
    name: str
    space: Space
    genus: int
    pairings: Mapping[str, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "space", Space(self.space))
        clean = {}
        for basis_name, value in dict(self.pairings).items():
            check_basis_name(self.space, self.genus, basis_name)
            v = rational(value)
            if v != 0:
                clean[basis_name] = v
        object.__setattr__(self, "pairings", clean)

    def pairing(self, basis_name: str) -> Fraction:
        check_basis_name(self.space, self.genus, basis_name)
        return self.pairings.get(basis_name, Fraction(0))

    def __str__(self) -> str:
        nums = ", ".join(f"{k}:{format_rational(v)}" for k, v in self.pairings.items())
        return f"{self.name} on {self.space.value} (g={self.genus}) [{nums}]"


def lefschetz_pencil(i: int) -> CurveClass:
    """Lefschetz pencil of genus-i curves on a K3 surface, ``2 <= i <= 11``."""
    if i not in K3_GENERA:
        raise ClassError(f"K3 Lefschetz pencils are defined for 2 <= i <= 11, got {i}")
    return CurveClass(
        f"B(i={i})",
        Space.UNPOINTED,
        i,
        {LAMBDA: i + 1, delta(0): 6 * i + 18},
    )


def glued_pencil(i: int, g: int) -> CurveClass:
    """Pencil ``B_i`` in ``Mg``: a genus-i pencil glued to a fixed genus g-i tail.

    ``i = 1`` is the pencil of plane cubics (λ:1, δ0:12, δ1:-1).
    """
    if i != 1 and i not in K3_GENERA:
        raise ClassError(f"glued pencils exist for i = 1 or 2 <= i <= 11, got {i}")
    if i > g // 2:
        raise ClassError(f"delta{i} is not a basis element on M{g} (max delta{g // 2})")
    if i == 1:
        pairings = {LAMBDA: 1, delta(0): 12, delta(1): -1}
    else:
        pairings = {LAMBDA: i + 1, delta(0): 6 * i + 18, delta(i): -1}
    return CurveClass(f"B_{i}(g={g})", Space.UNPOINTED, g, pairings)


def pointed_k3_pencil() -> CurveClass:
    """Pointed Lefschetz pencil ``R`` of genus-10 K3 sections in ``Mbar_{10,1}``.

    The pairings are the unique ones for which ``-R . j^*(D)`` equals
    ``-11a + 78 b0 - b10`` given ``j^*`` of lambda, delta0, delta10: the lambda
    and delta0 numbers agree with the unpointed genus-10 pencil, psi pairs to 1
    and the boundary classes delta1..delta9 pair to 0.
    """
    return CurveClass(
        "R",
        Space.POINTED,
        10,
        {LAMBDA: 11, PSI: 1, delta(0): 78},
    )


def intersect(C: CurveClass, D) -> Fraction:
    """Intersection number ``C . D``.

    Unknown coefficients of ``D`` are fine as long as ``C`` pairs to zero with
    them.
    """
    if D.space is not C.space or D.genus != C.genus:
        raise ClassError(
            f"curve lives on {C.space.value} genus {C.genus}, "
            f"class on {D.space.value} genus {D.genus}"
        )
    total = Fraction(0)
    for name, value in D.coefficients().items():
        p = C.pairings.get(name, Fraction(0))
        if value is Unknown:
            if p != 0:
                raise IndeterminateError(
                    f"indeterminate: {C.name} pairs to {format_rational(p)} with {name}, "
                    "whose coefficient is Unknown"
                )
            continue
        total += p * value
    return total


def parse_curve(spec: str) -> CurveClass:
    """Parse a CLI curve name.

    ``lefschetz:i``, ``glued:i,g``, ``elliptic:g`` (same as ``glued:1,g``)
    and ``R``.
    """
    kind, _, params = spec.partition(":")
    kind = kind.strip().lower()
    try:
        args = [int(p) for p in params.split(",")] if params else []
    except ValueError:
        raise ClassError(f"bad curve parameters in {spec!r}") from None
    if kind in ("lefschetz", "b") and len(args) == 1:
        return lefschetz_pencil(*args)
    if kind == "glued" and len(args) == 2:
        return glued_pencil(*args)
    if kind == "elliptic" and len(args) == 1:
        return glued_pencil(1, args[0])
    if kind in ("r", "pointedk3") and not args:
        return pointed_k3_pencil()
    raise ClassError(f"unknown curve {spec!r}")
