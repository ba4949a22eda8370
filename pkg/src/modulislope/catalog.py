"""Named divisor classes and slope formulas."""

from __future__ import annotations

import enum
from fractions import Fraction
from math import comb

from .picard import (
    LAMBDA,
    PSI,
    ClassError,
    DivisorClass,
    PartialDivisorClass,
    PointedDivisorClass,
    Space,
    Unknown,
    delta,
    make_class,
)
from .scalar import GenusPolynomial


class Convention(str, enum.Enum):
    """delta0 coefficient used for the canonical class of ``Mbar_{g,1}``.

    ``PAPER`` has no delta0 term, ``STANDARD`` has coefficient -2.
    """

    PAPER = "paper"
    STANDARD = "standard"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    k = 2
    while k * k <= n:
        if n % k == 0:
            return False
        k += 1
    return True


def weierstrass(g: int) -> PointedDivisorClass:
    """Closure of the Weierstrass divisor in ``Mbar_{g,1}``.

    ``-lambda + g(g+1)/2 psi - sum_{i=1}^{g-1} C(g-i+1, 2) delta_i``.
    """
    coeffs = {LAMBDA: -1, PSI: Fraction(g * (g + 1), 2)}
    for i in range(1, g):
        coeffs[delta(i)] = -comb(g - i + 1, 2)
    return make_class(Space.POINTED, g, coeffs)


def brill_noether(g: int) -> DivisorClass:
    """Brill-Noether divisor class with the overall constant set to 1."""
    if is_prime(g + 1):
        raise ClassError(f"no Brill-Noether divisor in genus {g}: g+1 = {g + 1} is prime")
    coeffs = {LAMBDA: g + 3, delta(0): -Fraction(g + 1, 6)}
    for i in range(1, g // 2 + 1):
        coeffs[delta(i)] = -i * (g - i)
    return make_class(Space.UNPOINTED, g, coeffs)


def brill_noether_slope(g: int) -> Fraction:
    return 6 + Fraction(12, g + 1)


def petri_slope(g: int) -> Fraction:
    """Slope ``2(3g^2+13g+2) / (g(g+2))`` of the Petri divisor, g even."""
    if g % 2:
        raise ClassError(f"the Petri slope bound is used for even g only, got {g}")
    return Fraction(2 * (3 * g * g + 13 * g + 2), g * (g + 2))


def k3_divisor() -> PartialDivisorClass:
    """Divisor of genus-10 curves on K3 surfaces: ``7λ - δ0 - 5δ1 - 9δ2 - ?``."""
    return make_class(
        Space.UNPOINTED,
        10,
        {
            LAMBDA: 7,
            delta(0): -1,
            delta(1): -5,
            delta(2): -9,
            delta(3): Unknown,
            delta(4): Unknown,
            delta(5): Unknown,
        },
    )


def canonical_pointed(g: int, conv: Convention | str = Convention.PAPER) -> PointedDivisorClass:
    """Canonical class ``13λ + ψ - 3(δ1 + δ_{g-1}) - 2 sum_{i=2}^{g-2} δi`` of ``Mbar_{g,1}``."""
    conv = Convention(conv)
    if g < 3:
        raise ClassError(f"canonical_pointed needs g >= 3, got {g}")
    coeffs = {LAMBDA: 13, PSI: 1, delta(1): -3, delta(g - 1): -3}
    for i in range(2, g - 1):
        coeffs[delta(i)] = -2
    if conv is Convention.STANDARD:
        coeffs[delta(0)] = -2
    return make_class(Space.POINTED, g, coeffs)


_g = GenusPolynomial.g()

# pi_*(W^2) = a*lambda - sum b_i delta_i, closed forms in g
PUSHED_W2_LAMBDA = _g * (_g + 1) * (3 * _g**2 + _g + 2)
PUSHED_W2_B0 = Fraction(1, 4) * _g**2 * (_g + 1) ** 2
PUSHED_W2_BI_FACTOR = _g**3 + 3 * _g**2 + _g - 1
PUSHED_W2_BMIDDLE = Fraction(1, 64) * (8 * _g**5 + 33 * _g**4 + 28 * _g**3 + 4 * _g**2)


def pushed_weierstrass_square_closed(g: int) -> DivisorClass:
    """Closed form of ``pi_*(W^2)`` on ``Mbar_g``."""
    if g < 2:
        raise ClassError(f"genus must be >= 2, got {g}")
    coeffs = {LAMBDA: PUSHED_W2_LAMBDA(g), delta(0): -PUSHED_W2_B0(g)}
    for i in range(1, g // 2 + 1):
        if 2 * i == g:
            coeffs[delta(i)] = -PUSHED_W2_BMIDDLE(g)
        else:
            coeffs[delta(i)] = -i * (g - i) * PUSHED_W2_BI_FACTOR(g)
    return make_class(Space.UNPOINTED, g, coeffs)


def named_class(spec: str):
    """Look up a catalog class by CLI keyword.

    ``k3divisor``, ``weierstrass:g``, ``brillnoether:g``, ``canonical:g[:conv]``
    and ``pushedw2:g``.
    """
    kind, _, params = spec.partition(":")
    kind = kind.strip().lower()
    parts = [p for p in params.split(":") if p] if params else []
    try:
        if kind == "k3divisor" and not parts:
            return k3_divisor()
        if kind == "weierstrass" and len(parts) == 1:
            return weierstrass(int(parts[0]))
        if kind == "brillnoether" and len(parts) == 1:
            return brill_noether(int(parts[0]))
        if kind == "canonical" and len(parts) in (1, 2):
            conv = parts[1] if len(parts) == 2 else Convention.PAPER
            return canonical_pointed(int(parts[0]), conv)
        if kind == "pushedw2" and len(parts) == 1:
            return pushed_weierstrass_square_closed(int(parts[0]))
    except ValueError as exc:
        raise ClassError(f"bad catalog parameters in {spec!r}: {exc}") from None
    raise ClassError(f"unknown catalog class {spec!r}")


CATALOG_ENTRIES = {
    "k3divisor": "divisor of genus-10 curves on K3 surfaces (partial class on M10)",
    "weierstrass:g": "Weierstrass divisor on Mg1",
    "brillnoether:g": "Brill-Noether divisor on Mg (g+1 composite), constant 1",
    "canonical:g[:paper|standard]": "canonical class of Mg1 under either delta0 convention",
    "pushedw2:g": "closed form of pi_*(W^2) on Mg",
}
