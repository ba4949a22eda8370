"""Exact rational scalars and polynomials in the genus symbol ``g``.

Rationals are :class:`fractions.Fraction` values, which are kept in lowest
terms with a positive denominator after every operation.  This module adds
the string serialization used throughout the package, decimal rendering for
reports, and a small univariate polynomial type for closed forms in ``g``.
"""

from __future__ import annotations

from decimal import ROUND_DOWN, Decimal, localcontext
from fractions import Fraction
from typing import Callable, Iterable, Sequence, Union

Rational = Fraction

RationalLike = Union[Fraction, int, str]

MAX_DEGREE = 8


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are rejected: every value entering the core must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot build an exact rational from {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except ValueError:
        raise ValueError(f"not a rational literal: {text!r}") from None


def format_rational(x: Fraction) -> str:
    """``"p/q"``, or ``"p"`` when the denominator is 1."""
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def render_decimal(x: Fraction, places: int = 4, rounding: str = ROUND_DOWN) -> str:
    """Render ``x`` with ``places`` digits after the point.

    The default truncates toward zero, so ``45045/631`` renders as ``71.3866``
    in the same way a value printed as ``71.3866...`` would be read.
    """
    if places < 0:
        raise ValueError("places must be non-negative")
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = max(50, len(str(abs(x.numerator))) + places + 10)
        d = Decimal(x.numerator) / Decimal(x.denominator)
        q = Decimal(1).scaleb(-places)
        return str(d.quantize(q, rounding=rounding))


class GenusPolynomial:
    """Polynomial in ``g`` with rational coefficients, lowest degree first."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        if len(cs) - 1 > MAX_DEGREE:
            raise OverflowError(f"degree {len(cs) - 1} exceeds the cap of {MAX_DEGREE}")
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c: RationalLike) -> GenusPolynomial:
        return cls([c])

    @classmethod
    def g(cls) -> GenusPolynomial:
        return cls([0, 1])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    def __call__(self, n: RationalLike) -> Fraction:
        x = rational(n)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def _coerce(self, other) -> GenusPolynomial:
        if isinstance(other, GenusPolynomial):
            return other
        return GenusPolynomial.constant(other)

    def __add__(self, other) -> GenusPolynomial:
        q = self._coerce(other)
        n = max(len(self._coeffs), len(q._coeffs))
        a = self._coeffs + (Fraction(0),) * (n - len(self._coeffs))
        b = q._coeffs + (Fraction(0),) * (n - len(q._coeffs))
        return GenusPolynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> GenusPolynomial:
        return GenusPolynomial(-c for c in self._coeffs)

    def __sub__(self, other) -> GenusPolynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> GenusPolynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> GenusPolynomial:
        q = self._coerce(other)
        if not self._coeffs or not q._coeffs:
            return GenusPolynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(q._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(q._coeffs):
                out[i + j] += a * b
        return GenusPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> GenusPolynomial:
        if k < 0:
            raise ValueError("negative powers are not polynomials")
        out = GenusPolynomial.constant(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, GenusPolynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == GenusPolynomial.constant(other)._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"GenusPolynomial({[format_rational(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = format_rational(abs(c))
            if k == 0:
                body = mag
            else:
                mono = "g" if k == 1 else f"g^{k}"
                body = mono if abs(c) == 1 else f"{mag}*{mono}"
            terms.append(("-" if c < 0 else "+", body))
        sign, body = terms[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


def poly_identity_check(
    p: GenusPolynomial,
    f: Callable[[int], Fraction],
    degree_bound: int,
    sample_genera: Sequence[int],
) -> bool:
    """True iff ``p(n) == f(n)`` at every sample genus.

    With at least ``degree_bound + 1`` distinct samples and ``f`` known to be
    polynomial of degree at most ``degree_bound`` this certifies ``p == f``.
    """
    distinct = set(sample_genera)
    if len(distinct) < degree_bound + 1:
        raise ValueError(
            f"need at least {degree_bound + 1} distinct samples, got {len(distinct)}"
        )
    if p.degree > degree_bound:
        return False
    return all(p(n) == rational(f(n)) for n in sorted(distinct))
