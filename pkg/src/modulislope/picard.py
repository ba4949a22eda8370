"""Divisor classes on the moduli spaces of curves ``Mg`` and ``Mg1``.

Coefficients are stored signed.  A class written ``a*lambda - sum b_i delta_i``
is stored with ``lam = a`` and ``delta[i] = -b_i``, so that classes add
coefficient-wise without sign bookkeeping.  The ``a, b_i`` form only comes
back in :func:`slope` and in reports.

Basis element names are the strings ``"lambda"``, ``"psi"`` (pointed space
only) and ``"delta0"``, ``"delta1"``, ...
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .scalar import RationalLike, format_rational, rational


class Space(str, enum.Enum):
    UNPOINTED = "Mg"
    POINTED = "Mg1"


class _UnknownType:
    """Marker for a coefficient that is not determined.

    Distinct from zero.  Any arithmetic that needs the actual value raises
    :class:`IndeterminateError` instead of guessing.
    """

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "Unknown"

    def __str__(self) -> str:
        return "unknown"

    def __reduce__(self):
        return (_UnknownType, ())


Unknown = _UnknownType()

Coefficient = Union[Fraction, _UnknownType]

INFINITY = math.inf


class ClassError(ValueError):
    """Invalid construction or combination of divisor classes."""


class IndeterminateError(ArithmeticError):
    """An Unknown coefficient was needed to produce an exact value."""


LAMBDA = "lambda"
PSI = "psi"


def delta(i: int) -> str:
    return f"delta{i}"


def delta_index(name: str) -> int | None:
    if name.startswith("delta") and name[5:].isdigit():
        return int(name[5:])
    return None


def max_delta_index(space: Space, genus: int) -> int:
    return genus // 2 if Space(space) is Space.UNPOINTED else genus - 1


def basis(space: Space, genus: int) -> tuple[str, ...]:
    """Basis element names for the divisor group of ``space`` in ``genus``."""
    space = Space(space)
    _check_genus(genus)
    head = (LAMBDA,) if space is Space.UNPOINTED else (LAMBDA, PSI)
    return head + tuple(delta(i) for i in range(max_delta_index(space, genus) + 1))


def _check_genus(genus: int) -> None:
    if not isinstance(genus, int) or isinstance(genus, bool) or genus < 2:
        raise ClassError(f"genus must be an integer >= 2, got {genus!r}")


def check_basis_name(space: Space, genus: int, name: str) -> None:
    if name == LAMBDA:
        return
    if name == PSI:
        if space is Space.POINTED:
            return
        raise ClassError("psi is not a basis element on Mg")
    i = delta_index(name)
    if i is None:
        raise ClassError(f"unknown basis element {name!r}")
    top = max_delta_index(space, genus)
    if i > top:
        raise ClassError(
            f"{name} out of range on {space.value} in genus {genus} (max delta{top})"
        )


def _coerce_coeff(value) -> Coefficient:
    if value is Unknown:
        return Unknown
    if isinstance(value, str) and value.strip().lower() == "unknown":
        return Unknown
    return rational(value)


class _ClassBase:
    """Shared behaviour for the three class types."""

    space: Space
    genus: int

    def coefficients(self) -> dict[str, Coefficient]:
        """All basis coefficients, zero included, in basis order."""
        raise NotImplementedError

    def coefficient(self, name: str) -> Coefficient:
        check_basis_name(self.space, self.genus, name)
        return self.coefficients()[name]

    def support(self) -> dict[str, Coefficient]:
        """Nonzero (or Unknown) coefficients only."""
        return {k: v for k, v in self.coefficients().items() if v is Unknown or v != 0}

    @property
    def is_partial(self) -> bool:
        return False

    def __add__(self, other):
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other):
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self):
        return linear_combine([(-1, self)])

    def __mul__(self, c):
        if isinstance(c, _ClassBase):
            return NotImplemented
        return linear_combine([(c, self)])

    __rmul__ = __mul__

    def __str__(self) -> str:
        return format_class(self)


@dataclass(frozen=True)
class DivisorClass(_ClassBase):
    """Class on ``Mg`` in the basis lambda, delta0..delta[g/2]."""

    genus: int
    lam: Fraction
    delta: tuple[Fraction, ...]

    def __post_init__(self):
        _check_genus(self.genus)
        object.__setattr__(self, "lam", rational(self.lam))
        object.__setattr__(self, "delta", tuple(rational(d) for d in self.delta))
        if len(self.delta) != self.genus // 2 + 1:
            raise ClassError(
                f"genus {self.genus} needs {self.genus // 2 + 1} delta entries, "
                f"got {len(self.delta)}"
            )

    @property
    def space(self) -> Space:
        return Space.UNPOINTED

    def coefficients(self) -> dict[str, Fraction]:
        out = {LAMBDA: self.lam}
        out.update((delta(i), d) for i, d in enumerate(self.delta))
        return out

    @property
    def a(self) -> Fraction:
        return self.lam

    def b(self, i: int) -> Fraction:
        return -self.delta[i]


@dataclass(frozen=True)
class PointedDivisorClass(_ClassBase):
    """Class on ``Mg1`` in the basis lambda, psi, delta0..delta(g-1)."""

    genus: int
    lam: Fraction
    psi: Fraction
    delta: tuple[Fraction, ...]

    def __post_init__(self):
        _check_genus(self.genus)
        object.__setattr__(self, "lam", rational(self.lam))
        object.__setattr__(self, "psi", rational(self.psi))
        object.__setattr__(self, "delta", tuple(rational(d) for d in self.delta))
        if len(self.delta) != self.genus:
            raise ClassError(
                f"genus {self.genus} needs {self.genus} delta entries, got {len(self.delta)}"
            )

    @property
    def space(self) -> Space:
        return Space.POINTED

    def coefficients(self) -> dict[str, Fraction]:
        out = {LAMBDA: self.lam, PSI: self.psi}
        out.update((delta(i), d) for i, d in enumerate(self.delta))
        return out


@dataclass(frozen=True, eq=False)
class PartialDivisorClass(_ClassBase):
    """Class on either space whose coefficients may be :data:`Unknown`.

    Entries missing from ``coeffs`` are exactly zero.
    """

    space: Space
    genus: int
    coeffs: Mapping[str, Coefficient]

    def __post_init__(self):
        object.__setattr__(self, "space", Space(self.space))
        _check_genus(self.genus)
        clean = {}
        for name, value in dict(self.coeffs).items():
            check_basis_name(self.space, self.genus, name)
            v = _coerce_coeff(value)
            if v is Unknown or v != 0:
                clean[name] = v
        object.__setattr__(self, "coeffs", clean)

    @property
    def is_partial(self) -> bool:
        return True

    @property
    def unknowns(self) -> frozenset[str]:
        return frozenset(k for k, v in self.coeffs.items() if v is Unknown)

    def coefficients(self) -> dict[str, Coefficient]:
        return {name: self.coeffs.get(name, Fraction(0)) for name in basis(self.space, self.genus)}

    def is_full(self) -> bool:
        return not self.unknowns

    def to_full(self) -> DivisorClass | PointedDivisorClass:
        if not self.is_full():
            raise IndeterminateError(
                f"class has Unknown coefficients: {sorted(self.unknowns)}"
            )
        return make_class(self.space, self.genus, self.coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, _ClassBase):
            return NotImplemented
        return (
            self.space is other.space
            and self.genus == other.genus
            and self.coefficients() == other.coefficients()
        )

    def __hash__(self) -> int:
        return hash((self.space, self.genus, tuple(self.coefficients().items())))


AnyClass = Union[DivisorClass, PointedDivisorClass, PartialDivisorClass]


def make_class(
    space: Space | str,
    genus: int,
    coeffs: Mapping[str, RationalLike | _UnknownType] | None = None,
) -> AnyClass:
    """Build a validated class from a ``{basis name: value}`` map.

    Absent names are zero.  If any value is Unknown (or the string
    ``"unknown"``) the result is a :class:`PartialDivisorClass`.
    """
    space = Space(space)
    _check_genus(genus)
    coeffs = dict(coeffs or {})
    values = {}
    for name, value in coeffs.items():
        check_basis_name(space, genus, name)
        values[name] = _coerce_coeff(value)
    if any(v is Unknown for v in values.values()):
        return PartialDivisorClass(space, genus, values)
    zero = Fraction(0)
    deltas = tuple(
        values.get(delta(i), zero) for i in range(max_delta_index(space, genus) + 1)
    )
    if space is Space.UNPOINTED:
        return DivisorClass(genus, values.get(LAMBDA, zero), deltas)
    return PointedDivisorClass(genus, values.get(LAMBDA, zero), values.get(PSI, zero), deltas)


def zero_class(space: Space | str, genus: int) -> AnyClass:
    return make_class(space, genus, {})


def coefficient(D: AnyClass, name: str) -> Coefficient:
    return D.coefficient(name)


def _scale(c: Fraction, v: Coefficient) -> Coefficient:
    if c == 0:
        return Fraction(0)
    if v is Unknown:
        return Unknown
    return c * v


def _add(u: Coefficient, v: Coefficient) -> Coefficient:
    if u is Unknown or v is Unknown:
        return Unknown
    return u + v


def linear_combine(terms: Iterable[tuple[RationalLike, AnyClass]]) -> AnyClass:
    """Coefficient-wise sum of ``c * D`` over ``terms``.

    Unknown absorbs: ``Unknown + x = Unknown``, ``c * Unknown = Unknown`` for
    ``c != 0`` and ``0 * Unknown = 0``.
    """
    terms = [(rational(c), D) for c, D in terms]
    if not terms:
        raise ClassError("linear_combine needs at least one term")
    space, genus = terms[0][1].space, terms[0][1].genus
    for _, D in terms:
        if D.space is not space or D.genus != genus:
            raise ClassError(
                f"cannot combine {D.space.value} genus {D.genus} with "
                f"{space.value} genus {genus}"
            )
    acc: dict[str, Coefficient] = {name: Fraction(0) for name in basis(space, genus)}
    for c, D in terms:
        for name, v in D.coefficients().items():
            acc[name] = _add(acc[name], _scale(c, v))
    return make_class(space, genus, acc)


def slope(D: AnyClass) -> Fraction | float:
    """Slope ``a / min_i b_i`` of a class on ``Mg``.

    Returns :data:`INFINITY` when some ``b_i`` is negative or the minimum is
    zero.  When ``a < 0`` and every ``b_i > 0`` the (negative) ratio is
    returned rather than infinity.
    """
    if D.is_partial:
        raise IndeterminateError(
            "slope of a partial class is not defined; "
            "use theorems.certify_slope_equals_a_over_b0"
        )
    if D.space is not Space.UNPOINTED:
        raise ClassError("slope is defined on Mg only")
    bs = [-d for d in D.delta]
    low = min(bs)
    if low <= 0:
        return INFINITY
    return D.lam / low


def format_class(D: AnyClass) -> str:
    """Human-readable form, e.g. ``8λ - δ0 - 4δ1 - 6δ2``."""
    symbols = {LAMBDA: "λ", PSI: "ψ"}
    parts = []
    for name, v in D.coefficients().items():
        sym = symbols.get(name) or "δ" + name[5:]
        if v is Unknown:
            parts.append(("+", f"?{sym}"))
            continue
        if v == 0:
            continue
        mag = "" if abs(v) == 1 else format_rational(abs(v))
        parts.append(("-" if v < 0 else "+", f"{mag}{sym}"))
    if not parts:
        return "0"
    sign, body = parts[0]
    text = ("-" if sign == "-" else "") + body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


def class_to_dict(D: AnyClass) -> dict:
    coeffs = {}
    for name, v in D.support().items():
        coeffs[name] = "unknown" if v is Unknown else format_rational(v)
    return {"space": D.space.value, "genus": D.genus, "coeffs": coeffs}


def class_from_dict(data: Mapping) -> AnyClass:
    try:
        space = Space(data["space"])
        genus = data["genus"]
        coeffs = data.get("coeffs", {})
    except (KeyError, TypeError, ValueError) as exc:
        raise ClassError(f"malformed class object: {exc}") from None
    if not isinstance(genus, int):
        raise ClassError(f"genus must be an integer, got {genus!r}")
    if not isinstance(coeffs, Mapping):
        raise ClassError("coeffs must be an object")
    for name, value in coeffs.items():
        if not isinstance(value, (str, int)) or isinstance(value, bool):
            raise ClassError(f"coefficient {name} must be a string or integer")
    return make_class(space, genus, coeffs)


def class_to_json(D: AnyClass) -> str:
    return json.dumps(class_to_dict(D), sort_keys=False)


def class_from_json(text: str) -> AnyClass:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ClassError(f"invalid JSON: {exc}") from None
    return class_from_dict(data)
