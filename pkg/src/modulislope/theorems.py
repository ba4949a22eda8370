"""Exact re-derivation of the coefficient inequalities and slope thresholds.

Every check returns a :class:`CheckReport` holding the two exact sides of the
inequality that was tested, so a verdict can always be traced back to a
comparison of rationals.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .catalog import (
    Convention,
    brill_noether_slope,
    canonical_pointed,
    is_prime,
    k3_divisor,
    petri_slope,
    pushed_weierstrass_square_closed,
    weierstrass,
)
from .curves import glued_pencil, intersect, lefschetz_pencil, pointed_k3_pencil
from .picard import (
    LAMBDA,
    ClassError,
    DivisorClass,
    IndeterminateError,
    PartialDivisorClass,
    Space,
    Unknown,
    delta,
    linear_combine,
    make_class,
    slope,
)
from .pushpull import pull_attach10, pull_forgetful, push_quadratic, push_quadratic_partial
from .scalar import format_rational, render_decimal


class Relation(str, enum.Enum):
    GE = ">="
    LE = "<="
    EQ = "="


class Verdict(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    EQUALITY = "equality"

    @property
    def ok(self) -> bool:
        return self is not Verdict.FAIL


def compare(left: Fraction, relation: Relation, right: Fraction) -> Verdict:
    if left == right:
        return Verdict.EQUALITY
    if relation is Relation.GE:
        return Verdict.PASS if left > right else Verdict.FAIL
    if relation is Relation.LE:
        return Verdict.PASS if left < right else Verdict.FAIL
    return Verdict.FAIL


@dataclass(frozen=True)
class CheckReport:
    statement: str
    left: Fraction
    relation: Relation
    right: Fraction
    witness: str
    verdict: Verdict
    note: str = ""
    details: tuple["CheckReport", ...] = ()

    @classmethod
    def of(cls, statement, left, relation, right, witness, note="", details=()):
        left, right = Fraction(left), Fraction(right)
        relation = Relation(relation)
        return cls(
            statement, left, relation, right, witness,
            compare(left, relation, right), note, tuple(details),
        )

    @property
    def ok(self) -> bool:
        return self.verdict.ok

    def to_dict(self) -> dict:
        out = {
            "statement": self.statement,
            "left": format_rational(self.left),
            "relation": self.relation.value,
            "right": format_rational(self.right),
            "witness": self.witness,
            "verdict": self.verdict.value,
        }
        if self.note:
            out["note"] = self.note
        if self.details:
            out["details"] = [d.to_dict() for d in self.details]
        return out

    def line(self) -> str:
        text = (
            f"[{self.verdict.value.upper():8}] {self.statement}: "
            f"{format_rational(self.left)} {self.relation.value} "
            f"{format_rational(self.right)}  ({self.witness})"
        )
        if self.note:
            text += f"  -- {self.note}"
        return text


def _known(D, name: str) -> Fraction:
    v = D.coefficient(name)
    if v is Unknown:
        raise IndeterminateError(f"indeterminate: the {name} coefficient is Unknown")
    return v


def _a_b(D, *indices: int) -> tuple[Fraction, ...]:
    """``(a, b_i, ...)`` for a class on Mg, in the ``a λ - Σ b_i δ_i`` sign convention."""
    if D.space is not Space.UNPOINTED:
        raise ClassError("expected a class on Mg")
    return (_known(D, LAMBDA),) + tuple(-_known(D, delta(i)) for i in indices)


# -- pencil inequalities -----------------------------------------------------


def pencil_bound(i: int, a: Fraction, b0: Fraction) -> Fraction:
    """Lower bound for ``b_i`` coming from ``B_i . D >= 0``."""
    if i == 1:
        return 12 * b0 - a
    return (6 * i + 18) * b0 - (i + 1) * a


def check_pencil_inequality(D, i: int) -> CheckReport:
    """``b_i >= (6i+18) b0 - (i+1) a`` (or ``b_1 >= 12 b0 - a`` for i = 1)."""
    if i != 1 and not 2 <= i <= 11:
        raise ClassError(f"pencil inequalities exist for 1 <= i <= 11, got {i}")
    if i > D.genus // 2:
        raise ClassError(f"delta{i} is not a basis element in genus {D.genus}")
    a, b0, bi = _a_b(D, 0, i)
    witness = glued_pencil(i, D.genus).name
    if i == 1:
        statement = "b1 >= 12 b0 - a"
    else:
        statement = f"b{i} >= {6 * i + 18} b0 - {i + 1} a"
    return CheckReport.of(statement, bi, Relation.GE, pencil_bound(i, a, b0), witness)


# -- the b10 elimination ---------------------------------------------------

# The two printed functionals of pi_*(W . E) in the variables (a, b0, b10, m).
DISPLAY_LAMBDA = {"a": 990, "b0": 0, "b10": 642, "m": -6930}
DISPLAY_DELTA0 = {"a": 0, "b0": -990, "b10": -55, "m": 990}

B10_ASSUMPTIONS = (
    "j^*(D) = m pi^*(K) + E with E effective and m >= -R.j^*(D) "
    "(geometric decomposition, taken as given)",
    "pi_*(W . E) is effective for effective E (taken as given)",
    "the lambda coefficient of an effective class on Mbar_g is nonnegative (taken as given)",
)

VARIABLES = ("a", "b0", "b10", "m")


def residual_class(a, b0, b10, m) -> PartialDivisorClass:
    """``E = j^*(D) - m pi^*(K)`` on ``Mbar_{10,1}`` for ``D = aλ - b0 δ0 - b10 δ10 - ...``."""
    g = 20
    coeffs = {name: Unknown for name in (delta(i) for i in range(1, g // 2 + 1))}
    coeffs.update({LAMBDA: a, delta(0): -Fraction(b0), delta(10): -Fraction(b10)})
    D = make_class(Space.UNPOINTED, g, coeffs)
    return linear_combine([(1, pull_attach10(D)), (-Fraction(m), pull_forgetful(k3_divisor()))])


def pushed_residual(a, b0, b10, m) -> tuple[Fraction, Fraction]:
    """λ and δ0 coefficients of ``π_*(W . E)`` on ``Mbar_10``."""
    P = push_quadratic_partial(weierstrass(10), residual_class(a, b0, b10, m))
    return P.coefficient(LAMBDA), P.coefficient(delta(0))


def _unit(var: str) -> tuple[int, ...]:
    return tuple(1 if v == var else 0 for v in VARIABLES)


@dataclass(frozen=True)
class B10Derivation:
    lambda_functional: dict
    delta0_functional: dict
    m_lower_bound: dict
    alpha: Fraction
    beta: Fraction
    assumptions: tuple[str, ...] = field(default=B10_ASSUMPTIONS)

    def to_dict(self) -> dict:
        fmt = lambda d: {k: format_rational(v) for k, v in d.items()}  # noqa: E731
        return {
            "alpha": format_rational(self.alpha),
            "beta": format_rational(self.beta),
            "lambda_functional": fmt(self.lambda_functional),
            "delta0_functional": fmt(self.delta0_functional),
            "m_lower_bound": fmt(self.m_lower_bound),
            "assumptions": list(self.assumptions),
        }


class DerivationError(RuntimeError):
    """Recomputed coefficients disagree with the displayed ones."""


@lru_cache(maxsize=None)
def b10_derivation() -> B10Derivation:
    """Eliminate ``m`` between the R-pencil bound and the λ-positivity of ``π_*(W . E)``.

    Both functionals are recomputed through the pushforward engine; a
    mismatch with the printed coefficients raises :class:`DerivationError`.
    """
    lam, d0 = {}, {}
    for var in VARIABLES:
        lam[var], d0[var] = pushed_residual(*_unit(var))
    if any(pushed_residual(0, 0, 0, 0)):
        raise DerivationError("pi_*(W.E) is not linear in (a, b0, b10, m)")
    diffs = [
        f"{name}[{v}]: computed {format_rational(got[v])}, displayed {want[v]}"
        for name, got, want in (("lambda", lam, DISPLAY_LAMBDA), ("delta0", d0, DISPLAY_DELTA0))
        for v in VARIABLES
        if got[v] != want[v]
    ]
    if diffs:
        raise DerivationError("; ".join(diffs))

    # m >= -R . j^*(D), linear in (a, b0, b10)
    R = pointed_k3_pencil()
    low = {}
    for var in VARIABLES[:3]:
        a, b0, b10, _ = _unit(var)
        E = residual_class(a, b0, b10, 0)
        low[var] = -intersect(R, E)
    low["m"] = Fraction(0)

    # lam.(a,b0,b10) + lam[m] m >= 0 with lam[m] < 0 gives m <= lam.(a,b0,b10) / K
    K = -lam["m"]
    den = lam["b10"] - K * low["b10"]
    if K <= 0 or den <= 0:
        raise DerivationError(f"elimination is not sign-definite (K={K}, den={den})")
    alpha = (K * low["b0"] - lam["b0"]) / den
    beta = -(K * low["a"] - lam["a"]) / den
    return B10Derivation(lam, d0, low, alpha, beta)


def derive_b10_bound() -> tuple[Fraction, Fraction]:
    """``(alpha, beta)`` with ``b10 >= alpha b0 - beta a`` in the second branch."""
    d = b10_derivation()
    return d.alpha, d.beta


def check_thm1b(D) -> CheckReport:
    """``b10 >= 78 b0 - 11 a`` or ``b10 >= alpha b0 - beta a`` (g >= 20)."""
    if D.genus < 20:
        raise ClassError(f"the b10 dichotomy needs g >= 20, got {D.genus}")
    a, b0, b10 = _a_b(D, 0, 10)
    alpha, beta = derive_b10_bound()
    first = pencil_bound(10, a, b0)
    second = alpha * b0 - beta * a
    right = min(first, second)
    if b10 >= first:
        witness = "branch 1: B_10 pencil, b10 >= 78 b0 - 11 a"
    elif b10 >= second:
        witness = "branch 2: Weierstrass pushforward, b10 >= alpha b0 - beta a"
    else:
        witness = "neither branch"
    return CheckReport.of(
        "b10 >= min(78 b0 - 11 a, alpha b0 - beta a)", b10, Relation.GE, right, witness
    )


# -- slope thresholds --------------------------------------------------------


def corollary_threshold(i: int) -> Fraction:
    """Largest ``a/b0`` for which the inequality on ``b_i`` forces ``b_i >= b0``."""
    if not 1 <= i <= 11:
        raise ClassError(f"thresholds exist for 1 <= i <= 11, got {i}")
    if i == 1:
        return Fraction(11)
    if i == 10:
        alpha, beta = derive_b10_bound()
        return min(Fraction(77, 11), (alpha - 1) / beta)
    return Fraction(6 * i + 17, i + 1)


MAX_CERTIFIED_GENUS = 23


def _thresholds(g: int) -> dict[int, Fraction]:
    return {i: corollary_threshold(i) for i in range(1, min(g // 2, 11) + 1)}


def certify_slope_equals_a_over_b0(D) -> CheckReport:
    """Certify ``s(D) = a/b0`` from ``a`` and ``b0`` alone (g <= 23)."""
    if D.genus > MAX_CERTIFIED_GENUS:
        raise ClassError(f"outside paper scope: g = {D.genus} > {MAX_CERTIFIED_GENUS}")
    a, b0 = _a_b(D, 0)
    if a <= 0 or b0 <= 0:
        raise ClassError("certification needs a > 0 and b0 > 0")
    ratio = a / b0
    ths = _thresholds(D.genus)
    binding = min(ths, key=lambda i: (ths[i], i))
    report = CheckReport.of(
        "a/b0 <= min_i threshold(i)",
        ratio,
        Relation.LE,
        ths[binding],
        f"binding i={binding}",
    )
    if report.ok:
        return CheckReport.of(
            report.statement, ratio, Relation.LE, ths[binding],
            f"binding i={binding}", note=f"slope = {format_rational(ratio)}",
        )
    return report


@dataclass(frozen=True)
class EpsilonRow:
    g: int
    upper_bound_source: str
    u_g: Fraction
    binding_i: int
    threshold: Fraction
    epsilon_g: Fraction

    @property
    def valid(self) -> bool:
        return self.epsilon_g > 0

    def to_dict(self) -> dict:
        return {
            "g": self.g,
            "source": self.upper_bound_source,
            "u_g": format_rational(self.u_g),
            "binding_i": self.binding_i,
            "threshold": format_rational(self.threshold),
            "epsilon": format_rational(self.epsilon_g),
        }


def slope_upper_bound(g: int) -> tuple[str, Fraction]:
    candidates = []
    if not is_prime(g + 1):
        candidates.append(("brill_noether", brill_noether_slope(g)))
    if g % 2 == 0:
        candidates.append(("petri", petri_slope(g)))
    if not candidates:
        raise ClassError(f"no upper bound for s_g available in genus {g}")
    return min(candidates, key=lambda c: c[1])


def epsilon_table(g_min: int = 3, g_max: int = MAX_CERTIFIED_GENUS) -> list[EpsilonRow]:
    if not 3 <= g_min <= g_max <= MAX_CERTIFIED_GENUS:
        raise ClassError(f"need 3 <= g_min <= g_max <= 23, got {g_min}..{g_max}")
    rows = []
    for g in range(g_min, g_max + 1):
        source, u = slope_upper_bound(g)
        ths = _thresholds(g)
        binding = min(ths, key=lambda i: (ths[i], i))
        rows.append(EpsilonRow(g, source, u, binding, ths[binding], ths[binding] - u))
    return rows


# -- effectivity of pi_*(W^2) ------------------------------------------------


def prop_effectivity_report(g: int) -> CheckReport:
    """Compare ``π_*(W^2)`` coefficient ratios with the Brill-Noether class.

    Checks ``b0/a <= (g+1)/(6g+18)`` and ``b_i/a <= i(g-i)/(g+3)``.  The report
    carries the tightest condition; every condition is listed in ``details``.
    """
    if g < 4:
        raise ClassError(f"effectivity comparison is stated for g >= 4, got {g}")
    P = push_quadratic(weierstrass(g), weierstrass(g))
    a = P.lam
    conds = [("b0/a <= (g+1)/(6g+18)", P.b(0) / a, Fraction(g + 1, 6 * g + 18))]
    for i in range(1, g // 2 + 1):
        conds.append((f"b{i}/a <= {i}(g-{i})/(g+3)", P.b(i) / a, Fraction(i * (g - i), g + 3)))
    details = [CheckReport.of(s, l, Relation.LE, r, f"g={g}") for s, l, r in conds]
    tight = max(range(len(conds)), key=lambda k: conds[k][1] / conds[k][2])
    statement, left, right = conds[tight]
    note = ""
    if is_prime(g + 1):
        note = "g+1 prime: no Brill-Noether comparison class, ratios shown for information"
    return CheckReport.of(
        f"pi_*(W^2) effective (g={g}): {statement}",
        left,
        Relation.LE,
        right,
        "Brill-Noether comparison",
        note=note,
        details=details,
    )


# -- canonical class of the universal curve -------------------------------------


def kodaira_lambda_numerator(g: int) -> int:
    return 13 * g**3 + 6 * g**2 - 9 * g + 2


def kodaira_printed_slope(g: int) -> Fraction:
    return Fraction(2 * kodaira_lambda_numerator(g), g * (g + 1) * (4 * g + 3))


@dataclass(frozen=True)
class KodairaReport:
    g: int
    convention: Convention
    cls: DivisorClass
    slope: Fraction
    paper_value: Fraction
    lambda_match: bool

    @property
    def slope_match(self) -> bool:
        return self.slope == self.paper_value

    def to_dict(self) -> dict:
        from .picard import class_to_dict

        return {
            "g": self.g,
            "convention": self.convention.value,
            "class": class_to_dict(self.cls),
            "slope": format_rational(self.slope),
            "paper_value": format_rational(self.paper_value),
            "lambda_match": self.lambda_match,
            "slope_match": self.slope_match,
        }


def kodaira_slope_report(g: int, conv: Convention | str) -> KodairaReport:
    """``D = π_*(K . W)`` for the canonical class of ``Mbar_{g,1}``, against the printed slope."""
    if not 3 <= g <= 20:
        raise ClassError(f"kodaira report covers 3 <= g <= 20, got {g}")
    conv = Convention(conv)
    D = push_quadratic(canonical_pointed(g, conv), weierstrass(g))
    return KodairaReport(
        g, conv, D, slope(D), kodaira_printed_slope(g),
        D.lam == kodaira_lambda_numerator(g),
    )


# -- discrepancies -------------------------------------------------------------


@dataclass(frozen=True)
class Discrepancy:
    key: str
    description: str
    computed: str
    printed: str

    def line(self) -> str:
        return (
            f"[OPEN    ] {self.key}: {self.description}; "
            f"computed {self.computed} vs printed {self.printed}"
        )

    def to_dict(self) -> dict:
        return {
            "key": self.key,
            "description": self.description,
            "computed": self.computed,
            "printed": self.printed,
        }


PRINTED_I10_THRESHOLD = "6.906..."


def open_discrepancies(places: int = 4) -> list[Discrepancy]:
    """The two places where exact recomputation disagrees with printed values."""
    t10 = corollary_threshold(10)
    out = [
        Discrepancy(
            "corollary-i10-threshold",
            "a/b0 threshold for b10 >= b0",
            f"{format_rational(t10)} = {render_decimal(t10, places)}...",
            PRINTED_I10_THRESHOLD,
        )
    ]
    g = 3
    slopes = ", ".join(
        f"{c.value}: {format_rational(kodaira_slope_report(g, c).slope)}" for c in Convention
    )
    out.append(
        Discrepancy(
            "kodaira-slope-denominator",
            f"slope of pi_*(K.W) at g={g}, printed 2(13g^3+6g^2-9g+2)/(g(g+1)(4g+3))",
            slopes,
            format_rational(kodaira_printed_slope(g)),
        )
    )
    return out


def counterexample_report() -> CheckReport:
    """``s(K) = a/b0 = 7`` against the conjectured ``6 + 12/11 = 78/11``."""
    cert = certify_slope_equals_a_over_b0(k3_divisor())
    if not cert.ok:
        raise DerivationError(f"slope of K not certified: {cert.line()}")
    s = cert.left
    return CheckReport.of(
        "s(K) < 6 + 12/(g+1) at g=10",
        s,
        Relation.LE,
        brill_noether_slope(10),
        f"{cert.witness}; B.K = {format_rational(intersect(lefschetz_pencil(10), k3_divisor()))}",
    )


def closed_form_matches(genera: Iterable[int]) -> list[int]:
    """Genera where the engine and the closed form of ``π_*(W^2)`` disagree."""
    return [
        g for g in genera
        if push_quadratic(weierstrass(g), weierstrass(g)) != pushed_weierstrass_square_closed(g)
    ]
