"""Pushforward of quadratic expressions along the forgetful map ``Mg1 -> Mg``
and the pullbacks used alongside it.

The rule table gives ``pi_*(x*y)`` for every unordered pair of basis elements
``x, y`` of ``Mg1``:

    lambda^2, lambda*delta_i, delta0*delta_i   -> 0
    psi^2                                      -> 12 lambda - (delta0 + ... + delta[g/2])
    lambda*psi                                 -> (2g-2) lambda
    psi*delta0                                 -> (2g-2) delta0
    psi*delta_i             (i >= 1)           -> (2i-1) delta_i
    delta_i^2               (1 <= i <= g-1)    -> -delta_i
    delta_i*delta_(g-i)     (1 <= i < g/2)     -> delta_i
    any other delta_i*delta_j                  -> 0

Target indices are folded to ``min(i, g-i)`` after lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Mapping

from .picard import (
    LAMBDA,
    PSI,
    ClassError,
    DivisorClass,
    IndeterminateError,
    PartialDivisorClass,
    PointedDivisorClass,
    Space,
    Unknown,
    basis,
    delta,
    delta_index,
    make_class,
)


def _fold(i: int, g: int) -> int:
    return min(i, g - i)


def _rule(g: int, x: str, y: str) -> dict[str, Fraction]:
    """``pi_*(x*y)`` as a sparse ``{Mg basis name: coefficient}`` map."""
    if x == PSI and y != PSI:
        x, y = y, x
    if x == LAMBDA and y == LAMBDA:
        return {}
    if LAMBDA in (x, y):
        other = y if x == LAMBDA else x
        if other == PSI:
            return {LAMBDA: Fraction(2 * g - 2)}
        return {}
    if x == PSI and y == PSI:
        out = {LAMBDA: Fraction(12)}
        out.update((delta(j), Fraction(-1)) for j in range(g // 2 + 1))
        return out
    if y == PSI:
        i = delta_index(x)
        if i == 0:
            return {delta(0): Fraction(2 * g - 2)}
        return {delta(_fold(i, g)): Fraction(2 * i - 1)}
    i, j = delta_index(x), delta_index(y)
    if i == 0 or j == 0:
        return {}
    if i == j:
        return {delta(_fold(i, g)): Fraction(-1)}
    if i + j == g:
        # the pair {i, g-i} with i < g/2; i == g/2 was the square case above
        return {delta(min(i, j)): Fraction(1)}
    return {}


@dataclass(frozen=True)
class PushRuleTable:
    """All pushforward rules in one genus, keyed by unordered basis pairs."""

    genus: int
    rules: Mapping[frozenset, DivisorClass]

    def __getitem__(self, pair: tuple[str, str]) -> DivisorClass:
        x, y = pair
        return self.rules[frozenset((x, y))]

    def __len__(self) -> int:
        return len(self.rules)


@lru_cache(maxsize=None)
def push_rule_table(g: int) -> PushRuleTable:
    names = basis(Space.POINTED, g)
    rules = {}
    for x, y in combinations_with_replacement(names, 2):
        rules[frozenset((x, y))] = make_class(Space.UNPOINTED, g, _rule(g, x, y))
    return PushRuleTable(g, rules)


def _check_pair(X, Y) -> int:
    for Z in (X, Y):
        if Z.space is not Space.POINTED:
            raise ClassError(f"expected a class on Mg1, got {Z.space.value}")
    if X.genus != Y.genus:
        raise ClassError(f"mixed genus: {X.genus} and {Y.genus}")
    return X.genus


def push_quadratic(X: PointedDivisorClass, Y: PointedDivisorClass) -> DivisorClass:
    """``pi_*(X*Y)`` by bilinear extension of the rule table."""
    g = _check_pair(X, Y)
    if X.is_partial or Y.is_partial:
        raise IndeterminateError("push_quadratic needs full classes; use push_quadratic_partial")
    table = push_rule_table(g)
    acc = {name: Fraction(0) for name in basis(Space.UNPOINTED, g)}
    xs, ys = X.support(), Y.support()
    for x, cx in xs.items():
        for y, cy in ys.items():
            for name, c in _rule_items(table, x, y):
                acc[name] += cx * cy * c
    return make_class(Space.UNPOINTED, g, acc)


def _rule_items(table: PushRuleTable, x: str, y: str):
    return table[x, y].support().items()


EXACT_SLOTS = (LAMBDA, delta(0))


def push_quadratic_partial(
    X: PointedDivisorClass, Y: PartialDivisorClass | PointedDivisorClass
) -> PartialDivisorClass:
    """``pi_*(X*Y)`` when ``Y`` may carry Unknown coefficients.

    Only the lambda and delta0 coefficients of the result are computed; every
    other coefficient is reported as Unknown.  An Unknown in ``Y`` that would
    reach lambda or delta0 through a nonzero rule raises
    :class:`IndeterminateError`.
    """
    g = _check_pair(X, Y)
    if X.is_partial:
        raise IndeterminateError("the first argument must be a full class")
    table = push_rule_table(g)
    acc = {name: Fraction(0) for name in EXACT_SLOTS}
    for x, cx in X.support().items():
        for y, cy in Y.support().items():
            for name, c in _rule_items(table, x, y):
                if name not in acc:
                    continue
                if cy is Unknown:
                    raise IndeterminateError(
                        f"indeterminate: Unknown coefficient of {y} reaches {name} "
                        f"through pi_*({x}*{y})"
                    )
                acc[name] += cx * cy * c
    coeffs = {name: Unknown for name in basis(Space.UNPOINTED, g)}
    coeffs.update(acc)
    return PartialDivisorClass(Space.UNPOINTED, g, coeffs)


def pull_forgetful(A: DivisorClass | PartialDivisorClass):
    """``pi^*`` from ``Mg`` to ``Mg1``.

    lambda and delta0 pull back to themselves, delta_i to
    ``delta_i + delta_(g-i)`` for ``1 <= i < g/2``, and the middle class
    delta_(g/2) (g even) to itself.  Unknown coefficients of a partial class
    stay Unknown in every slot they map to.
    """
    if A.space is not Space.UNPOINTED:
        raise ClassError("pull_forgetful takes a class on Mg")
    g = A.genus
    src = A.coefficients()
    coeffs = {LAMBDA: src[LAMBDA], delta(0): src[delta(0)]}
    for i in range(1, g // 2 + 1):
        coeffs[delta(i)] = src[delta(i)]
        if i != g - i:
            coeffs[delta(g - i)] = src[delta(i)]
    return make_class(Space.POINTED, g, coeffs)


ATTACH_GENUS = 10


def pull_attach10(D: DivisorClass | PartialDivisorClass) -> PartialDivisorClass:
    """Pullback along ``Mbar_{10,1} -> Mbar_g`` attaching a fixed genus g-10 tail.

    ``j^*`` sends lambda to lambda, delta0 to delta0 and delta10 to -psi.  The
    remaining boundary pullbacks are left Unknown.
    """
    if D.space is not Space.UNPOINTED:
        raise ClassError("pull_attach10 takes a class on Mg")
    if D.genus < 2 * ATTACH_GENUS:
        raise ClassError(f"pull_attach10 needs g >= 20 so that delta10 exists, got {D.genus}")
    lam = D.coefficient(LAMBDA)
    d0 = D.coefficient(delta(0))
    d10 = D.coefficient(delta(ATTACH_GENUS))
    for name, v in ((LAMBDA, lam), (delta(0), d0), (delta(ATTACH_GENUS), d10)):
        if v is Unknown:
            raise IndeterminateError(f"indeterminate: {name} coefficient is Unknown")
    coeffs = {LAMBDA: lam, PSI: -d10, delta(0): d0}
    coeffs.update((delta(i), Unknown) for i in range(1, ATTACH_GENUS))
    return PartialDivisorClass(Space.POINTED, ATTACH_GENUS, coeffs)
