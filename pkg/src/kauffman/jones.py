"""Cabled evaluation of colored Jones polynomials.

The width-``n`` invariant of a diagram is assembled from brackets of its
parallel cables: expand the second-kind Chebyshev polynomial ``S_n`` and
replace each power ``x**m`` by the bracket of the width-``m`` cable.
Two bracket conventions appear, and they are not interchangeable:

* the *counted* convention keeps the engine normalisation (a lone
  circle contributes 1) and sends the width-0 term to the constant 1.
  Its writhe-corrected form :func:`unreduced` obeys the sharp quadratic
  degree ceilings that detect adequacy, but adding a kink changes it.
* the *scaled* convention multiplies every positive-width bracket by
  ``delta = -A**2 - A**-2``.  Its writhe-corrected form is unchanged by
  adding a kink, which makes the quotient by the unknot reference value
  a genuine invariant; that quotient is :func:`reduced`.

The writhe correction multiplies by ``(-1)**(n*w + n - 1)`` and by
``A**(-w*(n*n + 2*n))``, where ``w`` is the writhe.  No further fudge
factors: with these signs the width-1 reduced value of the left-handed
trefoil is the classical Jones polynomial ``-q**-4 + q**-3 + q**-1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bracket import DELTA, bracket
from .diagram import LinkDiagram, cable, writhe
from .laurent import LaurentPoly, NotDivisibleByFourError

__all__ = [
    "ChebyshevExpansion",
    "ReducedJones",
    "cable_family",
    "cabled_bracket",
    "chebyshev",
    "chebyshev_value",
    "reduced",
    "unknot_reference",
    "unreduced",
]


@dataclass(frozen=True)
class ChebyshevExpansion:
    """Coefficients of a Chebyshev polynomial of the second kind.

    ``coeffs`` lists ``(power, coefficient)`` pairs in increasing power
    order; powers absent from the list have coefficient zero.  The
    polynomials satisfy ``S_0 = 1``, ``S_1 = x`` and
    ``S_{k+1} = x*S_k - S_{k-1}``.
    """

    n: int
    coeffs: tuple[tuple[int, int], ...]

    def coeff(self, power: int) -> int:
        for m, c in self.coeffs:
            if m == power:
                return c
        return 0

    def evaluate(self, x: LaurentPoly) -> LaurentPoly:
        acc = LaurentPoly.zero()
        for m, c in self.coeffs:
            acc = acc + LaurentPoly.const(c) * x**m
        return acc


def chebyshev(n: int) -> ChebyshevExpansion:
    """Expansion of ``S_n``; powers run through ``n, n-2, n-4, ...``."""
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    prev = {0: 1}
    cur = {1: 1}
    if n == 0:
        cur = prev
    else:
        for _ in range(n - 1):
            nxt = {m + 1: c for m, c in cur.items()}
            for m, c in prev.items():
                nxt[m] = nxt.get(m, 0) - c
            prev = cur
            cur = {m: c for m, c in nxt.items() if c}
    return ChebyshevExpansion(n=n, coeffs=tuple(sorted(cur.items())))


def chebyshev_value(n: int, x: LaurentPoly) -> LaurentPoly:
    return chebyshev(n).evaluate(x)


def cable_family(
    diagram: LinkDiagram,
    n: int,
    *,
    engine: str = "fast",
    **limits,
) -> dict[int, LaurentPoly]:
    """Engine brackets of the width-1 through width-``n`` cables.

    The cables are the expensive part of every computation here, so the
    family is exposed for reuse: all entry points accept a prebuilt one
    via their ``family`` argument.
    """
    return {
        m: bracket(cable(diagram, m), engine=engine, **limits)
        for m in range(1, n + 1)
    }


def _counted_sum(
    diagram: LinkDiagram,
    n: int,
    family: dict[int, LaurentPoly] | None,
    engine: str,
    limits: dict,
) -> LaurentPoly:
    expansion = chebyshev(n)
    if family is None:
        family = cable_family(diagram, n, engine=engine, **limits)
    acc = LaurentPoly.const(expansion.coeff(0))
    for m, c in expansion.coeffs:
        if m >= 1:
            acc = acc + LaurentPoly.const(c) * family[m]
    return acc


def _correction(diagram: LinkDiagram, n: int) -> tuple[int, int]:
    w = writhe(diagram)
    sign = -1 if (n * w + n - 1) % 2 else 1
    return sign, -w * (n * n + 2 * n)


def cabled_bracket(
    diagram: LinkDiagram,
    n: int,
    *,
    engine: str = "fast",
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> LaurentPoly:
    """Chebyshev combination of cable brackets, counted convention.

    No writhe correction is applied; this is the raw state sum whose
    top degree the adequacy bounds speak about, shifted by the writhe
    term later.
    """
    if n < 0:
        raise ValueError("cable width must be nonnegative")
    return _counted_sum(diagram, n, family, engine, limits)


def unreduced(
    diagram: LinkDiagram,
    n: int,
    *,
    engine: str = "fast",
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> LaurentPoly:
    """Writhe-corrected counted-convention evaluation.

    Obeys ``max_degree <= h(n)`` for the quadratic ceiling ``h`` of the
    diagram, with equality for every ``n >= 2`` exactly when the all-A
    state graph is loop-free.  Not invariant under kinks; use
    :func:`reduced` for an invariant.
    """
    raw = cabled_bracket(
        diagram, n, engine=engine, family=family, **limits
    )
    sign, shift = _correction(diagram, n)
    return LaurentPoly.const(sign) * raw.shift(shift)


def unknot_reference(n: int) -> LaurentPoly:
    """Scaled-convention value of the crossingless unknot at width ``n``.

    Closed form ``-(A**(2n) + A**(2n-4) + ... + A**(-2n))``; equal to
    ``(-1)**(n-1) * S_n(delta)``, which is what the reduction quotient
    divides by.
    """
    if n < 0:
        raise ValueError("cable width must be nonnegative")
    return LaurentPoly({2 * n - 4 * j: -1 for j in range(n + 1)})


@dataclass(frozen=True)
class ReducedJones:
    """Reduced width-``n`` invariant, as an exact quotient.

    ``a_poly`` always holds the quotient in the bracket variable.  When
    every exponent is divisible by four the substitution ``q = A**-4``
    lands in integer powers and ``q_poly`` holds the result; otherwise
    ``q_poly`` is None and only the bracket-variable form is exact
    (multi-component diagrams routinely land in this case).
    """

    width: int
    a_poly: LaurentPoly
    q_poly: LaurentPoly | None

    @property
    def in_q(self) -> bool:
        return self.q_poly is not None

    def to_text(self) -> str:
        if self.q_poly is not None:
            return self.q_poly.to_text(var="q")
        return self.a_poly.to_text(var="A")


def reduced(
    diagram: LinkDiagram,
    n: int,
    *,
    engine: str = "fast",
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> ReducedJones:
    """Quotient of the scaled-convention value by the unknot reference.

    Division is exact for every diagram this package has ever been run
    on; a failure raises ``InexactDivisionError`` rather than returning
    an approximation.  The quotient is invariant under adding kinks.
    """
    if diagram.is_empty:
        raise ValueError(
            "the empty diagram has no component to reduce along"
        )
    counted = cabled_bracket(
        diagram, n, engine=engine, family=family, **limits
    )
    c0 = LaurentPoly.const(chebyshev(n).coeff(0))
    # scaled-convention total: delta * (counted - c0) + c0
    scaled = DELTA * (counted - c0) + c0
    sign, shift = _correction(diagram, n)
    corrected = LaurentPoly.const(sign) * scaled.shift(shift)
    quotient = corrected.exact_div(unknot_reference(n))
    try:
        q_poly = quotient.to_q()
    except NotDivisibleByFourError:
        q_poly = None
    return ReducedJones(width=n, a_poly=quotient, q_poly=q_poly)
