"""Semi-adequacy detection through cable degree data.

A diagram is A-adequate when its all-A state graph has no one-edge
loops, B-adequate when the all-B graph has none.  Both predicates are
combinatorial and cheap.  What this module adds is the numerical side:
the quadratic ceilings that the writhe-corrected cable evaluations can
reach, the exact top coefficients of cable brackets, and the derived
detector invariants.  Equality of actual degree and ceiling at any
width at least two happens precisely for A-adequate diagrams, so the
numbers and the combinatorics check each other; :func:`analyze` runs
the whole battery and refuses to return a report in which they
disagree.

Width feasibility is a resource policy, not mathematics: a width-n
cable of a c-crossing diagram has c*n**2 crossings, so default widths
are 3 for up to three crossings, 2 for up to six, 1 beyond.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bracket import bracket
from .diagram import LinkDiagram, cable, mirror, writhe
from .jones import cable_family, unreduced
from .laurent import LaurentPoly
from .states import KauffmanState, RibbonGraph, ribbon_graph

__all__ = [
    "AdequacyReport",
    "InvariantViolation",
    "VanishingChecks",
    "analyze",
    "beta_prefix",
    "cable_top_coeffs",
    "degree_ceilings",
    "degree_equality",
    "feasible_width",
    "h_ceiling",
    "h_ceiling_mirror",
    "is_a_adequate",
    "is_b_adequate",
    "state_graph",
    "t_invariant",
    "vanishing_checks",
]


class InvariantViolation(RuntimeError):
    """A certified identity failed on concrete data.

    Raised instead of returning a report whose fields contradict each
    other; ``check`` names the identity for the command-line layer.
    """

    def __init__(self, check: str, message: str):
        super().__init__(f"{check}: {message}")
        self.check = check


def state_graph(diagram: LinkDiagram, side: str = "A") -> RibbonGraph:
    """Ribbon graph of the all-A or all-B state."""
    c = diagram.crossing_count
    if side == "A":
        state = KauffmanState.all_A(c)
    elif side == "B":
        state = KauffmanState.all_B(c)
    else:
        raise ValueError(f"side must be 'A' or 'B', not {side!r}")
    return ribbon_graph(diagram, state)


def is_a_adequate(diagram: LinkDiagram) -> bool:
    """True when the all-A state graph has no one-edge loops."""
    return state_graph(diagram, "A").loop_mask() == 0


def is_b_adequate(diagram: LinkDiagram) -> bool:
    """True when the all-B state graph has no one-edge loops.

    Computed directly and cross-checked against A-adequacy of the
    mirror image; the two constructions must agree.
    """
    direct = state_graph(diagram, "B").loop_mask() == 0
    via_mirror = is_a_adequate(mirror(diagram))
    if direct != via_mirror:
        raise InvariantViolation(
            "mirror-adequacy",
            "all-B loop test disagrees with all-A loop test of the mirror",
        )
    return direct


def h_ceiling(diagram: LinkDiagram, n: int) -> int:
    """Quadratic ceiling ``2*c_neg*n**2 + 2*(v_A - w)*n - 2``.

    ``v_A`` counts circles of the all-A state, ``w`` is the writhe and
    ``c_neg`` the number of negative crossings.  The corrected width-n
    evaluation never exceeds this exponent.
    """
    c_neg = diagram.negative_count
    v_a = state_graph(diagram, "A").vertex_count
    return 2 * c_neg * n * n + 2 * (v_a - writhe(diagram)) * n - 2


def h_ceiling_mirror(diagram: LinkDiagram, n: int) -> int:
    """Floor for the minimal exponent, by mirror symmetry."""
    return -h_ceiling(mirror(diagram), n)


def degree_ceilings(diagram: LinkDiagram) -> tuple[int, int]:
    """Bracket exponent window ``(max bound, min bound)``.

    Max bound is ``e + 2v - 2`` over the all-A graph, min bound is
    ``-(e + 2v - 2)`` over the all-B graph.  The empty diagram has
    bracket 1 by convention and both bounds collapse to zero.
    """
    if diagram.is_empty:
        return 0, 0
    g_a = state_graph(diagram, "A")
    g_b = state_graph(diagram, "B")
    hi = g_a.edge_count + 2 * g_a.vertex_count - 2
    lo = -(g_b.edge_count + 2 * g_b.vertex_count - 2)
    return hi, lo


def feasible_width(diagram: LinkDiagram) -> int:
    """Default cable width budget for this diagram size."""
    c = diagram.crossing_count
    if c <= 3:
        return 3
    if c <= 6:
        return 2
    return 1


def _cables(diagram, widths):
    return {m: cable(diagram, m) for m in widths}


def _brackets(cables, engine, limits):
    return {
        m: bracket(dm, engine=engine, **limits) for m, dm in cables.items()
    }


def cable_top_coeffs(
    diagram: LinkDiagram,
    n_max: int,
    *,
    engine: str = "fast",
    cables: dict[int, LinkDiagram] | None = None,
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> tuple[dict[int, int], dict[int, int]]:
    """Coefficients of cable brackets at and just below the ceiling.

    For each width ``m`` up to ``n_max``, the first dict holds the
    coefficient at the exact max bound of the width-m cable, the second
    the coefficient four below it.  The bound is recomputed from the
    cabled diagram's own all-A graph each time, never from a closed
    form in ``m``, so agreement with ceiling-degree predictions is a
    genuine check.
    """
    widths = range(1, n_max + 1)
    if cables is None:
        cables = _cables(diagram, widths)
    if family is None:
        family = _brackets(cables, engine, limits)
    tops: dict[int, int] = {}
    nexts: dict[int, int] = {}
    for m in widths:
        hi, _ = degree_ceilings(cables[m])
        tops[m] = family[m].coeff(hi)
        nexts[m] = family[m].coeff(hi - 4)
    return tops, nexts


@dataclass(frozen=True)
class VanishingChecks:
    """Exact cable top coefficients with their vanishing verdicts.

    ``top`` maps widths (from 2) to the coefficient at the max bound,
    ``next_below`` maps widths (from 3) to the coefficient four below
    it.  ``matches_loops`` records that vanishing of every top
    coefficient coincides with the all-A graph having a loop.
    ``deep_vanishing`` is only populated for the interesting corner:
    diagrams whose own top coefficient is nonzero yet fail A-adequacy;
    for those, the next-below cable coefficients must vanish too.
    """

    top: dict[int, int]
    next_below: dict[int, int]
    all_top_vanish: bool
    matches_loops: bool
    deep_vanishing: bool | None


def vanishing_checks(
    diagram: LinkDiagram,
    n_max: int | None = None,
    *,
    engine: str = "fast",
    cables: dict[int, LinkDiagram] | None = None,
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> VanishingChecks:
    """Run the top-coefficient vanishing battery up to ``n_max``."""
    if n_max is None:
        n_max = feasible_width(diagram)
    if n_max < 2:
        raise ValueError("vanishing checks need width at least 2")
    tops, nexts = cable_top_coeffs(
        diagram, n_max, engine=engine, cables=cables, family=family,
        **limits,
    )
    top = {m: tops[m] for m in range(2, n_max + 1)}
    next_below = {m: nexts[m] for m in range(3, n_max + 1)}
    all_vanish = all(v == 0 for v in top.values())
    adequate = is_a_adequate(diagram)
    matches = all_vanish == (not adequate)
    if not matches:
        raise InvariantViolation(
            "cable-top-vanishing",
            f"top coefficients {top} inconsistent with "
            f"A-adequate={adequate}",
        )
    deep = None
    if not adequate and tops[1] != 0:
        deep = all(v == 0 for v in next_below.values())
        if next_below and not deep:
            raise InvariantViolation(
                "deep-vanishing",
                f"nonzero own top coefficient with loops, yet "
                f"next-below coefficients {next_below} survive cabling",
            )
    return VanishingChecks(
        top=top,
        next_below=next_below,
        all_top_vanish=all_vanish,
        matches_loops=matches,
        deep_vanishing=deep,
    )


def degree_equality(
    diagram: LinkDiagram,
    n: int,
    *,
    engine: str = "fast",
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> tuple[bool, bool]:
    """(actual degree equals ceiling at width ``n``, A-adequacy).

    The two booleans agree for every diagram this battery has seen;
    callers assert that, this function just reports both sides.
    """
    if n < 2:
        raise ValueError("degree equality is a width >= 2 criterion")
    g = unreduced(diagram, n, engine=engine, family=family, **limits)
    return g.max_degree() == h_ceiling(diagram, n), is_a_adequate(diagram)


def t_invariant(
    diagram: LinkDiagram,
    n: int = 3,
    *,
    engine: str = "fast",
    cables: dict[int, LinkDiagram] | None = None,
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> tuple[int, int, LaurentPoly]:
    """Detector pair and its linear polynomial, from width ``n > 2``.

    ``alpha`` is the absolute product of the diagram's own top
    coefficient with the width-n cable's, ``beta`` the same with the
    cable coefficient four below the bound; the polynomial is
    ``alpha + beta*q``.  Zero exactly when no top data survives
    cabling.
    """
    if n <= 2:
        raise ValueError("the detector pair needs width greater than 2")
    tops, nexts = cable_top_coeffs(
        diagram, n, engine=engine, cables=cables, family=family, **limits
    )
    alpha = abs(tops[1] * tops[n])
    beta = abs(tops[1] * nexts[n])
    return alpha, beta, LaurentPoly({0: alpha, 1: beta})


def beta_prefix(
    diagram: LinkDiagram,
    k: int,
    *,
    engine: str = "fast",
    family: dict[int, LaurentPoly] | None = None,
    **limits,
) -> tuple[int, ...]:
    """First ``k`` stable-tail coefficients.

    Entry ``i`` (1-based) is the coefficient of the exponent
    ``ceiling(i+1) - 4*(i-1)`` in the corrected width-``i+1``
    evaluation.  The first entry vanishes exactly for diagrams that
    are not A-adequate and is ``+-1`` for A-adequate ones.
    """
    out = []
    for i in range(1, k + 1):
        width = i + 1
        g = unreduced(diagram, width, engine=engine, family=family,
                      **limits)
        out.append(g.coeff(h_ceiling(diagram, width) - 4 * (i - 1)))
    return tuple(out)


@dataclass(frozen=True)
class AdequacyReport:
    """Everything the battery computed for one diagram.

    Width-indexed dicts only contain the widths that were feasible for
    the diagram's size.  ``t_poly`` is None when no width above 2 was
    feasible; ``stability`` records whether the width-independence of
    the detector pair could be exercised at two widths above 2.
    """

    name: str | None
    crossings: int
    a_adequate: bool
    b_adequate: bool
    max_bound: int
    min_bound: int
    complexity: tuple[int, int, int]
    ceilings: dict[int, int]
    actual_degree: dict[int, int | None]
    cable_top: dict[int, int]
    cable_next: dict[int, int]
    alpha_beta: dict[int, tuple[int, int]]
    t_width: int | None
    t_poly: LaurentPoly | None
    beta_series: tuple[int, ...]
    stability: str
    notes: tuple[str, ...]

    def to_json(self) -> dict:
        def poly(p):
            if p is None:
                return None
            return {"pairs": [list(t) for t in p.to_pairs()],
                    "text": p.to_text(var="q")}

        return {
            "name": self.name,
            "crossings": self.crossings,
            "a_adequate": self.a_adequate,
            "b_adequate": self.b_adequate,
            "max_bound": self.max_bound,
            "min_bound": self.min_bound,
            "complexity": list(self.complexity),
            "ceilings": {str(n): v for n, v in self.ceilings.items()},
            "actual_degree": {
                str(n): v for n, v in self.actual_degree.items()
            },
            "cable_top": {str(n): v for n, v in self.cable_top.items()},
            "cable_next": {str(n): v for n, v in self.cable_next.items()},
            "alpha_beta": {
                str(n): list(v) for n, v in self.alpha_beta.items()
            },
            "t_width": self.t_width,
            "t_poly": poly(self.t_poly),
            "beta_series": list(self.beta_series),
            "stability": self.stability,
            "notes": list(self.notes),
        }


def _empty_report(name: str | None) -> AdequacyReport:
    return AdequacyReport(
        name=name,
        crossings=0,
        a_adequate=True,
        b_adequate=True,
        max_bound=0,
        min_bound=0,
        complexity=(0, 0, 0),
        ceilings={},
        actual_degree={},
        cable_top={},
        cable_next={},
        alpha_beta={},
        t_width=None,
        t_poly=None,
        beta_series=(),
        stability="not exercised (empty diagram)",
        notes=("empty diagram: conventions only, nothing to cable",),
    )


def analyze(
    diagram: LinkDiagram,
    *,
    n_max: int | None = None,
    series: int = 1,
    engine: str = "fast",
    name: str | None = None,
    **limits,
) -> AdequacyReport:
    """Run the full battery and cross-check every redundant pair.

    Raises :class:`InvariantViolation` rather than returning a report
    whose combinatorial and numerical sides disagree.
    """
    if diagram.is_empty:
        return _empty_report(name)
    if n_max is None:
        n_max = feasible_width(diagram)
    if n_max < 1:
        raise ValueError("need at least width 1")
    notes: list[str] = []

    a_ok = is_a_adequate(diagram)
    b_ok = is_b_adequate(diagram)
    hi, lo = degree_ceilings(diagram)
    complexity = (
        diagram.negative_count,
        diagram.crossing_count,
        state_graph(diagram, "A").vertex_count - writhe(diagram),
    )

    # stability of the detector pair needs two widths above 2
    widths = list(range(1, n_max + 1))
    if n_max >= 3 and cable(diagram, n_max + 1).crossing_count <= 64:
        widths.append(n_max + 1)
    cables = _cables(diagram, widths)
    family = _brackets(cables, engine, limits)

    window = family[1]
    if not (lo <= window.min_degree() and window.max_degree() <= hi):
        raise InvariantViolation(
            "bracket-degree-window",
            f"bracket degrees [{window.min_degree()}, "
            f"{window.max_degree()}] escape [{lo}, {hi}]",
        )

    tops, nexts = cable_top_coeffs(
        diagram, max(widths), cables=cables, family=family
    )

    ceilings: dict[int, int] = {}
    actual: dict[int, int | None] = {}
    for n in range(1, n_max + 1):
        ceilings[n] = h_ceiling(diagram, n)
        g = unreduced(diagram, n, family=family)
        actual[n] = None if not len(g) else g.max_degree()
        if actual[n] is not None and actual[n] > ceilings[n]:
            raise InvariantViolation(
                "cable-degree-ceiling",
                f"width {n} degree {actual[n]} exceeds {ceilings[n]}",
            )

    equalities = [
        actual[n] == ceilings[n] for n in range(2, n_max + 1)
    ]
    some_top = any(tops[m] != 0 for m in range(2, n_max + 1))
    if n_max >= 2:
        if not (a_ok == all(equalities) == some_top):
            raise InvariantViolation(
                "adequacy-consistency",
                f"loop test {a_ok}, degree equalities {equalities}, "
                f"surviving top coefficients {some_top} must agree",
            )
        vc = vanishing_checks(
            diagram, n_max, cables=cables, family=family
        )
        if vc.deep_vanishing is not None:
            notes.append(
                "own top coefficient survives despite loops; "
                "next-below cable coefficients checked to vanish"
            )

    alpha_beta: dict[int, tuple[int, int]] = {}
    for m in sorted(cables):
        if m >= 2:
            alpha_beta[m] = (
                abs(tops[1] * tops[m]), abs(tops[1] * nexts[m])
            )

    t_width = None
    t_poly = None
    if n_max > 2:
        t_width = 3
        alpha, beta, t_poly = t_invariant(
            diagram, 3, cables=cables, family=family
        )
        notes.append(
            "detector computed from this diagram; "
            "diagram-independence is not certified here"
        )
        if t_poly == LaurentPoly.one():
            notes.append(
                "detector equals 1: in published tables this value "
                "accompanies fibered examples (informational only)"
            )
    else:
        notes.append("no width above 2 feasible, detector skipped")

    over = [m for m in alpha_beta if m > 2]
    if len(over) >= 2:
        pairs = {alpha_beta[m] for m in over}
        if len(pairs) == 1:
            stability = (
                f"exercised: detector pair agrees at widths "
                f"{tuple(sorted(over))}"
            )
        else:
            stability = (
                f"unstable across widths "
                f"{ {m: alpha_beta[m] for m in sorted(over)} }"
            )
            notes.append(
                "detector pair varies with width on this diagram"
            )
    else:
        stability = "not exercised (single feasible width above 2)"

    series_max = max(0, min(series, n_max - 1))
    if series_max < series:
        notes.append(
            f"stable-tail series truncated to {series_max} "
            f"coefficients by the width budget"
        )
    beta_series = beta_prefix(
        diagram, series_max, family=family
    )

    return AdequacyReport(
        name=name,
        crossings=diagram.crossing_count,
        a_adequate=a_ok,
        b_adequate=b_ok,
        max_bound=hi,
        min_bound=lo,
        complexity=complexity,
        ceilings=ceilings,
        actual_degree=actual,
        cable_top={m: tops[m] for m in sorted(tops)},
        cable_next={m: nexts[m] for m in sorted(nexts) if m >= 2},
        alpha_beta=alpha_beta,
        t_width=t_width,
        t_poly=t_poly,
        beta_series=beta_series,
        stability=stability,
        notes=tuple(notes),
    )
