"""Exhaustive small-diagram oracles.

Everything the rest of the package claims universally is re-checked here
by brute force: :func:`enumerate_diagrams` walks every double-occurrence
code of a given crossing number, and :func:`run_property_suite` evaluates
every identity on every one of them, reporting violations instead of
raising so that a broken build produces a readable artifact.

Enumeration covers all codes, including those failing the evenness
parity condition (not drawable on the sphere); all polynomial identities
hold there too.  Dealternating-number statements are the one exception:
a code can be made alternating by crossing changes iff it passes
``evenness_lint``, so the suite checks the dealternating bounds on
evenness-passing codes and checks that the others are reported
unreachable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from . import characterize, moves, warping
from .diagram import OVER, UNDER, GaussDiagram, Pass
from .laurent import WarpPoly
from .errors import (
    BoundExceededError,
    NotAlternatableError,
    NotConstructibleError,
    WarpPolyError,
    ZeroCrossingsError,
)

ENUMERATION_BOUND = 6
DEALTERNATING_CAP = 20


@dataclass(frozen=True)
class Violation:
    property_id: str
    code: str
    detail: str

    def as_dict(self) -> dict:
        return {
            "property": self.property_id,
            "code": self.code,
            "detail": self.detail,
        }


@dataclass(frozen=True)
class PropertyReport:
    """Outcome of a verification sweep; empty ``violations`` on a correct build."""

    crossings_checked: tuple[int, int]
    diagrams_checked: int
    violations: tuple[Violation, ...]
    checks_run: tuple[tuple[str, int], ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations

    def checks(self) -> dict[str, int]:
        return dict(self.checks_run)

    def as_dict(self) -> dict:
        return {
            "crossings_checked": list(self.crossings_checked),
            "diagrams_checked": self.diagrams_checked,
            "violations": [v.as_dict() for v in self.violations],
            "checks_run": {k: v for k, v in self.checks_run},
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.as_dict(), indent=indent, sort_keys=False)


def _matchings(slots: tuple[int, ...]) -> Iterator[tuple[tuple[int, int], ...]]:
    # pair the smallest free slot with every later one; first slots ascend,
    # so assigning ids in pair order is first-appearance numbering
    if not slots:
        yield ()
        return
    a, rest = slots[0], slots[1:]
    for i in range(len(rest)):
        b = rest[i]
        for sub in _matchings(rest[:i] + rest[i + 1 :]):
            yield ((a, b),) + sub


def enumerate_diagrams(c: int, bound: int = ENUMERATION_BOUND) -> Iterator[GaussDiagram]:
    """Every unsigned code with ``c`` crossings, ids canonical, fixed order.

    Yields each fixed (unrotated) sequence exactly once: all pairings of
    the ``2c`` positions times all over/under assignments, so
    ``(2c-1)!! * 2^c`` diagrams.
    """
    if c < 0:
        raise ValueError("crossing count must be >= 0")
    if c > bound:
        raise BoundExceededError(f"enumeration of c={c} above bound {bound}")
    if c == 0:
        yield GaussDiagram(())
        return
    for matching in _matchings(tuple(range(2 * c))):
        for markers in product((OVER, UNDER), repeat=c):
            passes = [None] * (2 * c)
            for cid, ((a, b), first) in enumerate(zip(matching, markers), start=1):
                passes[a] = Pass(cid, first)
                passes[b] = Pass(cid, UNDER if first == OVER else OVER)
            yield GaussDiagram(tuple(passes))


def dealternating_number(diagram: GaussDiagram, cap: int = DEALTERNATING_CAP) -> int:
    """Minimal number of crossing changes yielding an alternating diagram.

    Plain subset search, breadth-first by subset size.  Raises
    :class:`NotAlternatableError` when no subset works (exactly the codes
    failing ``evenness_lint``).
    """
    c = diagram.crossing_count
    if c == 0:
        raise ZeroCrossingsError("dealternating number needs a crossing")
    if c > cap:
        raise BoundExceededError(f"subset search over {c} crossings exceeds cap {cap}")
    markers = [p.strand == OVER for p in diagram.passes]
    positions: dict[int, list[int]] = {}
    for i, p in enumerate(diagram.passes):
        positions.setdefault(p.crossing, []).append(i)
    ids = sorted(positions)
    n = len(markers)
    for size in range(c + 1):
        for subset in combinations(ids, size):
            flipped = markers[:]
            for x in subset:
                for i in positions[x]:
                    flipped[i] = not flipped[i]
            if all(flipped[i] != flipped[i - 1] for i in range(n)):
                return size
    raise NotAlternatableError(
        "no crossing-change subset is alternating (code fails evenness)"
    )


def _spiral_one_bridge(l: int) -> GaussDiagram:
    # nested pairing O1..Ol Ul..U1: one-bridge with every pass pair at odd
    # distance, so the output stays within evenness-passing codes
    overs = tuple(Pass(i, OVER) for i in range(1, l + 1))
    unders = tuple(Pass(i, UNDER) for i in range(l, 0, -1))
    return GaussDiagram(overs + unders)


def span_witness(c: int, s: int) -> GaussDiagram:
    """A diagram with ``c`` crossings and span ``s``, by fixed recipes.

    Recipes: the empty diagram for (0, 0); a spiral one-bridge diagram for
    ``c = s >= 1``; that diagram plus ``c - s`` over-first kinks at the
    edge labeled 0 for ``c > s >= 2`` (each kink adds ``1 + t``, keeping
    the degree range ``[0, s]``).  Other inputs, including ``c > s = 1``,
    are refused even when some diagram would qualify.
    """
    if c == 0 and s == 0:
        return GaussDiagram(())
    if c == s and s >= 1:
        return _spiral_one_bridge(s)
    if c > s >= 2:
        diagram = _spiral_one_bridge(s)
        for _ in range(c - s):
            edge = moves.find_edge_with_label(diagram, 0)
            diagram = moves.insert_kink_over_first(diagram, edge)
        return diagram
    raise NotConstructibleError(f"no recipe for c={c}, span={s}")


class _Recorder:
    def __init__(self):
        self.violations: list[Violation] = []
        self.counts: dict[str, int] = {}

    def check(self, property_id: str, ok: bool, diagram, detail=""):
        # detail may be a zero-argument callable so passing checks pay
        # nothing for message formatting
        self.counts[property_id] = self.counts.get(property_id, 0) + 1
        if not ok:
            if callable(detail):
                detail = detail()
            self.violations.append(Violation(property_id, str(diagram), detail))

    def guard(self, fn, diagram) -> None:
        # a broken build must still produce a report, not a traceback
        try:
            fn()
        except WarpPolyError as exc:
            self.check("no-unexpected-errors", False, diagram, repr(exc))


def almost_alternating_scan(max_crossings: int) -> PropertyReport:
    """Check the span dichotomy for single crossing changes of alternating codes.

    For every alternating diagram with ``1 <= c <= max_crossings`` and
    every crossing, the changed diagram must have span 2 or 3, and span 2
    exactly when one side of the crossing's f/g split is a monomial.
    Changes whose result is still alternating (possible only at c = 1,
    where no almost-alternating diagram arises) are skipped.
    """
    if max_crossings > ENUMERATION_BOUND:
        raise BoundExceededError(f"max_crossings {max_crossings} above bound")
    rec = _Recorder()
    diagrams = 0
    for c in range(1, max_crossings + 1):
        for diagram in enumerate_diagrams(c):
            if not diagram.is_alternating():
                continue
            diagrams += 1
            rec.guard(lambda: _scan_alternating_changes(rec, diagram), diagram)
    return PropertyReport(
        crossings_checked=(1, max_crossings),
        diagrams_checked=diagrams,
        violations=tuple(rec.violations),
        checks_run=tuple(sorted(rec.counts.items())),
    )


def _scan_alternating_changes(rec: _Recorder, diagram: GaussDiagram) -> None:
    for x in sorted(diagram.crossing_ids()):
        changed = diagram.crossing_change(x)
        if changed.is_alternating():
            continue
        span = warping.diagram_span(changed)
        rec.check(
            "almost-alternating-span-range",
            span in (2, 3),
            diagram,
            lambda: f"crossing {x}: span {span}",
        )
        f, g = warping.fg_decomposition(diagram, x)
        monomial_side = f.span() == 0 or g.span() == 0
        rec.check(
            "almost-alternating-span-two-criterion",
            (span == 2) == monomial_side,
            diagram,
            lambda: f"crossing {x}: span {span}, f {f}, g {g}",
        )


def _check_diagram(rec: _Recorder, diagram: GaussDiagram) -> None:
    c = diagram.crossing_count
    labels = warping.labeling(diagram)
    poly = warping.warping_polynomial(diagram)
    d = min(labels)
    d_max = max(labels)
    span = d_max - d
    reversed_diagram = diagram.reverse()
    reversed_poly = warping.warping_polynomial(reversed_diagram)
    mirror_poly = warping.warping_polynomial(diagram.mirror())
    d_rev = warping.warping_degree(reversed_diagram)

    reflected = poly.reflect(c)
    rec.check(
        "orientation-reverse-reflects",
        reversed_poly == reflected,
        diagram,
        lambda: f"W={poly}",
    )
    rec.check(
        "mirror-reflects",
        mirror_poly == reflected,
        diagram,
        lambda: f"W={poly}",
    )
    if c >= 1:
        rec.check("value-at-one", poly(1) == 2 * c, diagram, lambda: f"W(1)={poly(1)}")
        rec.check("root-at-minus-one", poly(-1) == 0, diagram, lambda: f"W(-1)={poly(-1)}")
        odd = sum(co for deg, co in poly.terms if deg % 2)
        even = sum(co for deg, co in poly.terms if deg % 2 == 0)
        rec.check(
            "odd-even-coefficient-sums",
            odd == even == c,
            diagram,
            lambda: f"odd {odd}, even {even}",
        )
    rec.check("gap-free", poly.gap_free(), diagram, lambda: f"W={poly}")
    rec.check(
        "lower-degree-is-warping-degree",
        poly.ldeg() == warping.warping_degree(diagram) == d,
        diagram,
        lambda: f"W={poly}",
    )
    rec.check(
        "span-complement-identity",
        span == c - (d + d_rev),
        diagram,
        lambda: f"span {span}, d {d}, d_rev {d_rev}",
    )
    rec.check(
        "span-orientation-mirror-invariance",
        span == reversed_poly.span() == mirror_poly.span(),
        diagram,
        "",
    )
    if c >= 1:
        alternating = diagram.is_alternating()
        rec.check(
            "alternating-iff-span-one",
            alternating == (span == 1),
            diagram,
            lambda: f"span {span}",
        )
        if alternating:
            rec.check(
                "alternating-polynomial-form",
                poly.as_dict() == {d: c, d + 1: c},
                diagram,
                lambda: f"W={poly}",
            )
        rec.check(
            "degree-sum-bound",
            d + d_rev + 1 <= c,
            diagram,
            lambda: f"d {d}, d_rev {d_rev}",
        )
        rec.check(
            "degree-sum-equality-iff-alternating",
            (d + d_rev + 1 == c) == alternating,
            diagram,
            lambda: f"d {d}, d_rev {d_rev}",
        )
    rec.check(
        "recognition-soundness",
        isinstance(characterize.recognize(poly), characterize.CharForm),
        diagram,
        lambda: f"W={poly}",
    )
    rec.check(
        "monotone-iff-nonzero-constant-term",
        warping.is_monotone(diagram) == (poly(0) != 0),
        diagram,
        lambda: f"W={poly}",
    )

    for x in sorted(diagram.crossing_ids()):
        changed = diagram.crossing_change(x)
        changed_poly = warping.warping_polynomial(changed)
        f, g = warping.fg_decomposition(diagram, x)
        rec.check("fg-partition", f + g == poly, diagram, lambda: f"crossing {x}")
        rec.check("fg-lower-degree", f.ldeg() >= 1, diagram, lambda: f"crossing {x}: f {f}")
        rec.check(
            "crossing-change-prediction",
            warping.predict_crossing_change(diagram, x) == changed_poly,
            diagram,
            lambda: f"crossing {x}",
        )
        rec.check(
            "crossing-change-span-jump",
            abs(changed_poly.span() - span) <= 2,
            diagram,
            lambda: f"crossing {x}",
        )

    # the kink identities presuppose an edge bounded by crossings; the
    # zero-crossing diagram's conventional single edge degenerates them
    if c >= 1:
        even = diagram.evenness_lint()
        shifted = poly.shift(1)
        bumps = {
            i: WarpPoly(((i, 1), (i + 1, 1)))  # t^i (1 + t)
            for i in set(labels)
        }
        over_expect = {i: poly + bump for i, bump in bumps.items()}
        under_expect = {i: shifted + bump for i, bump in bumps.items()}
        for edge, i in enumerate(labels):
            over = moves.insert_kink_over_first(diagram, edge)
            rec.check(
                "kink-over-first-identity",
                warping.warping_polynomial(over) == over_expect[i],
                diagram,
                lambda: f"edge {edge}",
            )
            under = moves.insert_kink_under_first(diagram, edge)
            rec.check(
                "kink-under-first-identity",
                warping.warping_polynomial(under) == under_expect[i],
                diagram,
                lambda: f"edge {edge}",
            )
            if even:
                rec.check(
                    "kink-preserves-evenness",
                    over.evenness_lint() and under.evenness_lint(),
                    diagram,
                    lambda: f"edge {edge}",
                )

    if c >= 1:
        try:
            dalt = dealternating_number(diagram)
        except NotAlternatableError:
            dalt = None
        rec.check(
            "dealternating-reachable-iff-evenness",
            (dalt is not None) == diagram.evenness_lint(),
            diagram,
            "",
        )
        if dalt is not None:
            rec.check(
                "dealternating-sandwich",
                (span - 1) / 2 <= dalt <= c // 2,
                diagram,
                lambda: f"span {span}, dalt {dalt}",
            )


def _check_connected_sums(rec: _Recorder, max_crossings: int) -> None:
    summands = []
    for c in range(1, max_crossings + 1):
        for diagram in enumerate_diagrams(c):
            labels = warping.labeling(diagram)
            summands.append(
                (diagram, labels, warping.warping_polynomial(diagram))
            )
    for left, left_labels, left_poly in summands:
        left_min, left_max = min(left_labels), max(left_labels)
        left_span = left_max - left_min
        for right, right_labels, right_poly in summands:
            right_min, right_max = min(right_labels), max(right_labels)
            right_span = right_max - right_min
            span_floor = max(left_span, right_span)
            # expectations depend only on the label pair, not the edge pair
            expected: dict[tuple[int, int], WarpPoly] = {}
            for edge in range(len(left.passes)):
                i = left_labels[edge]
                for other_edge in range(len(right.passes)):
                    j = right_labels[other_edge]
                    try:
                        want = expected.get((i, j))
                        if want is None:
                            want = left_poly.shift(j) + right_poly.shift(i)
                            expected[(i, j)] = want
                        glued = moves.connected_sum(left, edge, right, other_edge)
                        glued_poly = warping.warping_polynomial(glued)
                        rec.check(
                            "connected-sum-identity",
                            glued_poly == want,
                            glued,
                            lambda: f"{left} #({edge},{other_edge}) {right}",
                        )
                        glued_span = glued_poly.span()
                        rec.check(
                            "connected-sum-span-bounds",
                            span_floor <= glued_span <= left_span + right_span,
                            glued,
                            lambda: f"spans {left_span}, {right_span} -> {glued_span}",
                        )
                        if left_span >= right_span:
                            equality = (
                                left_min - right_min <= i - j <= left_max - right_max
                            )
                        else:
                            equality = (
                                right_min - left_min <= j - i <= right_max - left_max
                            )
                        rec.check(
                            "connected-sum-span-equality-criterion",
                            (glued_span == span_floor) == equality,
                            glued,
                            lambda: f"i {i}, j {j}",
                        )
                    except WarpPolyError as exc:
                        rec.check(
                            "no-unexpected-errors", False, left, repr(exc)
                        )


def run_property_suite(
    max_crossings: int, pair_max_crossings: int = 3
) -> PropertyReport:
    """Check every identity on every code with at most ``max_crossings``.

    Covers the per-diagram invariants, per-crossing change predictions,
    per-edge kink identities, dealternating bounds, recognition soundness,
    and the connected-sum identities over pairs with at most
    ``min(pair_max_crossings, max_crossings)`` crossings each.
    """
    if max_crossings > ENUMERATION_BOUND:
        raise BoundExceededError(f"max_crossings {max_crossings} above bound")
    rec = _Recorder()
    diagrams = 0
    for c in range(0, max_crossings + 1):
        for diagram in enumerate_diagrams(c):
            diagrams += 1
            rec.guard(lambda: _check_diagram(rec, diagram), diagram)
    _check_connected_sums(rec, min(pair_max_crossings, max_crossings))
    return PropertyReport(
        crossings_checked=(0, max_crossings),
        diagrams_checked=diagrams,
        violations=tuple(rec.violations),
        checks_run=tuple(sorted(rec.counts.items())),
    )
