"""Text formats and braid input.

Gauss codes are whitespace-separated tokens::

    token := ("O" | "U" | "o" | "u") INT ("+" | "-")?

e.g. ``O1 U2 O3 U1 O2 U3``.  Output is always uppercase.  Canonical form
renumbers crossings 1..c by first appearance and picks the
lexicographically least rotation (ordering: O before U, then id, then
unsigned before "+" before "-").

Polynomials use the term grammar from :mod:`warppoly.laurent`
(``1+2t+2t^2+t^3``) or the compact list form ``k:c0,c1,...,cl`` meaning
coefficients ``c0..cl`` starting at degree ``k``; input containing ":"
is read as list form.

Braid words are given by a strand count ``n`` and nonzero letters
``w`` with ``1 <= |w| <= n-1``; letter ``w`` crosses strand positions
``|w|`` and ``|w|+1``, and on a positive letter the strand entering at
position ``|w|`` passes over.  Diagram span is mirror-invariant, so
results quoted for positive words hold under the opposite convention.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .diagram import OVER, UNDER, GaussDiagram, Pass
from .errors import NotAKnotError, ParseError
from .laurent import WarpPoly

_GAUSS_TOKEN = re.compile(r"([OUou])([0-9]+)([+-])?\Z")
_POLY_TERM = re.compile(r"([0-9]+)?(t(?:\^(-?[0-9]+))?)?\Z")


def parse_gauss(text: str) -> GaussDiagram:
    """Parse a Gauss code; raises :class:`ParseError` with token position."""
    passes = []
    for position, token in enumerate(text.split(), start=1):
        match = _GAUSS_TOKEN.match(token)
        if not match:
            raise ParseError(f"bad pass token {token!r}", position)
        marker, cid, sign = match.groups()
        passes.append(Pass(int(cid), OVER if marker in "Oo" else UNDER, sign))
    return GaussDiagram(tuple(passes))


def _rotation_key(passes, start):
    n = len(passes)
    renumber: dict[int, int] = {}
    key = []
    for k in range(n):
        p = passes[(start + k) % n]
        if p.crossing not in renumber:
            renumber[p.crossing] = len(renumber) + 1
        key.append(
            (
                0 if p.strand == OVER else 1,
                renumber[p.crossing],
                {None: 0, "+": 1, "-": 2}[p.sign],
            )
        )
    return key


def canonicalize(diagram: GaussDiagram) -> GaussDiagram:
    """First-appearance renumbering over the lexicographically least rotation."""
    passes = diagram.passes
    n = len(passes)
    if n == 0:
        return diagram
    best = min(range(n), key=lambda s: _rotation_key(passes, s))
    renumber: dict[int, int] = {}
    out = []
    for k in range(n):
        p = passes[(best + k) % n]
        if p.crossing not in renumber:
            renumber[p.crossing] = len(renumber) + 1
        out.append(Pass(renumber[p.crossing], p.strand, p.sign))
    return GaussDiagram(tuple(out))


def format_gauss(diagram: GaussDiagram, canonical: bool = False) -> str:
    """Render a diagram as space-joined uppercase tokens."""
    if canonical:
        diagram = canonicalize(diagram)
    return str(diagram)


@dataclass(frozen=True)
class BraidWord:
    """A braid word: strand count and signed generator letters."""

    n: int
    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        if self.n < 2:
            raise ValueError("braid needs at least 2 strands")
        if not self.letters:
            raise ValueError("braid word must be nonempty")
        for w in self.letters:
            if w == 0 or abs(w) > self.n - 1:
                raise ValueError(f"letter {w} outside [1, {self.n - 1}]")

    def mirror(self) -> "BraidWord":
        return BraidWord(self.n, tuple(-w for w in self.letters))


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse space-separated signed generator indices."""
    letters = []
    for position, token in enumerate(text.split(), start=1):
        try:
            letters.append(int(token))
        except ValueError:
            raise ParseError(f"bad braid letter {token!r}", position) from None
    if not letters:
        raise ParseError("empty braid word")
    try:
        return BraidWord(strands, tuple(letters))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def braid_closure(word: BraidWord) -> GaussDiagram:
    """Gauss code of the braid closure, which must be a knot.

    Strands are simulated through the word; the letter at step ``s``
    creates crossing id ``s``.  The closure is traversed starting with the
    strand that begins at position 1, and each strand's recorded passes
    are concatenated.  Signs follow the letters' signs.
    """
    n = word.n
    positions = list(range(1, n + 1))  # positions[p-1] = id of strand occupying p
    recorded: dict[int, list[Pass]] = {s: [] for s in range(1, n + 1)}
    for step, w in enumerate(word.letters, start=1):
        a = abs(w)
        upper, lower = positions[a - 1], positions[a]
        sign = "+" if w > 0 else "-"
        upper_strand = OVER if w > 0 else UNDER
        recorded[upper].append(Pass(step, upper_strand, sign))
        recorded[lower].append(
            Pass(step, UNDER if upper_strand == OVER else OVER, sign)
        )
        positions[a - 1], positions[a] = positions[a], positions[a - 1]
    end_position = {positions[p - 1]: p for p in range(1, n + 1)}

    passes: list[Pass] = []
    strand = 1
    visited = set()
    while strand not in visited:
        visited.add(strand)
        passes.extend(recorded[strand])
        strand = end_position[strand]
    if len(visited) != n:
        cycles, seen = 0, set()
        for s in range(1, n + 1):
            if s in seen:
                continue
            cycles += 1
            while s not in seen:
                seen.add(s)
                s = end_position[s]
        raise NotAKnotError(f"closure has {cycles} components, not 1")
    return GaussDiagram(tuple(passes))


def parse_poly(text: str) -> WarpPoly:
    """Parse either polynomial grammar (list form when ":" is present)."""
    text = text.strip()
    if ":" in text:
        return _parse_poly_list(text)
    return _parse_poly_terms(text)


def _parse_poly_terms(text: str) -> WarpPoly:
    compact = text.replace(" ", "")
    if not compact:
        raise ParseError("empty polynomial")
    terms = []
    for position, chunk in enumerate(compact.split("+"), start=1):
        match = _POLY_TERM.match(chunk)
        if not match or not chunk:
            raise ParseError(f"bad term {chunk!r}", position)
        coeff_text, t_part, exp_text = match.groups()
        if coeff_text is None and t_part is None:
            raise ParseError(f"bad term {chunk!r}", position)
        coeff = int(coeff_text) if coeff_text is not None else 1
        if t_part is None:
            degree = 0
        elif exp_text is None:
            degree = 1
        else:
            degree = int(exp_text)
        terms.append((degree, coeff))
    return WarpPoly(tuple(terms))


def _parse_poly_list(text: str) -> WarpPoly:
    head, _, tail = text.partition(":")
    try:
        start = int(head.strip())
    except ValueError:
        raise ParseError(f"bad list-form degree {head!r}", 1) from None
    coeffs = []
    for position, chunk in enumerate(tail.split(","), start=1):
        try:
            coeffs.append(int(chunk.strip()))
        except ValueError:
            raise ParseError(f"bad coefficient {chunk!r}", position) from None
    return WarpPoly(tuple((start + j, c) for j, c in enumerate(coeffs)))


def format_poly(poly: WarpPoly) -> str:
    """Canonical term-form rendering, ascending degree."""
    return str(poly)
