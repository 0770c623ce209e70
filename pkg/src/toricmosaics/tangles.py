"""Diagram builders for rational (2-bridge) and Montesinos links.

A rational tangle is grown from the all-positive continued fraction of its
fraction, twisting alternately on the right side and along the bottom,
innermost term first.  The numerator closure of the p/q tangle is the
2-bridge link b(p, q), whose determinant is p; every builder checks that
identity on its output before returning it.

Montesinos links chain rotated rational tangles left to right, add an
optional row of extra twists, and close.  Pretzel links are the special
case of integer tangles.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import LinkDiagram, DiagramError


class _TangleBuilder:
    """Crossings plus four dangling corner plugs (NW, NE, SW, SE).

    Corner plugs are (crossing, slot) ends; the first twist seeds all four
    corners, so the degenerate crossingless tangles never arise here.
    """

    def __init__(self):
        self.over_flags: list[int] = []
        self.wires: list[tuple] = []
        self.nw = self.ne = self.sw = self.se = None

    def _crossing(self, positive: bool) -> int:
        # slots counterclockwise: 0=NE, 1=NW, 2=SW, 3=SE
        self.over_flags.append(0 if positive else 1)
        return len(self.over_flags) - 1

    def twist_right(self, positive: bool) -> None:
        c = self._crossing(positive)
        if self.ne is None:
            self.nw, self.ne, self.sw, self.se = (c, 1), (c, 0), (c, 2), (c, 3)
            return
        self.wires.append((self.ne, (c, 1)))
        self.wires.append((self.se, (c, 2)))
        self.ne, self.se = (c, 0), (c, 3)

    def twist_bottom(self, positive: bool) -> None:
        c = self._crossing(positive)
        if self.ne is None:
            self.nw, self.ne, self.sw, self.se = (c, 1), (c, 0), (c, 2), (c, 3)
            return
        self.wires.append((self.sw, (c, 1)))
        self.wires.append((self.se, (c, 0)))
        self.sw, self.se = (c, 2), (c, 3)

    def absorb(self, sub: "_TangleBuilder", rotate: bool) -> tuple:
        """Merge another builder's crossings; returns its corner tuple,
        rotated a quarter turn when requested."""
        offset = len(self.over_flags)
        self.over_flags.extend(sub.over_flags)
        shift = lambda end: (end[0] + offset, end[1])
        for a, b in sub.wires:
            self.wires.append((shift(a), shift(b)))
        nw, ne, sw, se = (shift(sub.nw), shift(sub.ne), shift(sub.sw), shift(sub.se))
        if rotate:
            return (ne, se, nw, sw)
        return (nw, ne, sw, se)

    def close_numerator(self) -> LinkDiagram:
        if self.ne is None:
            raise DiagramError("cannot close an empty tangle")
        self.wires.append((self.nw, self.ne))
        self.wires.append((self.sw, self.se))
        return LinkDiagram.assemble(self.over_flags, self.wires)


def continued_fraction(p: int, q: int) -> list[int]:
    """All-positive continued fraction of p/q with an odd number of terms."""
    if p <= 0 or q <= 0 or q > p:
        raise DiagramError(f"fraction must satisfy 0 < q <= p, got {p}/{q}")
    terms = []
    a, b = p, q
    while b:
        terms.append(a // b)
        a, b = b, a % b
    if terms[-1] == 1 and len(terms) > 1:
        terms[-2] += 1
        terms.pop()
    if len(terms) % 2 == 0:
        terms[-1] -= 1
        terms.append(1)
    return terms


def rational_tangle(p: int, q: int, flip: bool = False) -> _TangleBuilder:
    """The p/q tangle: innermost continued-fraction term first, horizontal
    twists on even levels, uniform handedness (alternating diagram)."""
    terms = continued_fraction(p, q)
    builder = _TangleBuilder()
    positive = not flip
    for idx in range(len(terms) - 1, -1, -1):
        horizontal = idx % 2 == 0
        for _ in range(terms[idx]):
            if horizontal:
                builder.twist_right(positive)
            else:
                builder.twist_bottom(positive)
    return builder


def rational_link(p: int, q: int) -> LinkDiagram:
    """Numerator closure of the p/q tangle: the 2-bridge link b(p, q)."""
    d = rational_tangle(p, q).close_numerator()
    _check_determinant(d, p)
    return d


def montesinos_link(e: int, fractions: list[tuple[int, int]]) -> LinkDiagram:
    """Rational tangles side by side, e extra twists, numerator closure.

    ``fractions`` lists (alpha, beta) with alpha >= |beta| >= 1; negative
    beta mirrors that tangle.  The determinant identity
    |prod(alpha) * (e + sum(beta/alpha))| is verified on the result.
    """
    if not fractions:
        raise DiagramError("montesinos link needs at least one tangle")
    main = _TangleBuilder()
    corners = None
    for alpha, beta in fractions:
        sub = rational_tangle(alpha, abs(beta), flip=beta < 0)
        nw, ne, sw, se = main.absorb(sub, rotate=True)
        if corners is None:
            corners = [nw, ne, sw, se]
        else:
            main.wires.append((corners[1], nw))
            main.wires.append((corners[3], sw))
            corners[1], corners[3] = ne, se
    main.nw, main.ne, main.sw, main.se = corners
    # the rotated tangles flip the handedness the extra twists need
    for _ in range(abs(e)):
        main.twist_right(e < 0)
    d = main.close_numerator()
    expected = Fraction(e)
    alpha_prod = 1
    for alpha, beta in fractions:
        expected += Fraction(beta, alpha)
        alpha_prod *= alpha
    _check_determinant(d, abs(int(expected * alpha_prod)))
    return d


def pretzel_link(*twists: int) -> LinkDiagram:
    """Pretzel P(c1, ..., ck): integer twist columns side by side."""
    if any(c == 0 for c in twists):
        raise DiagramError("zero twist columns are not supported")
    return montesinos_link(0, [(abs(c), 1 if c > 0 else -1) for c in twists])


def _check_determinant(d: LinkDiagram, expected: int) -> None:
    from .invariants import alexander_determinant

    got = alexander_determinant(d)
    if got != expected:
        raise DiagramError(f"built diagram has determinant {got}, expected {expected}")
