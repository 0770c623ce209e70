"""Link invariants: skein-recursion HOMFLY-PT, Alexander, linking number.

The HOMFLY-PT convention here is v**-1 * P(L+) - v * P(L-) = z * P(L0)
with P(unknot) = 1 and P of the k-component crossingless unlink equal to
((v**-1 - v)/z)**(k-1).  Under this convention the right-handed trefoil
evaluates to -v^4 + v^2*z^2 + 2*v^2.

The Alexander polynomial is computed from the arc-labelled crossing matrix
with one row and one column removed; the determinant is found exactly by
evaluating at integer points and interpolating, and the result is
normalised to the symmetric form with value 1 at t = 1.
"""

from __future__ import annotations

from fractions import Fraction

from .diagram import LinkDiagram, DiagramError, braid_closure
from .laurent import LaurentPoly1, LaurentPoly2, ONE1, ONE2, poly_div_exact

DEFAULT_BUDGET = 400_000

_V2 = LaurentPoly2.vz(2)
_VZ = LaurentPoly2.vz(1, 1)
_VI2 = LaurentPoly2.vz(-2)
_VIZ = LaurentPoly2.vz(-1, 1, -1)
_DELTA = LaurentPoly2({(-1, -1): 1, (1, -1): -1})  # (v^-1 - v)/z


class BudgetExceeded(RuntimeError):
    """The skein recursion exceeded its node budget."""

    def __init__(self, budget: int, crossings: int):
        super().__init__(
            f"skein recursion exceeded {budget} nodes on a {crossings}-crossing diagram"
        )
        self.budget = budget
        self.crossings = crossings


def _unlink_value(k: int) -> LaurentPoly2:
    if k < 1:
        raise DiagramError("empty diagram has no normalised invariant")
    return _DELTA ** (k - 1)


class _SkeinEngine:
    def __init__(self, budget: int, cache: dict | None):
        self.budget = budget
        self.nodes = 0
        self.cache = cache if cache is not None else {}

    def eval(self, d: LinkDiagram) -> LaurentPoly2:
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.budget, d.crossing_count)
        if d.crossing_count == 0:
            return _unlink_value(d.component_count)
        key = d.canonical_key()
        hit = self.cache.get(key)
        if hit is not None:
            return hit
        bad = d.bad_crossings()
        if not bad:
            value = _unlink_value(d.component_count)
            self.cache[key] = value
            return value
        # among crossings that move the diagram toward a descending one,
        # prefer the switch whose result simplifies furthest
        if len(bad) == 1:
            pick = bad[0]
            switched = d.switch(pick).simplify()
        else:
            pick, switched = None, None
            for c in bad:
                cand = d.switch(c).simplify()
                if switched is None or cand.crossing_count < switched.crossing_count:
                    pick, switched = c, cand
        smoothed = d.smooth(pick).simplify()
        p_switch = self.eval(switched)
        p_smooth = self.eval(smoothed)
        if d.sign(pick) > 0:
            value = _V2 * p_switch + _VZ * p_smooth
        else:
            value = _VI2 * p_switch + _VIZ * p_smooth
        self.cache[key] = value
        return value


def homfly(
    d: LinkDiagram,
    budget: int = DEFAULT_BUDGET,
    cache: dict | None = None,
) -> LaurentPoly2:
    """HOMFLY-PT polynomial of an oriented diagram.

    ``cache`` may be supplied to share memoised subdiagram values across
    calls; it is keyed by canonical diagram keys and is safe to reuse.
    Raises :class:`BudgetExceeded` when the recursion grows past ``budget``.
    """
    if d.component_count == 0:
        raise DiagramError("empty diagram has no normalised invariant")
    engine = _SkeinEngine(budget, cache)
    return engine.eval(d.simplify())


def homfly_mirror(d: LinkDiagram, budget: int = DEFAULT_BUDGET, cache: dict | None = None) -> LaurentPoly2:
    return homfly(d.mirror(), budget=budget, cache=cache)


def _interpolate(points: list[tuple[int, int]]) -> list[int]:
    """Exact Lagrange interpolation; returns dense coefficients, low to high."""
    n = len(points)
    coeffs = [Fraction(0)] * n
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            denom *= xi - xj
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] -= b * xj
                new[k + 1] += b
            basis = new
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            coeffs[k] += b * scale
    out = []
    for c in coeffs:
        if c.denominator != 1:
            raise ArithmeticError("interpolation did not yield integers")
        out.append(int(c))
    return out


def _int_det(matrix: list[list[int]]) -> int:
    """Fraction-free Bareiss determinant of an integer matrix."""
    m = [row[:] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            row_i = m[i]
            row_k = m[k]
            mik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - mik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def alexander(d: LinkDiagram) -> LaurentPoly1:
    """Alexander polynomial of a one-component diagram.

    Normalised so the result is symmetric under t -> 1/t and equals 1 at
    t = 1.
    """
    if d.component_count != 1:
        raise DiagramError("alexander polynomial requires a single component")
    d = d.simplify()
    n = d.crossing_count
    if n == 0:
        return ONE1
    arc_at, arc_count = d.arcs()
    if arc_count != n:
        raise DiagramError("arc count must equal crossing count on a knot")

    rows = []
    for c in range(n):
        u_in = d.entry_slot(c, 1 - d.over[c])
        u_out = (u_in + 2) % 4
        o_in = d.entry_slot(c, d.over[c])
        arc_in = arc_at[(c, u_in)]
        arc_out = arc_at[d.adj[c][u_out]]
        arc_over = arc_at[(c, o_in)]
        # row entries as coefficient pairs (constant, t): sign +: t*in - out + (1-t)*over
        row: dict[int, tuple[int, int]] = {}

        def bump(col, c0, c1):
            a, b = row.get(col, (0, 0))
            row[col] = (a + c0, b + c1)

        if d.sign(c) > 0:
            bump(arc_in, 0, 1)
            bump(arc_out, -1, 0)
            bump(arc_over, 1, -1)
        else:
            bump(arc_in, 1, 0)
            bump(arc_out, 0, -1)
            bump(arc_over, -1, 1)
        rows.append(row)

    size = n - 1  # drop the last row and last column
    points = []
    for t0 in range(2, 2 + n):
        matrix = [
            [
                rows[i].get(j, (0, 0))[0] + rows[i].get(j, (0, 0))[1] * t0
                for j in range(size)
            ]
            for i in range(size)
        ]
        points.append((t0, _int_det(matrix)))
    coeffs = _interpolate(points)
    return _normalize_alexander(LaurentPoly1({e: c for e, c in enumerate(coeffs)}))


def _normalize_alexander(p: LaurentPoly1) -> LaurentPoly1:
    if not p:
        raise DiagramError("vanishing determinant: not a knot diagram")
    p = p.shift(-p.min_exp())
    span = p.max_exp()
    if span % 2:
        raise DiagramError("alexander polynomial has odd span")
    centered = p.shift(-span // 2)
    if centered.reciprocal() != centered:
        raise DiagramError("alexander polynomial is not symmetric")
    at_one = sum(centered.terms.values())
    if at_one == 1:
        return centered
    if at_one == -1:
        return -centered
    raise DiagramError(f"alexander normalisation failed: value {at_one} at t=1")


def alexander_torus(p: int, q: int) -> LaurentPoly1:
    """Closed-form Alexander polynomial of the (p, q) torus knot."""
    from .generators import validate_torus_params

    validate_torus_params(p, q)
    tn = lambda k: LaurentPoly1({k: 1, 0: -1})  # t^k - 1
    num = tn(p * q) * tn(1)
    quot = poly_div_exact(num, tn(p))
    quot = poly_div_exact(quot, tn(q))
    return _normalize_alexander(quot)


def determinant(d: LinkDiagram) -> int:
    """|Alexander at t = -1|, a quick fingerprint for knots."""
    alex = alexander(d)
    return abs(sum(-c if e % 2 else c for e, c in alex.terms.items()))


def alexander_determinant(d: LinkDiagram) -> int:
    """Link determinant via one integer evaluation of the crossing matrix.

    Works for any diagram in which every component passes under somewhere;
    split diagrams (free loops present) have determinant 0.
    """
    d = d.simplify()
    n = d.crossing_count
    if n == 0:
        return 1 if d.component_count == 1 else 0
    if d.loops:
        return 0
    arc_at, arc_count = d.arcs()
    if arc_count != n:
        raise DiagramError("arc count does not match crossing count")
    size = n - 1
    matrix = [[0] * size for _ in range(size)]
    for c in range(size):
        u_in = d.entry_slot(c, 1 - d.over[c])
        u_out = (u_in + 2) % 4
        o_in = d.entry_slot(c, d.over[c])
        cols = (
            (arc_at[(c, u_in)], -1 if d.sign(c) > 0 else 1),
            (arc_at[d.adj[c][u_out]], -1 if d.sign(c) > 0 else 1),
            (arc_at[(c, o_in)], 2 if d.sign(c) > 0 else -2),
        )
        for col, val in cols:
            if col < size:
                matrix[c][col] += val
    return abs(_int_det(matrix))


def linking_number(d: LinkDiagram) -> int:
    """Half the signed count of crossings between the two components."""
    if d.component_count != 2:
        raise DiagramError("linking number requires exactly two components")
    total = 0
    for c in range(d.crossing_count):
        if d.comp[c][0] != d.comp[c][1]:
            total += d.sign(c)
    if total % 2:
        raise DiagramError("signed inter-component crossings must be even")
    return total // 2


def torus_knot_diagram(p: int, q: int) -> LinkDiagram:
    """Closure of (sigma_1 ... sigma_{p-1})**q: q(p-1) positive crossings."""
    from .generators import validate_torus_params

    validate_torus_params(p, q)
    word = list(range(1, p)) * q
    return braid_closure(word, p)
