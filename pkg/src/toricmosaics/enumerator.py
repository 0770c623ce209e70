"""Exhaustive generation of suitably connected toric mosaics.

The search fills the grid row-major, depth first.  A tile must match the
right bit of its left neighbour and the bottom bit of the tile above; the
column wrap is enforced when a row completes and the row wrap while
filling the last row.  Tiles are tried in increasing kind order, so codes
stream out in lexicographic order.

The search tree partitions cleanly by first-row prefix, which is how the
census spreads work across processes: disjoint prefixes share nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .mosaic import Mosaic, canonical_code, encode
from .tiles import BITS, LEFT, TOP, RIGHT, BOTTOM

#: tile kinds keyed by (left bit, top bit), kinds ascending
_BY_LT: dict[tuple[int, int], tuple[int, ...]] = {}
for _kind in range(11):
    _b = BITS[_kind]
    _BY_LT.setdefault((_b[LEFT], _b[TOP]), tuple())
for _kind in range(11):
    _b = BITS[_kind]
    _BY_LT[(_b[LEFT], _b[TOP])] += (_kind,)


@dataclass(frozen=True)
class EnumOptions:
    """Search options: side length, orbit reduction, first-row prefix."""

    n: int
    symmetry_reduce: bool = False
    prefix: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("side length must be >= 1")
        if len(self.prefix) > self.n:
            raise ValueError("prefix longer than the first row")
        for kind in self.prefix:
            if not 0 <= kind <= 10:
                raise ValueError(f"invalid prefix tile {kind}")


def enumerate_mosaics(opts: EnumOptions) -> Iterator[Mosaic]:
    """Yield every suitably connected toric mosaic of side n exactly once.

    With ``symmetry_reduce`` only translation-orbit representatives (the
    mosaics equal to their canonical code) are yielded; the set is still
    complete, one mosaic per orbit.
    """
    n = opts.n
    grid = [[0] * n for _ in range(n)]
    bits = BITS

    def candidates(i: int, j: int):
        left_bit = bits[grid[i][j - 1]][RIGHT] if j > 0 else None
        top_bit = bits[grid[i - 1][j]][BOTTOM] if i > 0 else None
        if i == 0 and j == 0:
            kinds = range(11)
        elif left_bit is None:
            kinds = _BY_LT[(0, top_bit)] + _BY_LT[(1, top_bit)]
        elif top_bit is None:
            kinds = _BY_LT[(left_bit, 0)] + _BY_LT[(left_bit, 1)]
        else:
            kinds = _BY_LT[(left_bit, top_bit)]
        for kind in sorted(kinds) if not isinstance(kinds, range) else kinds:
            b = bits[kind]
            if j == n - 1:
                # the wrap partner is this same cell when n == 1
                left_of_first = b[LEFT] if n == 1 else bits[grid[i][0]][LEFT]
                if b[RIGHT] != left_of_first:
                    continue
            if i == n - 1:
                top_of_first = b[TOP] if n == 1 else bits[grid[0][j]][TOP]
                if b[BOTTOM] != top_of_first:
                    continue
            yield kind

    def fill(pos: int) -> Iterator[Mosaic]:
        if pos == n * n:
            m = Mosaic.from_rows(tuple(tuple(row) for row in grid))
            if not opts.symmetry_reduce or encode(m) == canonical_code(m):
                yield m
            return
        i, j = divmod(pos, n)
        if i == 0 and j < len(opts.prefix):
            forced = opts.prefix[j]
            for kind in candidates(i, j):
                if kind == forced:
                    grid[i][j] = kind
                    yield from fill(pos + 1)
            return
        for kind in candidates(i, j):
            grid[i][j] = kind
            yield from fill(pos + 1)

    yield from fill(0)


def count(opts: EnumOptions) -> int:
    """Number of mosaics :func:`enumerate_mosaics` would yield."""
    total = 0
    for _ in enumerate_mosaics(opts):
        total += 1
    return total
