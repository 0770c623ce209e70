"""Square mosaics with torus edge identification, and their base-11 codec.

A mosaic is an n-by-n grid of tiles, rows numbered 1..n top to bottom.  On
the torus, row n is glued back to row 1 and column n back to column 1.  The
wire format flattens the grid row-major into base-11 digits, with ``a``
standing for tile kind 10; ``"12789a439"`` is the 3x3 grid
[[1,2,7],[8,9,10],[4,3,9]].
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .tiles import BITS, LEFT, TOP, RIGHT, BOTTOM, validate_kind

_DIGITS = "0123456789a"


class MosaicError(ValueError):
    """Invalid mosaic data or an operation on an unsuitable mosaic."""


@dataclass(frozen=True)
class Mosaic:
    """Immutable n-by-n tile grid; ``cells[i][j]`` is row i, column j (0-based)."""

    n: int
    cells: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise MosaicError(f"side length must be >= 1, got {self.n}")
        if len(self.cells) != self.n or any(len(r) != self.n for r in self.cells):
            raise MosaicError("cells must form an n-by-n grid")
        for row in self.cells:
            for kind in row:
                validate_kind(kind)

    @staticmethod
    def from_rows(rows) -> "Mosaic":
        cells = tuple(tuple(r) for r in rows)
        return Mosaic(len(cells), cells)

    def tile(self, i: int, j: int) -> int:
        """Tile kind at 1-based position (i, j)."""
        return self.cells[i - 1][j - 1]

    def __str__(self) -> str:
        return encode(self)


def decode(code: str) -> Mosaic:
    """Parse a base-11 mosaic code (row-major, 'a' = 10)."""
    if not code:
        raise MosaicError("empty code")
    size = math.isqrt(len(code))
    if size * size != len(code):
        raise MosaicError(f"code length {len(code)} is not a perfect square")
    kinds = []
    for ch in code:
        idx = _DIGITS.find(ch)
        if idx < 0:
            raise MosaicError(f"invalid code character {ch!r} (expected 0-9 or a)")
        kinds.append(idx)
    rows = [tuple(kinds[i * size : (i + 1) * size]) for i in range(size)]
    return Mosaic(size, tuple(rows))


def encode(m: Mosaic) -> str:
    """Inverse of :func:`decode`."""
    return "".join(_DIGITS[k] for row in m.cells for k in row)


def is_suitably_connected(m: Mosaic, mode: str = "toric") -> bool:
    """Check that strand endpoints of every tile meet matching endpoints.

    In toric mode each tile's right bit must equal the left bit of its
    right-hand neighbour (wrapping column n to column 1) and its bottom bit
    the top bit of the tile below (wrapping row n to row 1).  In classical
    mode interior edges must match and every outer-boundary bit must be 0.
    """
    if mode not in ("toric", "classical"):
        raise ValueError(f"mode must be 'toric' or 'classical', got {mode!r}")
    n, cells = m.n, m.cells
    for i in range(n):
        for j in range(n):
            bits = BITS[cells[i][j]]
            if mode == "toric":
                right_nbr = BITS[cells[i][(j + 1) % n]]
                below_nbr = BITS[cells[(i + 1) % n][j]]
                if bits[RIGHT] != right_nbr[LEFT] or bits[BOTTOM] != below_nbr[TOP]:
                    return False
            else:
                if j + 1 < n:
                    if bits[RIGHT] != BITS[cells[i][j + 1]][LEFT]:
                        return False
                elif bits[RIGHT]:
                    return False
                if i + 1 < n:
                    if bits[BOTTOM] != BITS[cells[i + 1][j]][TOP]:
                        return False
                elif bits[BOTTOM]:
                    return False
                if j == 0 and bits[LEFT]:
                    return False
                if i == 0 and bits[TOP]:
                    return False
    return True


def _require_toric(m: Mosaic) -> None:
    if not is_suitably_connected(m, "toric"):
        raise MosaicError("mosaic is not suitably connected on the torus")


def boundary_counts(m: Mosaic) -> tuple[int, int]:
    """(A, B): rows with side connections and columns with top connections.

    A counts rows whose strands cross the left/right seam, B counts columns
    whose strands cross the top/bottom seam.  Requires suitable connectedness.
    """
    _require_toric(m)
    a = sum(1 for i in range(m.n) if BITS[m.cells[i][0]][LEFT])
    b = sum(1 for j in range(m.n) if BITS[m.cells[0][j]][TOP])
    return a, b


def hidden_crossing_count(m: Mosaic) -> int:
    """Number of crossings forced outside the grid by the torus embedding."""
    a, b = boundary_counts(m)
    return a * b


def visible_crossing_count(m: Mosaic) -> int:
    """Number of crossing tiles (kinds 9 and 10) in the grid."""
    return sum(1 for row in m.cells for k in row if k in (9, 10))


def translate(m: Mosaic, dr: int, dc: int) -> Mosaic:
    """Cyclically shift the grid dr rows down and dc columns right."""
    n = m.n
    dr %= n
    dc %= n
    rows = []
    for i in range(n):
        src = m.cells[(i - dr) % n]
        rows.append(tuple(src[(j - dc) % n] for j in range(n)))
    return Mosaic(n, tuple(rows))


def strand_count(m: Mosaic) -> int:
    """Closed curves the mosaic carries on the torus (cheap, no tracing).

    Equals the component count of the traced link diagram.
    """
    from .tiles import PAIRINGS

    n, cells = m.n, m.cells
    seen: set[tuple[int, int, int]] = set()
    count = 0
    for i in range(n):
        for j in range(n):
            for pair in PAIRINGS[cells[i][j]]:
                for f in pair:
                    if (i, j, f) in seen:
                        continue
                    count += 1
                    ci, cj, cf = i, j, f
                    while (ci, cj, cf) not in seen:
                        seen.add((ci, cj, cf))
                        for a, b in PAIRINGS[cells[ci][cj]]:
                            if a == cf:
                                cf = b
                                break
                            if b == cf:
                                cf = a
                                break
                        seen.add((ci, cj, cf))
                        if cf == RIGHT:
                            cj = (cj + 1) % n
                            cf = LEFT
                        elif cf == LEFT:
                            cj = (cj - 1) % n
                            cf = RIGHT
                        elif cf == BOTTOM:
                            ci = (ci + 1) % n
                            cf = TOP
                        else:
                            ci = (ci - 1) % n
                            cf = BOTTOM
    return count


_SHIFT_MAPS: dict[int, list[tuple[int, ...]]] = {}


def _shift_maps(n: int) -> list[tuple[int, ...]]:
    maps = _SHIFT_MAPS.get(n)
    if maps is None:
        maps = [
            tuple(((i + dr) % n) * n + (j + dc) % n for i in range(n) for j in range(n))
            for dr in range(n)
            for dc in range(n)
        ]
        _SHIFT_MAPS[n] = maps
    return maps


def canonical_code(m: Mosaic) -> str:
    """Lexicographically least code over all n*n torus translations."""
    return canonical_of_code(encode(m), m.n)


def canonical_of_code(code: str, n: int) -> str:
    best = code
    for perm in _shift_maps(n)[1:]:
        cand = "".join(code[k] for k in perm)
        if cand < best:
            best = cand
    return best
