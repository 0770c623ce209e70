"""Flatten a toric mosaic into a planar link diagram.

The grid is drawn in the plane; strands that cross the top/bottom seam are
closed by arcs swinging around the left side of the grid (one nested arc
per connected column), and strands crossing the left/right seam close
around the bottom (one per connected row).  Arcs of one family never meet
each other, but every bottom-closing arc must pierce the fan of
left-closing arcs once, so a mosaic with A side-connected rows and B
top-connected columns picks up exactly A*B hidden crossings.

At a hidden crossing the row-closure strand passes over the column-closure
strand.  Together with kind 9 = vertical-over and kind 10 =
horizontal-over this is the assignment under which the single-tile mosaic
"9" traces to a Hopf link and "a" to a split unlink.

Crossing slots are counterclockwise with slot 0 at the bottom: 0=bottom,
1=right, 2=top, 3=left, so the {0,2} strand is the vertical one.
"""

from __future__ import annotations

from .diagram import LinkDiagram
from .mosaic import Mosaic, MosaicError, is_suitably_connected
from .tiles import BITS, EXIT_FACE, LEFT, TOP, RIGHT, BOTTOM, is_crossing

# tile face -> crossing slot for the visible crossing tiles
_FACE_SLOT = {BOTTOM: 0, RIGHT: 1, TOP: 2, LEFT: 3}


def trace(m: Mosaic) -> LinkDiagram:
    """Planar diagram of the toric mosaic, hidden crossings included."""
    if not is_suitably_connected(m, "toric"):
        raise MosaicError("mosaic is not suitably connected on the torus")
    n = m.n
    cells = m.cells

    over_flags: list[int] = []
    visible: dict[tuple[int, int], int] = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            kind = cells[i - 1][j - 1]
            if is_crossing(kind):
                visible[(i, j)] = len(over_flags)
                over_flags.append(0 if kind == 9 else 1)

    side_rows = [i for i in range(1, n + 1) if BITS[cells[i - 1][0]][LEFT]]
    top_cols = [j for j in range(1, n + 1) if BITS[cells[0][j - 1]][TOP]]
    hidden: dict[tuple[int, int], int] = {}
    for i in side_rows:
        for j in top_cols:
            hidden[(i, j)] = len(over_flags)
            over_flags.append(1)  # row-closure strand {1,3} passes over

    def face_end(i: int, j: int, face: int):
        kind = cells[i - 1][j - 1]
        if is_crossing(kind):
            return ("x", visible[(i, j)], _FACE_SLOT[face])
        return ("f", i, j, face)

    wires: dict = {}

    def wire(a, b):
        if a in wires or b in wires:
            raise MosaicError(f"conflicting strand wiring at {a} / {b}")
        wires[a] = b
        wires[b] = a

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            bits = BITS[cells[i - 1][j - 1]]
            if i < n and bits[BOTTOM]:
                wire(face_end(i, j, BOTTOM), face_end(i + 1, j, TOP))
            if j < n and bits[RIGHT]:
                wire(face_end(i, j, RIGHT), face_end(i, j + 1, LEFT))

    # column-closure arcs traversed bottom point to top point: they run up
    # the left of the grid, passing under the row-closure arc of each
    # side-connected row, bottom row first
    for j in top_cols:
        prev = face_end(n, j, BOTTOM)
        for i in reversed(side_rows):
            wire(prev, ("x", hidden[(i, j)], 0))
            prev = ("x", hidden[(i, j)], 2)
        wire(prev, face_end(1, j, TOP))

    # row-closure arcs traversed right point to left point: they swing
    # around the bottom and pierce the column-closure fan heading right,
    # meeting the rightmost connected column first
    for i in side_rows:
        prev = face_end(i, n, RIGHT)
        for j in reversed(top_cols):
            wire(prev, ("x", hidden[(i, j)], 3))
            prev = ("x", hidden[(i, j)], 1)
        wire(prev, face_end(i, 1, LEFT))

    # contract plain tile paths into crossing-to-crossing edges
    edges = []
    seen: set = set()

    def resolve(end):
        while end[0] == "f":
            _, i, j, face = end
            out_face = EXIT_FACE[cells[i - 1][j - 1]][face]
            seen.add((i, j, face))
            seen.add((i, j, out_face))
            end = wires[("f", i, j, out_face)]
        return end

    for cid in range(len(over_flags)):
        for slot in range(4):
            start = ("x", cid, slot)
            if start in seen:
                continue
            seen.add(start)
            end = resolve(wires[start])
            seen.add(end)
            edges.append(((cid, slot), (end[1], end[2])))

    loops = 0
    for end in list(wires):
        if end[0] != "f" or (end[1], end[2], end[3]) in seen:
            continue
        loops += 1
        cur = end
        while (cur[1], cur[2], cur[3]) not in seen:
            _, i, j, face = cur
            out_face = EXIT_FACE[cells[i - 1][j - 1]][face]
            seen.add((i, j, face))
            seen.add((i, j, out_face))
            cur = wires[("f", i, j, out_face)]

    return LinkDiagram.assemble(over_flags, edges, free_loops=loops)


def component_count(d: LinkDiagram) -> int:
    """Number of closed curves in the diagram."""
    return d.component_count


def simplify(d: LinkDiagram) -> LinkDiagram:
    """Kink and bigon reduction to a fixed point (re-exported convenience)."""
    return d.simplify()


def mirror(d: LinkDiagram) -> LinkDiagram:
    return d.mirror()


def pd_code(d: LinkDiagram) -> str:
    return d.pd_code()
