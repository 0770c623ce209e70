"""Tile grammar for knot mosaics.

There are eleven tile kinds, numbered 0..10.  Each tile carries strand
fragments whose endpoints sit at the midpoints of the four cell edges.
Faces are indexed LEFT, TOP, RIGHT, BOTTOM = 0, 1, 2, 3.

Kind  connections           strands
----  --------------------  ----------------------------------
 0    none                  blank
 1    left, bottom          single arc
 2    bottom, right         single arc
 3    top, right            single arc
 4    top, left             single arc
 5    left, right           horizontal line
 6    top, bottom           vertical line
 7    all four              double arc, pairs (top,right) + (left,bottom)
 8    all four              double arc, pairs (top,left) + (bottom,right)
 9    all four              crossing, vertical strand on top
10    all four              crossing, horizontal strand on top
"""

from __future__ import annotations

from dataclasses import dataclass

LEFT, TOP, RIGHT, BOTTOM = 0, 1, 2, 3

FACES = (LEFT, TOP, RIGHT, BOTTOM)

#: face pairing of each tile kind: tuple of 2-tuples of faces joined by a strand
PAIRINGS = (
    (),
    ((LEFT, BOTTOM),),
    ((BOTTOM, RIGHT),),
    ((TOP, RIGHT),),
    ((TOP, LEFT),),
    ((LEFT, RIGHT),),
    ((TOP, BOTTOM),),
    ((TOP, RIGHT), (LEFT, BOTTOM)),
    ((TOP, LEFT), (BOTTOM, RIGHT)),
    ((LEFT, RIGHT), (TOP, BOTTOM)),
    ((LEFT, RIGHT), (TOP, BOTTOM)),
)

CROSSING_KINDS = (9, 10)

#: for crossing tiles, which strand is drawn on top
OVER_STRAND = {9: "vertical", 10: "horizontal"}


@dataclass(frozen=True)
class ConnectionProfile:
    """Connection bits and strand pairing of one tile kind."""

    left: bool
    top: bool
    right: bool
    bottom: bool
    pairing: tuple[tuple[int, int], ...]
    over_strand: str | None  # None | "vertical" | "horizontal"

    @property
    def bits(self) -> tuple[bool, bool, bool, bool]:
        return (self.left, self.top, self.right, self.bottom)

    @property
    def connection_count(self) -> int:
        return sum(self.bits)


def _build_profiles() -> tuple[ConnectionProfile, ...]:
    profiles = []
    for kind, pairing in enumerate(PAIRINGS):
        present = {f for pair in pairing for f in pair}
        profiles.append(
            ConnectionProfile(
                left=LEFT in present,
                top=TOP in present,
                right=RIGHT in present,
                bottom=BOTTOM in present,
                pairing=pairing,
                over_strand=OVER_STRAND.get(kind),
            )
        )
    return tuple(profiles)


PROFILES: tuple[ConnectionProfile, ...] = _build_profiles()

#: connection bits per kind as a (left, top, right, bottom) tuple of 0/1
BITS: tuple[tuple[int, int, int, int], ...] = tuple(
    tuple(int(b) for b in PROFILES[k].bits) for k in range(11)
)

#: exit face reached when a strand enters tile `kind` at a given face
EXIT_FACE: tuple[dict[int, int], ...] = tuple(
    {a: b for x, y in PAIRINGS[k] for a, b in ((x, y), (y, x))} for k in range(11)
)


def is_crossing(kind: int) -> bool:
    return kind in CROSSING_KINDS


def validate_kind(kind: int) -> int:
    if not isinstance(kind, int) or not 0 <= kind <= 10:
        raise ValueError(f"tile kind must be an integer in 0..10, got {kind!r}")
    return kind
