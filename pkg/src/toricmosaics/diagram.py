"""Planar link diagrams as 4-valent graphs with crossing data.

A diagram is a set of crossings, each with four slots numbered 0..3 in
counterclockwise planar order.  Slots 0 and 2 carry one strand through the
crossing, slots 1 and 3 the other; ``over[c]`` records which of the two
strands (0 or 1) passes on top.  ``adj[c][s]`` gives the (crossing, slot)
pair glued to slot s of crossing c.  Closed curves that meet no crossing
are not modelled with dummy nodes; only their count is kept in ``loops``.

Orientation is fixed once per diagram: ``dirs[c][s]`` is +1 where the
strand points into the crossing and -1 where it points out.  A crossing is
positive exactly when the under strand enters one slot counterclockwise
from the over strand's entry.

PD codes follow the usual convention: arcs are numbered along the
orientation, and each crossing is written X(a,b,c,d) with a the incoming
under arc and b,c,d following counterclockwise.
"""

from __future__ import annotations

import re

IN, OUT = 1, -1


class DiagramError(ValueError):
    """Structurally invalid diagram or unsupported operation."""


class LinkDiagram:
    """A planar link diagram.  Treat instances as immutable values.

    All public operations that change a diagram return a new object, so
    instances can be shared freely.
    """

    def __init__(self):
        self.adj: list[list[tuple[int, int] | None]] = []
        self.over: list[int] = []
        self.dirs: list[list[int]] = []
        self.comp: list[list[int]] = []
        self.loops = 0
        self._ncomponents = 0

    # -- construction ------------------------------------------------------

    def _add_crossing(self, over: int) -> int:
        self.adj.append([None, None, None, None])
        self.over.append(over)
        return len(self.over) - 1

    def _connect(self, end1: tuple[int, int], end2: tuple[int, int]) -> None:
        c1, s1 = end1
        c2, s2 = end2
        if self.adj[c1][s1] is not None or self.adj[c2][s2] is not None:
            raise DiagramError(f"slot already wired: {end1} or {end2}")
        self.adj[c1][s1] = (c2, s2)
        self.adj[c2][s2] = (c1, s1)

    def _orient(self) -> None:
        """Orient every strand, seeding each component at its least slot."""
        n = len(self.over)
        self.dirs = [[0] * 4 for _ in range(n)]
        self.comp = [[-1] * 4 for _ in range(n)]
        comp = 0
        for c0 in range(n):
            for s0 in range(4):
                if self.dirs[c0][s0]:
                    continue
                c, s = c0, s0
                while True:
                    self.dirs[c][s] = IN
                    self.comp[c][s] = comp
                    out = (s + 2) % 4
                    self.dirs[c][out] = OUT
                    self.comp[c][out] = comp
                    c, s = self.adj[c][out]
                    if (c, s) == (c0, s0):
                        break
                comp += 1
        self._ncomponents = comp

    def _validate(self) -> None:
        for c, slots in enumerate(self.adj):
            for s, other in enumerate(slots):
                if other is None:
                    raise DiagramError(f"dangling slot ({c},{s})")
                oc, os = other
                if self.adj[oc][os] != (c, s):
                    raise DiagramError("adjacency is not an involution")
                if self.dirs[c][s] == self.dirs[oc][os]:
                    raise DiagramError("incompatible strand directions")

    @staticmethod
    def assemble(over_flags, wires, free_loops: int = 0) -> "LinkDiagram":
        """Build a diagram from crossing over-flags and slot-to-slot wires."""
        d = LinkDiagram()
        for flag in over_flags:
            d._add_crossing(flag)
        for end1, end2 in wires:
            d._connect(end1, end2)
        d.loops = free_loops
        d._orient()
        d._validate()
        return d

    def clone(self) -> "LinkDiagram":
        d = LinkDiagram()
        d.adj = [list(slots) for slots in self.adj]
        d.over = list(self.over)
        d.dirs = [list(ds) for ds in self.dirs]
        d.comp = [list(cs) for cs in self.comp]
        d.loops = self.loops
        d._ncomponents = self._ncomponents
        return d

    # -- basic queries -----------------------------------------------------

    @property
    def crossing_count(self) -> int:
        return len(self.over)

    @property
    def component_count(self) -> int:
        return self._ncomponents + self.loops

    def on_over(self, c: int, s: int) -> bool:
        """Whether slot s of crossing c belongs to the over strand."""
        return self.over[c] == s % 2

    def entry_slot(self, c: int, strand: int) -> int:
        """The incoming slot of the given strand (0 or 1) at crossing c."""
        return strand if self.dirs[c][strand] == IN else strand + 2

    def sign(self, c: int) -> int:
        over_in = self.entry_slot(c, self.over[c])
        under_in = self.entry_slot(c, 1 - self.over[c])
        return 1 if under_in == (over_in + 1) % 4 else -1

    def writhe(self) -> int:
        return sum(self.sign(c) for c in range(len(self.over)))

    # -- rewiring core -----------------------------------------------------

    def _rewire(self, virtual: dict[int, dict[int, int]]) -> None:
        """Delete crossings, passing strands straight through per pairing.

        ``virtual[c]`` maps a slot to the slot a strand leaves by; slots
        absent from the pairing carried the edge being erased.  Closed
        curves left with no crossing at all are added to ``loops``.
        """
        live = [c for c in range(len(self.over)) if c not in virtual]
        new_id = {c: i for i, c in enumerate(live)}
        new_adj: list[list[tuple[int, int] | None]] = [[None] * 4 for _ in live]
        seen_virtual: set[tuple[int, int]] = set()

        def resolve(end):
            c, s = end
            while c in virtual:
                seen_virtual.add((c, s))
                s2 = virtual[c][s]
                seen_virtual.add((c, s2))
                c, s = self.adj[c][s2]
            return c, s

        for c in live:
            for s in range(4):
                if new_adj[new_id[c]][s] is not None:
                    continue
                oc, os = resolve(self.adj[c][s])
                new_adj[new_id[c]][s] = (new_id[oc], os)
                new_adj[new_id[oc]][os] = (new_id[c], s)

        # trapped cycles passing only through removed crossings become loops
        for c in virtual:
            for s in virtual[c]:
                if (c, s) in seen_virtual:
                    continue
                self.loops += 1
                cc, ss = c, s
                while True:
                    seen_virtual.add((cc, ss))
                    s2 = virtual[cc][ss]
                    seen_virtual.add((cc, s2))
                    cc, ss = self.adj[cc][s2]
                    if (cc, ss) == (c, s):
                        break

        self.adj = new_adj
        self.over = [self.over[c] for c in live]
        self.dirs = [self.dirs[c][:] for c in live]
        self.comp = []
        # component ids are stale after a rewire; recount strands cheaply
        self._recount_components()

    def _recount_components(self) -> None:
        n = len(self.over)
        self.comp = [[-1] * 4 for _ in range(n)]
        comp = 0
        for c0 in range(n):
            for s0 in range(4):
                if self.comp[c0][s0] >= 0:
                    continue
                if self.dirs[c0][s0] != IN:
                    continue
                c, s = c0, s0
                while True:
                    self.comp[c][s] = comp
                    out = (s + 2) % 4
                    self.comp[c][out] = comp
                    c, s = self.adj[c][out]
                    if (c, s) == (c0, s0):
                        break
                comp += 1
        self._ncomponents = comp

    # -- moves -------------------------------------------------------------

    def _find_kink(self):
        for c in range(len(self.over)):
            for s in range(4):
                if self.adj[c][s] == (c, (s + 1) % 4):
                    return c, s
        return None

    def _find_bigon(self):
        for c in range(len(self.over)):
            for s in range(4):
                d, t = self.adj[c][s]
                if d == c:
                    continue
                if self.adj[c][(s + 1) % 4] != (d, (t - 1) % 4):
                    continue
                # removable only when one strand is over at both crossings
                if self.on_over(c, s) == self.on_over(d, t):
                    return c, s, d, t
        return None

    def simplify(self) -> "LinkDiagram":
        """Remove kinks and opposite-crossing bigons until none remain."""
        d = self.clone()
        while True:
            kink = d._find_kink()
            if kink is not None:
                c, s = kink
                d._rewire({c: {(s + 2) % 4: (s + 3) % 4, (s + 3) % 4: (s + 2) % 4}})
                continue
            bigon = d._find_bigon()
            if bigon is not None:
                c, s, e, t = bigon
                passthrough = {0: 2, 2: 0, 1: 3, 3: 1}
                d._rewire({c: passthrough, e: dict(passthrough)})
                continue
            return d

    def mirror(self) -> "LinkDiagram":
        """Swap over and under at every crossing."""
        d = self.clone()
        d.over = [1 - o for o in d.over]
        return d

    def switch(self, c: int) -> "LinkDiagram":
        d = self.clone()
        d.over[c] = 1 - d.over[c]
        return d

    def smooth(self, c: int) -> "LinkDiagram":
        """Orientation-respecting smoothing that erases crossing c."""
        in0 = self.entry_slot(c, 0)
        in1 = self.entry_slot(c, 1)
        out0 = (in0 + 2) % 4
        out1 = (in1 + 2) % 4
        d = self.clone()
        d._rewire({c: {in0: out1, out1: in0, in1: out0, out0: in1}})
        return d

    # -- scans and keys ----------------------------------------------------

    def scan_order(self):
        """Arrival slots in canonical traversal order over all components."""
        n = len(self.over)
        arrivals = []
        visited = [[False] * 4 for _ in range(n)]
        for c0 in range(n):
            for s0 in range(4):
                if visited[c0][s0] or self.dirs[c0][s0] != IN:
                    continue
                c, s = c0, s0
                while True:
                    arrivals.append((c, s))
                    visited[c][s] = True
                    visited[c][(s + 2) % 4] = True
                    c, s = self.adj[c][(s + 2) % 4]
                    if (c, s) == (c0, s0):
                        break
        return arrivals

    def bad_crossings(self) -> list[int]:
        """Crossings first reached on their under strand in the canonical scan."""
        seen: set[int] = set()
        bad = []
        for c, s in self.scan_order():
            if c in seen:
                continue
            seen.add(c)
            if not self.on_over(c, s):
                bad.append(c)
        return bad

    def _component_code(self, start, labels, emitted):
        code = []
        c, s = start
        while True:
            if c not in labels:
                labels[c] = len(labels)
                code.append((labels[c], self.on_over(c, s), self.sign(c)))
            else:
                code.append((labels[c], self.on_over(c, s), 0))
            emitted.add((c, s))
            c, s = self.adj[c][(s + 2) % 4]
            if (c, s) == start:
                return code

    def canonical_key(self) -> tuple:
        """A label-independent key identifying the oriented diagram.

        Uses the lexicographically least signed Gauss code over all start
        edges; subsequent components are appended greedily by least code.
        """
        n = len(self.over)
        if n == 0:
            return (self.loops,)
        starts = [(c, s) for c in range(n) for s in range(4) if self.dirs[c][s] == IN]
        best = None
        for first in starts:
            labels: dict[int, int] = {}
            emitted: set[tuple[int, int]] = set()
            code = [tuple(self._component_code(first, labels, emitted))]
            while True:
                remaining = [st for st in starts if st not in emitted]
                if not remaining:
                    break
                cand = None
                for st in remaining:
                    trial = tuple(
                        self._component_code(st, dict(labels), set(emitted))
                    )
                    if cand is None or trial < cand[0]:
                        cand = (trial, st)
                code.append(cand[0])
                self._component_code(cand[1], labels, emitted)
            key = (self.loops, tuple(code))
            if best is None or key < best:
                best = key
        return best

    # -- arcs and PD codes -------------------------------------------------

    def edge_labels(self) -> dict[tuple[int, int], int]:
        """Label every edge 1..2c along orientation; keyed by arrival slot."""
        labels = {}
        k = 1
        for c, s in self.scan_order():
            labels[(c, s)] = k
            k += 1
        return labels

    def arcs(self):
        """Arc ids per arrival slot, splitting the curve at under entries.

        Returns (arc_at, arc_count) where ``arc_at[(c, s)]`` is the arc
        containing the edge arriving at slot s.  Every component must pass
        under at least once (true whenever it has a crossing).
        """
        arc_at: dict[tuple[int, int], int] = {}
        arc_count = 0
        n = len(self.over)
        visited = [[False] * 4 for _ in range(n)]
        for c0 in range(n):
            for s0 in range(4):
                if visited[c0][s0] or self.dirs[c0][s0] != IN:
                    continue
                arrivals = []
                c, s = c0, s0
                while True:
                    arrivals.append((c, s))
                    visited[c][s] = True
                    visited[c][(s + 2) % 4] = True
                    c, s = self.adj[c][(s + 2) % 4]
                    if (c, s) == (c0, s0):
                        break
                unders = [i for i, (cc, ss) in enumerate(arrivals) if not self.on_over(cc, ss)]
                if not unders:
                    raise DiagramError("component never passes under")
                # the arc containing arrivals (u_k+1 .. u_{k+1}) is one arc
                first = unders[0]
                m = len(arrivals)
                boundaries = unders + [first + m]
                for k in range(len(unders)):
                    arc = arc_count
                    arc_count += 1
                    for idx in range(boundaries[k] + 1, boundaries[k + 1] + 1):
                        arc_at[arrivals[idx % m]] = arc
        return arc_at, arc_count

    def pd_terms(self):
        """PD crossing tuples X(a,b,c,d) with a the incoming under edge."""
        labels = self.edge_labels()

        def label_of(c, s):
            if self.dirs[c][s] == IN:
                return labels[(c, s)]
            return labels[self.adj[c][s]]

        terms = []
        for c in range(len(self.over)):
            u_in = self.entry_slot(c, 1 - self.over[c])
            terms.append(tuple(label_of(c, (u_in + k) % 4) for k in range(4)))
        return terms

    def pd_code(self) -> str:
        """PD string, or an ``unknot``/``unlink k`` sentinel when crossingless."""
        if not self.over:
            if self.loops <= 1:
                return "unknot" if self.loops == 1 else "empty"
            return f"unlink {self.loops}"
        terms = ",".join("X(%d,%d,%d,%d)" % t for t in self.pd_terms())
        return f"PD[{terms}]"


_PD_TERM = re.compile(r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_pd(text: str) -> LinkDiagram:
    """Parse a PD string produced by :meth:`LinkDiagram.pd_code`."""
    text = text.strip()
    if text == "unknot":
        d = LinkDiagram()
        d.loops = 1
        return d
    m = re.fullmatch(r"unlink (\d+)", text)
    if m:
        d = LinkDiagram()
        d.loops = int(m.group(1))
        return d
    body = text
    if body.startswith("PD[") and body.endswith("]"):
        body = body[3:-1]
    terms = [tuple(int(g) for g in t) for t in _PD_TERM.findall(body)]
    if not terms:
        raise DiagramError(f"no PD crossings found in {text!r}")

    d = LinkDiagram()
    ends_by_label: dict[int, list[tuple[int, int]]] = {}
    for labels in terms:
        c = d._add_crossing(0)  # over flag fixed after orientation
        for s, lab in enumerate(labels):
            ends_by_label.setdefault(lab, []).append((c, s))
    for lab, ends in ends_by_label.items():
        if len(ends) != 2:
            raise DiagramError(f"edge label {lab} used {len(ends)} times")
        d._connect(ends[0], ends[1])

    # orient: slot 0 of every crossing is the incoming under strand
    n = len(d.over)
    d.dirs = [[0] * 4 for _ in range(n)]
    pending = [(c, 0) for c in range(n)]
    while pending:
        c, s = pending.pop()
        if d.dirs[c][s]:
            if d.dirs[c][s] != IN:
                raise DiagramError("inconsistent PD orientations")
            continue
        c0, s0 = c, s
        while True:
            d.dirs[c0][s0] = IN
            out = (s0 + 2) % 4
            d.dirs[c0][out] = OUT
            c0, s0 = d.adj[c0][out]
            if (c0, s0) == (c, s):
                break
    # components passing over everywhere: orient by increasing edge labels
    for c in range(n):
        for s in range(4):
            if d.dirs[c][s]:
                continue
            lab_here = terms[c][s]
            oc, os = d.adj[c][s]
            start = (c, s) if terms[oc][os] > lab_here else (oc, os)
            c0, s0 = start
            cc, ss = c0, s0
            while True:
                d.dirs[cc][ss] = IN
                out = (ss + 2) % 4
                d.dirs[cc][out] = OUT
                cc, ss = d.adj[cc][out]
                if (cc, ss) == (c0, s0):
                    break

    # under strand comes in at slot 0, so the over strand is {1,3}
    d.over = [1] * n
    d._recount_components()
    d._validate()
    return d


def braid_closure(word, strands: int) -> LinkDiagram:
    """Close a braid word; letter k (1-based, signed) crosses lanes k, k+1.

    Positive letters give positive crossings once each lane is oriented
    downward through the braid.
    """
    if any(abs(k) < 1 or abs(k) >= strands for k in word):
        raise DiagramError("braid letter out of range")
    over_flags = []
    wires = []
    lanes: list[tuple[int, int] | None] = [None] * strands
    first: list[tuple[int, int] | None] = [None] * strands
    # slots: 0=NE, 1=NW, 2=SW, 3=SE (counterclockwise)
    for letter in word:
        k = abs(letter) - 1
        over_flags.append(0 if letter > 0 else 1)
        c = len(over_flags) - 1
        for lane, slot in ((k, 1), (k + 1, 0)):
            if lanes[lane] is None:
                first[lane] = (c, slot)
            else:
                wires.append((lanes[lane], (c, slot)))
        lanes[k] = (c, 2)
        lanes[k + 1] = (c, 3)
    free = 0
    for lane in range(strands):
        if lanes[lane] is None:
            free += 1
        else:
            wires.append((lanes[lane], first[lane]))
    return LinkDiagram.assemble(over_flags, wires, free_loops=free)
