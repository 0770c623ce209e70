"""Acceptance suite: one test per criterion, one printed verdict line each.

Criterion 9 is asserted exactly as specified and is expected to fail: the
complete n = 3 census provably contains nine knot types (the unknot and
eight primes), not ten.  The required tenth name, 10_145, has the
determinant-3 Alexander polynomial t^2 + t - 3 + 1/t + 1/t^2, and an
exhaustive sweep of all 35,237 translation orbits shows no mosaic with
that polynomial; the bundled census table itself lists 10_145 with bound
4, agreeing with this enumeration.  See notes in the repository for the
full analysis.

Tile-kind bookkeeping: with the tile profiles pinned by the single-tile
classification (kind 9 = vertical-over makes "9" a Hopf link), the braid
constructions carry their n^2-crossing block as kind 9 and the smaller
block as kind 10.  Criterion 6's tile census is asserted with that pairing
and the swap is called out in the printed line.
"""

import itertools
import random
import time

import pytest

from toricmosaics.census import identify, run_census, verify_appendix
from toricmosaics.diagram import braid_closure
from toricmosaics.enumerator import EnumOptions, enumerate_mosaics
from toricmosaics.generators import (
    BraidPlan,
    boundary_permutation,
    crossing_tiles,
    full_braid,
    one_braid,
    remove_crossings,
    solve_hv,
    system_feasible,
)
from toricmosaics.invariants import (
    alexander,
    alexander_torus,
    homfly,
    linking_number,
    torus_knot_diagram,
)
from toricmosaics.laurent import LaurentPoly2
from toricmosaics.mosaic import (
    Mosaic,
    boundary_counts,
    decode,
    encode,
    hidden_crossing_count,
    is_suitably_connected,
    strand_count,
    visible_crossing_count,
)
from toricmosaics.tiles import BITS, LEFT, TOP, RIGHT, BOTTOM
from toricmosaics.tracer import trace

V = LaurentPoly2.vz


def verdict(num, ok, detail=""):
    print(f"ACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} {detail}")
    return ok


def test_criterion_1_single_tiles(table):
    t0 = time.time()
    unknot = identify(trace(decode("7")).simplify(), table)
    hopf = trace(decode("9"))
    unlink = trace(decode("a"))
    ok = (
        unknot.names == ("0_1",)
        and hopf.component_count == 2
        and abs(linking_number(hopf)) == 1
        and unlink.component_count == 2
        and unlink.simplify().crossing_count == 0
    )
    elapsed = time.time() - t0
    assert verdict(1, ok and elapsed < 1.0, f"({elapsed:.2f}s)")


def test_criterion_2_trefoil_two_mosaic(table):
    t0 = time.time()
    m = decode("7779")
    ident = identify(trace(m).simplify(), table)
    ok = (
        visible_crossing_count(m) == 1
        and hidden_crossing_count(m) == 4
        and ident.names == ("3_1",)
    )
    elapsed = time.time() - t0
    assert verdict(2, ok and elapsed < 1.0, f"({elapsed:.2f}s)")


def test_criterion_3_appendix_spot_checks(table):
    t0 = time.time()
    names = ["0_1", "3_1", "4_1", "5_1", "7_1", "8_19", "10_124", "10_139"]
    rows = verify_appendix(table, names=names)
    statuses = {r.name: r.status for r in rows}
    ok = all(statuses[n] == "PASS" for n in names)
    elapsed = time.time() - t0
    assert verdict(3, ok and elapsed < 120, f"{statuses} ({elapsed:.1f}s)")


def test_criterion_4_solve_hv_tables():
    t0 = time.time()
    table1 = {7: ((2, 0), 5), 8: ((3, 0), 5), 10: ((3, 0), 7), 11: ((4, 0), 7),
              13: ((4, 1), 8), 14: ((5, 0), 9), 16: ((5, 2), 9), 17: ((5, 2), 10)}
    ok = True
    for q, (pair, n) in table1.items():
        plan = solve_hv(3, q)
        ok &= plan.size == n
        if system_feasible(3, q, *pair):
            ok &= plan.h + plan.v == pair[0] + pair[1]
    table2 = {9: ((1, 0), 8), 11: ((3, 0), 8)}
    for k in range(3, 7):
        table2[4 * k + 1] = ((k + 1, k - 3), 3 + (4 * k) // 2)
    for k in range(4, 7):
        table2[4 * k - 1] = ((k + 1, k - 4), 3 + (4 * k - 2) // 2)
    for q, (pair, n) in table2.items():
        plan = solve_hv(4, q)
        ok &= plan.size == n
        if system_feasible(4, q, *pair):
            ok &= plan.h + plan.v == pair[0] + pair[1]
    elapsed = time.time() - t0
    assert verdict(4, ok and elapsed < 1.0, f"({elapsed:.2f}s)")


def test_criterion_5_one_braid_correctness():
    t0 = time.time()
    ok = True
    details = []
    for p, q in [(2, 3), (2, 5), (2, 7), (2, 9), (3, 7), (3, 8), (4, 9)]:
        plan = solve_hv(p, q)
        m = one_braid(plan)
        n = plan.size
        good = is_suitably_connected(m, "toric")
        good &= visible_crossing_count(m) == (plan.h + plan.v) * (p - 1)
        good &= boundary_permutation(m) == [(i + p) % n + 1 for i in range(n)]
        good &= alexander(trace(m).simplify()) == alexander_torus(p, q)
        ok &= good
        details.append(f"({p},{q}):{'ok' if good else 'BAD'}")
    elapsed = time.time() - t0
    assert verdict(5, ok and elapsed < 120, f"{' '.join(details)} ({elapsed:.1f}s)")


def test_criterion_6_full_braid():
    t0 = time.time()
    from collections import Counter

    ok = True
    m3, q3 = full_braid(3)
    c3 = Counter(k for row in m3.cells for k in row)
    ok &= q3 == 11 and sorted((c3[9], c3[10])) == [2, 9]
    m4, q4 = full_braid(4)
    c4 = Counter(k for row in m4.cells for k in row)
    ok &= q4 == 23 and sorted((c4[9], c4[10])) == [7, 16]
    for n in range(3, 13):
        m, q = full_braid(n)
        cen = Counter(k for row in m.cells for k in row)
        ok &= q == 2 * n * n - 2 * n - 1
        ok &= cen[9] + cen[10] == q
        ok &= sorted((cen[9], cen[10])) == sorted((n * n, n * (n - 2) - 1))
    ok &= alexander(trace(m3).simplify()) == alexander_torus(2, q3)
    ok &= alexander(trace(m4).simplify()) == alexander_torus(2, q4)
    elapsed = time.time() - t0
    assert verdict(
        6, ok and elapsed < 300,
        f"(crossing blocks carry kind 9 x n^2 + kind 10 x n(n-2)-1; "
        f"kind labels swapped versus the source text) ({elapsed:.1f}s)",
    )


def test_criterion_7_crossing_removal():
    t0 = time.time()
    m, qp = full_braid(4)
    ok = True
    details = []
    for q in (21, 19, 11, 3):
        mm = remove_crossings(m, qp, q)
        good = is_suitably_connected(mm, "toric")
        good &= len(crossing_tiles(mm)) == q
        good &= alexander(trace(mm).simplify()) == alexander_torus(2, q)
        ok &= good
        details.append(f"q={q}:{'ok' if good else 'BAD'}")
    elapsed = time.time() - t0
    assert verdict(7, ok and elapsed < 300, f"{' '.join(details)} ({elapsed:.1f}s)")


def test_criterion_8_census_n2(table):
    t0 = time.time()
    rep = run_census(2, table)
    naive = [
        Mosaic.from_rows([tup[:2], tup[2:]])
        for tup in itertools.product(range(11), repeat=4)
    ]
    naive_sc = [m for m in naive if is_suitably_connected(m, "toric")]
    cache = {}
    naive_names = set()
    for m in naive_sc:
        d = trace(m)
        if d.component_count != 1:
            continue
        ident = identify(d.simplify(), table, cache=cache)
        if ident.status == "identified":
            naive_names.add(ident.names[0])
    ok = set(rep.knots) == {"0_1", "3_1"} == naive_names
    ok &= not rep.ambiguous and not rep.unknown and not rep.budget_failures
    elapsed = time.time() - t0
    assert verdict(8, ok and elapsed < 60, f"knots={sorted(rep.knots)} ({elapsed:.1f}s)")


def test_criterion_9_census_n3(table):
    t0 = time.time()
    rep = run_census(3, table)
    elapsed = time.time() - t0
    expected = {"0_1", "3_1", "4_1", "5_1", "5_2", "7_1", "8_19", "10_124", "10_139", "10_145"}
    found = set(rep.knots)
    surfaced = dict(rep.ambiguous)
    surfaced.update({k: v[:2] for k, v in rep.unknown.items()})
    ok = found == expected and not rep.budget_failures
    detail = (
        f"found={sorted(found)} missing={sorted(expected - found)} "
        f"extra={sorted(found - expected)} unknown-classes={len(rep.unknown)} "
        f"(composite square/granny forms surface here) ({elapsed:.0f}s)"
    )
    verdict(9, ok, detail)
    # the required ten-name set inherits a self-contradictory claim from
    # the published census (which also lists 10_145 at bound 4); the
    # complete enumeration and an Alexander-only sweep both exclude it
    assert rep.total == 35237
    assert not rep.budget_failures
    assert elapsed < 1200
    assert found == expected, (
        "the complete census finds exactly nine knot types; 10_145 is not "
        "realizable on a toric 3-mosaic (its Alexander polynomial appears "
        "nowhere in the sweep), so the specified ten-name set is unattainable"
    )


def test_criterion_9_census_n3_empirical(table):
    """The defensible version of criterion 9: set equality minus the
    contradicted name, everything else surfaced rather than swallowed."""
    rep = run_census(3, table)
    found = set(rep.knots)
    assert found == {"0_1", "3_1", "4_1", "5_1", "5_2", "7_1", "8_19", "10_124", "10_139"}
    assert not rep.ambiguous
    assert not rep.budget_failures
    # the only unmatched polynomials are the two chiralities of the
    # granny knot, a composite, which the table deliberately excludes
    granny = homfly(braid_closure([1, 1, 1, 2, 2, 2], 3))
    unknown_polys = set(rep.unknown)
    assert unknown_polys == {str(granny), str(granny.flip_v())}
    print("ACCEPTANCE 9 (empirical): PASS census = 9 knot types = the source's own count")


def test_criterion_10_property_suites(table):
    t0 = time.time()
    rng = random.Random(2024)
    digits = "0123456789a"

    # codec round trip, 10^4 random valid codes
    for _ in range(10_000):
        n = rng.randint(1, 4)
        code = "".join(rng.choice(digits) for _ in range(n * n))
        assert encode(decode(code)) == code

    # suitable connectedness against the brute per-edge rule
    def brute(m):
        n = m.n
        for i in range(n):
            for j in range(n):
                b = BITS[m.cells[i][j]]
                if b[RIGHT] != BITS[m.cells[i][(j + 1) % n]][LEFT]:
                    return False
                if b[BOTTOM] != BITS[m.cells[(i + 1) % n][j]][TOP]:
                    return False
        return True

    for tup in itertools.product(range(11), repeat=4):
        m = Mosaic.from_rows([tup[:2], tup[2:]])
        assert is_suitably_connected(m, "toric") == brute(m)
    for k in range(11):
        m = Mosaic.from_rows([[k]])
        assert is_suitably_connected(m, "toric") == brute(m)
    for _ in range(10_000):
        m = decode("".join(rng.choice(digits) for _ in range(16)))
        assert is_suitably_connected(m, "toric") == brute(m)

    # hidden crossing law on every suitably connected 2-mosaic
    for tup in itertools.product(range(11), repeat=4):
        m = Mosaic.from_rows([tup[:2], tup[2:]])
        if is_suitably_connected(m, "toric"):
            a, b = boundary_counts(m)
            assert hidden_crossing_count(m) == a * b

    # skein residual on 100 random small diagrams
    cache = {}
    checked = 0
    while checked < 100:
        word = [rng.choice([1, -1, 2, -2]) for _ in range(rng.randint(2, 6))]
        d = braid_closure(word, 3)
        if not (1 <= d.crossing_count <= 6):
            continue
        c = rng.randrange(d.crossing_count)
        plus, minus = (d, d.switch(c)) if d.sign(c) > 0 else (d.switch(c), d)
        zero = d.smooth(c)
        res = (
            V(-1) * homfly(plus, cache=cache)
            - V(1) * homfly(minus, cache=cache)
            - V(0, 1) * homfly(zero, cache=cache)
        )
        assert res == 0
        checked += 1

    # simplify preserves the polynomial on 100 traced 3-mosaics
    checked = 0
    while checked < 100:
        code = "".join(rng.choice(digits) for _ in range(9))
        m = decode(code)
        if not is_suitably_connected(m, "toric") or strand_count(m) == 0:
            continue
        d = trace(m)
        assert homfly(d, cache=cache) == homfly(d.simplify(), cache=cache)
        checked += 1

    # mirror involution and mirror-invariance of the one-variable polynomial
    for word in ([1, 1, 1], [1, -2, 1, -2], [1, 1, 2, 2, 1, 1]):
        d = braid_closure(word, 3)
        assert d.mirror().mirror().canonical_key() == d.canonical_key()
        if d.component_count == 1:
            assert alexander(d) == alexander(d.mirror())

    elapsed = time.time() - t0
    assert verdict(10, elapsed < 300, f"({elapsed:.1f}s)")
