#!/usr/bin/env python3
"""Regenerate the bundled PD table from construction specs + census codes.

Sources, in priority order:
  1. knot_sources.tsv: explicit constructions (torus braids, 2-bridge
     fractions, Montesinos tangles, braid words), each validated by the
     determinant identity at build time.
  2. The bundled census table: rows whose mosaic code is unique and whose
     traced diagram does not collide with a construction-sourced record.

Rows sharing one mosaic code can name at most one knot; the resolutions
below were fixed by determinant/Alexander fingerprints and 2-bridge
matching (see table_report.txt for per-record provenance).  Names with no
trustworthy source are omitted rather than guessed.

Run from the repository root:  python tools/build_pd_table.py
"""

import sys
from collections import Counter, defaultdict
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "src"))

from toricmosaics.diagram import braid_closure, parse_pd
from toricmosaics.invariants import alexander, homfly, torus_knot_diagram
from toricmosaics.mosaic import decode
from toricmosaics.tangles import montesinos_link, rational_link
from toricmosaics.tracer import trace

DATA = ROOT / "src" / "toricmosaics" / "data"

# shared census codes resolved in favour of these names: the traced
# diagram's determinant and Alexander polynomial match them, not the
# other claimants
RESOLVED_SHARED_CODES = {"8_16", "9_37"}

# census rows that cannot source a record: the code belongs to another
# knot (fingerprint mismatch) or is shared with no way to discriminate
EXCLUDED_CENSUS_ROWS = {
    "8_3": "shared code is 9_37's (determinant 45, not 17); built from 17/4 instead",
    "8_8": "shared code is 8_10's (determinant 27, not 25); built from 25/11 instead",
    "9_47": "shared code is 9_46's (determinant 9, not 27); no independent source",
    "9_49": "shared code is 9_46's (determinant 9, not 25); no independent source",
    "10_56": "shared code is the 2-bridge 10_25 = b(65,19); not 2-bridge itself",
    "10_103": "shared code is the 2-bridge 10_40 = b(75,29); not 2-bridge itself",
    "10_132": "listed code traces to 5_1's polynomial; no independent source",
    "10_156": "shared code is 8_16's (determinant 35); no independent source",
}


def build_from_source(method: str, spec: str):
    if method == "torus":
        p, q = map(int, spec.split())
        return torus_knot_diagram(p, q)
    if method == "rational":
        p, q = map(int, spec.split("/"))
        return rational_link(p, q)
    if method == "montesinos":
        e, fr = spec.split(";")
        fracs = [tuple(map(int, f.split("/"))) for f in fr.split(",")]
        return montesinos_link(int(e), fracs)
    if method == "braid":
        strands, letters = spec.split(";")
        return braid_closure([int(x) for x in letters.split(",")], int(strands))
    raise ValueError(f"unknown method {method}")


def main():
    sources = {}
    for line in (ROOT / "tools" / "knot_sources.tsv").read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        name, method, spec = line.split("\t")
        sources[name] = (method, spec)

    census = {}
    code_uses = Counter()
    for line in (DATA / "published_census.tsv").read_text().splitlines():
        name, bound, code = line.split("\t")
        census[name] = code
        if code != "n/a":
            code_uses[code] += 1

    report = []
    records = {}

    for name, (method, spec) in sources.items():
        if method == "unknot":
            records[name] = "unknot"
            report.append((name, "construction", "crossingless diagram"))
            continue
        d = build_from_source(method, spec)
        if d.component_count != 1:
            raise SystemExit(f"{name}: construction is not a knot")
        records[name] = d.pd_code()
        report.append((name, "construction", f"{method} {spec}"))

    for name, code in census.items():
        if name in records or name in EXCLUDED_CENSUS_ROWS:
            continue
        if code == "n/a":
            report.append((name, "omitted", "no census mosaic listed"))
            continue
        if code_uses[code] > 1 and name not in RESOLVED_SHARED_CODES:
            raise SystemExit(f"{name}: shared code {code} lacks a resolution entry")
        d = trace(decode(code)).simplify()
        if d.component_count != 1:
            raise SystemExit(f"{name}: census mosaic is not a knot")
        records[name] = d.pd_code()
        report.append((name, "census-trace", f"mosaic {code}"))

    for name, reason in EXCLUDED_CENSUS_ROWS.items():
        if name not in records:
            report.append((name, "omitted", reason))

    # audit: no two records may share a polynomial with a census knot
    # unexpectedly; exact duplicates are a build error
    cache = {}
    by_homfly = defaultdict(list)
    for name, pd in sorted(records.items()):
        if pd == "unknot":
            continue
        d = parse_pd(pd)
        by_homfly[str(homfly(d, cache=cache))].append(name)
    collisions = {h: ns for h, ns in by_homfly.items() if len(ns) > 1}
    if collisions:
        for h, ns in collisions.items():
            print("DUPLICATE POLYNOMIAL:", ns)
        raise SystemExit("table build produced colliding records")

    def key(name):
        a, _, b = name.partition("_")
        return (int(a), int(b))

    with open(DATA / "rolfsen_pd.tsv", "w") as f:
        for name in sorted(records, key=key):
            f.write(f"{name}\t{records[name]}\n")
    with open(ROOT / "tools" / "table_report.txt", "w") as f:
        for name, kind, detail in sorted(report, key=lambda r: key(r[0])):
            f.write(f"{name}\t{kind}\t{detail}\n")
    omitted = [r for r in report if r[1] == "omitted"]
    print(f"wrote {len(records)} records ({len(omitted)} names omitted)")


if __name__ == "__main__":
    main()
