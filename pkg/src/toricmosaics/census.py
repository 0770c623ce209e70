"""Knot identification against a bundled invariant table, plus censuses.

The table is built from a file of named PD codes (prime knots through 10
crossings).  For each record the HOMFLY-PT polynomial of the diagram and
of its mirror are computed with the local engine, together with the
Alexander polynomial; identification of a traced mosaic is by exact match
of its HOMFLY-PT string against either form, so it is insensitive to
chirality.  Matching is set-valued: distinct knots sharing a polynomial
are reported as ambiguous rather than resolved silently.

Computed invariants are cached in a TSV next to the source file (override
with TORIC_TABLE_CACHE); the cache holds the source hash and is rebuilt
whenever the PD file changes.
"""

from __future__ import annotations

import csv
import hashlib
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .diagram import LinkDiagram, parse_pd
from .enumerator import EnumOptions, enumerate_mosaics
from .invariants import BudgetExceeded, DEFAULT_BUDGET, alexander, homfly
from .laurent import LaurentPoly1, LaurentPoly2
from .mosaic import Mosaic, decode, encode, is_suitably_connected
from .tracer import trace

DATA_DIR = Path(__file__).parent / "data"
PD_TABLE_PATH = DATA_DIR / "rolfsen_pd.tsv"
APPENDIX_PATH = DATA_DIR / "published_census.tsv"


class TableError(ValueError):
    """Malformed table input or cache."""


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossing_number: int
    pd: str
    homfly: str
    homfly_mirror: str
    alexander: str


@dataclass
class InvariantTable:
    records: dict[str, KnotRecord]
    index: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def __post_init__(self):
        if not self.index:
            idx: dict[str, set[str]] = {}
            for rec in self.records.values():
                idx.setdefault(rec.homfly, set()).add(rec.name)
                idx.setdefault(rec.homfly_mirror, set()).add(rec.name)
            self.index = {k: tuple(sorted(v, key=_name_key)) for k, v in idx.items()}

    def lookup(self, homfly_str: str) -> tuple[str, ...]:
        return self.index.get(homfly_str, ())

    def __len__(self):
        return len(self.records)


def _name_key(name: str):
    head, _, tail = name.partition("_")
    try:
        return (int(head), int(tail))
    except ValueError:
        return (999, 0)


def _crossing_number(name: str) -> int:
    try:
        return int(name.partition("_")[0])
    except ValueError:
        raise TableError(f"knot name {name!r} does not start with a crossing number")


def _cache_path(pd_file: Path) -> Path:
    env = os.environ.get("TORIC_TABLE_CACHE")
    if env:
        return Path(env)
    return pd_file.with_suffix(".cache.tsv")


def _source_hash(pd_file: Path) -> str:
    return hashlib.sha256(pd_file.read_bytes()).hexdigest()


def _load_cache(cache_file: Path, want_hash: str, pds: dict[str, str]) -> "InvariantTable | None":
    if not cache_file.exists():
        return None
    lines = cache_file.read_text().splitlines()
    if not lines or lines[0].strip() != f"#source-sha256\t{want_hash}":
        return None
    records = {}
    for line in lines[1:]:
        if not line.strip():
            continue
        name, hom, hom_mirror, alex = line.split("\t")
        records[name] = KnotRecord(
            name, _crossing_number(name), pds[name], hom, hom_mirror, alex
        )
    if set(records) != set(pds):
        return None
    return InvariantTable(records)


def build_table(
    pd_file: str | os.PathLike = PD_TABLE_PATH,
    budget: int = DEFAULT_BUDGET,
    progress=None,
) -> InvariantTable:
    """Load the named-PD file, computing (or reloading) its invariants."""
    pd_file = Path(pd_file)
    pds: dict[str, str] = {}
    for lineno, line in enumerate(pd_file.read_text().splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            name, pd = line.split("\t")
        except ValueError:
            raise TableError(f"{pd_file}:{lineno}: expected 'name<TAB>PD[...]'")
        if name in pds:
            raise TableError(f"{pd_file}:{lineno}: duplicate knot name {name}")
        pds[name] = pd

    want_hash = _source_hash(pd_file)
    cache_file = _cache_path(pd_file)
    cached = _load_cache(cache_file, want_hash, pds)
    if cached is not None:
        return cached

    records = {}
    cache: dict = {}
    for k, (name, pd) in enumerate(pds.items()):
        d = parse_pd(pd)
        if name == "0_1":
            if d.component_count != 1:
                raise TableError("unknot record must be one component")
        try:
            hom = homfly(d, budget=budget, cache=cache)
            hom_mirror = homfly(d.mirror(), budget=budget, cache=cache)
        except BudgetExceeded as exc:
            raise TableError(f"homfly budget exceeded on table entry {name}") from exc
        alex = alexander(d)
        records[name] = KnotRecord(
            name, _crossing_number(name), pd, str(hom), str(hom_mirror), str(alex)
        )
        if progress:
            progress(k + 1, len(pds), name)

    body = "".join(
        f"{r.name}\t{r.homfly}\t{r.homfly_mirror}\t{r.alexander}\n"
        for r in records.values()
    )
    try:
        cache_file.write_text(f"#source-sha256\t{want_hash}\n" + body)
    except OSError:
        pass  # read-only installs still work, just without the cache
    return InvariantTable(records)


@dataclass(frozen=True)
class Identification:
    """Outcome of matching one diagram against the table."""

    status: str  # "identified" | "ambiguous" | "unknown" | "link" | "budget"
    names: tuple[str, ...]
    homfly: str | None

    @property
    def label(self) -> str:
        if self.status in ("identified", "ambiguous"):
            return "|".join(self.names)
        return self.status


def identify(
    d: LinkDiagram,
    table: InvariantTable,
    budget: int = DEFAULT_BUDGET,
    cache: dict | None = None,
) -> Identification:
    """Name a one-component diagram by its HOMFLY-PT polynomial."""
    if d.component_count != 1:
        raise TableError("identification requires a one-component diagram")
    try:
        hom = str(homfly(d, budget=budget, cache=cache))
    except BudgetExceeded:
        return Identification("budget", (), None)
    names = table.lookup(hom)
    if not names:
        return Identification("unknown", (), hom)
    if len(names) == 1:
        return Identification("identified", names, hom)
    return Identification("ambiguous", names, hom)


@dataclass
class CensusRow:
    code: str
    n: int
    components: int
    identification: str
    homfly: str


@dataclass
class CensusReport:
    n: int
    rows: list[CensusRow]
    knots: dict[str, str]  # identified name -> least witness code
    ambiguous: dict[str, list[str]]  # "a|b" -> codes
    unknown: dict[str, list[str]]  # homfly string -> codes
    budget_failures: list[str]
    link_count: int
    total: int

    def to_csv(self, stream) -> None:
        writer = csv.writer(stream)
        writer.writerow(["code", "n", "components", "identification", "homfly"])
        for row in sorted(self.rows, key=lambda r: (r.identification, r.code)):
            writer.writerow([row.code, row.n, row.components, row.identification, row.homfly])


def census_mosaic(
    m: Mosaic, table: InvariantTable, budget: int, cache: dict
) -> CensusRow:
    """Classify one mosaic: trace, discard links, simplify, identify."""
    code = encode(m)
    d = trace(m)
    comps = d.component_count
    if comps != 1:
        return CensusRow(code, m.n, comps, "link" if comps else "empty", "")
    simplified = d.simplify()
    key = simplified.canonical_key()
    hit = cache.get(("id", key))
    if hit is None:
        hit = identify(simplified, table, budget=budget, cache=cache)
        cache[("id", key)] = hit
    return CensusRow(code, m.n, 1, hit.label, hit.homfly or "")


def _census_worker(args):
    n, prefix, pd_file, budget = args
    table = build_table(pd_file)
    cache: dict = {}
    rows = []
    for m in enumerate_mosaics(EnumOptions(n, symmetry_reduce=True, prefix=prefix)):
        rows.append(census_mosaic(m, table, budget, cache))
    return rows


def run_census(
    n: int,
    table: InvariantTable | None = None,
    budget: int = DEFAULT_BUDGET,
    jobs: int = 1,
    pd_file: str | os.PathLike = PD_TABLE_PATH,
    progress=None,
) -> CensusReport:
    """Identify every suitably connected toric n-mosaic, one per orbit."""
    rows: list[CensusRow] = []
    if jobs > 1:
        from concurrent.futures import ProcessPoolExecutor

        prefixes = [(n, (k,), os.fspath(pd_file), budget) for k in range(11)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for part in pool.map(_census_worker, prefixes):
                rows.extend(part)
                if progress:
                    progress(len(rows))
    else:
        if table is None:
            table = build_table(pd_file)
        cache: dict = {}
        for m in enumerate_mosaics(EnumOptions(n, symmetry_reduce=True)):
            rows.append(census_mosaic(m, table, budget, cache))
            if progress and len(rows) % 1000 == 0:
                progress(len(rows))

    knots: dict[str, str] = {}
    ambiguous: dict[str, list[str]] = {}
    unknown: dict[str, list[str]] = {}
    budget_failures: list[str] = []
    links = 0
    for row in rows:
        if row.identification in ("link", "empty"):
            links += row.identification == "link"
        elif row.identification == "budget":
            budget_failures.append(row.code)
        elif row.identification == "unknown":
            unknown.setdefault(row.homfly, []).append(row.code)
        elif "|" in row.identification:
            ambiguous.setdefault(row.identification, []).append(row.code)
        else:
            name = row.identification
            if name not in knots or row.code < knots[name]:
                knots[name] = row.code
    return CensusReport(
        n=n,
        rows=rows,
        knots=knots,
        ambiguous=ambiguous,
        unknown=unknown,
        budget_failures=budget_failures,
        link_count=links,
        total=len(rows),
    )


@dataclass
class AppendixRow:
    name: str
    bound: str
    code: str
    status: str  # PASS | AMBIGUOUS | FAIL | SKIP
    detail: str = ""


def load_appendix(path: str | os.PathLike = APPENDIX_PATH) -> list[tuple[str, str, str]]:
    rows = []
    for lineno, line in enumerate(Path(path).read_text().splitlines(), 1):
        line = line.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise TableError(f"{path}:{lineno}: expected 'name<TAB>bound<TAB>code'")
        rows.append((parts[0], parts[1], parts[2]))
    return rows


def verify_appendix(
    table: InvariantTable,
    path: str | os.PathLike = APPENDIX_PATH,
    budget: int = DEFAULT_BUDGET,
    names: Iterable[str] | None = None,
    progress=None,
) -> list[AppendixRow]:
    """Check each bundled census row: decode, re-identify, compare names.

    A row PASSes when the mosaic is suitably connected, its side length
    equals the claimed bound, and the traced diagram identifies uniquely
    as the claimed knot.  Mismatches, ambiguous matches and links are
    reported row by row, never resolved silently.
    """
    want = set(names) if names is not None else None
    results = []
    cache: dict = {}
    rows = load_appendix(path)
    done = 0
    for name, bound, code in rows:
        if want is not None and name not in want:
            continue
        done += 1
        if code == "n/a":
            results.append(AppendixRow(name, bound, code, "SKIP", "no mosaic listed"))
            continue
        try:
            m = decode(code)
        except Exception as exc:
            results.append(AppendixRow(name, bound, code, "FAIL", f"bad code: {exc}"))
            continue
        if not is_suitably_connected(m, "toric"):
            results.append(AppendixRow(name, bound, code, "FAIL", "not suitably connected"))
            continue
        if not bound.isdigit() or m.n != int(bound):
            results.append(
                AppendixRow(name, bound, code, "FAIL", f"side {m.n} != claimed {bound}")
            )
            continue
        d = trace(m)
        if d.component_count != 1:
            results.append(
                AppendixRow(name, bound, code, "FAIL", f"{d.component_count} components")
            )
            continue
        ident = identify(d.simplify(), table, budget=budget, cache=cache)
        if ident.status == "budget":
            results.append(AppendixRow(name, bound, code, "FAIL", "budget exceeded"))
        elif name in ident.names and len(ident.names) == 1:
            results.append(AppendixRow(name, bound, code, "PASS"))
        elif name in ident.names:
            results.append(
                AppendixRow(name, bound, code, "AMBIGUOUS", f"matches {ident.label}")
            )
        else:
            results.append(
                AppendixRow(
                    name, bound, code, "FAIL",
                    f"identified as {ident.label or ident.status}",
                )
            )
        if progress:
            progress(done, name, results[-1].status)
    return results
