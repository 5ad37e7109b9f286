"""Knot-table ingestion and Jones-based identification.

The table is a TSV file with header ``name  crossing_number  alternating
pd  jones``: one row per catalogued knot, PD text in the diagram grammar
and the Jones polynomial in the engine's canonical rendering.  Nothing in
a table is trusted at face value: loading re-parses every PD and recomputes
its Jones polynomial, refusing the file on any mismatch.

Identification of a diagram is by Jones polynomial up to mirror.  That is
adequate for the bundled range but not injective for knots in general, so
ambiguous matches are reported as such, never silently resolved.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .bracket import jones
from .diagram import Diagram, parse_pd
from .errors import (
    PDSyntaxError,
    PDValidationError,
    TableConsistencyError,
    TableFormatError,
    UnknownKnotError,
)
from .laurent import parse_jones

__all__ = [
    "KnotRecord",
    "IdentificationResult",
    "KnotTable",
    "load_table",
    "bundled_table_path",
    "identify",
    "crossing_number_of",
    "is_alternating_knot",
]

_HEADER = ["name", "crossing_number", "alternating", "pd", "jones"]


@dataclass(frozen=True)
class KnotRecord:
    name: str
    crossing_number: int
    alternating: bool
    pd: str
    jones_canonical: str

    def diagram(self) -> Diagram:
        return parse_pd(self.pd)


@dataclass(frozen=True)
class IdentificationResult:
    """Names whose stored Jones matches the query, possibly mirrored."""

    matches: tuple[tuple[str, str], ...]  # (name, "same" | "mirrored")
    exact: bool


class KnotTable:
    """Immutable, validated catalogue with a Jones lookup index."""

    def __init__(self, records: list[KnotRecord]):
        self.records = tuple(records)
        self.by_name = {r.name: r for r in self.records}
        self._order = {r.name: i for i, r in enumerate(self.records)}
        self._jones_index: dict[str, list[str]] = {}
        for r in self.records:
            self._jones_index.setdefault(r.jones_canonical, []).append(r.name)

    def __len__(self) -> int:
        return len(self.records)

    def __contains__(self, name: str) -> bool:
        return name in self.by_name

    def record(self, name: str) -> KnotRecord:
        try:
            return self.by_name[name]
        except KeyError:
            raise UnknownKnotError(name) from None

    def names_with_jones(self, rendered: str) -> list[str]:
        return list(self._jones_index.get(rendered, ()))

    def sort_key(self, name: str) -> int:
        return self._order[name]


def bundled_table_path() -> Path:
    """Path of the knot table shipped with the package."""
    return Path(resources.files("knotx") / "data" / "knots.tsv")


def load_table(path) -> KnotTable:
    """Load and fully re-verify a table file.

    Every record's PD is parsed and its Jones polynomial recomputed by the
    state-sum engine; the stored rendering must match bit-exactly.  For
    alternating records the PD crossing count must equal the stored
    crossing number.  An empty file yields an empty table.
    """
    path = Path(path)
    text = path.read_text(encoding="utf-8")
    if not text.strip():
        return KnotTable([])
    rows = list(csv.reader(text.splitlines(), delimiter="\t"))
    if rows[0] != _HEADER:
        raise TableFormatError(f"expected header {_HEADER}, found {rows[0]}", 1)
    records: list[KnotRecord] = []
    seen: set[str] = set()
    for lineno, row in enumerate(rows[1:], start=2):
        if not row or (len(row) == 1 and not row[0].strip()):
            continue
        if len(row) != 5:
            raise TableFormatError(f"expected 5 tab-separated fields, found {len(row)}", lineno)
        name, cn_str, alt_str, pd_text, jones_str = row
        if not name:
            raise TableFormatError("empty knot name", lineno)
        if name in seen:
            raise TableFormatError(f"duplicate record name {name}", lineno)
        seen.add(name)
        try:
            crossing_number = int(cn_str)
        except ValueError:
            raise TableFormatError(f"bad crossing number {cn_str!r}", lineno) from None
        if crossing_number < 0:
            raise TableFormatError(f"negative crossing number for {name}", lineno)
        if alt_str not in ("0", "1"):
            raise TableFormatError(f"alternating flag must be 0 or 1, found {alt_str!r}", lineno)
        alternating = alt_str == "1"
        try:
            diagram = parse_pd(pd_text)
        except (PDSyntaxError, PDValidationError) as exc:
            raise TableFormatError(f"record {name}: bad PD ({exc})", lineno) from exc
        try:
            parse_jones(jones_str)
        except ValueError as exc:
            raise TableFormatError(f"record {name}: bad Jones string ({exc})", lineno) from exc
        if alternating and len(diagram.crossings) != crossing_number:
            raise TableConsistencyError(
                name,
                f"alternating record has {len(diagram.crossings)} crossings but claims {crossing_number}",
            )
        recomputed = jones(diagram).render()
        if recomputed != jones_str:
            raise TableConsistencyError(
                name, f"stored Jones {jones_str!r} but engine computed {recomputed!r}"
            )
        records.append(
            KnotRecord(
                name=name,
                crossing_number=crossing_number,
                alternating=alternating,
                pd=pd_text,
                jones_canonical=jones_str,
            )
        )
    return KnotTable(records)


def identify(table: KnotTable, d: Diagram) -> IdentificationResult:
    """All table knots whose Jones equals the diagram's, up to mirror.

    A name matching directly is reported as chirality ``same`` even when
    its Jones is palindromic and would also match mirrored.
    """
    v = jones(d)
    direct = v.render()
    mirrored = v.mirrored().render()
    found: dict[str, str] = {}
    for name in table.names_with_jones(direct):
        found[name] = "same"
    for name in table.names_with_jones(mirrored):
        found.setdefault(name, "mirrored")
    ordered = sorted(found.items(), key=lambda kv: table.sort_key(kv[0]))
    return IdentificationResult(matches=tuple(ordered), exact=len(ordered) == 1)


def crossing_number_of(table: KnotTable, name: str) -> int:
    return table.record(name).crossing_number


def is_alternating_knot(table: KnotTable, name: str) -> bool:
    return table.record(name).alternating
