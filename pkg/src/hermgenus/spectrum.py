"""Genus spectra and the fixed reference table of new genera.

`compute_spectrum` unions all (family, parameter) tuples at a given q into
a deduplicated, ascending list of genera, each carrying every witnessing
construction.  Pure integer arithmetic throughout: no field table is ever
built, so q = 3^7 runs in milliseconds.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from . import families
from .families import FAMILY_ORDER, GenusRecord
from .gf import DomainError
from .numthy import prime_power

__all__ = ["SpectrumEntry", "compute_spectrum", "check_table1", "TABLE1",
           "spectrum_to_json", "spectrum_to_csv", "Table1Report"]

# Reference values: known-new genera of maximal curves for selected q.
TABLE1: list[tuple[int, tuple[int, ...]]] = [
    (13, (1,)),
    (2**5, (20, 55)),
    (2**7, (22, 133, 287, 420, 903, 904)),
    (3**5, (10, 161, 280, 590, 1180, 2420)),
    (3**7, (91, 1457, 24661, 49595, 99190, 198926)),
    (5**3, (17, 39, 46, 63, 91, 134, 210, 211, 273, 274, 369, 630, 631, 861)),
]


@dataclass(frozen=True)
class SpectrumEntry:
    genus: int
    witnesses: tuple[GenusRecord, ...]


def _witness_key(q: int):
    def key(rec: GenusRecord):
        return (FAMILY_ORDER.index(rec.family), rec.params_str(q))

    return key


def compute_spectrum(q: int, family_filter: list[str] | None = None) -> list[SpectrumEntry]:
    """Deduplicated genus spectrum over the requested families at q."""
    if prime_power(q) is None:
        raise DomainError(f"{q} is not a prime power")
    by_genus: dict[int, list[GenusRecord]] = {}
    for fam in FAMILY_ORDER:
        if family_filter is not None and fam not in family_filter:
            continue
        if not families.applicable(q, fam):
            continue
        for params in families.enumerate_family(q, fam):
            rec = families.genus(q, fam, params)
            by_genus.setdefault(rec.genus, []).append(rec)
    key = _witness_key(q)
    return [
        SpectrumEntry(g, tuple(sorted(recs, key=key)))
        for g, recs in sorted(by_genus.items())
    ]


@dataclass
class Table1Report:
    rows: list[tuple[int, list[tuple[int, bool, GenusRecord | None]]]]

    @property
    def all_present(self) -> bool:
        return all(present for _, entries in self.rows for _, present, _ in entries)


def check_table1(family_filter: list[str] | None = None) -> Table1Report:
    """Membership of every reference genus in the computed spectrum."""
    rows = []
    for q, genera in TABLE1:
        spectrum = {e.genus: e for e in compute_spectrum(q, family_filter)}
        entries = []
        for g in genera:
            hit = spectrum.get(g)
            entries.append((g, hit is not None, hit.witnesses[0] if hit else None))
        rows.append((q, entries))
    return Table1Report(rows)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def spectrum_to_json(q: int, entries: list[SpectrumEntry]) -> str:
    payload = {
        "q": q,
        "entries": [
            {
                "genus": e.genus,
                "witnesses": [
                    {
                        "family": rec.family,
                        "params": rec.params,
                        "group_order": rec.group_order,
                    }
                    for rec in e.witnesses
                ],
            }
            for e in entries
        ],
    }
    return json.dumps(payload, indent=2, sort_keys=True)


def spectrum_to_csv(q: int, entries: list[SpectrumEntry]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(["genus", "family", "params", "group_order"])
    for e in entries:
        for rec in e.witnesses:
            writer.writerow([e.genus, rec.family, rec.params_str(q), rec.group_order])
    return buf.getvalue()
