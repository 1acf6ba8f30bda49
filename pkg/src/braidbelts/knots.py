"""Jones-polynomial lookup of boundary knots.

The built-in table is computed in-process from twist vectors, never copied
from an atlas.  Names use Alexander-Briggs notation with a trailing ``*``
for mirror images.
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .belt import TwistVector
from .errors import ConflictingName, ParseError
from .jones import jones_closed
from .laurent import ONE, LaurentPoly

__all__ = [
    "KnotRecord",
    "KnotTable",
    "SEED_TWISTS",
    "seed_table",
    "identify",
    "mirror_name",
    "load_table_csv",
    "merge",
]

# twist vectors of the minimally braided belts (word length three)
SEED_TWISTS = {
    "3_1": TwistVector((1, 1, 1)),
    "9_46": TwistVector((3, 3, -3)),
    "6_1": TwistVector((3, 1, -3)),
    "4_1": TwistVector((3, -1, -1)),
}


def mirror_name(name: str) -> str:
    return name[:-1] if name.endswith("*") else name + "*"


@dataclass(frozen=True)
class KnotRecord:
    name: str
    jones: LaurentPoly
    source_twist: Optional[TwistVector] = None

    @property
    def amphichiral(self) -> bool:
        return self.jones == self.jones.substitute_inverse()

    def mirror(self) -> "KnotRecord":
        twist = -self.source_twist if self.source_twist is not None else None
        return KnotRecord(mirror_name(self.name), self.jones.substitute_inverse(), twist)

    def to_json_obj(self) -> dict:
        return {
            "name": self.name,
            "jones": self.jones.to_json_obj(),
            "source_twist": (
                [str(h) for h in self.source_twist] if self.source_twist is not None else None
            ),
        }


class KnotTable:
    """Immutable name/polynomial table keyed by the polynomial."""

    def __init__(self, records: Iterable[KnotRecord] = ()):
        self._by_jones: dict[LaurentPoly, KnotRecord] = {}
        self._by_name: dict[str, KnotRecord] = {}
        for rec in records:
            self._add(rec)

    def _add(self, rec: KnotRecord) -> None:
        have = self._by_jones.get(rec.jones)
        if have is not None and have.name != rec.name:
            raise ConflictingName(
                f"polynomial {rec.jones} is already named {have.name!r}, not {rec.name!r}"
            )
        named = self._by_name.get(rec.name)
        if named is not None and named.jones != rec.jones:
            raise ConflictingName(f"name {rec.name!r} is already bound to {named.jones}")
        if have is None:
            self._by_jones[rec.jones] = rec
            self._by_name[rec.name] = rec

    @property
    def records(self) -> list[KnotRecord]:
        return sorted(self._by_name.values(), key=lambda r: r.name)

    def __len__(self) -> int:
        return len(self._by_name)

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __getitem__(self, name: str) -> KnotRecord:
        return self._by_name[name]

    def lookup(self, p: LaurentPoly) -> Optional[KnotRecord]:
        return self._by_jones.get(p)

    def to_json(self) -> str:
        return json.dumps([r.to_json_obj() for r in self.records], indent=2)


def seed_table() -> KnotTable:
    records = [KnotRecord("unknot", ONE)]
    for name, twist in SEED_TWISTS.items():
        rec = KnotRecord(name, jones_closed(*twist.entries), twist)
        records.append(rec)
        if not rec.amphichiral:
            records.append(rec.mirror())
    return KnotTable(records)


def identify(p: LaurentPoly, table: Optional[KnotTable] = None) -> Optional[str]:
    """Name of the knot with Jones polynomial ``p``, or None when unknown.

    A miss on ``p`` is retried on its mirror; a hit there is reported under
    the mirrored name.
    """
    if table is None:
        table = _default_table()
    rec = table.lookup(p)
    if rec is not None:
        return rec.name
    rec = table.lookup(p.substitute_inverse())
    if rec is not None:
        return mirror_name(rec.name)
    return None


_DEFAULT: Optional[KnotTable] = None


def _default_table() -> KnotTable:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = seed_table()
    return _DEFAULT


def merge(table: KnotTable, records: Iterable[KnotRecord]) -> KnotTable:
    return KnotTable(list(table.records) + list(records))


def load_table_csv(path, table: Optional[KnotTable] = None) -> KnotTable:
    """Merge rows ``name,exp:coef;exp:coef;...`` (exponents in units of t^(1/2)).

    Blank lines and lines starting with ``#`` are skipped.
    """
    if table is None:
        table = seed_table()
    records = []
    with open(Path(path), newline="") as fh:
        for lineno, row in enumerate(csv.reader(fh), start=1):
            if not row or not "".join(row).strip() or row[0].lstrip().startswith("#"):
                continue
            if len(row) != 2:
                raise ParseError(f"line {lineno}: expected 'name,polynomial'")
            name = row[0].strip()
            if not name:
                raise ParseError(f"line {lineno}: empty knot name")
            try:
                poly = LaurentPoly.from_compact(row[1])
            except ParseError as exc:
                raise ParseError(f"line {lineno}: {exc}") from None
            records.append(KnotRecord(name, poly))
    return merge(table, records)

