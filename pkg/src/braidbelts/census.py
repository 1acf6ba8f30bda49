"""Enumeration census of knotted boundaries.

Either every braid word of a fixed odd length is evaluated, or every
all-half-odd twist vector inside a box is listed directly.  Classes are
merged up to reordering of the ribbons unless ``orbit=False``; the class
representative is the entry-wise descending ordering of the vector.
"""

from __future__ import annotations

import csv
import io
import json
import itertools
from dataclasses import dataclass
from typing import Iterable, Optional

import numpy as np

from . import _kernels
from .belt import BraidWord, HalfInt, TwistVector
from .canonical import braid_only_word
from .errors import EvenLength
from .jones import boundary_components, jones_closed
from .knots import KnotTable, identify, seed_table
from .laurent import LaurentPoly

__all__ = [
    "CensusRow",
    "census_by_length",
    "census_by_max_sum",
    "rows_to_csv",
    "rows_to_json",
    "rows_to_text",
    "CSV_COLUMNS",
    "reached_classes",
]

CSV_COLUMNS = (
    "twist_class",
    "sum",
    "components",
    "jones",
    "knot",
    "example_word",
    "no_charge_mixing",
)
_CHUNK = 1 << 20


@dataclass(frozen=True)
class CensusRow:
    twist_class: TwistVector
    sum: HalfInt
    components: int
    jones: LaurentPoly
    knot_name: Optional[str]
    word_example: BraidWord
    no_charge_mixing: bool

    @property
    def knot_label(self) -> str:
        return self.knot_name if self.knot_name is not None else "unidentified"

    def as_record(self) -> dict:
        return {
            "twist_class": str(self.twist_class),
            "sum": str(self.sum),
            "components": self.components,
            "jones": self.jones.format(descending=False),
            "jones_terms": self.jones.to_json_obj(),
            "knot": self.knot_label,
            "example_word": str(self.word_example),
            "no_charge_mixing": self.no_charge_mixing,
        }


def _no_charge_mixing(t: TwistVector) -> bool:
    d = t.doubled
    return not (min(d) < 0 < max(d))


def _row(t: TwistVector, word: BraidWord, table: KnotTable) -> CensusRow:
    jones = jones_closed(*t.entries)
    return CensusRow(
        twist_class=t,
        sum=t.total(),
        components=boundary_components(t),
        jones=jones,
        knot_name=identify(jones, table),
        word_example=word,
        no_charge_mixing=_no_charge_mixing(t),
    )


def _sort_rows(rows: Iterable[CensusRow]) -> list[CensusRow]:
    return sorted(
        rows, key=lambda r: (-r.sum.doubled, tuple(-d for d in r.twist_class.doubled))
    )


def reached_classes(length: int, orbit: bool = True, backend_name=None) -> dict:
    """Map each reached class (doubled tuple) to its first word number."""
    total = 6**length
    first: dict[tuple[int, int, int], int] = {}
    for lo in range(0, total, _CHUNK):
        hi = min(lo + _CHUNK, total)
        states = _kernels.evaluate_index_range(length, lo, hi, backend_name)
        if orbit:
            states = -np.sort(-states, axis=1)
        uniq, idx = np.unique(states, axis=0, return_index=True)
        for row, i in zip(uniq.tolist(), idx.tolist()):
            key = tuple(row)
            if key not in first:
                first[key] = lo + i
    return first


def census_by_length(
    length: int,
    *,
    orbit: bool = True,
    total: Optional[HalfInt] = None,
    table: Optional[KnotTable] = None,
    backend_name=None,
) -> list[CensusRow]:
    """Knot classes reached by all ``6**length`` words of odd ``length``.

    ``total`` keeps only classes with that twist sum.  The example word of
    a class is the first word reaching it in enumeration order.
    """
    if length % 2 == 0:
        raise EvenLength(f"a knot census needs odd word length, got {length}")
    table = table if table is not None else seed_table()
    rows = []
    for key, index in reached_classes(length, orbit, backend_name).items():
        t = TwistVector(key)
        if total is not None and t.total() != total:
            continue
        codes = _kernels.codes_for_indices(length, [index])[0]
        word = BraidWord.from_ints(_kernels.CODE_TOKENS[c] for c in codes)
        rows.append(_row(t, word, table))
    return _sort_rows(rows)


def census_by_max_sum(
    max_sum: HalfInt, *, orbit: bool = True, table: Optional[KnotTable] = None
) -> list[CensusRow]:
    """All half-odd classes with every ``|entry| <= S`` and ``|a+b+c| <= S``.

    The example word is the canonical braid-only word of the representative.
    """
    s = HalfInt.of(max_sum)
    if s.doubled <= 0 or s.is_integer:
        raise ValueError(f"maximum sum must be a positive odd multiple of 1/2, got {s}")
    table = table if table is not None else seed_table()
    values = range(-s.doubled, s.doubled + 1, 2)
    seen = set()
    rows = []
    for triple in itertools.product(values, repeat=3):
        if abs(sum(triple)) > s.doubled:
            continue
        key = tuple(sorted(triple, reverse=True)) if orbit else triple
        if key in seen:
            continue
        seen.add(key)
        t = TwistVector(key)
        rows.append(_row(t, braid_only_word(t), table))
    return _sort_rows(rows)


def rows_to_csv(rows: Iterable[CensusRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in rows:
        rec = r.as_record()
        writer.writerow([rec[c] if c != "jones" else r.jones.to_compact() for c in CSV_COLUMNS])
    return buf.getvalue()


def rows_to_json(rows: Iterable[CensusRow]) -> str:
    return json.dumps([r.as_record() for r in rows], indent=2)


def rows_to_text(rows: Iterable[CensusRow]) -> str:
    lines = []
    for r in rows:
        mark = "" if r.no_charge_mixing else "  (mixed)"
        lines.append(
            f"[{r.twist_class}]  sum={r.sum}  {r.knot_label:<13} {r.jones.format(descending=False)}{mark}"
        )
    return "\n".join(lines) + ("\n" if lines else "")
