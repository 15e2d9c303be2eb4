"""Batch census of all diagrams with a fixed chord count."""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass
from typing import IO, Iterable, Iterator

from .gauss import GaussDiagram, enumerate_diagrams
from .invariants import report
from .laurent import Laurent, format_poly, poly_to_map

CSV_FIELDS = ("gauss_code", "chord_count", "f", "J", "degree", "bound",
              "odd_chord_count")


@dataclass(frozen=True)
class CensusRecord:
    gauss_code: str
    chord_count: int
    f: Laurent
    j: int
    degree: int
    bound: int
    odd_chord_count: int

    @classmethod
    def from_diagram(cls, d: GaussDiagram) -> CensusRecord:
        rep = report(d)
        return cls(
            gauss_code=rep.gauss_code,
            chord_count=d.n,
            f=rep.odd_writhe_poly,
            j=rep.odd_writhe,
            degree=rep.degree,
            bound=rep.crossing_lower_bound,
            odd_chord_count=sum(1 for c in rep.chords if c.odd),
        )

    def to_dict(self) -> dict:
        return {
            "gauss_code": self.gauss_code,
            "chord_count": self.chord_count,
            "f": poly_to_map(self.f),
            "J": self.j,
            "degree": self.degree,
            "bound": self.bound,
            "odd_chord_count": self.odd_chord_count,
        }

    def to_csv_row(self) -> dict:
        # the polynomial is a single CSV cell in canonical text form
        row = self.to_dict()
        row["f"] = format_poly(self.f)
        return row


def census(n: int) -> Iterator[CensusRecord]:
    """One record per canonical n-chord diagram, in canonical-code order."""
    for d in enumerate_diagrams(n):
        yield CensusRecord.from_diagram(d)


def write_json(records: Iterable[CensusRecord], fp: IO[str]) -> None:
    json.dump([r.to_dict() for r in records], fp, indent=2)
    fp.write("\n")


def write_csv(records: Iterable[CensusRecord], fp: IO[str]) -> None:
    writer = csv.DictWriter(fp, fieldnames=CSV_FIELDS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.to_csv_row())
