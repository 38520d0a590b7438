"""Rendering of the b, c and d tables in ascii, csv and json."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass

from .coeffs import d_cell
from .decomp import b_table
from .lseries import Params
from .qwords import render_number

UNDEFINED = "*"

TITLES = {
    "b": "b_{{{j},m,n}} for q={q}",
    "c": "c_{{{j},m,n}} for q={q} and s={s}",
    "d": "d_{{{j},m,n}} for q={q} and s={s}",
}


@dataclass(frozen=True)
class RenderedTable:
    kind: str
    j: int
    q: int
    s: int
    rows: tuple[tuple[int, tuple[str, ...]], ...]

    @property
    def title(self) -> str:
        return TITLES[self.kind].format(j=self.j, q=self.q, s=self.s)

    @property
    def width(self) -> int:
        return max((len(cells) for _, cells in self.rows), default=0)

    def cell(self, m: int, n: int) -> str:
        for row_m, cells in self.rows:
            if row_m == m:
                return cells[n - 1]
        raise IndexError(f"no row {m}")

    def to_ascii(self) -> str:
        header = ["m\\n"] + [str(n) for n in range(1, self.width + 1)]
        body = [[str(m)] + list(cells) for m, cells in self.rows]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]

        def line(cols):
            first = cols[0].ljust(widths[0])
            rest = "  ".join(c.rjust(w) for c, w in zip(cols[1:], widths[1:]))
            return f"{first} | {rest}".rstrip()

        rule = "-" * (widths[0] + 1) + "+" + "-" * (sum(widths[1:]) + 2 * (len(widths) - 2) + 1)
        out = [self.title, line(header), rule] + [line(r) for r in body]
        return "\n".join(out) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m"] + [str(n) for n in range(1, self.width + 1)])
        for m, cells in self.rows:
            writer.writerow([m, *cells])
        return buf.getvalue()

    def to_json(self) -> str:
        doc = {
            "kind": self.kind,
            "j": self.j,
            "q": self.q,
            "s": self.s,
            "rows": [{"m": m, "cells": list(cells)} for m, cells in self.rows],
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "RenderedTable":
        doc = json.loads(text)
        rows = tuple((int(r["m"]), tuple(r["cells"])) for r in doc["rows"])
        return cls(doc["kind"], doc["j"], doc["q"], doc["s"], rows)

    def render(self, fmt: str) -> str:
        if fmt == "ascii":
            return self.to_ascii()
        if fmt == "csv":
            return self.to_csv()
        if fmt == "json":
            return self.to_json()
        raise ValueError(f"unknown format {fmt!r}")


def _digits(value: int | None, q: int) -> str:
    return UNDEFINED if value is None else render_number(value, q)


def build_table(kind: str, j: int, params: Params, m_max: int) -> RenderedTable:
    """Rows 1..m_max of the b, c or d table, one column past the longest chain.

    Undefined b and c cells print as ``*``; d cells past the chain are 0.
    """
    q = params.q
    t = b_table(j, params, m_max)
    rows = []
    for m in range(1, m_max + 1):
        if kind == "b":
            cells = [_digits(t.b(m, n), q) for n in range(1, t.width + 1)]
        elif kind == "c":
            cells = [_digits(t.c(m, n), q) for n in range(1, t.width + 1)]
        elif kind == "d":
            cells = [d_cell(j, m, n, params).render(q) for n in range(1, t.width + 1)]
        else:
            raise ValueError(f"unknown table kind {kind!r}")
        rows.append((m, tuple(cells)))
    return RenderedTable(kind, j, q, params.s, tuple(rows))
