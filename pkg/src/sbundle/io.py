"""Graph file parsing and result serialization.

Two input formats are understood:

* DIMACS clique (``p edge n m`` header, ``e u v`` lines, 1-based ids,
  ``c`` comment lines);
* plain edge lists (``u v`` per line, ``%``/``#`` comments, arbitrary
  non-negative ids compacted in first-seen order).  A MatrixMarket banner is
  tolerated: its size line is skipped.

The original ids are kept as graph labels so witnesses can be reported in
the numbering of the source file.
"""
from __future__ import annotations

import csv
import io
import json
import os
from dataclasses import asdict, dataclass, fields
from typing import IO, Iterable, Optional, Union

from .graph import Graph, InvalidInputError

DIMACS = "dimacs"
EDGE_LIST = "edgelist"
FORMATS = (DIMACS, EDGE_LIST)


class ParseError(InvalidInputError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def _text(data: Union[bytes, str]) -> str:
    if isinstance(data, bytes):
        return data.decode("utf-8", errors="replace")
    return data


def detect_format(data: Union[bytes, str]) -> str:
    for line in _text(data).splitlines():
        if line.startswith("p ") or line.startswith("e "):
            return DIMACS
    return EDGE_LIST


def _int(tok: str, lineno: int) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"expected an integer, got {tok!r}", lineno) from None


def _parse_dimacs(text: str) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if n is not None:
                raise ParseError("duplicate problem line", lineno)
            if len(tok) != 4:
                raise ParseError("malformed header, expected 'p edge <n> <m>'", lineno)
            n = _int(tok[2], lineno)
            _int(tok[3], lineno)  # declared m is advisory
            if n < 0:
                raise ParseError("negative vertex count", lineno)
        elif tok[0] == "e":
            if n is None:
                raise ParseError("edge line before the problem line", lineno)
            if len(tok) < 3:
                raise ParseError("malformed edge line", lineno)
            u, v = _int(tok[1], lineno), _int(tok[2], lineno)
            for x in (u, v):
                if not 1 <= x <= n:
                    raise ParseError(f"vertex {x} outside 1..{n}", lineno)
            edges.append((u - 1, v - 1))
        else:
            raise ParseError(f"unexpected line type {tok[0]!r}", lineno)
    if n is None:
        raise ParseError("missing problem line")
    return Graph.from_edges(n, edges, labels=range(1, n + 1))


def _parse_edge_list(text: str) -> Graph:
    ids: dict[int, int] = {}
    edges = []
    skip_size_line = text.startswith("%%MatrixMarket")
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line[0] in "%#":
            continue
        if skip_size_line:
            skip_size_line = False
            continue
        tok = line.split()
        if len(tok) < 2:
            raise ParseError("expected 'u v'", lineno)
        pair = []
        for t in tok[:2]:
            x = _int(t, lineno)
            if x < 0:
                raise ParseError(f"negative vertex id {x}", lineno)
            pair.append(ids.setdefault(x, len(ids)))
        edges.append(tuple(pair))
    return Graph.from_edges(len(ids), edges, labels=list(ids))


def parse_graph(data: Union[bytes, str], fmt: Optional[str] = None) -> Graph:
    """Parse a graph; ``fmt`` is ``"dimacs"``, ``"edgelist"`` or ``None`` to auto-detect."""
    if fmt is None:
        fmt = detect_format(data)
    if fmt not in FORMATS:
        raise InvalidInputError(f"unknown format {fmt!r}")
    text = _text(data)
    return _parse_dimacs(text) if fmt == DIMACS else _parse_edge_list(text)


def read_graph(path: Union[str, os.PathLike], fmt: Optional[str] = None) -> Graph:
    with open(path, "rb") as fh:
        return parse_graph(fh.read(), fmt)


def write_dimacs(g: Graph, path: Union[str, os.PathLike], comment: str = "") -> None:
    """Write ``g`` in DIMACS clique format (1-based ids, labels are not kept)."""
    with open(path, "w") as fh:
        if comment:
            fh.write(f"c {comment}\n")
        fh.write(f"p edge {g.n} {g.m}\n")
        fh.writelines(f"e {u + 1} {v + 1}\n" for u, v in g.edges().tolist())


@dataclass(frozen=True)
class ResultRecord:
    instance: str
    s: int
    size: int
    witness: tuple[int, ...]
    reduced_v: int
    reduced_e: int
    tree_nodes: int
    time: float
    timed_out: bool
    variant: str = "default"

    def as_dict(self) -> dict:
        d = asdict(self)
        d["witness"] = list(self.witness)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "ResultRecord":
        return cls(
            instance=str(d["instance"]),
            s=int(d["s"]),
            size=int(d["size"]),
            witness=tuple(int(x) for x in d["witness"]),
            reduced_v=int(d["reduced_v"]),
            reduced_e=int(d["reduced_e"]),
            tree_nodes=int(d["tree_nodes"]),
            time=float(d["time"]),
            timed_out=bool(d["timed_out"]),
            variant=str(d["variant"]),
        )


FIELDS = tuple(f.name for f in fields(ResultRecord))


def _csv_row(r: ResultRecord) -> list:
    row = []
    for name in FIELDS:
        v = getattr(r, name)
        if name == "witness":
            v = " ".join(map(str, v))
        elif name == "timed_out":
            v = "true" if v else "false"
        elif name == "time":
            v = repr(float(v))
        row.append(v)
    return row


def write_results(records: Iterable[ResultRecord], fmt: str, sink: Union[str, os.PathLike, IO[str]]) -> None:
    """Write records as ``csv`` or ``json`` to a path or text stream."""
    if fmt not in ("csv", "json"):
        raise InvalidInputError("format must be 'csv' or 'json'")
    records = list(records)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "w", newline="") as fh:
            write_results(records, fmt, fh)
        return
    if fmt == "json":
        json.dump([r.as_dict() for r in records], sink, indent=1)
        sink.write("\n")
    else:
        w = csv.writer(sink, lineterminator="\n")
        w.writerow(FIELDS)
        w.writerows(_csv_row(r) for r in records)


def read_results(source: Union[str, os.PathLike, IO[str]], fmt: str) -> list[ResultRecord]:
    if isinstance(source, (str, os.PathLike)):
        with open(source, newline="") as fh:
            return read_results(fh, fmt)
    if fmt == "json":
        return [ResultRecord.from_dict(d) for d in json.load(source)]
    if fmt != "csv":
        raise InvalidInputError("format must be 'csv' or 'json'")
    out = []
    for d in csv.DictReader(source):
        d["witness"] = d["witness"].split()
        d["timed_out"] = d["timed_out"] == "true"
        out.append(ResultRecord.from_dict(d))
    return out


def results_to_string(records: Iterable[ResultRecord], fmt: str) -> str:
    buf = io.StringIO()
    write_results(records, fmt, buf)
    return buf.getvalue()
