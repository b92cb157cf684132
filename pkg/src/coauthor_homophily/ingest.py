"""Reading and writing publication datasets.

Two record formats are supported:

CSV
    Header ``paper_id,labels``; ``labels`` holds one single-character token
    per author, e.g. ``p1,FFM``.
JSONL
    One object per line, ``{"paper_id": "p2", "genders": ["F", "F"]}``.

A third, edge-list CSV (header ``src,dst,label_src,label_dst``, one
undirected edge per row) describes arbitrary reciprocated graphs.

Raw tokens are turned into labels by a :class:`LabelMapping`. Papers with a
token the mapping does not know are dropped whole: removing only the
offending author would change the degree of every co-author.
"""

from __future__ import annotations

import csv
import json
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import AllRecordsDropped, DuplicatePaperId, ParseError, UnknownLabel
from .graph import NEGATIVE, POSITIVE, GenderLabel, PaperRecord, ValidationPolicy

__all__ = [
    "FORMATS",
    "RawRecord",
    "IngestDiagnostics",
    "LabelMapping",
    "infer_format",
    "read_records",
    "to_paper_records",
    "write_records",
    "read_edges",
    "load_dataset",
]

FORMATS = ("csv", "jsonl")
CSV_HEADER = ["paper_id", "labels"]
EDGE_HEADER = ["src", "dst", "label_src", "label_dst"]


@dataclass(frozen=True)
class RawRecord:
    """Unvalidated record. A string ``labels`` is split into one token per character."""

    paper_id: str
    labels: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(self.labels))


@dataclass
class IngestDiagnostics:
    total_records: int = 0
    dropped_single_author: int = 0
    dropped_unknown_label: int = 0
    papers_by_size: dict = field(default_factory=dict)
    label_totals: dict = field(default_factory=lambda: {"positive": 0, "negative": 0})
    dropped_ids: list = field(default_factory=list)

    @property
    def surviving(self) -> int:
        return self.total_records - self.dropped_single_author - self.dropped_unknown_label

    def as_dict(self) -> dict:
        return {
            "total_records": self.total_records,
            "surviving_records": self.surviving,
            "dropped_single_author": self.dropped_single_author,
            "dropped_unknown_label": self.dropped_unknown_label,
            "papers_by_size": {str(k): v for k, v in sorted(self.papers_by_size.items())},
            "label_totals": dict(self.label_totals),
        }


class LabelMapping:
    """Maps raw tokens to labels; unmapped tokens are unknown."""

    def __init__(self, tokens: dict[str, GenderLabel]):
        if not tokens:
            raise ValueError("empty label mapping")
        self.tokens = dict(tokens)

    @classmethod
    def default(cls) -> LabelMapping:
        return cls({"F": POSITIVE, "M": NEGATIVE})

    @classmethod
    def parse(cls, text: str) -> LabelMapping:
        """Parse ``"F=+,M=-"`` style mappings."""
        tokens = {}
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            tok, sep, sign = part.rpartition("=")
            if not sep or not tok or sign not in ("+", "-"):
                raise ValueError(f"bad mapping entry {part!r}; expected TOKEN=+ or TOKEN=-")
            if tok in tokens:
                raise ValueError(f"token {tok!r} mapped twice")
            tokens[tok] = GenderLabel(sign)
        return cls(tokens)

    def lookup(self, token: str) -> GenderLabel | None:
        return self.tokens.get(token)

    def token_for(self, label: GenderLabel) -> str:
        for tok, lab in self.tokens.items():
            if lab is label:
                return tok
        raise ValueError(f"mapping has no token for {label.name}")

    def orientation(self) -> dict:
        return {
            "positive": sorted(t for t, lab in self.tokens.items() if lab is POSITIVE),
            "negative": sorted(t for t, lab in self.tokens.items() if lab is NEGATIVE),
        }

    def __str__(self):
        return ",".join(f"{t}={lab.value}" for t, lab in self.tokens.items())


def infer_format(path) -> str:
    return "jsonl" if Path(path).suffix.lower() in (".jsonl", ".ndjson") else "csv"


def read_records(path, format: str | None = None) -> list[RawRecord]:
    """Parse a dataset file without validating labels.

    Raises
    ------
    ParseError
        On syntax errors, with the offending line number.
    DuplicatePaperId
        If a paper id occurs twice.
    OSError
        If the file cannot be opened.
    """
    format = format or infer_format(path)
    if format not in FORMATS:
        raise ValueError(f"unknown format {format!r}")
    with open(path, newline="" if format == "csv" else None, encoding="utf-8") as fh:
        rows = _read_csv(fh, path) if format == "csv" else _read_jsonl(fh, path)
        out, seen = [], {}
        for line, rec in rows:
            if rec.paper_id in seen:
                raise DuplicatePaperId(
                    f"{path}:{line}: paper id {rec.paper_id!r} already used on line {seen[rec.paper_id]}"
                )
            seen[rec.paper_id] = line
            out.append(rec)
    return out


def _read_csv(fh, path):
    reader = csv.reader(fh)
    header = next(reader, None)
    if header is None:
        raise ParseError("empty file; expected header paper_id,labels", 1, path)
    if [h.strip() for h in header] != CSV_HEADER:
        raise ParseError(f"expected header paper_id,labels, got {','.join(header)}", 1, path)
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        if len(row) != 2:
            raise ParseError(f"expected 2 fields, got {len(row)}", line, path)
        pid, labels = row[0].strip(), row[1].strip()
        if not pid:
            raise ParseError("empty paper_id", line, path)
        if not labels:
            raise ParseError(f"paper {pid!r} has no author labels", line, path)
        yield line, RawRecord(pid, labels)


def _read_jsonl(fh, path):
    for line, text in enumerate(fh, 1):
        if not text.strip():
            continue
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc.msg}", line, path) from None
        if not isinstance(obj, dict):
            raise ParseError("expected a JSON object", line, path)
        pid, genders = obj.get("paper_id"), obj.get("genders")
        if not isinstance(pid, str) or not pid:
            raise ParseError("paper_id must be a non-empty string", line, path)
        if not isinstance(genders, list) or not all(isinstance(g, str) for g in genders):
            raise ParseError("genders must be an array of strings", line, path)
        if not genders:
            raise ParseError(f"paper {pid!r} has no author labels", line, path)
        yield line, RawRecord(pid, genders)


def to_paper_records(
    raw: Iterable[RawRecord],
    mapping: LabelMapping | None = None,
    policy: ValidationPolicy | None = None,
) -> tuple[list[PaperRecord], IngestDiagnostics]:
    """Validate raw records into labeled papers.

    Single-author papers are dropped first; papers containing a token the
    mapping does not know are dropped next, or abort the whole dataset under
    the ``reject-dataset`` policy.

    Raises
    ------
    UnknownLabel
        Under ``reject-dataset``, on the first unknown token.
    AllRecordsDropped
        If nothing survives.
    """
    mapping = mapping or LabelMapping.default()
    policy = policy or ValidationPolicy()
    diag = IngestDiagnostics()
    sizes: Counter = Counter()
    records = []
    for rec in raw:
        diag.total_records += 1
        if len(rec.labels) < 2:
            diag.dropped_single_author += 1
            diag.dropped_ids.append(rec.paper_id)
            continue
        labels = [mapping.lookup(tok) for tok in rec.labels]
        if None in labels:
            bad = rec.labels[labels.index(None)]
            if policy.on_unknown_label == ValidationPolicy.REJECT_DATASET:
                raise UnknownLabel(f"paper {rec.paper_id!r} has unknown label token {bad!r}")
            diag.dropped_unknown_label += 1
            diag.dropped_ids.append(rec.paper_id)
            continue
        paper = PaperRecord(rec.paper_id, tuple(labels))
        i, j = paper.composition
        diag.label_totals["positive"] += i
        diag.label_totals["negative"] += j
        sizes[i + j] += 1
        records.append(paper)
    diag.papers_by_size = dict(sorted(sizes.items()))
    if not records:
        raise AllRecordsDropped(
            f"no usable papers among {diag.total_records} records "
            f"({diag.dropped_single_author} single-author, "
            f"{diag.dropped_unknown_label} with unknown labels)"
        )
    return records, diag


def write_records(
    records: Sequence[PaperRecord], path, format: str | None = None, mapping: LabelMapping | None = None
) -> None:
    """Write papers in a format :func:`read_records` reads back."""
    format = format or infer_format(path)
    mapping = mapping or LabelMapping.default()
    tokens = {POSITIVE: mapping.token_for(POSITIVE), NEGATIVE: mapping.token_for(NEGATIVE)}
    if format == "csv":
        if any(len(t) != 1 for t in tokens.values()):
            raise ValueError("CSV labels need single-character tokens; use jsonl")
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(CSV_HEADER)
            for rec in records:
                w.writerow([rec.paper_id, "".join(tokens[lab] for lab in rec.author_labels)])
    elif format == "jsonl":
        with open(path, "w", encoding="utf-8") as fh:
            for rec in records:
                obj = {"paper_id": rec.paper_id, "genders": [tokens[lab] for lab in rec.author_labels]}
                fh.write(json.dumps(obj) + "\n")
    else:
        raise ValueError(f"unknown format {format!r}")


def read_edges(path, mapping: LabelMapping | None = None) -> list[tuple[str, str, GenderLabel, GenderLabel]]:
    """Read an undirected labeled edge list for
    :func:`~coauthor_homophily.graph.build_reciprocated_graph`.
    """
    mapping = mapping or LabelMapping.default()
    edges = []
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != EDGE_HEADER:
            raise ParseError("expected header src,dst,label_src,label_dst", 1, path)
        for row in reader:
            if not row:
                continue
            line = reader.line_num
            if len(row) != 4:
                raise ParseError(f"expected 4 fields, got {len(row)}", line, path)
            u, v, tu, tv = (x.strip() for x in row)
            if not u or not v:
                raise ParseError("empty node id", line, path)
            lu, lv = mapping.lookup(tu), mapping.lookup(tv)
            if lu is None or lv is None:
                raise UnknownLabel(f"{path}:{line}: unknown label token {tu if lu is None else tv!r}")
            edges.append((u, v, lu, lv))
    return edges


def load_dataset(path, format=None, mapping=None, policy=None):
    """``read_records`` followed by ``to_paper_records``."""
    return to_paper_records(read_records(path, format), mapping, policy)
