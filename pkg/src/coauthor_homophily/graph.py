"""Labeled networks with fully reciprocated edges.

Two concrete graph types share the node-level view that every metric needs
(``nodes``, ``n_positive``, ``n_negative``, ``directed_edges()``):

* :class:`CliqueNetwork` -- a disjoint union of cliques, one per paper. This is
  the natural model of co-authorship when author identities are not
  disambiguated, so every (paper, author slot) pair is its own node.
* :class:`ReciprocatedGraph` -- an arbitrary simple undirected graph stored as
  pairs of directed edges. Used for hand-drawn graphs that are not clique
  unions.

Both are immutable after construction.
"""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import EmptyNetwork, InvalidGraph, ZeroDegree

__all__ = [
    "GenderLabel",
    "PaperRecord",
    "AuthorNode",
    "Clique",
    "CliqueNetwork",
    "ReciprocatedGraph",
    "EdgeWeighting",
    "ValidationPolicy",
    "build_network",
    "build_reciprocated_graph",
    "node_out_weight",
    "paper_records",
]


class GenderLabel(enum.Enum):
    POSITIVE = "+"
    NEGATIVE = "-"

    def swapped(self) -> GenderLabel:
        return GenderLabel.NEGATIVE if self is GenderLabel.POSITIVE else GenderLabel.POSITIVE


POSITIVE = GenderLabel.POSITIVE
NEGATIVE = GenderLabel.NEGATIVE


@dataclass(frozen=True)
class PaperRecord:
    paper_id: str
    author_labels: tuple[GenderLabel, ...]

    def __post_init__(self):
        object.__setattr__(self, "author_labels", tuple(self.author_labels))
        if not self.author_labels:
            raise ValueError(f"paper {self.paper_id!r} has no authors")

    @property
    def composition(self) -> tuple[int, int]:
        """``(positive, negative)`` author counts."""
        i = sum(1 for lab in self.author_labels if lab is POSITIVE)
        return i, len(self.author_labels) - i


@dataclass(frozen=True)
class AuthorNode:
    """One individual with its tie counts.

    ``pi`` and ``nu`` count outgoing edges to positive and negative nodes.
    """

    node_id: int
    label: GenderLabel
    pi: int
    nu: int

    @property
    def degree(self) -> int:
        return self.pi + self.nu


@dataclass(frozen=True)
class Clique:
    paper_id: str
    members: tuple[int, ...]
    n_positive: int
    n_negative: int

    @property
    def size(self) -> int:
        return self.n_positive + self.n_negative


class _LabeledGraph:
    nodes: tuple[AuthorNode, ...]

    @property
    def n_positive(self) -> int:
        return sum(1 for n in self.nodes if n.label is POSITIVE)

    @property
    def n_negative(self) -> int:
        return sum(1 for n in self.nodes if n.label is NEGATIVE)

    @property
    def edge_count(self) -> int:
        """Number of directed edges."""
        return sum(n.degree for n in self.nodes)

    def has_uniform_degree(self) -> bool:
        return len({n.degree for n in self.nodes}) == 1

    def directed_edges(self) -> Iterator[tuple[int, int]]:
        raise NotImplementedError


@dataclass(frozen=True)
class CliqueNetwork(_LabeledGraph):
    nodes: tuple[AuthorNode, ...]
    cliques: tuple[Clique, ...]

    def directed_edges(self) -> Iterator[tuple[int, int]]:
        for clique in self.cliques:
            for s in clique.members:
                for t in clique.members:
                    if s != t:
                        yield s, t

    def compositions(self) -> Counter:
        """Multiset of ``(positive, negative)`` clique compositions."""
        return Counter((c.n_positive, c.n_negative) for c in self.cliques)


@dataclass(frozen=True)
class ReciprocatedGraph(_LabeledGraph):
    nodes: tuple[AuthorNode, ...]
    names: tuple[str, ...]
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)

    def directed_edges(self) -> Iterator[tuple[int, int]]:
        for s, adj in enumerate(self.neighbors):
            for t in adj:
                yield s, t


class EdgeWeighting:
    """Weight ``Z_s`` put on every outgoing edge of node ``s``.

    Use :meth:`unit` for plain edge counting, or :meth:`inverse_degree` for
    ``Z_s = c / K_s``, which gives every individual the same total outgoing
    weight regardless of how many co-authors they have.
    """

    UNIT = "unit"
    INVERSE_DEGREE = "inverse_degree"

    __slots__ = ("scheme", "scale_c")

    def __init__(self, scheme: str = UNIT, scale_c: float = 1.0):
        if scheme not in (self.UNIT, self.INVERSE_DEGREE):
            raise ValueError(f"unknown weighting scheme {scheme!r}")
        if not scale_c > 0:
            raise ValueError(f"scale constant must be positive, got {scale_c!r}")
        self.scheme = scheme
        self.scale_c = float(scale_c)

    @classmethod
    def unit(cls) -> EdgeWeighting:
        return cls(cls.UNIT)

    @classmethod
    def inverse_degree(cls, c: float = 1.0) -> EdgeWeighting:
        return cls(cls.INVERSE_DEGREE, c)

    def __eq__(self, other):
        if not isinstance(other, EdgeWeighting):
            return NotImplemented
        return (self.scheme, self.scale_c) == (other.scheme, other.scale_c)

    def __hash__(self):
        return hash((self.scheme, self.scale_c))

    def __repr__(self):
        if self.scheme == self.UNIT:
            return "EdgeWeighting.unit()"
        return f"EdgeWeighting.inverse_degree({self.scale_c!r})"


def node_out_weight(node: AuthorNode, weighting: EdgeWeighting) -> float:
    """Weight of each outgoing edge of ``node``.

    Raises
    ------
    ZeroDegree
        If the node has no edges.
    """
    if node.degree < 1:
        raise ZeroDegree(f"node {node.node_id} has degree 0")
    if weighting.scheme == EdgeWeighting.UNIT:
        return 1.0
    return weighting.scale_c / node.degree


@dataclass(frozen=True)
class ValidationPolicy:
    """Record filtering rules.

    Single-author papers are always dropped: an isolated author has no ties
    and no defined risk. ``on_unknown_label`` is applied during ingest, since
    a :class:`PaperRecord` cannot hold an unknown label.
    """

    on_unknown_label: str = "reject-record"

    REJECT_RECORD = "reject-record"
    REJECT_DATASET = "reject-dataset"

    def __post_init__(self):
        if self.on_unknown_label not in (self.REJECT_RECORD, self.REJECT_DATASET):
            raise ValueError(f"bad on_unknown_label: {self.on_unknown_label!r}")

    @property
    def drop_single_author(self) -> bool:
        return True


def build_network(
    records: Iterable[PaperRecord], policy: ValidationPolicy | None = None
) -> tuple[CliqueNetwork, list[str]]:
    """Build the disjoint-clique network of a set of papers.

    Node ids are assigned consecutively in record order, authors within a
    record in listed order.

    Returns
    -------
    network, warnings
        ``warnings`` names every dropped record.

    Raises
    ------
    EmptyNetwork
        If no record has at least two authors.
    """
    policy = policy or ValidationPolicy()
    nodes: list[AuthorNode] = []
    cliques: list[Clique] = []
    warnings: list[str] = []
    for rec in records:
        if len(rec.author_labels) < 2 and policy.drop_single_author:
            warnings.append(f"dropped single-author paper {rec.paper_id!r}")
            continue
        i, j = rec.composition
        start = len(nodes)
        for lab in rec.author_labels:
            if lab is POSITIVE:
                nodes.append(AuthorNode(len(nodes), lab, pi=i - 1, nu=j))
            else:
                nodes.append(AuthorNode(len(nodes), lab, pi=i, nu=j - 1))
        cliques.append(Clique(rec.paper_id, tuple(range(start, len(nodes))), i, j))
    if not cliques:
        raise EmptyNetwork("no paper with two or more authors")
    return CliqueNetwork(tuple(nodes), tuple(cliques)), warnings


def build_reciprocated_graph(
    edges: Iterable[tuple[str, str, GenderLabel, GenderLabel]],
) -> ReciprocatedGraph:
    """Build a graph from undirected labeled edges ``(u, v, label_u, label_v)``.

    Each undirected edge becomes the pair ``u -> v`` and ``v -> u``. Nodes are
    numbered in order of first appearance.

    Raises
    ------
    InvalidGraph
        On self-loops, repeated edges or a node given two different labels.
    EmptyNetwork
        If ``edges`` is empty.
    """
    index: dict[str, int] = {}
    labels: list[GenderLabel] = []
    adj: list[list[int]] = []
    seen: set[tuple[int, int]] = set()

    def intern(name, label):
        k = index.get(name)
        if k is None:
            k = index[name] = len(labels)
            labels.append(label)
            adj.append([])
        elif labels[k] is not label:
            raise InvalidGraph(f"node {name!r} has conflicting labels")
        return k

    for u, v, lu, lv in edges:
        if u == v:
            raise InvalidGraph(f"self-loop on node {u!r}")
        a, b = intern(u, lu), intern(v, lv)
        key = (min(a, b), max(a, b))
        if key in seen:
            raise InvalidGraph(f"repeated edge {u!r}-{v!r}")
        seen.add(key)
        adj[a].append(b)
        adj[b].append(a)

    if not labels:
        raise EmptyNetwork("edge list is empty")

    nodes = []
    for k, lab in enumerate(labels):
        pi = sum(1 for t in adj[k] if labels[t] is POSITIVE)
        nodes.append(AuthorNode(k, lab, pi=pi, nu=len(adj[k]) - pi))
    names = [None] * len(index)
    for name, k in index.items():
        names[k] = name
    return ReciprocatedGraph(tuple(nodes), tuple(names), tuple(tuple(a) for a in adj))


def paper_records(compositions: Sequence[tuple[int, int]], prefix: str = "p") -> list[PaperRecord]:
    """Records with the given ``(positive, negative)`` compositions."""
    return [
        PaperRecord(f"{prefix}{k}", (POSITIVE,) * i + (NEGATIVE,) * j)
        for k, (i, j) in enumerate(compositions, 1)
    ]
