"""Assortativity on binary-labeled reciprocated networks.

Two coefficients are computed:

``r``
    Newman's discrete assortativity coefficient of the 2x2 mixing matrix,
    ``(sum_i e_ii - sum_i a_i b_i) / (1 - sum_i a_i b_i)``. It depends on how
    edges are weighted; see :class:`~coauthor_homophily.graph.EdgeWeighting`.

``alpha``
    Bergstrom's homophily index ``p - q``: the mean, over positive
    individuals, of the share of their ties that go to positive individuals,
    minus the same mean over negative individuals.

With every outgoing edge of node ``s`` weighted by ``c / K_s``, ``r`` equals
``alpha`` on every disjoint-clique network. On other reciprocated graphs the
identity needs the weighted flow from positive to negative nodes to equal
the flow back, which holds when each cross-label edge joins two nodes of
equal degree and can fail otherwise (the path + + - gives ``alpha = -1/4``
but ``r = -2/7``). With unit weights ``r`` and ``alpha`` agree when all nodes
share the same degree. :func:`equivalence_report` checks both numerically.

All sums go through :func:`math.fsum`, which makes results independent of
summation order.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import fsum
from typing import Iterable, Mapping, Union

from .errors import (
    DegenerateMixing,
    InconsistentTable,
    OneSidedPopulation,
    UndefinedMetric,
)
from .graph import NEGATIVE, POSITIVE, CliqueNetwork, EdgeWeighting, node_out_weight

__all__ = [
    "MixingMatrix",
    "CliqueCountTable",
    "AlphaResult",
    "Undefined",
    "MetricReport",
    "EquivalenceReport",
    "build_mixing_matrix",
    "newman_r",
    "alpha_from_individuals",
    "alpha_from_clique_counts",
    "clique_count_table",
    "equivalence_report",
    "compute_metrics",
    "EQUIVALENCE_TOLERANCE",
]

EQUIVALENCE_TOLERANCE = 1e-10


@dataclass(frozen=True)
class MixingMatrix:
    """Proportions of (weighted) directed edges by endpoint label.

    ``e_pn`` is the share of edge weight going from positive to negative
    nodes; rows index the source label.
    """

    e_pp: float
    e_pn: float
    e_np: float
    e_nn: float

    @property
    def a_p(self) -> float:
        return self.e_pp + self.e_pn

    @property
    def a_n(self) -> float:
        return self.e_np + self.e_nn

    @property
    def b_p(self) -> float:
        return self.e_pp + self.e_np

    @property
    def b_n(self) -> float:
        return self.e_pn + self.e_nn

    def swapped(self) -> MixingMatrix:
        return MixingMatrix(self.e_nn, self.e_np, self.e_pn, self.e_pp)

    def as_dict(self) -> dict:
        return {
            "e_pp": self.e_pp,
            "e_pn": self.e_pn,
            "e_np": self.e_np,
            "e_nn": self.e_nn,
            "a_p": self.a_p,
            "a_n": self.a_n,
            "b_p": self.b_p,
            "b_n": self.b_n,
        }


@dataclass(frozen=True)
class CliqueCountTable:
    """Clique counts ``n[(i, j)]`` by number of positive ``i`` and negative ``j`` members."""

    n: Mapping[tuple[int, int], int]
    k_star: int

    @property
    def num_cliques(self) -> int:
        return sum(self.n.values())

    @property
    def n_positive(self) -> int:
        return sum(i * cnt for (i, _), cnt in self.n.items())

    @property
    def n_negative(self) -> int:
        return sum(j * cnt for (_, j), cnt in self.n.items())

    def rows(self) -> list[dict]:
        return [
            {"positive": i, "negative": j, "count": cnt}
            for (i, j), cnt in sorted(self.n.items())
            if cnt
        ]


@dataclass(frozen=True)
class AlphaResult:
    alpha: float
    p_risk: float
    q_risk: float


@dataclass(frozen=True)
class Undefined:
    """Stands in for a metric that has no value on the given network."""

    reason: str

    def __bool__(self):
        return False


Value = Union[float, Undefined]


@dataclass(frozen=True)
class MetricReport:
    alpha: Value
    p_risk: Value
    q_risk: Value
    r_unit: Value
    r_inverse_degree: Value
    mixing_unit: MixingMatrix
    mixing_weighted: MixingMatrix
    equivalence_gap: Value

    @property
    def defined(self) -> bool:
        return not isinstance(self.alpha, Undefined)


@dataclass(frozen=True)
class EquivalenceReport:
    alpha: float
    c_values: tuple[float, ...]
    r_inverse_degree: tuple[float, ...]
    gaps: tuple[float, ...]
    max_gap: float
    uniform_degree: bool
    r_unit: float
    unit_gap: float | None
    cross_flow_balanced: bool
    tolerance: float = EQUIVALENCE_TOLERANCE

    @property
    def corollary_applies(self) -> bool:
        return self.uniform_degree

    @property
    def certified(self) -> bool:
        """Inverse-degree ``r`` matched ``alpha`` for every scale constant."""
        return self.max_gap < self.tolerance

    @property
    def corollary_holds(self) -> bool | None:
        """Unit-weight ``r`` matched ``alpha``; ``None`` when degrees differ."""
        return None if self.unit_gap is None else self.unit_gap < self.tolerance


def build_mixing_matrix(network, weighting: EdgeWeighting) -> MixingMatrix:
    """Weighted mixing matrix of a reciprocated labeled graph.

    Every outgoing edge of node ``s`` carries weight ``node_out_weight(s)``;
    entries are weight sums normalised by the total weight of all edges.
    Works from per-node tie counts, so no edge list is materialised.

    ``e_pn == e_np`` under unit weights and on clique networks. Inverse-degree
    weights on a general graph can make the matrix asymmetric.
    """
    pp, pn, np_, nn = [], [], [], []
    for node in network.nodes:
        z = node_out_weight(node, weighting)
        if node.label is POSITIVE:
            pp.append(z * node.pi)
            pn.append(z * node.nu)
        else:
            np_.append(z * node.pi)
            nn.append(z * node.nu)
    parts = [fsum(pp), fsum(pn), fsum(np_), fsum(nn)]
    total = fsum(parts)
    return MixingMatrix(*(x / total for x in parts))


def newman_r(m: MixingMatrix) -> float:
    """Newman's assortativity coefficient of a 2x2 mixing matrix.

    Raises
    ------
    DegenerateMixing
        When ``sum_i a_i b_i == 1``, i.e. all edge weight touches one label.
    """
    expected = fsum([m.a_p * m.b_p, m.a_n * m.b_n])
    denom = 1.0 - expected
    if denom <= 0.0:
        raise DegenerateMixing("only one label present; r is undefined")
    return (fsum([m.e_pp, m.e_nn]) - expected) / denom


def alpha_from_individuals(network) -> AlphaResult:
    """Homophily index from per-individual tie shares.

    ``p_risk`` is the mean of ``pi_s / K_s`` over positive nodes, ``q_risk``
    the same over negative nodes.

    Raises
    ------
    OneSidedPopulation
        If either label class is empty.
    """
    pos, neg = [], []
    for node in network.nodes:
        share = node.pi / node.degree
        (pos if node.label is POSITIVE else neg).append(share)
    if not pos or not neg:
        raise OneSidedPopulation(_one_sided_reason(len(pos), len(neg)))
    p = fsum(pos) / len(pos)
    q = fsum(neg) / len(neg)
    return AlphaResult(p - q, p, q)


def _one_sided_reason(n_pos, n_neg):
    missing = "positive" if n_pos == 0 else "negative"
    return f"no {missing} individuals; alpha and r are undefined"


def clique_count_table(network: CliqueNetwork) -> CliqueCountTable:
    counts = Counter((c.n_positive, c.n_negative) for c in network.cliques)
    return CliqueCountTable(dict(counts), max(c.size for c in network.cliques))


def alpha_from_clique_counts(table: CliqueCountTable, n_pos: int, n_neg: int) -> float:
    """Homophily index from clique composition counts alone.

    A clique with ``i`` positive and ``j`` negative members holds ``i``
    positive individuals with share ``(i-1)/(i+j-1)`` and ``j`` negative
    individuals with share ``i/(i+j-1)``; the class means follow.

    Raises
    ------
    InconsistentTable
        If the table holds cliques smaller than 2 or larger than ``k_star``,
        or its member totals disagree with ``n_pos``/``n_neg``.
    OneSidedPopulation
        If ``n_pos`` or ``n_neg`` is zero.
    """
    for (i, j), cnt in table.n.items():
        if i < 0 or j < 0 or cnt < 0:
            raise InconsistentTable(f"negative entry at {(i, j)}")
        if cnt and not 2 <= i + j <= table.k_star:
            raise InconsistentTable(f"clique size {i + j} outside [2, {table.k_star}]")
    if (table.n_positive, table.n_negative) != (n_pos, n_neg):
        raise InconsistentTable(
            f"table holds {table.n_positive} positive / {table.n_negative} negative "
            f"members, expected {n_pos} / {n_neg}"
        )
    if n_pos == 0 or n_neg == 0:
        raise OneSidedPopulation(_one_sided_reason(n_pos, n_neg))
    pos = fsum(cnt * i * (i - 1) / (i + j - 1) for (i, j), cnt in table.n.items())
    neg = fsum(cnt * j * i / (i + j - 1) for (i, j), cnt in table.n.items())
    return pos / n_pos - neg / n_neg


def equivalence_report(
    network, c_values: Iterable[float] = (0.5, 1.0, 3.0), tolerance: float = EQUIVALENCE_TOLERANCE
) -> EquivalenceReport:
    """Compare ``r`` under inverse-degree weights against ``alpha``.

    One ``r`` is computed per scale constant in ``c_values``. The unit-weight
    ``r`` is compared as well when every node has the same degree (for a
    clique network: every paper has the same number of authors).
    ``cross_flow_balanced`` is false when the weighted mixing matrix is
    asymmetric, the one situation in which the comparison is expected to fail.

    Raises
    ------
    UndefinedMetric
        If only one label class is present.
    """
    c_values = tuple(float(c) for c in c_values)
    if not c_values:
        raise ValueError("need at least one scale constant")
    alpha = alpha_from_individuals(network).alpha
    matrices = [build_mixing_matrix(network, EdgeWeighting.inverse_degree(c)) for c in c_values]
    rs = tuple(newman_r(m) for m in matrices)
    gaps = tuple(abs(r - alpha) for r in rs)
    r_unit = newman_r(build_mixing_matrix(network, EdgeWeighting.unit()))
    uniform = network.has_uniform_degree()
    return EquivalenceReport(
        alpha=alpha,
        c_values=c_values,
        r_inverse_degree=rs,
        gaps=gaps,
        max_gap=max(gaps),
        uniform_degree=uniform,
        r_unit=r_unit,
        unit_gap=abs(r_unit - alpha) if uniform else None,
        cross_flow_balanced=all(abs(m.e_pn - m.e_np) < tolerance for m in matrices),
        tolerance=tolerance,
    )


def compute_metrics(network, c: float = 1.0) -> MetricReport:
    """Every metric at once; undefined values come back as :class:`Undefined`."""
    mixing_unit = build_mixing_matrix(network, EdgeWeighting.unit())
    mixing_weighted = build_mixing_matrix(network, EdgeWeighting.inverse_degree(c))

    def attempt(fn, *args):
        try:
            return fn(*args)
        except UndefinedMetric as exc:
            return Undefined(str(exc))

    risks = attempt(alpha_from_individuals, network)
    if isinstance(risks, Undefined):
        alpha = p = q = risks
    else:
        alpha, p, q = risks.alpha, risks.p_risk, risks.q_risk
    r_unit = attempt(newman_r, mixing_unit)
    r_inv = attempt(newman_r, mixing_weighted)
    if isinstance(alpha, Undefined) or isinstance(r_inv, Undefined):
        gap = alpha if isinstance(alpha, Undefined) else r_inv
    else:
        gap = abs(r_inv - alpha)
    return MetricReport(alpha, p, q, r_unit, r_inv, mixing_unit, mixing_weighted, gap)
