"""Brute-force reference computations in exact rational arithmetic.

These work on explicit directed edge lists and never look at the per-node
tie counts the package stores, so they check the package independently.
"""

from collections import defaultdict
from fractions import Fraction

from coauthor_homophily.graph import POSITIVE


def directed_from_cliques(label_lists):
    """``(src, dst, label_src, label_dst)`` for every ordered pair within each clique."""
    edges, base = [], 0
    for labels in label_lists:
        for a, la in enumerate(labels):
            for b, lb in enumerate(labels):
                if a != b:
                    edges.append((base + a, base + b, la, lb))
        base += len(labels)
    return edges


def directed_from_undirected(edges):
    out = []
    for u, v, lu, lv in edges:
        out.append((u, v, lu, lv))
        out.append((v, u, lv, lu))
    return out


def out_degrees(directed):
    deg = defaultdict(int)
    for s, *_ in directed:
        deg[s] += 1
    return deg


def mixing(directed, c=None):
    """Exact mixing matrix; ``c=None`` means unit weights, else ``c / out-degree``."""
    deg = out_degrees(directed)
    cells = defaultdict(Fraction)
    for s, _, ls, lt in directed:
        w = Fraction(1) if c is None else Fraction(c) / deg[s]
        cells[(ls is POSITIVE, lt is POSITIVE)] += w
    total = sum(cells.values())
    return {k: v / total for k, v in cells.items()}


def newman_r(cells):
    e = lambda x, y: cells.get((x, y), Fraction(0))  # noqa: E731
    a_p, a_n = e(True, True) + e(True, False), e(False, True) + e(False, False)
    b_p, b_n = e(True, True) + e(False, True), e(True, False) + e(False, False)
    s = a_p * b_p + a_n * b_n
    return (e(True, True) + e(False, False) - s) / (1 - s)


def alpha(directed):
    """``(alpha, p, q)`` from per-node neighbour label shares."""
    label, ties, pos_ties = {}, defaultdict(int), defaultdict(int)
    for s, _, ls, lt in directed:
        label[s] = ls
        ties[s] += 1
        pos_ties[s] += lt is POSITIVE
    pos = [Fraction(pos_ties[s], ties[s]) for s in label if label[s] is POSITIVE]
    neg = [Fraction(pos_ties[s], ties[s]) for s in label if label[s] is not POSITIVE]
    p, q = sum(pos) / len(pos), sum(neg) / len(neg)
    return p - q, p, q
