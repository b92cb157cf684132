from fractions import Fraction

import pytest

from coauthor_homophily.errors import DegenerateMixing, InconsistentTable, OneSidedPopulation
from coauthor_homophily.graph import NEGATIVE, POSITIVE, EdgeWeighting, build_network, paper_records
from coauthor_homophily.metrics import (
    CliqueCountTable,
    MixingMatrix,
    Undefined,
    alpha_from_clique_counts,
    alpha_from_individuals,
    build_mixing_matrix,
    clique_count_table,
    compute_metrics,
    equivalence_report,
    newman_r,
)
from coauthor_homophily.synth import SynthConfig, generate

from . import oracles
from .conftest import BRIDGED_TRIANGLES, CROSS_PAIRS

P, N = POSITIVE, NEGATIVE
UNIT = EdgeWeighting.unit()


def network(*compositions):
    return build_network(paper_records(compositions))[0]


class TestOracleValues:
    """Freeze the exact reference values the package is checked against."""

    def test_bridged_triangles(self):
        d = oracles.directed_from_undirected(BRIDGED_TRIANGLES)
        assert len(d) == 14
        cells = oracles.mixing(d)
        assert cells[(True, True)] == cells[(False, False)] == Fraction(6, 14)
        assert cells[(True, False)] == cells[(False, True)] == Fraction(1, 14)
        assert oracles.newman_r(cells) == Fraction(5, 7)
        assert oracles.alpha(d) == (Fraction(7, 9), Fraction(8, 9), Fraction(1, 9))
        for c in (1, 2, 10):
            assert oracles.newman_r(oracles.mixing(d, c)) == Fraction(7, 9)

    def test_cross_pairs(self):
        d = oracles.directed_from_undirected(CROSS_PAIRS)
        assert oracles.newman_r(oracles.mixing(d)) == Fraction(-1, 5)
        assert oracles.alpha(d)[0] == Fraction(-1, 3)


class TestMixingMatrix:
    def test_bridged_triangles_unit(self, bridged_triangles):
        m = build_mixing_matrix(bridged_triangles, UNIT)
        assert m.e_pp == pytest.approx(6 / 14, abs=1e-15)
        assert m.e_nn == pytest.approx(6 / 14, abs=1e-15)
        assert m.e_pn == m.e_np == pytest.approx(1 / 14, abs=1e-15)
        assert m.a_p == pytest.approx(0.5, abs=1e-15)
        assert m.a_p == pytest.approx(m.b_p, abs=1e-15)

    def test_bridged_triangles_inverse_degree(self, bridged_triangles):
        m = build_mixing_matrix(bridged_triangles, EdgeWeighting.inverse_degree(1))
        assert newman_r(m) == pytest.approx(7 / 9, abs=1e-12)

    def test_mixed_pair(self):
        m = build_mixing_matrix(network((1, 1)), UNIT)
        assert (m.e_pp, m.e_pn, m.e_np, m.e_nn) == (0.0, 0.5, 0.5, 0.0)

    def test_sums_to_one(self):
        net = build_network(generate(SynthConfig(40, size_weights={2: 1, 5: 1, 7: 1}, seed=3)))[0]
        for w in (UNIT, EdgeWeighting.inverse_degree(2.5)):
            m = build_mixing_matrix(net, w)
            assert m.e_pp + m.e_pn + m.e_np + m.e_nn == pytest.approx(1.0, abs=1e-12)
            assert min(m.e_pp, m.e_pn, m.e_np, m.e_nn) >= 0


class TestNewmanR:
    def test_bridged_triangles(self, bridged_triangles):
        r = newman_r(build_mixing_matrix(bridged_triangles, UNIT))
        assert r == pytest.approx(5 / 7, abs=1e-12)
        assert round(r, 2) == 0.71

    def test_perfect_assortativity(self):
        assert newman_r(build_mixing_matrix(network((3, 0), (0, 3)), UNIT)) == 1.0

    def test_mixed_pair(self):
        assert newman_r(build_mixing_matrix(network((1, 1)), UNIT)) == -1.0

    def test_independent_mixing_is_zero(self):
        assert newman_r(MixingMatrix(0.25, 0.25, 0.25, 0.25)) == 0.0

    def test_one_label_is_degenerate(self):
        with pytest.raises(DegenerateMixing):
            newman_r(build_mixing_matrix(network((0, 2), (0, 3)), UNIT))


class TestAlphaFromIndividuals:
    def test_bridged_triangles(self, bridged_triangles):
        res = alpha_from_individuals(bridged_triangles)
        assert res.p_risk == pytest.approx(8 / 9, abs=1e-15)
        assert res.q_risk == pytest.approx(1 / 9, abs=1e-15)
        assert res.alpha == pytest.approx(7 / 9, abs=1e-12)
        assert round(res.alpha, 2) == 0.78

    def test_cross_pairs(self, cross_pairs):
        res = alpha_from_individuals(cross_pairs)
        assert res.alpha == pytest.approx(-1 / 3, abs=1e-12)
        assert round(res.alpha, 2) == -0.33

    def test_mixed_pair(self):
        res = alpha_from_individuals(network((1, 1)))
        assert (res.p_risk, res.q_risk, res.alpha) == (0.0, 1.0, -1.0)

    @pytest.mark.parametrize("comps", [[(0, 2)], [(3, 0), (2, 0)]])
    def test_one_sided(self, comps):
        with pytest.raises(OneSidedPopulation):
            alpha_from_individuals(network(*comps))


class TestAlphaFromCliqueCounts:
    def test_matches_individuals(self):
        net = network((2, 0), (1, 1))
        table = CliqueCountTable({(2, 0): 1, (1, 1): 1}, k_star=2)
        got = alpha_from_clique_counts(table, 3, 1)
        assert got == pytest.approx(alpha_from_individuals(net).alpha, abs=1e-12)
        d = oracles.directed_from_cliques([(P, P), (P, N)])
        assert got == pytest.approx(float(oracles.alpha(d)[0]), abs=1e-15)

    def test_one_sided(self):
        with pytest.raises(OneSidedPopulation):
            alpha_from_clique_counts(CliqueCountTable({(0, 2): 5}, 2), 0, 10)

    @pytest.mark.parametrize("k", [1, 2, 17])
    def test_mixed_pairs(self, k):
        assert alpha_from_clique_counts(CliqueCountTable({(1, 1): k}, 2), k, k) == -1.0

    def test_marginal_mismatch(self):
        with pytest.raises(InconsistentTable):
            alpha_from_clique_counts(CliqueCountTable({(1, 1): 2}, 2), 3, 2)

    @pytest.mark.parametrize("entry, k_star", [((1, 0), 2), ((2, 2), 3)])
    def test_size_outside_range(self, entry, k_star):
        i, j = entry
        with pytest.raises(InconsistentTable):
            alpha_from_clique_counts(CliqueCountTable({entry: 1, (1, 1): 1}, k_star), i + 1, j + 1)

    def test_table_from_network(self):
        net = network((2, 1), (2, 1), (0, 4), (1, 1))
        table = clique_count_table(net)
        assert table.n == {(2, 1): 2, (0, 4): 1, (1, 1): 1}
        assert table.k_star == 4
        assert table.num_cliques == 4
        assert (table.n_positive, table.n_negative) == (net.n_positive, net.n_negative)


class TestEquivalenceReport:
    def test_bridged_triangles(self, bridged_triangles):
        rep = equivalence_report(bridged_triangles, [1, 2, 10])
        assert rep.max_gap < 1e-10
        assert all(r == pytest.approx(7 / 9, abs=1e-12) for r in rep.r_inverse_degree)
        assert rep.certified
        assert not rep.corollary_applies and rep.unit_gap is None

    def test_uniform_three_author_papers(self):
        net = build_network(generate(SynthConfig(100, size=3, positive_fraction=0.4, seed=11)))[0]
        rep = equivalence_report(net)
        assert rep.corollary_applies
        assert rep.unit_gap < 1e-10 and rep.corollary_holds

    def test_mixed_pair(self):
        rep = equivalence_report(network((1, 1)), [5])
        assert rep.r_inverse_degree == (-1.0,) and rep.alpha == -1.0

    def test_one_sided_propagates(self):
        with pytest.raises(OneSidedPopulation):
            equivalence_report(network((2, 0)))

    def test_needs_c(self):
        with pytest.raises(ValueError):
            equivalence_report(network((1, 1)), [])


class TestComputeMetrics:
    def test_defined(self, bridged_triangles):
        rep = compute_metrics(bridged_triangles)
        assert rep.defined
        assert rep.alpha == pytest.approx(rep.p_risk - rep.q_risk, abs=1e-12)
        assert rep.r_unit == pytest.approx(5 / 7, abs=1e-12)
        assert rep.equivalence_gap < 1e-10

    def test_one_label_is_undefined_not_nan(self):
        rep = compute_metrics(network((0, 2), (0, 2)))
        assert not rep.defined
        for v in (rep.alpha, rep.p_risk, rep.q_risk, rep.r_unit, rep.r_inverse_degree, rep.equivalence_gap):
            assert isinstance(v, Undefined)
            assert v.reason
