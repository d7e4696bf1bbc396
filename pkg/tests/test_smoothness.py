"""Smoothness measures, scoring variants, and the selection objective."""

import itertools
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import feature_matrices, hypergraphs
from hyperinfer import (
    DomainError,
    SmoothnessVariant,
    SmoothnessVector,
    build_hypergraph,
    edge_smoothness_ev,
    edge_smoothness_v,
    inference_objective,
    pairwise_sq_dists,
    smoothness_ev,
    smoothness_v,
    variant_edge_smoothness,
    weighted_smoothness_ev,
)

TWO_POINTS = np.array([[1.0], [-1.0]])
THREE_POINTS = np.array([[0.0], [1.0], [3.0]])


class TestEdgeMeasures:
    def test_ev_of_symmetric_pair_with_central_edge(self):
        assert edge_smoothness_ev([0, 1], TWO_POINTS, [0.0]) == 2.0

    def test_v_of_symmetric_pair(self):
        assert edge_smoothness_v([0, 1], TWO_POINTS) == 4.0

    def test_v_takes_the_widest_pair(self):
        assert edge_smoothness_v([0, 1, 2], THREE_POINTS) == 9.0

    def test_ev_matches_loop_oracle(self):
        rng = np.random.default_rng(11)
        x = rng.normal(size=(6, 3))
        xe = rng.normal(size=3)
        edge = [0, 2, 5]
        expected = sum(np.sum((x[v] - xe) ** 2) for v in edge)
        assert math.isclose(edge_smoothness_ev(edge, x, xe), expected)

    def test_v_matches_loop_oracle(self):
        rng = np.random.default_rng(12)
        x = rng.normal(size=(7, 4))
        edge = [1, 3, 4, 6]
        expected = max(
            np.sum((x[a] - x[b]) ** 2) for a, b in itertools.combinations(edge, 2)
        )
        assert math.isclose(edge_smoothness_v(edge, x), expected)

    def test_edge_indexing_outside_matrix_rejected(self):
        with pytest.raises(DomainError, match="outside"):
            edge_smoothness_v([0, 9], TWO_POINTS)

    def test_dimension_mismatch_rejected(self):
        with pytest.raises(DomainError, match="dimension"):
            edge_smoothness_ev([0, 1], TWO_POINTS, [0.0, 0.0])


class TestHypergraphTotals:
    def test_totals_are_sums_of_per_edge_values(self):
        h = build_hypergraph(4, [[0, 1], [1, 2, 3]])
        rng = np.random.default_rng(3)
        x = rng.normal(size=(4, 2))
        xe = rng.normal(size=(2, 2))
        total, vec = smoothness_ev(h, x, xe)
        assert vec.kind == "ev"
        assert vec.values.shape == (2,)
        assert math.isclose(total, vec.values.sum())
        expected = [edge_smoothness_ev(e, x, xe[i]) for i, e in enumerate(h.edges)]
        assert np.allclose(vec.values, expected)

        total_v, vec_v = smoothness_v(h, x)
        assert vec_v.kind == "v"
        assert math.isclose(total_v, vec_v.values.sum())
        assert np.allclose(vec_v.values, [edge_smoothness_v(e, x) for e in h.edges])

    def test_edge_feature_row_count_checked(self):
        h = build_hypergraph(3, [[0, 1]])
        x = np.zeros((3, 2))
        with pytest.raises(DomainError, match="edge feature rows"):
            smoothness_ev(h, x, np.zeros((2, 2)))

    def test_ev_can_fall_below_v_when_sums_are_squared(self):
        # The centred pair shows why: ev = 1 + 1 = 2 while v = 4. Any
        # guaranteed ordering between the two measures needs unsquared norms,
        # which TestUnsquaredOrdering exercises.
        h = build_hypergraph(2, [[0, 1]])
        ev_total, _ = smoothness_ev(h, TWO_POINTS, np.array([[0.0]]))
        v_total, _ = smoothness_v(h, TWO_POINTS)
        assert ev_total == 2.0
        assert v_total == 4.0
        assert ev_total < v_total


class TestUnsquaredOrdering:
    @given(feature_matrices(max_rows=6, max_dim=3), st.data())
    def test_summed_distances_dominate_widest_pair(self, x, data):
        if x.shape[0] < 2:
            x = np.vstack([x, x + 1.0])
        k = data.draw(st.integers(2, x.shape[0]))
        edge = sorted(
            data.draw(
                st.frozensets(st.integers(0, x.shape[0] - 1), min_size=k, max_size=k)
            )
        )
        xe = np.array(
            data.draw(
                st.lists(
                    st.floats(-50.0, 50.0, allow_nan=False, width=32),
                    min_size=x.shape[1],
                    max_size=x.shape[1],
                )
            )
        )
        summed = sum(np.linalg.norm(x[v] - xe) for v in edge)
        widest = max(
            np.linalg.norm(x[a] - x[b]) for a, b in itertools.combinations(edge, 2)
        )
        assert summed >= widest - 1e-9 * max(1.0, widest)


class TestVariants:
    def test_mean_variant_averages_all_pairs(self):
        got = variant_edge_smoothness([0, 1, 2], THREE_POINTS, SmoothnessVariant("mean"))
        assert math.isclose(got, 14.0 / 3.0)

    def test_min_variant_takes_tightest_pair(self):
        got = variant_edge_smoothness([0, 1, 2], THREE_POINTS, SmoothnessVariant("min"))
        assert got == 1.0

    def test_two_node_edge_is_variant_independent(self):
        rng = np.random.default_rng(5)
        x = rng.normal(size=(4, 3))
        reference = variant_edge_smoothness([1, 3], x, SmoothnessVariant("max"))
        for variant in [
            SmoothnessVariant("mean"),
            SmoothnessVariant("min"),
            SmoothnessVariant("random", seed=99),
        ]:
            assert variant_edge_smoothness([1, 3], x, variant) == reference

    def test_random_variant_is_reproducible(self):
        rng = np.random.default_rng(6)
        x = rng.normal(size=(8, 2))
        variant = SmoothnessVariant("random", seed=21)
        first = variant_edge_smoothness([0, 2, 5, 7], x, variant)
        second = variant_edge_smoothness([0, 2, 5, 7], x, variant)
        assert first == second

    def test_random_variant_returns_an_actual_pair_distance(self):
        rng = np.random.default_rng(8)
        x = rng.normal(size=(6, 2))
        edge = [0, 1, 4, 5]
        pairs = {
            float(np.sum((x[a] - x[b]) ** 2))
            for a, b in itertools.combinations(edge, 2)
        }
        got = variant_edge_smoothness(edge, x, SmoothnessVariant("random", seed=3))
        assert got in pairs

    def test_random_variant_requires_seed(self):
        with pytest.raises(DomainError, match="seed"):
            SmoothnessVariant("random")

    def test_unknown_variant_rejected(self):
        with pytest.raises(DomainError, match="variant"):
            SmoothnessVariant("median")

    @given(hypergraphs(), st.integers(0, 2**20))
    def test_min_mean_random_bounded_by_extremes(self, h, seed):
        rng = np.random.default_rng(seed)
        x = rng.normal(size=(h.n, 3))
        for edge in h.edges:
            lo = variant_edge_smoothness(edge, x, SmoothnessVariant("min"))
            hi = variant_edge_smoothness(edge, x, SmoothnessVariant("max"))
            mean = variant_edge_smoothness(edge, x, SmoothnessVariant("mean"))
            rand = variant_edge_smoothness(
                edge, x, SmoothnessVariant("random", seed=seed)
            )
            assert lo <= mean <= hi
            assert lo <= rand <= hi


class TestWeightedSmoothness:
    def test_halving_the_weight_halves_the_value(self):
        h = build_hypergraph(2, [[0, 1]])
        got = weighted_smoothness_ev([0.5], h, TWO_POINTS, np.array([[0.0]]))
        assert got == 1.0

    def test_weight_count_checked(self):
        h = build_hypergraph(2, [[0, 1]])
        with pytest.raises(DomainError, match="weights"):
            weighted_smoothness_ev([0.5, 0.5], h, TWO_POINTS, np.array([[0.0]]))

    @pytest.mark.parametrize("bad", [-0.1, 1.1])
    def test_weights_outside_unit_interval_rejected(self, bad):
        h = build_hypergraph(2, [[0, 1]])
        with pytest.raises(DomainError, match="lie in"):
            weighted_smoothness_ev([bad], h, TWO_POINTS, np.array([[0.0]]))


class TestObjective:
    def test_zero_score_full_weight(self):
        s = SmoothnessVector(values=np.array([0.0]), kind="v")
        assert inference_objective([1.0], s) == 1.0

    def test_half_weight_against_unit_score(self):
        s = SmoothnessVector(values=np.array([1.0]), kind="v")
        got = inference_objective([0.5], s)
        assert math.isclose(got, 1.0 + math.log(2.0))
        assert math.isclose(got, 1.693147, abs_tol=5e-7)

    def test_zero_weight_rejected(self):
        s = SmoothnessVector(values=np.array([1.0]), kind="v")
        with pytest.raises(DomainError, match="positive"):
            inference_objective([0.0], s)

    def test_weight_above_one_rejected(self):
        s = SmoothnessVector(values=np.array([1.0]), kind="v")
        with pytest.raises(DomainError, match=r"\(0, 1\]"):
            inference_objective([1.5], s)

    def test_ev_vector_rejected(self):
        s = SmoothnessVector(values=np.array([1.0]), kind="ev")
        with pytest.raises(DomainError, match="'v'"):
            inference_objective([0.5], s)

    @given(
        st.floats(0.0, 50.0, allow_nan=False),
        st.floats(0.02, 0.98, allow_nan=False),
    )
    def test_second_difference_is_positive(self, score, w):
        # Convexity in each coordinate: the centred second difference of a
        # strictly convex function is strictly positive.
        s = SmoothnessVector(values=np.array([score]), kind="v")
        eps = 0.01
        lo = inference_objective([w - eps], s)
        mid = inference_objective([w], s)
        hi = inference_objective([w + eps], s)
        assert (hi - 2.0 * mid + lo) > 0.0


class TestPairwiseDistances:
    def test_matches_brute_force(self):
        rng = np.random.default_rng(17)
        x = rng.normal(size=(9, 4))
        d = pairwise_sq_dists(x)
        for a in range(9):
            for b in range(9):
                assert math.isclose(
                    d[a, b], float(np.sum((x[a] - x[b]) ** 2)), abs_tol=1e-9
                )

    @given(feature_matrices())
    def test_symmetric_nonnegative_zero_diagonal(self, x):
        d = pairwise_sq_dists(x)
        assert np.allclose(d, d.T)
        assert np.all(d >= 0.0)
        assert np.all(np.diagonal(d) == 0.0)
