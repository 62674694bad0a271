import random

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fockgraph.edges import (
    EdgeOpKind,
    EdgeOpSpec,
    add_edges,
    ae_apply_row,
    ae_raw,
    de_apply_row,
    de_raw,
    delete_edges,
)
from fockgraph.errors import ExclusionError, InsufficientEdgesError, LoopError
from fockgraph.fock import Mode, RowState
from fockgraph.graph import Orientation, from_adjacency, to_adjacency, validate
from fockgraph.oracle import OracleGraph, factorial_ratio, oracle_step
from fockgraph.script import Command

from helpers import COMBOS, PAW, random_matrix

F, B = Mode.FERMIONIC, Mode.BOSONIC
U, D = Orientation.UNDIRECTED, Orientation.DIRECTED


def r(*occ):
    return RowState(occ)


class TestRowOperators:
    def test_de_paw(self):
        assert de_apply_row(r(0, 1, 1, 1), 1, 1) == r(0, 0, 1, 1)

    def test_de_all_three(self):
        assert de_apply_row(r(0, 3, 0, 0), 1, 3) == r(0, 0, 0, 0)

    def test_de_insufficient(self):
        with pytest.raises(InsufficientEdgesError):
            de_apply_row(r(0, 1, 0, 0), 1, 2)

    def test_ae_fermion(self):
        assert ae_apply_row(r(0, 0, 1, 1), 1, 1, F) == r(0, 1, 1, 1)

    def test_ae_boson(self):
        assert ae_apply_row(r(0, 2, 0, 0), 1, 3, B) == r(0, 5, 0, 0)

    def test_ae_exclusion(self):
        with pytest.raises(ExclusionError):
            ae_apply_row(r(0, 1, 0, 0), 1, 1, F)

    def test_prefactor_accounting(self):
        for k in range(9):
            for d in range(1, 9):
                up, factor = ae_raw(r(k, 0), 0, d, B)
                assert factor == up.amplitude.squared == factorial_ratio(k, d, kind="create")
                if d <= k:
                    down, factor = de_raw(r(k, 0), 0, d)
                    assert factor == down.amplitude.squared == factorial_ratio(k, d)

    @given(st.lists(st.integers(0, 8), min_size=1, max_size=6), st.data())
    def test_unit_amplitude(self, occ, data):
        j = data.draw(st.integers(0, len(occ) - 1))
        d = data.draw(st.integers(1, 8))
        s = RowState(tuple(occ))
        assert ae_apply_row(s, j, d, B).amplitude.squared == 1
        if d <= occ[j]:
            assert de_apply_row(s, j, d).amplitude.squared == 1


class TestGraphEdges:
    def test_delete_paw(self, paw):
        g = delete_edges(paw, 0, 1, 1)
        assert to_adjacency(g).tolist() == [[0, 0, 1, 1], [0, 0, 0, 0], [1, 0, 0, 1], [1, 0, 1, 0]]

    def test_delete_bosonic_partial(self):
        g = from_adjacency([[0, 3], [3, 0]], B, U)
        assert to_adjacency(delete_edges(g, 0, 1, 2)).tolist() == [[0, 1], [1, 0]]

    def test_delete_missing_edge(self, paw):
        with pytest.raises(InsufficientEdgesError):
            delete_edges(paw, paw.index("2"), paw.index("3"), 1)

    def test_add_paw(self, paw):
        g = add_edges(paw, paw.index("2"), paw.index("3"), 1)
        expected = np.array(PAW)
        expected[1, 2] = expected[2, 1] = 1
        assert np.array_equal(to_adjacency(g), expected)

    def test_add_bosonic_five(self):
        g = add_edges(from_adjacency([[0, 0], [0, 0]], B, U), 0, 1, 5)
        assert to_adjacency(g).tolist() == [[0, 5], [5, 0]]

    def test_add_existing_simple_edge(self, paw):
        with pytest.raises(ExclusionError):
            add_edges(paw, 0, 1, 1)

    def test_loop(self, paw):
        with pytest.raises(LoopError):
            add_edges(paw, 2, 2, 1)
        with pytest.raises(LoopError):
            delete_edges(paw, 2, 2, 1)

    def test_directed_touches_source_row_only(self):
        g = from_adjacency([[0, 0], [0, 0]], B, D)
        g = add_edges(g, 0, 1, 2)
        assert to_adjacency(g).tolist() == [[0, 2], [0, 0]]
        with pytest.raises(InsufficientEdgesError):
            delete_edges(g, 1, 0, 1)

    def test_no_partial_mutation(self, paw):
        before = to_adjacency(paw).copy()
        with pytest.raises(ExclusionError):
            add_edges(paw, 0, 1, 1)
        assert np.array_equal(to_adjacency(paw), before)

    def test_edge_op_spec_binds_k_late(self):
        op = EdgeOpSpec(0, 1, 2, EdgeOpKind.ANNIHILATE)
        g3 = from_adjacency([[0, 3], [3, 0]], B, U)
        g5 = from_adjacency([[0, 5], [5, 0]], B, U)
        assert to_adjacency(op(g3))[0, 1] == 1
        assert to_adjacency(op(g5))[0, 1] == 3
        assert to_adjacency(EdgeOpSpec(0, 1, 2, EdgeOpKind.CREATE)(g3))[0, 1] == 5
        with pytest.raises(LoopError):
            EdgeOpSpec(1, 1, 1, EdgeOpKind.CREATE)


def test_add_delete_inverse_and_oracle_randomized():
    rng = random.Random(11)
    for _ in range(400):
        mode, orient = rng.choice(COMBOS)
        n = rng.randint(2, 8)
        m = random_matrix(rng, n, mode, orient)
        g = from_adjacency(m, mode, orient)
        i, j = rng.sample(range(n), 2)
        d = rng.randint(1, 3)
        o = OracleGraph.from_matrix(m, mode is F, orient is D, g.labels)
        cmd = Command("ADDE", (g.labels[i], g.labels[j], d))
        try:
            added = add_edges(g, i, j, d)
        except ExclusionError:
            with pytest.raises(ExclusionError):
                oracle_step(o, cmd)
            continue
        assert np.array_equal(to_adjacency(added), oracle_step(o, cmd).matrix)
        assert validate(added) == []
        assert delete_edges(added, i, j, d) == g
        if m[i, j] >= d and (orient is D or m[j, i] >= d):
            assert add_edges(delete_edges(g, i, j, d), i, j, d) == g


@settings(max_examples=150)
@given(st.sampled_from(COMBOS), st.integers(4, 8), st.randoms(use_true_random=False), st.data())
def test_disjoint_pairs_commute(combo, n, rnd, data):
    mode, orient = combo
    g = from_adjacency(random_matrix(rnd, n, mode, orient), mode, orient)
    i, j, p, q = rnd.sample(range(n), 4)
    ops = [add_edges, delete_edges]
    f1, f2 = data.draw(st.sampled_from(ops)), data.draw(st.sampled_from(ops))
    d1, d2 = data.draw(st.integers(1, 2)), data.draw(st.integers(1, 2))
    try:
        a = f2(f1(g, i, j, d1), p, q, d2)
    except (ExclusionError, InsufficientEdgesError):
        assume(False)
    assert a == f1(f2(g, p, q, d2), i, j, d1)
