import json

import numpy as np
import pytest

from conftest import GOLDEN
from oracles import ref_initial_sbox
from tspsbox.chaos import ChaosParams, ChaosStream
from tspsbox.pipeline import (
    LAST_POSITIONS,
    MIDDLE_POSITIONS,
    IterationCapError,
    SubGraph,
    apply_tour,
    assign_weights,
    decompose_linear,
    final_pass,
    gen_initial_sbox,
    generate_sbox,
    is_permutation,
    middle_pass,
)
from tspsbox.sboxio import read_grid
from tspsbox.tsp import solve_tsp

P = ChaosParams(0.3, 0.499)


def burned(params=P):
    return ChaosStream(params).burn_in()


def test_initial_sbox_matches_reference_script():
    s = gen_initial_sbox(burned())
    ref, _ = ref_initial_sbox(0.3, 0.499)
    assert s.tolist() == ref
    assert s.tolist() == read_grid(GOLDEN / "initial_x0_0.3_p_0.499.txt").tolist()
    assert is_permutation(s)


def test_initial_sbox_is_deterministic():
    assert np.array_equal(gen_initial_sbox(burned()), gen_initial_sbox(burned()))


def test_initial_sbox_iteration_cap():
    # a stuck trajectory: x = 0.5 - 1e-12 with p = 0.5 - 1e-12 hits x == p and repairs to itself
    v = 0.5 - 1e-12
    stream = ChaosStream(ChaosParams(v, v))
    with pytest.raises(IterationCapError):
        gen_initial_sbox(stream, max_draws=5000)
    stream = ChaosStream(ChaosParams(0.3, 0.499))
    with pytest.raises(IterationCapError):
        gen_initial_sbox(stream, max_draws=100)


def test_decompose_linear(identity_sbox):
    gs = decompose_linear(identity_sbox)
    assert len(gs) == 32
    assert gs[0].positions == tuple(range(8))
    assert gs[31].positions == tuple(range(248, 256))
    allpos = sorted(p for g in gs for p in g.positions)
    assert allpos == list(range(256))
    assert all(not g.weights.any() for g in gs)


def test_assign_weights_order():
    s = burned()
    probe = ChaosStream(P).burn_in()
    g = assign_weights(s, SubGraph.from_sbox(np.arange(256), range(8)))
    w = g.weights
    assert s.n - 1000 == 28
    assert np.array_equal(w, w.T) and not np.diag(w).any()
    draws = [probe.next_weight() for _ in range(28)]
    assert w[0, 1] == draws[0] and w[6, 7] == draws[-1]
    assert w[np.triu_indices(8, 1)].tolist() == draws


def test_apply_tour_identity_and_window(rng):
    s = rng.permutation(256)
    g = SubGraph.from_sbox(s, range(40, 48))
    assert np.array_equal(apply_tour(s, g, tuple(range(8))), s)
    out = apply_tour(s, g, (0, 5, 3, 1, 7, 2, 4, 6))
    assert sorted(out[40:48]) == sorted(s[40:48])
    assert np.array_equal(np.delete(out, range(40, 48)), np.delete(s, range(40, 48)))
    assert out[41] == s[45] and out[44] == s[47]
    assert is_permutation(out)


@pytest.mark.parametrize("pass_fn, window", [(middle_pass, MIDDLE_POSITIONS), (final_pass, LAST_POSITIONS)])
def test_window_passes(pass_fn, window, rng):
    s = rng.permutation(256)
    stream = burned()
    out = pass_fn(s, stream)
    assert stream.n == 1028
    changed = np.flatnonzero(out != s)
    assert set(changed) <= set(window)
    assert is_permutation(out)


def test_middle_window_is_central():
    assert MIDDLE_POSITIONS == tuple(range(124, 132))
    assert 124 - 0 == 255 - 131


def test_generate_golden():
    s, trace = generate_sbox(P)
    assert s.tolist() == read_grid(GOLDEN / "sbox_x0_0.3_p_0.499.txt").tolist()
    assert is_permutation(s)
    assert len(trace.records) == 34


def test_trace_accounting():
    s, trace = generate_sbox(P)
    _, init_draws = ref_initial_sbox(0.3, 0.499)
    assert trace.initial_draws == init_draws
    start = 1000 + init_draws
    for k, rec in enumerate(trace.records):
        assert rec.draws_before == start + 28 * k
        assert rec.tour == solve_tsp(rec.weights)
    labels = [r.label for r in trace.records]
    assert labels[:32] == [f"linear-{k}" for k in range(32)]
    assert labels[32:] == ["middle", "last"]
    assert trace.records[32].positions == MIDDLE_POSITIONS
    assert trace.records[33].positions == LAST_POSITIONS


def test_trace_closure_and_locality():
    _, trace = generate_sbox(ChaosParams(0.71, 0.23))
    prev = trace.initial_sbox
    for rec in trace.records:
        cur = rec.sbox_after
        assert is_permutation(cur)
        assert set(np.flatnonzero(cur != prev)) <= set(rec.positions)
        assert tuple(prev[list(rec.positions)]) == rec.nodes
        prev = cur
    assert np.array_equal(prev, trace.final_sbox)


def test_trace_json():
    s, trace = generate_sbox(P)
    d = json.loads(trace.to_json())
    assert d["params"]["x0_hex"] == "3fd3333333333333"
    assert len(d["subgraphs"]) == 34
    assert "sbox_after" not in d["subgraphs"][0] and "initial_sbox" not in d
    assert d["final_sbox"] == s.tolist()
    dv = json.loads(trace.to_json(verbose=True))
    assert dv["initial_sbox"] == trace.initial_sbox.tolist()
    assert dv["subgraphs"][-1]["sbox_after"] == s.tolist()


def test_generate_from_hex_reproduces():
    s1, t1 = generate_sbox(P)
    s2, t2 = generate_sbox(ChaosParams.from_hex(P.x0_hex, P.p_hex))
    assert np.array_equal(s1, s2)
    assert t1.to_json(verbose=True) == t2.to_json(verbose=True)
