import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import (
    bell_times_zero,
    block_state,
    brute_force_depth,
    ghz,
    haar_state,
    purity_by_partial_trace,
    random_qubit_unitary,
    random_set_partition,
    w_state,
)
from qbcharge.errors import BadSubset, NoEmbedding, PairNotOrthonormal, TooLarge
from qbcharge.entdepth import (
    exact_depth,
    max_pair_product,
    pair_product,
    reduced_purity,
    resource_depth,
    thm1_bound,
)
from qbcharge.metrics import charging_time
from qbcharge.schemes import (
    HybridSpec,
    ParallelSpec,
    SU2Spec,
    TridiagSpec,
    build_hybrid,
    build_parallel,
    build_su2,
    build_tridiag,
    build_tridiag3,
)

UP = np.array([0, 1], dtype=complex)
DOWN = np.array([1, 0], dtype=complex)


def product(*qubits):
    # qubits listed from qubit 0 upward
    v = np.ones(1, dtype=complex)
    for q in qubits:
        v = np.kron(q, v)
    return v


def apply_local(psi, unitaries):
    U = np.ones((1, 1))
    for u in unitaries:
        U = np.kron(u, U)
    return U @ psi


class TestThm1Bound:
    def test_examples(self):
        assert thm1_bound(7, 0.5) == 7
        assert thm1_bound(100, 1 / 8) == 34
        assert thm1_bound(100, 0.3) == 100
        assert thm1_bound(5, 0.0) == 1

    def test_clamped(self):
        assert thm1_bound(9, 0.7) == 9

    def test_float_noise_at_power_of_two(self):
        assert thm1_bound(100, 0.125 * (1 + 1e-14)) == 34
        assert thm1_bound(100, 0.125 * (1 - 1e-14)) == 34

    def test_tiny_product(self):
        assert thm1_bound(4, 2.0**-10) == 1

    @given(n=st.integers(1, 300), p=st.floats(0, 0.5), q=st.floats(0, 0.5))
    def test_monotone_in_product(self, n, p, q):
        lo, hi = sorted((p, q))
        assert 1 <= thm1_bound(n, lo) <= thm1_bound(n, hi) <= n


class TestPairProduct:
    def test_ghz(self):
        assert pair_product(ghz(5)).product == pytest.approx(0.5)

    def test_w3(self):
        assert pair_product(w_state(3)).product == 0

    def test_ladder_amplitudes(self):
        pc = pair_product(np.array([0.6, 0, 0.8j]))
        assert pc.p0 == 0.6 and pc.pbar == 0.8j

    def test_half_time_su2(self):
        s = build_su2(SU2Spec(3, 1, 0))
        pc = pair_product(s.coefficients(math.pi / 2))
        assert abs(pc.p0) == pytest.approx(2**-1.5, abs=1e-15)
        assert abs(pc.pbar) == pytest.approx(2**-1.5, abs=1e-15)

    def test_custom_pair(self):
        plus = np.array([1, 1]) / math.sqrt(2)
        minus = np.array([1, -1]) / math.sqrt(2)
        psi = (product(plus, plus) + product(minus, minus)) / math.sqrt(2)
        pc = pair_product(psi, 2, [(plus, minus), (plus, minus)])
        assert pc.product == pytest.approx(0.5)

    def test_not_orthonormal(self):
        plus = np.array([1, 1]) / math.sqrt(2)
        with pytest.raises(PairNotOrthonormal):
            pair_product(ghz(2), 2, [(DOWN, plus), (DOWN, UP)])
        with pytest.raises(PairNotOrthonormal):
            pair_product(ghz(2), 2, [(DOWN, UP)])

    @settings(max_examples=50, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 7))
    def test_bound_never_exceeds_exact_depth(self, seed, n):
        rng = np.random.default_rng(seed)
        psi = block_state(rng, n, random_set_partition(rng, n))
        # rotate the pair along with the state so it stays non-trivial
        us = [random_qubit_unitary(rng) for _ in range(n)]
        pair = [(u @ DOWN, u @ UP) for u in us]
        pc = pair_product(psi, n, pair)
        assert thm1_bound(n, pc.product) <= exact_depth(psi).depth


class TestMaxPairProduct:
    def test_su2_d3(self):
        c = max_pair_product(build_su2(SU2Spec(3, 1, 0), 100))
        assert c.bound == 34
        assert c.product == pytest.approx(1 / 8, abs=1e-12)
        assert c.t_star == pytest.approx(math.pi / 2, abs=1e-6)

    def test_tridiag3_7(self):
        assert max_pair_product(build_tridiag3(7, 1, 100)).bound == 100

    @pytest.mark.parametrize("n", [2, 5, 12])
    def test_parallel(self, n):
        c = max_pair_product(build_parallel(ParallelSpec(n, (0,) * n)))
        assert c.bound == 1
        assert c.product == pytest.approx(2.0**-n, rel=1e-9)

    def test_refinement_beats_coarse_grid(self):
        s = build_su2(SU2Spec(3, 1, 0), 100)
        assert max_pair_product(s, grid=6).product == pytest.approx(1 / 8, abs=1e-10)


class TestPurity:
    def test_product(self, rng):
        psi = product(*(haar_state(rng, 1) for _ in range(4)))
        for s in ([0], [1, 3], [0, 1, 2]):
            assert reduced_purity(psi, s) == pytest.approx(1, abs=1e-12)

    def test_bell(self):
        bell = np.array([1, 0, 0, 1]) / math.sqrt(2)
        assert reduced_purity(bell, [0]) == pytest.approx(0.5)

    def test_ghz3(self):
        assert reduced_purity(ghz(3), [0, 1]) == pytest.approx(0.5)

    def test_bad_subsets(self):
        with pytest.raises(BadSubset):
            reduced_purity(ghz(3), [])
        with pytest.raises(BadSubset):
            reduced_purity(ghz(3), [0, 1, 2])
        with pytest.raises(BadSubset):
            reduced_purity(ghz(3), [3])

    def test_too_large(self):
        psi = np.zeros(2**15)
        psi[0] = 1
        with pytest.raises(TooLarge):
            reduced_purity(psi, [0])

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(2, 6))
    def test_matches_partial_trace(self, seed, n):
        rng = np.random.default_rng(seed)
        psi = haar_state(rng, n)
        k = int(rng.integers(1, n))
        subset = sorted(rng.choice(n, size=k, replace=False).tolist())
        assert reduced_purity(psi, subset) == pytest.approx(purity_by_partial_trace(psi, subset), abs=1e-12)


class TestExactDepth:
    def test_all_down(self):
        r = exact_depth(product(DOWN, DOWN, DOWN))
        assert (r.depth, r.separability) == (1, 3)
        assert r.witness == ((0,), (1,), (2,))

    def test_bell_times_zero(self):
        r = exact_depth(bell_times_zero())
        assert (r.depth, r.separability) == (2, 2)
        assert r.witness == ((0, 1), (2,))

    def test_w3(self):
        r = exact_depth(w_state(3))
        assert (r.depth, r.separability) == (3, 1)

    def test_ghz4(self):
        r = exact_depth(ghz(4))
        assert (r.depth, r.separability) == (4, 1)
        assert r.witness == ((0, 1, 2, 3),)

    def test_single_qubit(self):
        assert exact_depth(np.array([0.6, 0.8])).depth == 1

    def test_interleaved_blocks(self, rng):
        psi = block_state(rng, 5, [[0, 3], [1, 2, 4]])
        r = exact_depth(psi)
        assert (r.depth, r.separability) == (3, 2)
        assert r.witness == ((0, 3), (1, 2, 4))

    @pytest.mark.parametrize("n", range(1, 7))
    def test_matches_brute_force(self, rng, n):
        for _ in range(8):
            blocks = random_set_partition(rng, n)
            psi = block_state(rng, n, blocks)
            r = exact_depth(psi)
            assert (r.depth, r.separability) == brute_force_depth(psi)
            assert r.depth == max(len(b) for b in blocks)
            assert r.separability == len(blocks)
            # the witness is a partition into pure blocks of the reported depth
            covered = sorted(q for b in r.witness for q in b)
            assert covered == list(range(n))
            assert max(len(b) for b in r.witness) == r.depth
            for b in r.witness:
                if len(b) < n:
                    assert reduced_purity(psi, b) >= 1 - 1e-9

    def test_haar_states_fully_entangled(self, rng):
        for n in range(2, 8):
            r = exact_depth(haar_state(rng, n))
            assert (r.depth, r.separability) == (n, 1)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 7))
    def test_local_unitary_invariance(self, seed, n):
        rng = np.random.default_rng(seed)
        psi = block_state(rng, n, random_set_partition(rng, n))
        before = exact_depth(psi)
        after = exact_depth(apply_local(psi, [random_qubit_unitary(rng) for _ in range(n)]))
        assert (before.depth, before.separability) == (after.depth, after.separability)

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(0, 2**32 - 1), n=st.integers(1, 8))
    def test_separability_inequality(self, seed, n):
        rng = np.random.default_rng(seed)
        r = exact_depth(block_state(rng, n, random_set_partition(rng, n)))
        assert r.separability * r.depth >= n

    def test_too_large(self):
        psi = np.zeros(2**15)
        psi[0] = 1
        with pytest.raises(TooLarge):
            exact_depth(psi)


class TestResourceDepth:
    def test_lb_mode(self):
        assert resource_depth(build_su2(SU2Spec(3, 1, 0), 100)) == 34

    def test_exact_hybrid(self):
        assert resource_depth(build_hybrid(HybridSpec(6, 2)), grid=17, mode="exact") == 3

    def test_exact_parallel(self):
        assert resource_depth(build_parallel(ParallelSpec(4, (0, 1, 0, 2))), grid=9, mode="exact") == 1

    def test_exact_su2_embedded(self):
        # SU(2) on 6 qubits with d=3 is the block-flip state with blocks of 2
        s = build_su2(SU2Spec(3, 1, 0), 6)
        assert resource_depth(s, grid=9, mode="exact") == 2

    def test_no_embedding(self):
        s = build_tridiag(TridiagSpec((1.0, 2.0, 1.0)), 40)
        with pytest.raises(NoEmbedding):
            resource_depth(s, mode="exact")

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            resource_depth(build_tridiag3(3, 1), mode="other")

    def test_lb_below_exact(self):
        for s in (build_hybrid(HybridSpec(7, 3)), build_tridiag3(7, 1, 8), build_su2(SU2Spec(2, 1, 0), 5)):
            T = charging_time(s)
            assert resource_depth(s, T=T) <= resource_depth(s, grid=9, mode="exact", T=T)
