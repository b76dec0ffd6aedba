"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with `pytest tests/test_acceptance.py -v -s` to see the lines as they
complete.  Every tolerance is pinned here; exact means Fraction equality.
"""

import math
import time
from fractions import Fraction as F

from freeprob.chains import (
    mtr_transition_matrix,
    nt_transition_matrix,
    return_time_sum,
    stationary,
)
from freeprob.cumulants import (
    WeightKind,
    WeightSpec,
    boolean_from_moments,
    classical_from_moments,
    cumulants_via_lattice,
    free_from_moments,
    gaussian_free_cumulants,
    gaussian_shifted_sequence,
    moments_from_free,
    weighted_pairing_moment,
)
from freeprob.hopf import (
    LabeledTree,
    antipode_check,
    bf_coproduct,
    coassociativity_check,
    counit_check,
    enumerate_ordered_trees,
    hilbert_dimension,
    is_ordered,
    lr_coproduct,
    lr_product,
    tree_size,
)
from freeprob.partitions import count_connected_pairings
from freeprob.trees import (
    dyck_factorial,
    enumerate_dyck_words,
    enumerate_trees,
    mu_operator,
    s_via_trees,
    tree_factorial,
)
from freeprob.transforms import (
    G_eval,
    cf_eval,
    decomposition_residual,
    density_eval,
    f_trajectory,
    fid_test,
    formal_phi_ode_check,
    riccati_residual,
)

N = LabeledTree
TARGET = [1, 1, 4, 27, 248, 2830]

GRID25 = [complex(x, y) for x in (-2, -1, 0, 1, 2) for y in (0.6, 1.0, 1.6, 2.2, 3.0)]


class _Budget:
    def __init__(self, number: int, title: str, seconds: float):
        self.number = number
        self.title = title
        self.seconds = seconds

    def __enter__(self):
        self.start = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.start
        status = "PASS" if exc_type is None else "FAIL"
        print(f"[criterion {self.number:2d}] {status} {self.title} ({elapsed:.2f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"criterion {self.number} exceeded its {self.seconds}s budget: {elapsed:.2f}s"
            )
        return False


def test_criterion_01_sequence_triple_agreement():
    with _Budget(1, "triple agreement on 1,1,4,27,248,2830 (orders 2-12)", 10):
        fc = gaussian_free_cumulants(12)
        assert [fc[k] for k in range(2, 13, 2)] == TARGET
        assert [count_connected_pairings(k) for k in range(2, 13, 2)] == TARGET
        assert [s_via_trees(n) for n in range(0, 6)] == TARGET


def test_criterion_02_cumulant_oracle_equivalence():
    with _Budget(2, "series conversions equal lattice Moebius inversion, n <= 10", 60):
        def gauss(n):
            out = [F(1)]
            for k in range(1, n + 1):
                out.append(F(0) if k % 2 else out[-2] * (k - 1))
            return out

        sequences = [
            gauss(10),
            [F(math.comb(k, k // 2) - (math.comb(k, k // 2 - 1) if k >= 2 else 0))
             if k % 2 == 0 else F(0) for k in range(11)],
            [F(1)] * 11,
            [F(1), F(1, 2), F(1), F(2), F(9, 2), F(12), F(31), F(85), F(248), F(726), F(2110)],
            [F(1), F(0), F(2), F(1), F(7), F(-2), F(40), F(13), F(300), F(-5), F(2400)],
        ]
        series = {
            "classical": classical_from_moments,
            "free": free_from_moments,
            "boolean": boolean_from_moments,
        }
        for m in sequences:
            for flavour, convert in series.items():
                assert convert(m) == cumulants_via_lattice(m, flavour)


def test_criterion_03_gbm_and_bdj_identities():
    with _Budget(3, "GBM and BDJ weighted pairing sums match cumulant routes", 60):
        fc = [F(x) for x in gaussian_free_cumulants(10)]
        for s in (F(1, 3), F(1, 2), F(2)):
            m = moments_from_free([s * x for x in fc])
            for two_n in range(2, 11, 2):
                spec = WeightSpec(WeightKind.CC_POWER, s)
                assert weighted_pairing_moment(two_n, spec) == m[two_n]
        for b in (F(1, 4), F(1, 2), F(3, 4)):
            mixed = [F(0)] * 11
            for k in range(2, 11, 2):
                mixed[k] = b ** (k // 2) * fc[k]
            mixed[2] += 1 - b
            m = moments_from_free(mixed)
            for two_n in range(2, 11, 2):
                spec = WeightSpec(WeightKind.BDJ, b)
                assert weighted_pairing_moment(two_n, spec) == m[two_n]


def test_criterion_04_markov_chains():
    with _Budget(4, "stationary laws 1/w! and 1/t!, return sums s_{2n}, n <= 5", 30):
        s = gaussian_shifted_sequence(10)
        for n in range(1, 6):
            for matrix in (nt_transition_matrix(n), mtr_transition_matrix(n)):
                pi = stationary(matrix)
                for word, weight in pi.weights.items():
                    assert weight == F(1, dyck_factorial(word))
            assert sum(F(1, tree_factorial(t)) for t in enumerate_trees(n)) == 1
            for model in ("nt", "mtr"):
                assert return_time_sum(n, model).total == s[2 * n]


def test_criterion_05_hopf_laws_and_printed_examples():
    with _Budget(5, "Hopf laws on size <= 4 and printed coproduct examples", 60):
        assert coassociativity_check(4)
        assert counit_check(4)
        assert antipode_check(4)
        # closure and grading of the product on size <= 4
        for a in range(0, 4):
            for b in range(0, 5 - a):
                for s in enumerate_ordered_trees(a):
                    for t in enumerate_ordered_trees(b):
                        for term in lr_product(s, t):
                            assert is_ordered(term)
                            assert tree_size(term) == a + b
        # printed coproduct examples, term for term
        v = N(1)
        assert lr_coproduct(None) == {(None, None): 1}
        assert lr_coproduct(v) == {(None, v): 1, (v, None): 1}
        chain = N(1, N(2), None)
        assert lr_coproduct(chain) == {(None, chain): 1, (v, v): 1, (chain, None): 1}
        cherry = N(3, N(1), N(2))
        assert lr_coproduct(cherry) == {
            (None, cherry): 1,
            (v, N(2, N(1), None)): 1,
            (v, N(2, None, N(1))): 1,
            (N(1, None, N(2)), v): 1,
            (N(2, N(1), None), v): 1,
            (cherry, None): 1,
        }
        # printed charge-coproduct examples, including the coefficient 2
        right = N(1, None, N(2))
        assert bf_coproduct(right) == {(right, None): 1, (None, right): 1}
        left = N(1, N(2), None)
        assert bf_coproduct(left) == {(left, None): 1, (v, v): 2, (None, left): 1}
        zig = N(1, None, N(2, N(3), None))
        assert bf_coproduct(zig) == {
            (zig, None): 1,
            (v, N(1, None, N(2))): 1,
            (None, zig): 1,
        }
        assert [hilbert_dimension(n) for n in range(4)] == [1, 1, 4, 27]


def test_criterion_06_dyck_operator():
    with _Budget(6, "mu worked example and coefficient sums n+1 (n <= 5)", 10):
        assert mu_operator("UUDUDD") == {"UUDUDD": 1, "UUDDUD": 2, "UDUDUD": 1}
        for n in range(0, 6):
            for w in enumerate_dyck_words(n):
                assert sum(mu_operator(w).values()) == n + 1


def test_criterion_07_fid_headline_failures():
    with _Budget(7, "fid(9/10, 200) fails at ordinal 97; fid(1, 200) at 83", 600) as budget:
        report = fid_test(F(9, 10), 200)
        assert report.verdict == "FAIL" and report.ordinal == 97
        report_1 = fid_test(F(1), 200)
        assert report_1.verdict == "FAIL" and report_1.ordinal == 83
        print(
            f"    measured: c=9/10 -> {report.elapsed_seconds:.2f}s, "
            f"c=1 -> {report_1.elapsed_seconds:.2f}s"
        )


def test_criterion_08_fid_positivity():
    with _Budget(8, "fid(c, 120) passes for c in {-1,-3/4,-1/2,-1/4,0}", 600):
        for c in (F(-1), F(-3, 4), F(-1, 2), F(-1, 4), F(0)):
            report = fid_test(c, 120)
            assert report.verdict == "PASS", (c, report)


def test_criterion_09_analytic_residuals():
    with _Budget(9, "Riccati < 1e-6, decomposition < 1e-8, route gap < 1e-10", 30):
        for c in (F(-9, 10), F(-1, 2), F(0), F(1, 2)):
            for z in GRID25:
                assert riccati_residual(c, z).g_form < 1e-6
                assert decomposition_residual(c, z) < 1e-8
        samples = [2j, 1 + 2j, -1 + 1.5j, 0.5 + 1j, 3j, -2 + 2.5j, 1.5 + 0.8j, 2 + 2j,
                   -0.5 + 3j, 1j]
        for z in samples:
            assert abs(G_eval(F(1, 2), z) - cf_eval(F(1, 2), z, tol=1e-14)) < 1e-10


def test_criterion_10_lemma_numerics():
    with _Budget(10, "axis flow: f > r, f' < 1, unique q0 < 0, s_crit < -2 sqrt(-c)", 30):
        for c in (F(-9, 10), F(-1, 2), F(-1, 10)):
            report = f_trajectory(c)
            assert report.all_ok, (c, report.failures)
            assert report.q0 < 0
            assert report.s_crit < -2 * math.sqrt(-float(c))


def test_criterion_11_gaussian_density():
    with _Budget(11, "density(0, u) matches exp(-u^2/2)/sqrt(2 pi) within 1e-4", 10):
        for u in (0.0, 1.0, -1.0, 2.0, -2.0):
            expected = math.exp(-u * u / 2) / math.sqrt(2 * math.pi)
            assert abs(density_eval(F(0), u, eps=1e-6) - expected) < 1e-4


def test_criterion_12_formal_ode():
    with _Budget(12, "formal inverse-series identity at order 12 + negative control", 5):
        assert formal_phi_ode_check(12)
        s = [F(x) for x in gaussian_shifted_sequence(12)]
        s[6] += 1
        result = formal_phi_ode_check(12, s)
        assert not result and result.failing_order == 6
