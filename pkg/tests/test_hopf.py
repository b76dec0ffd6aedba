from collections import Counter

import pytest

from freeprob.cumulants import gaussian_shifted_sequence
from freeprob.hopf import (
    LabeledTree,
    antipode,
    antipode_check,
    bf_coproduct,
    bf_over,
    bf_over_labeled,
    canonical,
    coassociativity_check,
    counit,
    counit_check,
    enumerate_ordered_trees,
    graft,
    hilbert_dimension,
    is_anti_increasing,
    is_ordered,
    lr_coproduct,
    lr_product,
    shift_labels,
    tree_from_nested,
    tree_size,
    tree_to_nested,
    _cop_labeled,
    _prod_labeled,
)

N = LabeledTree
E = None  # the empty tree
V1 = N(1)


def test_anti_increasing_flag():
    # left-subtree labels must sit strictly below right-subtree labels
    assert is_anti_increasing(E)
    assert is_anti_increasing(V1)
    assert is_anti_increasing(N(3, N(1), N(2)))
    assert not is_anti_increasing(N(3, N(2), N(1)))
    assert not is_anti_increasing(N(1, N(2), N(2)))  # repeated label
    big = N(3, N(2, N(1), N(4)), N(7, N(5), N(6)))
    assert is_anti_increasing(big)
    assert is_ordered(big)


def test_graft():
    assert graft(E, 1, E) == V1
    t = graft(N(2), 3, N(1))
    assert t == N(3, N(2), N(1))
    assert tree_size(t) == 3
    with pytest.raises(ValueError):
        graft(N(1), 1, E)
    with pytest.raises(ValueError):
        graft(N(1), 2, N(1))


def test_canonical_relabels_by_rank():
    t = N(9, N(2), N(5))
    assert canonical(t) == N(3, N(1), N(2))


def test_hilbert_dimensions():
    s = gaussian_shifted_sequence(10)
    assert hilbert_dimension(0) == 1
    assert hilbert_dimension(1) == 1
    assert hilbert_dimension(2) == 4
    assert hilbert_dimension(3) == 27
    for n in range(6):
        assert hilbert_dimension(n) == s[2 * n]


def test_hilbert_equals_chain_return_time_sum():
    from freeprob.chains import return_time_sum

    for n in range(1, 6):
        assert hilbert_dimension(n) == return_time_sum(n, "nt").total


# ---------------------------------------------------------------- product


def test_product_with_unit():
    t = N(2, N(1), None)
    assert lr_product(E, t) == {t: 1}
    assert lr_product(t, E) == {t: 1}


def test_product_vertex_vertex():
    out = lr_product(V1, V1)
    assert out == {N(1, None, N(2)): 1, N(2, N(1), None): 1}


def test_product_closure_and_grading():
    for m in range(0, 4):
        for n in range(0, 4 - m):
            for s in enumerate_ordered_trees(m):
                for t in enumerate_ordered_trees(n):
                    for term, coef in lr_product(s, t).items():
                        assert coef > 0
                        assert tree_size(term) == m + n
                        assert is_ordered(term)


def test_product_associative():
    trees = [(s, t, u)
             for a in range(0, 4)
             for b in range(0, 4 - a)
             for c in range(0, 4 - a - b)
             for s in enumerate_ordered_trees(a)
             for t in enumerate_ordered_trees(b)
             for u in enumerate_ordered_trees(c)]
    for s, t, u in trees:
        left = Counter()
        for w, c in lr_product(s, t).items():
            for v, d in lr_product(w, u).items():
                left[v] += c * d
        right = Counter()
        for w, c in lr_product(t, u).items():
            for v, d in lr_product(s, w).items():
                right[v] += c * d
        assert left == right


def test_product_label_choice_independence():
    for m in range(1, 4):
        for n in range(1, 5 - m):
            for s in enumerate_ordered_trees(m):
                for t in enumerate_ordered_trees(n):
                    reference = lr_product(s, t)
                    # same ordered trees, eccentric concrete labels
                    s2 = shift_labels(canonical(s), 0)
                    s2 = _relabel(s2, {i: 10 * i for i in range(1, m + 1)})
                    t2 = _relabel(canonical(t), {i: 1000 + 7 * i for i in range(1, n + 1)})
                    raw = _prod_labeled(s2, t2)
                    collapsed = Counter()
                    for term, coef in raw.items():
                        collapsed[canonical(term)] += coef
                    assert dict(collapsed) == reference


def _relabel(t, mapping):
    if t is None:
        return None
    return LabeledTree(mapping[t.label], _relabel(t.left, mapping), _relabel(t.right, mapping))


# ---------------------------------------------------------------- coproduct


def test_coproduct_empty_and_vertex():
    assert lr_coproduct(E) == {(E, E): 1}
    assert lr_coproduct(V1) == {(E, V1): 1, (V1, E): 1}


def test_coproduct_two_vertex_chain():
    t = N(1, N(2), None)
    assert lr_coproduct(t) == {(E, t): 1, (V1, V1): 1, (t, E): 1}


def test_coproduct_cherry_six_terms():
    # The three-vertex tree with root 3 and the smaller child on the left.
    t = N(3, N(1), N(2))
    expected = {
        (E, t): 1,
        (V1, N(2, N(1), None)): 1,
        (V1, N(2, None, N(1))): 1,
        (N(1, None, N(2)), V1): 1,
        (N(2, N(1), None), V1): 1,
        (t, E): 1,
    }
    assert lr_coproduct(t) == expected


def test_coproduct_rejects_non_ordered():
    with pytest.raises(ValueError):
        lr_coproduct(N(3, N(2), N(1)))


def test_coproduct_label_choice_independence():
    for n in range(1, 5):
        for t in enumerate_ordered_trees(n):
            reference = lr_coproduct(t)
            odd = _relabel(t, {i: 2 * i + 11 for i in range(1, n + 1)})
            raw = _cop_labeled(odd)
            collapsed = Counter()
            for (a, b), coef in raw.items():
                collapsed[(canonical(a), canonical(b))] += coef
            assert dict(collapsed) == reference


def test_grading_of_coproducts():
    for n in range(0, 5):
        for t in enumerate_ordered_trees(n):
            for (a, b), coef in lr_coproduct(t).items():
                assert coef > 0
                assert tree_size(a) + tree_size(b) == n
                assert is_ordered(a) and is_ordered(b)


def test_coassociativity_counit_antipode_laws():
    assert coassociativity_check(3)
    assert counit_check(4)
    assert antipode_check(4)


def test_coassociativity_size4():
    assert coassociativity_check(4)


def test_counit_projection():
    assert counit({None: 3, V1: 5}) == 3
    assert counit({V1: 5}) == 0


def test_antipode_small_values():
    assert antipode(E) == {E: 1}
    assert antipode(V1) == {V1: -1}


# ------------------------------------------------- Brouder-Frabetti


def test_bf_over_neutral_and_vertex():
    t = N(1, None, N(2))
    assert bf_over(E, t) == t
    assert bf_over(t, E) == t
    assert bf_over(V1, V1) == N(2, N(1), None)


def test_bf_over_associative():
    for a in range(0, 4):
        for b in range(0, 4 - a):
            for c in range(0, 4 - a - b):
                for s in enumerate_ordered_trees(a):
                    for t in enumerate_ordered_trees(b):
                        for u in enumerate_ordered_trees(c):
                            assert bf_over(bf_over(s, t), u) == bf_over(s, bf_over(t, u))


def test_bf_coproduct_single_vertex():
    assert bf_coproduct(V1) == {(V1, E): 1, (E, V1): 1}


def test_bf_coproduct_printed_examples():
    # right chain: primitive-like, no middle term
    right = N(1, None, N(2))
    assert bf_coproduct(right) == {(right, E): 1, (E, right): 1}

    # left chain: middle coefficient 2
    left = N(1, N(2), None)
    assert bf_coproduct(left) == {(left, E): 1, (V1, V1): 2, (E, left): 1}

    # zig: root with a right child that has a left child
    zig = N(1, None, N(2, N(3), None))
    assert bf_coproduct(zig) == {
        (zig, E): 1,
        (V1, N(1, None, N(2))): 1,
        (E, zig): 1,
    }


def test_bf_coproduct_grading():
    for n in range(0, 5):
        for t in enumerate_ordered_trees(n):
            for (a, b), coef in bf_coproduct(t).items():
                assert tree_size(a) + tree_size(b) == n
                assert is_ordered(a) and is_ordered(b)


def test_bf_counit_laws():
    for n in range(0, 5):
        for t in enumerate_ordered_trees(n):
            cop = bf_coproduct(t)
            left = Counter()
            right = Counter()
            for (a, b), c in cop.items():
                if a is None:
                    left[b] += c
                if b is None:
                    right[a] += c
            assert dict(left) == {t: 1}
            assert dict(right) == {t: 1}


def test_bf_multiplicative():
    # Delta_BF(s / t) = Delta_BF(s) / Delta_BF(t), componentwise on tensors
    from freeprob.hopf import _bf_cop_labeled

    for m in range(0, 3):
        for n in range(0, 3):
            for s in enumerate_ordered_trees(m):
                for t in enumerate_ordered_trees(n):
                    tt = shift_labels(t, m)
                    lhs = Counter()
                    for (a, b), c in _bf_cop_labeled(bf_over_labeled(s, tt)).items():
                        lhs[(canonical(a), canonical(b))] += c
                    rhs = Counter()
                    for (a1, a2), ca in _bf_cop_labeled(s).items():
                        for (b1, b2), cb in _bf_cop_labeled(tt).items():
                            key = (
                                canonical(bf_over_labeled(a1, b1)),
                                canonical(bf_over_labeled(a2, b2)),
                            )
                            rhs[key] += ca * cb
                    assert lhs == rhs


def _monotone(t):
    # labels decrease from root to leaves; exactly one such ordered labeling
    # per shape, so these span a copy of the plain binary-tree algebra
    if t is None:
        return True
    for child in (t.left, t.right):
        if child is not None and not (child.label < t.label and _monotone(child)):
            return False
    return True


def test_monotone_trees_closed_under_charge_structure():
    import math

    for n in range(0, 5):
        monotone = [t for t in enumerate_ordered_trees(n) if _monotone(t)]
        assert len(monotone) == math.comb(2 * n, n) // (n + 1)
        for t in monotone:
            for (a, b) in bf_coproduct(t):
                assert _monotone(a) and _monotone(b)
    for m in range(0, 3):
        for n in range(0, 3):
            for s in enumerate_ordered_trees(m):
                for t in enumerate_ordered_trees(n):
                    if _monotone(s) and _monotone(t):
                        assert _monotone(bf_over(s, t))


# ------------------------------------------------- serialization


def test_nested_round_trip():
    t = N(3, N(2, N(1), N(4)), N(7, N(5), N(6)))
    nested = tree_to_nested(t)
    assert nested == [3, [2, [1], [4]], [7, [5], [6]]]
    assert tree_from_nested(nested) == t
    assert tree_from_nested(None) is None
    with pytest.raises(ValueError):
        tree_from_nested([1, [2]])
