"""Two exactly-solved Markov chains with tree-factorial stationary laws.

Move-to-root: states are binary tree shapes with n vertices; a uniformly
chosen vertex is promoted to the root by repeated single rotations.
Naimi-Trehel: states are Dyck words of length 2n; the transition matrix is
the mu-operator adjacency matrix divided by n+1.  Both chains are
irreducible with stationary weight 1 / (tree factorial).

States are encoded as Dyck words throughout (tree shapes via the alpha
bijection), so the two chains share a state alphabet.
"""

from __future__ import annotations

import random
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction

from ._linalg import nullspace_vector
from .partitions import BoundExceededError
from .trees import (
    BinaryTree,
    _vertex_paths,
    dyck_to_tree,
    nt_adjacency,
    enumerate_trees,
    tree_to_dyck,
)

__all__ = [
    "StochasticMatrix",
    "Distribution",
    "ChainStructureError",
    "ReturnTimeSummary",
    "mtr_transition_matrix",
    "nt_transition_matrix",
    "stationary",
    "return_time_sum",
    "simulate",
    "tv_distance",
    "move_to_root",
]

MAX_CHAIN_N = 6


class ChainStructureError(ValueError):
    """Raised for reducible chains; carries the communicating classes."""

    def __init__(self, classes):
        self.classes = classes
        super().__init__(f"chain is reducible; communicating classes: {classes}")


@dataclass
class StochasticMatrix:
    states: list[str]
    rows: list[list[Fraction]]

    def __post_init__(self):
        n = len(self.states)
        if len(set(self.states)) != n:
            raise ValueError("duplicate states")
        if len(self.rows) != n or any(len(r) != n for r in self.rows):
            raise ValueError("matrix must be square over the state list")
        for row in self.rows:
            if any(x < 0 for x in row):
                raise ValueError("negative transition weight")
            if sum(row) != 1:
                raise ValueError("row does not sum to 1")

    def index(self, state: str) -> int:
        return self.states.index(state)


@dataclass
class Distribution:
    weights: dict[str, Fraction]

    def __post_init__(self):
        if any(w < 0 for w in self.weights.values()):
            raise ValueError("negative weight")
        if sum(self.weights.values()) != 1:
            raise ValueError("weights must sum to 1")


def _rotate_up(t: BinaryTree, path: tuple) -> BinaryTree:
    """Promote the vertex at `path` (nonempty) over its parent by one rotation."""
    if len(path) == 1:
        if path[0] == "L":
            v = t.left
            return BinaryTree(v.left, BinaryTree(v.right, t.right))
        v = t.right
        return BinaryTree(BinaryTree(t.left, v.left), v.right)
    if path[0] == "L":
        return BinaryTree(_rotate_up(t.left, path[1:]), t.right)
    return BinaryTree(t.left, _rotate_up(t.right, path[1:]))


def move_to_root(t: BinaryTree, path: tuple) -> BinaryTree:
    """Rotate the vertex at `path` upward until it becomes the root."""
    while path:
        t = _rotate_up(t, path)
        path = path[:-1]
    return t


def mtr_transition_matrix(n: int) -> StochasticMatrix:
    """Move-to-root shape chain on trees with n vertices.

    Entry (t, t') is (1/n) * #{vertices v of t : move_to_root(t, v) = t'}.
    States are the Dyck encodings of the shapes.  Bound: n <= 6.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_CHAIN_N:
        raise BoundExceededError(f"chain bound is n <= {MAX_CHAIN_N}")
    trees = enumerate_trees(n)
    states = [tree_to_dyck(t) for t in trees]
    index = {w: i for i, w in enumerate(states)}
    rows = [[Fraction(0)] * len(states) for _ in states]
    for i, t in enumerate(trees):
        for path in _vertex_paths(t):
            target = index[tree_to_dyck(move_to_root(t, path))]
            rows[i][target] += Fraction(1, n)
    return StochasticMatrix(states, rows)


def nt_transition_matrix(n: int) -> StochasticMatrix:
    """Naimi-Trehel chain on Dyck words: mu-adjacency matrix over n+1.  Bound: n <= 6."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_CHAIN_N:
        raise BoundExceededError(f"chain bound is n <= {MAX_CHAIN_N}")
    words, adjacency = nt_adjacency(n)
    rows = [[Fraction(c, n + 1) for c in row] for row in adjacency]
    return StochasticMatrix(words, rows)


def _communicating_classes(p: StochasticMatrix) -> list[list[str]]:
    """Strongly connected components of the positive-transition digraph (Tarjan)."""
    n = len(p.states)
    succ = [[j for j in range(n) if p.rows[i][j] > 0] for i in range(n)]
    index = [None] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    classes: list[list[int]] = []
    counter = 0

    def strong(v: int):
        nonlocal counter
        work = [(v, 0)]
        while work:
            node, pi = work[-1]
            if pi == 0:
                index[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            for k in range(pi, len(succ[node])):
                w = succ[node][k]
                if index[w] is None:
                    work[-1] = (node, k + 1)
                    work.append((w, 0))
                    advanced = True
                    break
                if on_stack[w]:
                    low[node] = min(low[node], index[w])
            if advanced:
                continue
            if low[node] == index[node]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == node:
                        break
                classes.append(sorted(comp))
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])

    for v in range(n):
        if index[v] is None:
            strong(v)
    return [[p.states[i] for i in comp] for comp in sorted(classes)]


def stationary(p: StochasticMatrix) -> Distribution:
    """Exact stationary distribution: the normalized null vector of (P^T - I).

    Solved by fraction-free (Bareiss) elimination after clearing denominators.
    Raises ChainStructureError for reducible chains.
    """
    classes = _communicating_classes(p)
    if len(classes) != 1:
        raise ChainStructureError(classes)
    n = len(p.states)
    system = [
        [p.rows[j][i] - (1 if i == j else 0) for j in range(n)] for i in range(n)
    ]
    x = nullspace_vector([[Fraction(v) for v in row] for row in system])
    total = sum(x)
    if total == 0:
        raise ChainStructureError(classes)
    if total < 0:
        x = [-v for v in x]
        total = -total
    weights = [v / total for v in x]
    if any(w < 0 for w in weights):
        raise ValueError("stationary solve produced a sign change (internal error)")
    return Distribution(dict(zip(p.states, weights)))


@dataclass
class ReturnTimeSummary:
    total: int  # sum over states of the expected first-return time 1/pi(w)
    state_count: int  # Catalan number of states
    expected_return: Fraction  # average return time over a uniform start


def return_time_sum(n: int, chain: str = "nt") -> ReturnTimeSummary:
    """Sum over states of expected first-return times, which is s_{2n}.

    By Kac's formula the expected first-return time at w is 1/pi(w) = w!, so
    the sum equals the total tree factorial s_{2n} and the uniform-start
    expectation is s_{2n} / Catalan(n).
    """
    p = {"nt": nt_transition_matrix, "mtr": mtr_transition_matrix}[chain](n)
    pi = stationary(p)
    total = sum(1 / w for w in pi.weights.values())
    assert total.denominator == 1
    count = len(p.states)
    return ReturnTimeSummary(int(total), count, Fraction(int(total), count))


def simulate(
    p: StochasticMatrix, steps: int, seed: int, burn_in: int | None = None
) -> Distribution:
    """Empirical state frequencies of a seeded random walk.

    The walk starts in the first canonical state, discards `burn_in`
    transitions (default steps // 10), then records the state after each of
    the next `steps` transitions.  The generator is random.Random(seed)
    (Mersenne Twister), so output is deterministic given (matrix, steps,
    seed).  steps = 0 degenerates to a point mass at the start state.
    """
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    if burn_in is None:
        burn_in = steps // 10
    if steps == 0:
        return Distribution({p.states[0]: Fraction(1)})
    rng = random.Random(seed)
    cumulative = []
    for row in p.rows:
        acc = 0.0
        cum = []
        for value in row:
            acc += float(value)
            cum.append(acc)
        cum[-1] = 1.0
        cumulative.append(cum)
    counts = [0] * len(p.states)
    state = 0
    for step in range(burn_in + steps):
        state = bisect_left(cumulative[state], rng.random())
        if step >= burn_in:
            counts[state] += 1
    return Distribution(
        {s: Fraction(c, steps) for s, c in zip(p.states, counts)}
    )


def tv_distance(a: Distribution, b: Distribution) -> Fraction:
    keys = set(a.weights) | set(b.weights)
    gap = sum(abs(a.weights.get(k, Fraction(0)) - b.weights.get(k, Fraction(0))) for k in keys)
    return gap / 2
