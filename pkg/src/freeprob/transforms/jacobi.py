"""Exact three-term-recurrence data: moments from Jacobi parameters and back.

Conventions: G(z) = 1/(z - alpha_0 - beta_1/(z - alpha_1 - beta_2/(...))),
so beta_k is the k-th continued-fraction numerator.  A positive measure has
all beta_k > 0; the family with alpha = 0 and beta_k = c + k (the
Askey-Wimp-Kerov measures) specializes to the standard Gaussian at c = 0 and
to the point mass at 0 for c = -1.

jacobi_from_moments is the modified-Chebyshev / quotient-difference scheme
on the inner-product table sigma[k][l] = <P_k, x^l>; its diagonal pivots are
ratios of consecutive Hankel determinants, so the first nonpositive pivot
locates the first nonpositive Hankel determinant exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .._linalg import bareiss_det_sign, clear_denominators
from ..partitions import BoundExceededError

__all__ = [
    "JacobiParams",
    "JacobiFit",
    "mu_c_jacobi",
    "moments_from_jacobi",
    "jacobi_from_moments",
    "hankel_sign",
    "hankel_sign_from_pivots",
]

MAX_HANKEL_DIRECT = 24


@dataclass(frozen=True)
class JacobiParams:
    """alpha[k] = alpha_k (k = 0..N-1) and beta[k-1] = beta_k (k = 1..N)."""

    alpha: tuple[Fraction, ...]
    beta: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.alpha) != len(self.beta):
            raise ValueError("alpha and beta must have equal length")

    @property
    def depth(self) -> int:
        return len(self.beta)


def mu_c_jacobi(c, depth: int) -> JacobiParams:
    """Jacobi data of the Askey-Wimp-Kerov measure: alpha = 0, beta_k = c + k.

    Requires c >= -1; at c = -1 every beta is set to 0 (point mass at 0).
    """
    c = Fraction(c)
    if depth < 1:
        raise ValueError("depth must be positive")
    if c < -1:
        raise ValueError("parameter must satisfy c >= -1")
    if c == -1:
        beta = tuple(Fraction(0) for _ in range(depth))
    else:
        beta = tuple(c + k for k in range(1, depth + 1))
    alpha = tuple(Fraction(0) for _ in range(depth))
    return JacobiParams(alpha, beta)


def moments_from_jacobi(params: JacobiParams, order: int) -> list[Fraction]:
    """Exact moments m_0..m_order of the measure with the given recurrence data.

    m_k is the (0,0) entry of the k-th power of the tridiagonal recurrence
    matrix (superdiagonal 1, diagonal alpha, subdiagonal beta).  Needs
    depth >= ceil(order / 2).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    if order > 2 * params.depth:
        raise BoundExceededError(
            f"order {order} needs at least {(order + 1) // 2} recurrence levels, "
            f"have {params.depth}"
        )
    # amplitudes above this level cannot return to level 0 within `order` steps
    levels = min(order // 2 + 1, params.depth)
    v = [Fraction(0)] * (levels + 1)
    v[0] = Fraction(1)
    moments = [Fraction(1)]
    alpha, beta = params.alpha, params.beta
    for _ in range(order):
        w = [Fraction(0)] * (levels + 1)
        for i in range(levels):
            amount = v[i]
            if amount == 0:
                continue
            if alpha[i] != 0:
                w[i] += alpha[i] * amount
            w[i + 1] += beta[i] * amount
            if i > 0:
                w[i - 1] += amount
        # the top retained level only feeds back down
        if v[levels] != 0:
            w[levels - 1] += v[levels]
        v = w
        moments.append(v[0])
    return moments


@dataclass
class JacobiFit:
    """Result of jacobi_from_moments.

    pivots[k] = sigma_{k,k} = H_k / H_{k-1} with H_k = det of the
    (k+1) x (k+1) Hankel matrix of the input; alpha/beta are filled as far
    as the pivots stay positive.  breakdown_index is the first k whose pivot
    is <= 0 (None when all requested pivots are positive), and
    breakdown_sign is that pivot's sign.
    """

    alpha: list[Fraction]
    beta: list[Fraction]
    pivots: list[Fraction]
    breakdown_index: Optional[int]
    breakdown_sign: Optional[int]

    @property
    def params(self) -> JacobiParams:
        depth = min(len(self.alpha), len(self.beta))
        return JacobiParams(tuple(self.alpha[:depth]), tuple(self.beta[:depth]))


def jacobi_from_moments(moments: Sequence, depth: Optional[int] = None) -> JacobiFit:
    """Recurrence coefficients from exact moments, with breakdown reporting.

    Runs the sigma-table recursion
    sigma[k][l] = sigma[k-1][l+1] - alpha_{k-1} sigma[k-1][l] - beta_{k-1} sigma[k-2][l];
    alpha_k = sigma[k][k+1]/sigma[k][k] - sigma[k-1][k]/sigma[k-1][k-1];
    beta_k = sigma[k][k]/sigma[k-1][k-1].
    Stops at the first nonpositive diagonal pivot instead of raising.
    """
    m = [Fraction(x) for x in moments]
    if not m:
        raise ValueError("moment list is empty")
    top = len(m) - 1
    if depth is None:
        depth = top // 2
    if 2 * depth > top:
        raise BoundExceededError(f"depth {depth} needs {2 * depth + 1} moments, have {top + 1}")

    prev: list[Fraction] = list(m)  # sigma_0 row over l = 0..top
    prev2: list[Fraction] = []
    pivots = [m[0]]
    alpha: list[Fraction] = []
    beta: list[Fraction] = []
    if m[0] <= 0:
        return JacobiFit(alpha, beta, pivots, 0, _sign(m[0]))
    if top >= 1:
        alpha.append(m[1] / m[0])
    for k in range(1, depth + 1):
        lo, hi = k, top - k
        row = [Fraction(0)] * (hi + 2)
        for l in range(lo, hi + 1):
            value = prev[l + 1] - alpha[k - 1] * prev[l]
            if k >= 2:
                value -= beta[k - 2] * prev2[l]
            row[l] = value
        pivot = row[k]
        pivots.append(pivot)
        if pivot <= 0:
            return JacobiFit(alpha[: len(beta)], beta, pivots, k, _sign(pivot))
        beta.append(pivot / pivots[k - 1])
        if k <= (top - 1) // 2 and k < depth:
            alpha.append(row[k + 1] / pivot - prev[k] / pivots[k - 1])
        prev2, prev = prev, row
    # drop the seed alpha entries beyond the computed beta depth
    alpha = alpha[: len(beta)]
    return JacobiFit(alpha, beta, pivots, None, None)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def hankel_sign(seq: Sequence, k: int) -> int:
    """Sign of det [seq_{i+j}]_{i,j=0..k} by fraction-free (Bareiss) elimination.

    Bound: k <= 24 for the direct determinant route.
    """
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k > MAX_HANKEL_DIRECT:
        raise BoundExceededError(f"direct Hankel determinant bound is k <= {MAX_HANKEL_DIRECT}")
    values = [Fraction(x) for x in seq]
    if 2 * k + 1 > len(values):
        raise BoundExceededError(f"need {2 * k + 1} sequence entries, have {len(values)}")
    rows = [[values[i + j] for j in range(k + 1)] for i in range(k + 1)]
    return bareiss_det_sign(clear_denominators(rows))


def hankel_sign_from_pivots(fit: JacobiFit, k: int) -> int:
    """Sign of the k-th Hankel determinant predicted from the pivot table:
    H_k = prod of the first k+1 diagonal pivots."""
    if k + 1 > len(fit.pivots):
        raise BoundExceededError(f"pivot table only covers k <= {len(fit.pivots) - 1}")
    sign = 1
    for pivot in fit.pivots[: k + 1]:
        s = _sign(pivot)
        if s == 0:
            return 0
        sign *= s
    return sign
