"""Coefficient-matrix route: a second, independent evaluation of the savings.

F_k is the k' x k' matrix of per-pair saving coefficients (k' = k // 2).
It is D_k (entries 2*(k'-i-j+1) on i+j <= k', zero elsewhere) plus, for odd
k, the anti-triangular all-ones matrix O_k (ones on i+j <= k'+1).  The
savings equal the norm one (sum of entries) of the entrywise product of F_k
with the outer product of the two weight vectors.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .counting import OpCounter
from .errors import KTooSmall
from .tree import CycleAnatomy

# Above this k' the matrix is not materialized; the same sum is computed
# streamingly.  F_k never needs O(k^2) memory for large audits.
MATERIALIZE_CAP = 4096


@dataclass(frozen=True)
class CoefficientMatrix:
    k: int
    k_prime: int
    entries: tuple[tuple[int, ...], ...]


def _d_entry(k_prime: int, i: int, j: int) -> int:
    # i, j are 1-based
    return 2 * (k_prime - i - j + 1) if i + j <= k_prime else 0


def _o_entry(k_prime: int, i: int, j: int) -> int:
    return 1 if i + j - 1 <= k_prime else 0


def build_D(k: int) -> CoefficientMatrix:
    if k < 3:
        raise KTooSmall(f"k={k}")
    kp = k // 2
    rows = tuple(
        tuple(_d_entry(kp, i, j) for j in range(1, kp + 1)) for i in range(1, kp + 1)
    )
    return CoefficientMatrix(k, kp, rows)


def build_O(k: int) -> CoefficientMatrix:
    if k < 3:
        raise KTooSmall(f"k={k}")
    kp = k // 2
    rows = tuple(
        tuple(_o_entry(kp, i, j) for j in range(1, kp + 1)) for i in range(1, kp + 1)
    )
    return CoefficientMatrix(k, kp, rows)


def build_F(k: int) -> CoefficientMatrix:
    """F_k = D_k + O_k for odd k, D_k for even k."""
    if k < 3:
        raise KTooSmall(f"k={k}")
    kp = k // 2
    odd = k % 2
    rows = tuple(
        tuple(
            _d_entry(kp, i, j) + (odd and _o_entry(kp, i, j))
            for j in range(1, kp + 1)
        )
        for i in range(1, kp + 1)
    )
    return CoefficientMatrix(k, kp, rows)


def delta_via_matrix(
    anatomy: CycleAnatomy,
    cap: int = MATERIALIZE_CAP,
    counter: Optional[OpCounter] = None,
) -> int:
    """Norm one of F_k entrywise-multiplied with the weight outer product."""
    k = anatomy.k
    kp = anatomy.k_prime
    wx = anatomy.weights_x
    wy = anatomy.weights_y
    total = 0
    if kp <= cap:
        entries = build_F(k).entries
        for i in range(kp):
            row = entries[i]
            wxi = wx[i]
            for j in range(kp):
                total += row[j] * wxi * wy[j]
        if counter is not None:
            counter.add(kp * kp)
    else:
        odd = k % 2
        for i in range(1, kp + 1):
            wxi = wx[i - 1]
            for j in range(1, kp + 1):
                f = _d_entry(kp, i, j) + (odd and _o_entry(kp, i, j))
                if f:
                    total += f * wxi * wy[j - 1]
        if counter is not None:
            counter.add(kp * kp)
    return total
