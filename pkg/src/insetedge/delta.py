"""Direct evaluation of the Wiener decrease from a cycle anatomy.

The decrease caused by shortcut edge (x, y) with cycle length k depends on
the tree only through k and the hanging-subtree weights: it is the sum of
(2*d - k) * w_{x_i} * w_{y_j} over side pairs whose tree distance
d = k+1-i-j exceeds k/2.  In integers the condition is 2*(k+1-i-j) > k,
i.e. i+j <= k' for even k and i+j <= k'+1 for odd k (k' = k // 2), and the
coefficient is always k + 2 - 2*(i+j) on that range.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from operator import mul
from typing import Optional, Sequence

from .counting import OpCounter
from .tree import CycleAnatomy


@dataclass(frozen=True)
class DeltaRecord:
    """One scored shortcut edge: savings and its average-distance form."""

    x: int
    y: int
    k: int
    d_prime: int
    ad_prime: Fraction


def delta_from_weights(
    k: int,
    weights_x: Sequence[int],
    weights_y: Sequence[int],
    counter: Optional[OpCounter] = None,
) -> int:
    """Savings for cycle length k and side weight sequences (1-based math,
    0-based storage).  Iterates only the i+j <= bound terms."""
    k_prime = k // 2
    bound = k_prime + 1 if k % 2 else k_prime
    coeff = [k + 2 - 2 * s for s in range(bound + 1)]
    total = 0
    for i in range(1, k_prime + 1):
        m = min(k_prime, bound - i)
        if m < 1:
            break
        total += weights_x[i - 1] * sum(map(mul, coeff[i + 1 : i + 1 + m], weights_y[:m]))
        if counter is not None:
            counter.add(m)
    return total


def delta_term_count(k: int) -> int:
    """Exact number of multiply-accumulate terms delta_from_weights performs
    for cycle length k (matches the instrumented counter)."""
    k_prime = k // 2
    bound = k_prime + 1 if k % 2 else k_prime
    return sum(max(0, min(k_prime, bound - i)) for i in range(1, k_prime + 1))


def delta_direct(anatomy: CycleAnatomy, counter: Optional[OpCounter] = None) -> int:
    """Savings D(T) - D(T + xy) evaluated directly from the anatomy."""
    return delta_from_weights(anatomy.k, anatomy.weights_x, anatomy.weights_y, counter)


def ad_prime(d_prime: int, n: int) -> Fraction:
    """Average-distance decrease: d_prime / C(n, 2), in lowest terms."""
    return Fraction(d_prime, n * (n - 1) // 2)
