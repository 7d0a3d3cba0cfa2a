"""Partial products of consecutive-integer blocks mod p, with residue counts.

For an odd prime p and n dividing p - 1, the integers 1..p-1 split into n
equal blocks of length (p - 1)/n; the k-th block product reduced mod p is the
plain partial product.  The generalized variant drops the divisibility
requirement by cutting 1..p-1 at floor(k * p / q) instead, so blocks have
floor-length sizes and the two notions coincide when p == 1 (mod q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .arith import is_prime, jacobi

__all__ = [
    "BlockCounts",
    "PartialProductTable",
    "block_counts",
    "block_ranges",
    "enlarged_block_index",
    "generalized_partial_products",
    "partial_products",
    "residue_cumulative_counts",
    "residue_mask",
    "selected_block_indices",
    "theorem1_product",
]

# int64 stays exact for products of two residues and for j*j below this bound
_NUMPY_MAX_P = 1 << 31
_NUMPY_MIN_LEN = 64


def _check_odd_prime(x: int, name: str) -> None:
    if x < 3 or x % 2 == 0 or not is_prime(x):
        raise ValueError(f"{name} must be an odd prime, got {x}")


def block_ranges(p: int, n: int, generalized: bool = False) -> tuple[tuple[int, int], ...]:
    """Inclusive (start, end) ranges of the n blocks partitioning 1..p-1."""
    if generalized:
        lows = [((k - 1) * p) // n + 1 for k in range(1, n + 1)]
        highs = [(k * p) // n for k in range(1, n)] + [p - 1]
        return tuple(zip(lows, highs))
    m = (p - 1) // n
    return tuple(((k - 1) * m + 1, k * m) for k in range(1, n + 1))


def _prod_range_mod(lo: int, hi: int, p: int) -> int:
    """Product of the integers lo..hi inclusive, reduced mod p."""
    if lo > hi:
        return 1
    if p < _NUMPY_MAX_P and hi - lo >= _NUMPY_MIN_LEN:
        arr = np.arange(lo, hi + 1, dtype=np.int64) % p
        acc = 1
        # pairwise halving: n-1 multiplications total, all inside int64
        while arr.size > 1:
            if arr.size & 1:
                acc = acc * int(arr[-1]) % p
                arr = arr[:-1]
            arr = arr[0::2] * arr[1::2] % p
        return acc * int(arr[0]) % p
    acc = 1
    for j in range(lo, hi + 1):
        acc = acc * j % p
    return acc


@dataclass(frozen=True)
class PartialProductTable:
    """All n block products for one modulus, 1-indexed via block()."""

    p: int
    n: int
    values: tuple[int, ...]
    generalized: bool

    def block(self, k: int) -> int:
        if not 1 <= k <= self.n:
            raise ValueError(f"block index must lie in 1..{self.n}, got {k}")
        return self.values[k - 1]

    def prefix_factorials(self) -> tuple[int, ...]:
        """Cumulative products: entry i-1 is blocks 1..i multiplied out mod p.

        For the plain table this is (i * (p-1)/n)! mod p.
        """
        out = []
        acc = 1
        for v in self.values:
            acc = acc * v % self.p
            out.append(acc)
        return tuple(out)

    def full_product(self) -> int:
        """Product of every block, i.e. (p-1)! mod p; equals p - 1 by Wilson."""
        return self.prefix_factorials()[-1]


@lru_cache(maxsize=256)
def partial_products(p: int, n: int) -> PartialProductTable:
    """Block products for equal blocks of length (p-1)/n; needs n | p - 1."""
    _check_odd_prime(p, "p")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if (p - 1) % n:
        raise ValueError(f"n must divide p - 1, got p={p}, n={n}")
    values = tuple(_prod_range_mod(lo, hi, p) for lo, hi in block_ranges(p, n))
    return PartialProductTable(p=p, n=n, values=values, generalized=False)


@lru_cache(maxsize=256)
def generalized_partial_products(p: int, q: int) -> PartialProductTable:
    """Floor-cut block products; defined for any odd primes q < p."""
    _check_odd_prime(p, "p")
    _check_odd_prime(q, "q")
    if q >= p:
        raise ValueError(f"q must be smaller than p, got p={p}, q={q}")
    values = tuple(_prod_range_mod(lo, hi, p)
                   for lo, hi in block_ranges(p, q, generalized=True))
    return PartialProductTable(p=p, n=q, values=values, generalized=True)


@lru_cache(maxsize=8)
def _residue_tables(p: int) -> tuple[np.ndarray, np.ndarray]:
    """(mask, cum) where mask[v] marks nonzero squares mod p and
    cum[x] counts quadratic residues in 1..x."""
    j = np.arange(1, p, dtype=np.int64)
    mask = np.zeros(p, dtype=bool)
    mask[j * j % p] = True
    cum = np.cumsum(mask, dtype=np.int64)
    mask.flags.writeable = False
    cum.flags.writeable = False
    return mask, cum


def residue_mask(p: int) -> np.ndarray:
    """Boolean array of length p: entry v is True iff v is a nonzero square mod p."""
    _check_odd_prime(p, "p")
    if p >= _NUMPY_MAX_P:
        raise ValueError(f"residue table needs p < 2**31, got {p}")
    return _residue_tables(p)[0]


def residue_cumulative_counts(p: int) -> np.ndarray:
    """Array c with c[x] = number of quadratic residues among 1..x."""
    _check_odd_prime(p, "p")
    if p >= _NUMPY_MAX_P:
        raise ValueError(f"residue table needs p < 2**31, got {p}")
    return _residue_tables(p)[1]


@dataclass(frozen=True)
class BlockCounts:
    """Per-block counts of quadratic residues and nonresidues."""

    p: int
    q: int
    residues: tuple[int, ...]
    nonresidues: tuple[int, ...]
    generalized: bool

    def block_size(self, k: int) -> int:
        return self.residues[k - 1] + self.nonresidues[k - 1]


@lru_cache(maxsize=256)
def block_counts(p: int, q: int, generalized: bool = False) -> BlockCounts:
    """Count residues/nonresidues inside each block of 1..p-1."""
    _check_odd_prime(p, "p")
    _check_odd_prime(q, "q")
    if generalized:
        if q >= p:
            raise ValueError(f"q must be smaller than p, got p={p}, q={q}")
    elif (p - 1) % q:
        raise ValueError(f"q must divide p - 1, got p={p}, q={q}")
    ranges = block_ranges(p, q, generalized)
    res = []
    if p < _NUMPY_MAX_P:
        cum = residue_cumulative_counts(p)
        for lo, hi in ranges:
            res.append(int(cum[hi] - cum[lo - 1]))
    else:
        for lo, hi in ranges:
            res.append(sum(1 for v in range(lo, hi + 1) if jacobi(v, p) == 1))
    nonres = tuple(hi - lo + 1 - r for (lo, hi), r in zip(ranges, res))
    return BlockCounts(p=p, q=q, residues=tuple(res), nonresidues=nonres,
                       generalized=generalized)


def selected_block_indices(q: int) -> tuple[int, ...]:
    """Lower-half indices k whose offset (q+1)/2 - k from the center is odd."""
    if q < 3 or q % 2 == 0:
        raise ValueError(f"q must be an odd number >= 3, got {q}")
    center = (q + 1) // 2
    return tuple(k for k in range(1, (q - 1) // 2 + 1) if (center - k) % 2 == 1)


def theorem1_product(p: int, q: int, generalized: bool = False) -> int:
    """Product over the selected lower-half blocks, reduced mod p."""
    table = generalized_partial_products(p, q) if generalized else partial_products(p, q)
    acc = 1
    for k in selected_block_indices(q):
        acc = acc * table.values[k - 1] % p
    return acc


def enlarged_block_index(q: int) -> int:
    """Lower-half index whose block is one longer when p == 3 (mod q), q > 3.

    Evaluates (q + 2 + ((q|3) - 1)/2) / 3, which must be an integer equal to
    ceil(q/3); a non-integer or out-of-range value raises ArithmeticError so
    sweeps can surface it as a failed check instead of silently rounding.
    """
    if q <= 3 or not is_prime(q):
        raise ValueError(f"q must be a prime > 3, got {q}")
    num = 2 * (q + 2) + (jacobi(q, 3) - 1)
    if num % 6:
        raise ArithmeticError(f"enlarged-block index is not an integer at q={q}")
    k = num // 6
    if not 1 <= k <= (q - 1) // 2:
        raise ArithmeticError(f"enlarged-block index {k} out of range at q={q}")
    return k
