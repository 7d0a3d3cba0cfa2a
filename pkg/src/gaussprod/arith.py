"""Modular arithmetic primitives: residue symbols, orders, and prime generation."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "CongruenceConstraint",
    "is_prime",
    "jacobi",
    "legendre",
    "multiplicative_order",
    "mulmod",
    "powmod",
    "primes_matching",
    "sieve_primes",
]

# Below this bound primes are enumerated with a sieve; above it by stepping
# through the CRT-merged residue class and primality-testing each candidate.
SIEVE_LIMIT = 1 << 20

# Witness set proving primality for every n < 3.317e24, hence all 64-bit inputs.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def mulmod(a: int, b: int, m: int) -> int:
    """(a * b) mod m, exact for operands of any size."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    return a * b % m


def powmod(a: int, e: int, m: int) -> int:
    """a**e mod m; powmod(a, 0, m) == 1 for every a."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    if e < 0:
        raise ValueError(f"exponent must be >= 0, got {e}")
    return pow(a, e, m)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for all n below 3.3e24."""
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            return n == p
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def legendre(a: int, p: int) -> int:
    """Legendre symbol (a|p) by Euler's criterion.  p must be an odd prime."""
    if p < 3 or p % 2 == 0 or not is_prime(p):
        raise ValueError(f"legendre needs an odd prime modulus, got {p}")
    a %= p
    if a == 0:
        return 0
    t = pow(a, (p - 1) // 2, p)
    if t == 1:
        return 1
    if t == p - 1:
        return -1
    # unreachable for prime p: Euler's criterion admits only +-1
    raise ArithmeticError(f"euler criterion gave {t} for a={a}, p={p}")


def jacobi(a: int, n: int) -> int:
    """Jacobi symbol (a|n) via quadratic reciprocity.  n must be odd, positive."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"jacobi needs an odd positive modulus, got {n}")
    a %= n
    sign = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                sign = -sign
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            sign = -sign
        a %= n
    return sign if n == 1 else 0


def _pollard_rho(n: int) -> int:
    """One nontrivial factor of composite odd n (Brent's cycle variant)."""
    if n % 2 == 0:
        return 2
    for c in range(1, 50):
        x = y = 2
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d
    raise ArithmeticError(f"rho failed to split {n}")


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization as {prime: exponent}."""
    out: dict[int, int] = {}
    for p in range(2, 1 << 10):
        if p * p > n:
            break
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    stack = [n] if n > 1 else []
    while stack:
        m = stack.pop()
        if is_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        d = _pollard_rho(m)
        stack.extend((d, m // d))
    return out


def multiplicative_order(a: int, p: int) -> int:
    """Order of a in the multiplicative group mod prime p."""
    if not is_prime(p):
        raise ValueError(f"modulus must be prime, got {p}")
    a %= p
    if a == 0:
        raise ValueError("a must not be divisible by p")
    d = p - 1
    for f in _factorize(p - 1):
        while d % f == 0 and pow(a, d // f, p) == 1:
            d //= f
    return d


@dataclass(frozen=True)
class CongruenceConstraint:
    """Candidates must satisfy n == residue (mod modulus)."""

    modulus: int
    residue: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise ValueError(
                f"residue must lie in [0, {self.modulus}), got {self.residue}")

    def holds(self, n: int) -> bool:
        return n % self.modulus == self.residue


def _crt_merge(constraints) -> tuple[int, int] | None:
    """Fold constraints to one class (residue, modulus); None if contradictory."""
    r, m = 0, 1
    for c in constraints:
        g = math.gcd(m, c.modulus)
        if (c.residue - r) % g:
            return None
        step = c.modulus // g
        t = (c.residue - r) // g * pow(m // g, -1, step) % step
        r += m * t
        m = m // g * c.modulus
        r %= m
    return r, m


def sieve_primes(limit: int) -> np.ndarray:
    """All primes < limit, ascending, as int64."""
    if limit <= 2:
        return np.empty(0, dtype=np.int64)
    comp = np.zeros(limit, dtype=bool)
    comp[:2] = True
    for i in range(2, math.isqrt(limit - 1) + 1):
        if not comp[i]:
            comp[i * i:: i] = True
    return np.nonzero(~comp)[0].astype(np.int64)


def primes_matching(limit: int, constraints=(), sieve_limit: int = SIEVE_LIMIT) -> list[int]:
    """Ascending primes < limit satisfying every constraint.

    Contradictory constraints (e.g. even residue mod an even modulus plus
    oddness elsewhere) yield an empty list, not an error.
    """
    if limit < 0:
        raise ValueError(f"limit must be >= 0, got {limit}")
    merged = _crt_merge(constraints)
    if merged is None:
        return []
    r, m = merged
    head = min(limit, sieve_limit)
    ps = sieve_primes(head)
    if m > 1:
        ps = ps[ps % m == r]
    out = [int(p) for p in ps]
    if limit > sieve_limit:
        start = sieve_limit + (r - sieve_limit) % m
        for n in range(start, limit, m):
            if is_prime(n):
                out.append(n)
    return out
