"""Class numbers h(-p) by three independent routes, plus norm-form data.

All three routes target the imaginary quadratic field of discriminant -p for
a prime p == 3 (mod 4):

* a half-interval character sum (Dirichlet's closed form),
* a weighted character sum with floor weights, valid for any auxiliary odd
  prime q != p,
* a direct count of reduced primitive binary quadratic forms of
  discriminant -p.

The routes share no code path beyond the primality test, so pairwise
agreement is a meaningful cross-check and is enforced by the test suite
rather than assumed here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .arith import is_prime, jacobi
from .errors import InternalCheckError, RegimeError
from .products import _NUMPY_MAX_P, residue_cumulative_counts, residue_mask
from .verdict import Verdict, make_verdict

__all__ = [
    "ClassNumberResult",
    "Representation",
    "SquareSubgroupData",
    "beta_identity_check",
    "class_number_dirichlet",
    "class_number_forms",
    "class_number_lemma1",
    "hahn_lee_representation",
    "square_subgroup",
]


@dataclass(frozen=True)
class ClassNumberResult:
    p: int
    h: int
    method: str


def _check_discriminant_prime(p: int, minimum: int = 7) -> None:
    if p < minimum or p % 4 != 3 or not is_prime(p):
        raise ValueError(
            f"need a prime p == 3 (mod 4) with p >= {minimum}, got {p}")


@lru_cache(maxsize=None)
def class_number_dirichlet(p: int) -> ClassNumberResult:
    """h(-p) = (sum of (a|p) over 0 < a < p/2) / (2 - (2|p)), for p == 3 (mod 4)."""
    _check_discriminant_prime(p)
    half = (p - 1) // 2
    if p < _NUMPY_MAX_P:
        cum = residue_cumulative_counts(p)
        char_sum = 2 * int(cum[half]) - half
    else:
        char_sum = sum(jacobi(a, p) for a in range(1, half + 1))
    denom = 2 - jacobi(2, p)
    if char_sum % denom:
        raise InternalCheckError(
            f"half-interval character sum {char_sum} not divisible by {denom} at p={p}")
    h = char_sum // denom
    if h < 1:
        raise InternalCheckError(f"nonpositive class number {h} at p={p}")
    return ClassNumberResult(p=p, h=h, method="dirichlet")


@lru_cache(maxsize=4096)
def class_number_lemma1(p: int, q: int) -> ClassNumberResult:
    """h(-p) from the weighted sum of (a|p) * (q - 1 - 2*floor(a*q/p)).

    Valid for p == 3 (mod 4) and any odd prime q != p; the weight degrades
    the plain half-interval sum when q == 2 would be substituted, so q here
    is kept an odd prime and the q-independence of the result is what the
    cross-check suites exercise.
    """
    _check_discriminant_prime(p)
    if q < 3 or q % 2 == 0 or not is_prime(q):
        raise ValueError(f"q must be an odd prime, got {q}")
    if q == p:
        raise ValueError("q must differ from p")
    half = (p - 1) // 2
    if p < _NUMPY_MAX_P and q < _NUMPY_MAX_P // p:
        a = np.arange(1, half + 1, dtype=np.int64)
        chi = np.where(residue_mask(p)[a], np.int64(1), np.int64(-1))
        w = (q - 1) - 2 * ((a * q) // p)
        total = int((chi * w).sum())
    else:
        total = sum(jacobi(a, p) * (q - 1 - 2 * (a * q // p))
                    for a in range(1, half + 1))
    denom = q - jacobi(q, p)
    if total % denom:
        raise InternalCheckError(
            f"weighted character sum {total} not divisible by {denom} at p={p}, q={q}")
    h = total // denom
    if h < 1:
        raise InternalCheckError(f"nonpositive class number {h} at p={p}, q={q}")
    return ClassNumberResult(p=p, h=h, method=f"lemma1(q={q})")


@lru_cache(maxsize=None)
def class_number_forms(p: int) -> ClassNumberResult:
    """h(-p) by counting reduced primitive forms A*x^2 + B*x*y + C*y^2.

    Counts integer triples with B^2 - 4*A*C = -p, |B| <= A <= C, and B >= 0
    whenever |B| == A or A == C.  Since -p == 1 (mod 4), B is odd, so the
    content gcd(A, B, C) can never be even and primitivity is automatic for
    prime p.  p == 3 is accepted here (h(-3) = 1) because it is needed as an
    exponent by the representation search.
    """
    _check_discriminant_prime(p, minimum=3)
    count = 0
    for a in range(1, math.isqrt(p // 3) + 1):
        for b in range(-a + 1, a + 1):
            num = b * b + p
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            count += 1
    if count < 1:
        raise InternalCheckError(f"no reduced forms found at p={p}")
    return ClassNumberResult(p=p, h=count, method="forms")


@dataclass(frozen=True)
class SquareSubgroupData:
    """Squares mod q, the indices i with -i a square, and their scaled sum."""

    q: int
    squares: frozenset[int]
    neg_square_indices: tuple[int, ...]
    beta: Fraction


@lru_cache(maxsize=1024)
def square_subgroup(q: int) -> SquareSubgroupData:
    """Square subgroup data for a prime q == 3 (mod 4).

    beta = (sum of the i with -i a square mod q) / q; an integer for q > 3
    but genuinely 2/3 at q == 3, which is why beta is carried as a Fraction.
    """
    if q % 4 != 3 or not is_prime(q):
        raise ValueError(f"q must be a prime == 3 (mod 4), got {q}")
    squares = frozenset(x * x % q for x in range(1, q))
    neg = tuple(sorted(q - s for s in squares))
    return SquareSubgroupData(q=q, squares=squares, neg_square_indices=neg,
                              beta=Fraction(sum(neg), q))


def beta_identity_check(q: int) -> Verdict:
    """Check beta == (h(-q) + 1)/2 + (q - 3)/4 for a prime q == 3 (mod 4), q > 3.

    q == 3 is rejected: beta is 2/3 there and the right side is 1, so the
    identity is genuinely false at that point rather than failing numerically.
    """
    if q == 3:
        raise RegimeError("beta identity does not hold at q=3 (beta is 2/3)")
    data = square_subgroup(q)
    h = class_number_forms(q).h
    rhs = Fraction(h + 1, 2) + Fraction(q - 3, 4)
    return make_verdict("beta", q, None, _exact(rhs), _exact(data.beta),
                        detail=f"h(-q)={h}, beta={data.beta}")


def _exact(fr: Fraction) -> int | str:
    """Integer when exact, else the fraction's text; strings never equal ints,
    so a non-integer side shows up as a plain mismatch."""
    return int(fr) if fr.denominator == 1 else str(fr)


@dataclass(frozen=True)
class Representation:
    """Solution of 4*p**h == a*a + q*b*b with a == 2 (mod q), b > 0,
    where h = h(-q) and gcd(a, b) carries no factor p."""

    p: int
    q: int
    h: int
    a: int
    b: int


def _square_root_exact(r: int) -> int | None:
    s = math.isqrt(r)
    return s if s * s == r else None


def _norm_solutions(target: int, q: int, p: int) -> list[tuple[int, int]]:
    """Primitive (|a|, b) with a*a + q*b*b == target, b > 0, ascending in b."""
    bmax = math.isqrt(target // q)
    hits: list[tuple[int, int]] = []
    if target < (1 << 62):
        chunk = 1 << 20
        for lo in range(1, bmax + 1, chunk):
            b = np.arange(lo, min(lo + chunk, bmax + 1), dtype=np.int64)
            r = target - q * b * b
            # float sqrt is only a guess; the squared back-check is exact int64
            guess = np.sqrt(r.astype(np.float64)).astype(np.int64)
            for d in (-1, 0, 1):
                s = guess + d
                ok = (s > 0) & (s * s == r)
                for i in np.nonzero(ok)[0]:
                    hits.append((int(s[i]), int(b[i])))
    else:
        for b in range(1, bmax + 1):
            s = _square_root_exact(target - q * b * b)
            if s:
                hits.append((s, b))
    hits = sorted(set(hits), key=lambda t: (t[1], t[0]))
    # drop imprimitive hits: p | b forces p | a and the pair is p times a
    # representation of a smaller power
    return [(s, b) for s, b in hits if b % p or s % p]


@lru_cache(maxsize=256)
def hahn_lee_representation(p: int, q: int) -> Representation:
    """Exhaustive search for the norm-form representation 4*p**h = a^2 + q*b^2.

    Needs q == 3 (mod 4) prime and p == 1 (mod q) prime.  For q > 3 the
    primitive solution is unique up to the sign of a, and ambiguity raises
    InternalCheckError; q == 3 has extra unit symmetry, so the solution with
    the smallest b is taken there.  Exactly one sign of a is == 2 (mod q).
    """
    if q % 4 != 3 or not is_prime(q):
        raise RegimeError(f"q must be a prime == 3 (mod 4), got {q}")
    if p == q or not is_prime(p) or p % q != 1:
        raise RegimeError(f"p must be a prime == 1 (mod q), got p={p}, q={q}")
    h = class_number_forms(q).h
    target = 4 * p ** h
    sols = _norm_solutions(target, q, p)
    if not sols:
        raise InternalCheckError(
            f"no primitive representation of 4*{p}**{h} by x^2 + {q}*y^2")
    if q > 3 and len({s for s, _ in sols}) > 1:
        raise InternalCheckError(
            f"ambiguous representation at p={p}, q={q}: {sols}")
    s, b = sols[0]
    a = s if s % q == 2 else -s
    if a % q != 2:
        raise InternalCheckError(
            f"neither sign of a={s} is 2 mod {q} at p={p}")
    if a * a + q * b * b != target:
        raise InternalCheckError(
            f"representation back-check failed at p={p}, q={q}")
    return Representation(p=p, q=q, h=h, a=a, b=b)
