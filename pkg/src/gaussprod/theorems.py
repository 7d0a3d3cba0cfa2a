"""Verifiers for the quadratic-residue claims about block partial products.

Every verifier takes a concrete (p, q) in the regime of one claim, computes
both sides independently, and returns a Verdict whose ``passed`` flag is
exactly ``predicted == computed``.  Out-of-regime inputs raise RegimeError so
sweep drivers can tell "not applicable" apart from "refuted".
"""

from __future__ import annotations

from fractions import Fraction

from .arith import CongruenceConstraint, is_prime, jacobi, legendre
from .classnum import (class_number_dirichlet, hahn_lee_representation,
                       square_subgroup)
from .errors import RegimeError
from .products import (block_counts, enlarged_block_index,
                       generalized_partial_products, partial_products,
                       selected_block_indices, theorem1_product)
from .verdict import Verdict, make_verdict

__all__ = [
    "THEOREM_IDS",
    "regime_q_reason",
    "scan_domain",
    "verify",
    "verify_corollary",
    "verify_eq2_parity",
    "verify_eq_a",
    "verify_mordell",
    "verify_symmetry",
    "verify_theorem1",
    "verify_theorem2",
    "verify_theorem3",
    "verify_theorem4",
]


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise RegimeError(msg)


def _check_split_regime(p: int, q: int) -> None:
    """p == 3 (mod 4) prime with q an odd prime dividing p - 1 via p == 1 (mod q)."""
    _need(q >= 3 and q % 2 == 1 and is_prime(q), f"q={q}: need an odd prime")
    _need(is_prime(p), f"p={p}: need a prime")
    _need(p % 4 == 3, f"p={p}: need p == 3 (mod 4)")
    _need(p % q == 1, f"p={p}, q={q}: need p == 1 (mod q)")


def verify_mordell(p: int, q: int | None = None) -> Verdict:
    """((p-1)/2)! == (-1)**((1 + h(-p))/2) (mod p) for primes p == 3 (mod 4), p > 3."""
    _need(is_prime(p) and p > 3 and p % 4 == 3,
          f"p={p}: need a prime p == 3 (mod 4) with p > 3")
    half_fact = partial_products(p, 2).block(1)
    computed = {1: 1, p - 1: -1}.get(half_fact, half_fact)
    h = class_number_dirichlet(p).h
    predicted = -1 if ((1 + h) // 2) % 2 else 1
    return make_verdict("mordell", p, None, predicted, computed,
                        detail=f"((p-1)/2)! = {half_fact} mod p, h(-p) = {h}")


def verify_theorem1(p: int, q: int) -> Verdict:
    """The product of the selected lower-half blocks is a quadratic residue."""
    _check_split_regime(p, q)
    value = theorem1_product(p, q)
    return make_verdict("t1", p, q, 1, legendre(value, p),
                        detail=f"selected product = {value}")


def verify_corollary(p: int, q: int) -> Verdict:
    """Evenly many of the selected blocks are nonresidues."""
    _check_split_regime(p, q)
    table = partial_products(p, q)
    ks = selected_block_indices(q)
    syms = [legendre(table.block(k), p) for k in ks]
    parity = sum(1 for s in syms if s < 0) % 2
    detail = " ".join(f"k={k}:{s:+d}" for k, s in zip(ks, syms))
    if q == 7:
        # the selected set is {1, 3}, so even parity means equal symbols
        detail += f"; pair ({syms[0]:+d},{syms[1]:+d})"
    return make_verdict("corollary", p, q, 0, parity, detail=detail)


def verify_eq_a(p: int, q: int) -> Verdict:
    """Norm-form side (a|p) against the signed product of block factorials
    over the indices i with -i a square mod q."""
    _need(q > 3 and q % 4 == 3 and is_prime(q),
          f"q={q}: need a prime == 3 (mod 4), q > 3")
    _need(is_prime(p) and p % q == 1 and p != q,
          f"p={p}, q={q}: need a prime p == 1 (mod q)")
    rep = hahn_lee_representation(p, q)
    lhs = legendre(rep.a, p)
    sub = square_subgroup(q)
    pref = partial_products(p, q).prefix_factorials()
    val = 1
    for i in sub.neg_square_indices:
        val = val * pref[i - 1] % p
    if int(sub.beta) % 2:
        val = p - val
    rhs = legendre(val, p)
    return make_verdict(
        "eq_a", p, q, lhs, rhs,
        detail=f"a={rep.a} b={rep.b} h(-q)={rep.h} beta={int(sub.beta)} p%4={p % 4}")


def verify_theorem2(p: int, q: int) -> Verdict:
    """(a|p) == (-1)**((q+1)/4) in the doubly constrained regime, plus the
    bridge: the selected-block product and the product of the first (q-1)/2
    block factorials carry the same symbol."""
    _need(q % 4 == 3 and is_prime(q), f"q={q}: need a prime == 3 (mod 4)")
    _check_split_regime(p, q)
    rep = hahn_lee_representation(p, q)
    predicted_sym = -1 if ((q + 1) // 4) % 2 else 1
    computed_sym = legendre(rep.a, p)
    s_selected = legendre(theorem1_product(p, q), p)
    pref = partial_products(p, q).prefix_factorials()
    val = 1
    for i in range(1, (q - 1) // 2 + 1):
        val = val * pref[i - 1] % p
    bridge = 1 if s_selected == legendre(val, p) else 0
    return make_verdict("t2", p, q, (predicted_sym, 1), (computed_sym, bridge),
                        detail=f"a={rep.a} b={rep.b} h(-q)={rep.h}")


_T3_PLUS = frozenset({1, 15})
_T3_MINUS = frozenset({7, 9})
_T3_H = frozenset({3, 13})


def verify_theorem3(p: int, q: int) -> Verdict:
    """Symbol of the selected generalized-block product when p == 2 (mod q),
    predicted from q mod 16 and h(-p); also checks every block has
    (p-2)/q elements except the central one, which has one more."""
    _need(q >= 3 and q % 2 == 1 and is_prime(q), f"q={q}: need an odd prime")
    _need(is_prime(p) and p > q, f"p={p}: need a prime > q")
    _need(p % 4 == 3, f"p={p}: need p == 3 (mod 4)")
    _need(p % q == 2, f"p={p}, q={q}: need p == 2 (mod q)")
    value = theorem1_product(p, q, generalized=True)
    sym = legendre(value, p)
    h = class_number_dirichlet(p).h
    qm = q % 16
    if qm in _T3_PLUS:
        predicted_sym = 1
    elif qm in _T3_MINUS:
        predicted_sym = -1
    elif qm in _T3_H:
        predicted_sym = -1 if ((h + 1) // 2) % 2 else 1
    else:
        predicted_sym = -1 if (1 + (h + 1) // 2) % 2 else 1
    counts = block_counts(p, q, generalized=True)
    base = (p - 2) // q
    center = (q + 1) // 2
    sizes_ok = 1 if all(
        counts.block_size(k) == base + (1 if k == center else 0)
        for k in range(1, q + 1)) else 0
    return make_verdict("t3", p, q, (predicted_sym, 1), (sym, sizes_ok),
                        detail=f"product={value} h(-p)={h} q%16={qm}")


def verify_theorem4(p: int, q: int) -> Verdict:
    """Symbol of the selected generalized-block product when p == 3 (mod q),
    predicted from q mod 12 and h(-p); checks the two enlarged-block
    positions, the exact count identity, and its mod-2 reduction."""
    _need(q > 3 and q % 2 == 1 and is_prime(q), f"q={q}: need an odd prime > 3")
    _need(is_prime(p) and p > q, f"p={p}: need a prime > q")
    _need(p % 4 == 3, f"p={p}: need p == 3 (mod 4)")
    _need(p % q == 3, f"p={p}, q={q}: need p == 3 (mod q)")
    value = theorem1_product(p, q, generalized=True)
    sym = legendre(value, p)
    h = class_number_dirichlet(p).h
    qm = q % 12
    if qm in (1, 11):
        predicted_sym = 1
    else:
        predicted_sym = -1 if ((h + 1) // 2) % 2 else 1
    counts = block_counts(p, q, generalized=True)
    base = (p - 3) // q
    try:
        kstar = enlarged_block_index(q)
        enlarged = {kstar, q + 1 - kstar}
        sizes_ok = 1 if all(
            counts.block_size(k) == base + (1 if k in enlarged else 0)
            for k in range(1, q + 1)) else 0
        knote = f"k*={kstar}"
    except ArithmeticError as exc:
        sizes_ok = 0
        knote = str(exc)
    half = (q - 1) // 2
    rhs = sum(counts.nonresidues[k - 1] * ((q + 1) // 2 - k)
              for k in range(1, half + 1))
    jq3 = jacobi(q, 3)
    lhs = (Fraction(q * q - 1, 8) * Fraction(p - 3, 2 * q)
           + Fraction(q - jq3, 12) - Fraction((q - legendre(q, p)) * h, 4))
    identity_ok = 1 if lhs == rhs else 0
    reduced = (q - jq3) * (1 - 3 * h)
    parity_ok = 1 if reduced % 12 == 0 and (rhs - reduced // 12) % 2 == 0 else 0
    return make_verdict("t4", p, q, (predicted_sym, 1, 1, 1),
                        (sym, sizes_ok, identity_ok, parity_ok),
                        detail=f"product={value} h(-p)={h} q%12={qm} {knote}")


def verify_eq2_parity(p: int, q: int) -> Verdict:
    """Exact count identities tying h(-p) to weighted block counts, and the
    evenness of the nonresidue count over odd-weight lower-half blocks."""
    _check_split_regime(p, q)
    counts = block_counts(p, q)
    h = class_number_dirichlet(p).h
    s = legendre(q, p)
    half = (q - 1) // 2
    weights = [(q + 1) // 2 - k for k in range(1, half + 1)]
    rhs_diff = sum((counts.residues[k - 1] - counts.nonresidues[k - 1]) * w
                   for k, w in enumerate(weights, start=1))
    rhs_nonres = sum(counts.nonresidues[k - 1] * w
                     for k, w in enumerate(weights, start=1))
    parity = sum(counts.nonresidues[k - 1]
                 for k, w in enumerate(weights, start=1) if w % 2) % 2
    lhs_diff = Fraction((q - s) * h, 2)
    lhs_nonres = (Fraction(q * q - 1, 8) * Fraction(p - 1, 2 * q)
                  - Fraction((q - s) * h, 4))
    predicted = (_exact_int(lhs_diff), _exact_int(lhs_nonres), 0)
    computed = (rhs_diff, rhs_nonres, parity)
    return make_verdict("eq2_parity", p, q, predicted, computed,
                        detail=f"h(-p)={h} (q|p)={s:+d}")


def _exact_int(fr: Fraction) -> int | str:
    # a non-integer side surfaces as a string, which never equals the int side
    return int(fr) if fr.denominator == 1 else str(fr)


def verify_symmetry(p: int, q: int) -> Verdict:
    """Block k and block q+1-k carry equal products; the central block and
    the full product are both nonresidues (the latter by Wilson)."""
    _check_split_regime(p, q)
    table = partial_products(p, q)
    vals = table.values
    mismatches = sum(1 for k in range(1, q + 1) if vals[k - 1] != vals[q - k])
    central_value = vals[(q + 1) // 2 - 1]
    central = legendre(central_value, p)
    full = table.full_product()
    wilson = legendre(full, p)
    return make_verdict("symmetry", p, q, (0, -1, -1),
                        (mismatches, central, wilson),
                        detail=f"central={central_value} full={full}")


_VERIFIERS = {
    "mordell": verify_mordell,
    "t1": verify_theorem1,
    "corollary": verify_corollary,
    "eq_a": verify_eq_a,
    "t2": verify_theorem2,
    "t3": verify_theorem3,
    "t4": verify_theorem4,
    "eq2_parity": verify_eq2_parity,
    "symmetry": verify_symmetry,
}

THEOREM_IDS = tuple(sorted(_VERIFIERS))


def verify(theorem_id: str, p: int, q: int | None = None) -> Verdict:
    """Dispatch one check by id; see THEOREM_IDS for the valid names."""
    if theorem_id not in _VERIFIERS:
        raise ValueError(f"unknown theorem id {theorem_id!r}; "
                         f"valid: {', '.join(THEOREM_IDS)}")
    if theorem_id == "mordell":
        return verify_mordell(p)
    if q is None:
        raise ValueError(f"{theorem_id} needs q")
    return _VERIFIERS[theorem_id](p, q)


def regime_q_reason(theorem_id: str, q: int | None) -> str | None:
    """Why q alone rules a theorem out, or None if some p could be applicable."""
    if theorem_id == "mordell":
        return None
    if q is None:
        return "needs q"
    if q < 3 or q % 2 == 0 or not is_prime(q):
        return f"q={q} is not an odd prime"
    if theorem_id in ("eq_a", "t2") and q % 4 != 3:
        return f"q={q} is not 3 mod 4"
    if theorem_id == "eq_a" and q == 3:
        return "q=3 sits outside the representation identity"
    if theorem_id == "t4" and q == 3:
        return "q=3 has no enlarged-block layout"
    return None


def scan_domain(theorem_id: str, q: int | None) -> tuple[list[CongruenceConstraint], int]:
    """Prime-enumeration recipe for one theorem at one q: CRT constraints
    plus a strict lower bound on p.  Callers must have cleared
    regime_q_reason first."""
    if theorem_id == "mordell":
        return [CongruenceConstraint(4, 3)], 3
    assert q is not None
    if theorem_id == "eq_a":
        return [CongruenceConstraint(q, 1)], q
    if theorem_id == "t3":
        return [CongruenceConstraint(4, 3), CongruenceConstraint(q, 2)], q
    if theorem_id == "t4":
        return [CongruenceConstraint(4, 3), CongruenceConstraint(q, 3)], q
    return [CongruenceConstraint(4, 3), CongruenceConstraint(q, 1)], q
