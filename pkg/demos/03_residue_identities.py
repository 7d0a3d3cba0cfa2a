"""The residue-symbol identities, checked live at small (p, q) pairs.

Run:  python demos/03_residue_identities.py
"""

from gaussprod import (CongruenceConstraint, primes_matching, verify,
                       verify_eq2_parity, verify_theorem3, verify_theorem4)

print("Selected-block products are residues when p = 1 (mod q), p = 3 (mod 4):")
for q in (3, 5, 7, 11):
    ps = primes_matching(300, [CongruenceConstraint(4, 3),
                               CongruenceConstraint(q, 1)])
    marks = " ".join(f"{p}:{'ok' if verify('t1', p, q).passed else 'FAIL'}"
                     for p in ps)
    print(f"  q={q:>2}: {marks}")
print()

print("Exact identities tying weighted block counts to h(-p):")
for p, q in ((7, 3), (31, 3), (43, 7), (419, 11)):
    v = verify_eq2_parity(p, q)
    print(f"  p={p}, q={q}: predicted {v.predicted} computed {v.computed} "
          f"[{v.detail}] -> {'ok' if v.passed else 'FAIL'}")
print()

print("Shift the residue class: p = 2 (mod q) uses floor-cut blocks and a")
print("sign table keyed by q mod 16:")
for q in (3, 5, 7, 17):
    ps = [p for p in primes_matching(400, [CongruenceConstraint(4, 3),
                                           CongruenceConstraint(q, 2)]) if p > q]
    for p in ps[:3]:
        v = verify_theorem3(p, q)
        print(f"  q={q:>2} p={p:>3}: predicted {v.predicted[0]:+d} "
              f"computed {v.computed[0]:+d} [{v.detail}]")
print()

print("p = 3 (mod q) enlarges two mirrored blocks (index ceil(q/3) and its")
print("reflection); sign table keyed by q mod 12:")
for q in (5, 7, 11, 13):
    ps = [p for p in primes_matching(400, [CongruenceConstraint(4, 3),
                                           CongruenceConstraint(q, 3)]) if p > q]
    for p in ps[:2]:
        v = verify_theorem4(p, q)
        print(f"  q={q:>2} p={p:>3}: {v.detail} -> "
              f"{'ok' if v.passed else 'FAIL'}")
