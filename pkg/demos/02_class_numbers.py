"""Three independent routes to the class number h(-p), and why it matters here.

Run:  python demos/02_class_numbers.py
"""

from gaussprod import (CongruenceConstraint, class_number_dirichlet,
                       class_number_forms, class_number_lemma1,
                       primes_matching, verify_mordell)

print("h(-p) three ways: a half-interval character sum, a floor-weighted")
print("character sum (any auxiliary odd prime q), and a count of reduced")
print("binary quadratic forms of discriminant -p.")
print()

for p in (23, 47, 71, 479, 1259):
    d = class_number_dirichlet(p).h
    l3 = class_number_lemma1(p, 3).h
    l13 = class_number_lemma1(p, 13).h
    f = class_number_forms(p).h
    mark = "ok" if d == l3 == l13 == f else "DISAGREE"
    print(f"  p={p:>5}: dirichlet={d:>2}  weighted(q=3)={l3:>2}  "
          f"weighted(q=13)={l13:>2}  forms={f:>2}  [{mark}]")
print()

print("The parity of (1+h(-p))/2 fixes the sign of ((p-1)/2)! mod p:")
for p in primes_matching(120, [CongruenceConstraint(4, 3)]):
    if p > 3:
        v = verify_mordell(p)
        print(f"  p={p:>3}: {v.detail}; predicted {v.predicted:+d}, "
              f"computed {v.computed:+d} -> {'ok' if v.passed else 'FAIL'}")
