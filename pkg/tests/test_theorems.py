import pytest

from gaussprod import (CongruenceConstraint, RegimeError, THEOREM_IDS,
                       class_number_dirichlet, legendre, primes_matching,
                       regime_q_reason, verify, verify_corollary,
                       verify_eq2_parity, verify_eq_a, verify_mordell,
                       verify_symmetry, verify_theorem1, verify_theorem2,
                       verify_theorem3, verify_theorem4)
from gaussprod.theorems import scan_domain


def split_pairs(qs, p_max):
    return [(p, q) for q in qs
            for p in primes_matching(p_max, [CongruenceConstraint(4, 3),
                                             CongruenceConstraint(q, 1)])]


def test_theorem_id_enumeration():
    assert set(THEOREM_IDS) == {"mordell", "t1", "corollary", "eq_a", "t2",
                                "t3", "t4", "eq2_parity", "symmetry"}


def test_mordell_frozen_cases():
    v = verify_mordell(7)
    assert (v.predicted, v.computed, v.passed) == (-1, -1, True)
    v = verify_mordell(23)
    assert (v.predicted, v.computed, v.passed) == (1, 1, True)
    v = verify_mordell(31)   # h(-31) = 3 so the exponent is even
    assert v.predicted == 1 and v.passed


def test_mordell_against_direct_factorial():
    for p in primes_matching(500, [CongruenceConstraint(4, 3)]):
        if p == 3:
            continue
        f = 1
        for j in range(1, (p - 1) // 2 + 1):
            f = f * j % p
        want = 1 if f == 1 else -1
        assert f in (1, p - 1)
        v = verify_mordell(p)
        assert v.computed == want and v.passed, p


def test_mordell_regime():
    for bad in (3, 13, 15, 2):
        with pytest.raises(RegimeError):
            verify_mordell(bad)


def test_t1_and_corollary_pass_on_oracle_range():
    for p, q in split_pairs((3, 5, 7, 11, 13), 2000):
        v = verify_theorem1(p, q)
        assert v.passed, (p, q, v)
        c = verify_corollary(p, q)
        assert c.passed, (p, q, c)


def test_corollary_q7_pair_shares_symbol():
    for p in primes_matching(3000, [CongruenceConstraint(4, 3),
                                    CongruenceConstraint(7, 1)]):
        v = verify_corollary(p, 7)
        assert v.passed
        # parity 0 over a two-element selection means equal symbols
        assert "pair (+1,+1)" in v.detail or "pair (-1,-1)" in v.detail, (p, v)


def test_t1_regime_errors():
    with pytest.raises(RegimeError):
        verify_theorem1(13, 3)     # 13 = 1 mod 4
    with pytest.raises(RegimeError):
        verify_theorem1(11, 3)     # 11 = 2 mod 3
    with pytest.raises(RegimeError):
        verify_theorem1(15, 7)     # composite
    with pytest.raises(RegimeError):
        verify_theorem1(7, 9)      # q composite


def test_eq_a_frozen_and_range():
    v = verify_eq_a(43, 7)
    assert (v.predicted, v.computed) == (1, 1)
    v = verify_eq_a(29, 7)
    assert (v.predicted, v.computed) == (-1, -1)
    for q in (7, 11, 19):
        for p in primes_matching(1500, [CongruenceConstraint(q, 1)]):
            assert verify_eq_a(p, q).passed, (p, q)


def test_eq_a_covers_both_residue_classes_mod_4():
    # the claim is not restricted to p = 3 (mod 4); make sure both kinds occur
    seen = {1: 0, 3: 0}
    for p in primes_matching(1500, [CongruenceConstraint(7, 1)]):
        v = verify_eq_a(p, 7)
        assert v.passed
        seen[p % 4] += 1
    assert seen[1] > 0 and seen[3] > 0


def test_eq_a_regime_errors():
    with pytest.raises(RegimeError):
        verify_eq_a(7, 3)         # q=3 excluded
    with pytest.raises(RegimeError):
        verify_eq_a(11, 5)        # q = 1 mod 4
    with pytest.raises(RegimeError):
        verify_eq_a(13, 7)        # 13 = 6 mod 7


def test_t2_frozen_and_range():
    v = verify_theorem2(7, 3)
    assert v.predicted == (-1, 1) and v.passed
    v = verify_theorem2(43, 7)
    assert v.predicted == (1, 1) and v.passed
    for q in (3, 7, 11, 19):
        for p in primes_matching(2000, [CongruenceConstraint(4, 3),
                                        CongruenceConstraint(q, 1)]):
            assert verify_theorem2(p, q).passed, (p, q)


def test_t2_sign_depends_only_on_q():
    # the predicted symbol is (-1)**((q+1)/4), independent of p
    assert verify_theorem2(7, 3).predicted[0] == -1      # (3+1)/4 = 1
    assert verify_theorem2(23, 11).predicted[0] == -1    # (11+1)/4 = 3
    assert verify_theorem2(43, 7).predicted[0] == 1      # (7+1)/4 = 2
    assert verify_theorem2(191, 19).predicted[0] == -1   # (19+1)/4 = 5


def test_t3_frozen_and_range():
    assert verify_theorem3(11, 3).passed
    assert verify_theorem3(23, 7).passed
    assert verify_theorem3(7, 5).passed
    for q in (3, 5, 7, 11, 13, 17):
        for p in primes_matching(2000, [CongruenceConstraint(4, 3),
                                        CongruenceConstraint(q, 2)]):
            if p > q:
                v = verify_theorem3(p, q)
                assert v.passed, (p, q, v)


def test_t3_covers_every_mod16_branch():
    # hit all four rows of the sign table: q = 17, 7, 3, 5 give 1, 7, 3, 5 mod 16
    cases = {17: 1, 7: 7, 3: 3, 5: 5}
    for q, residue in cases.items():
        assert q % 16 == residue
        ps = [p for p in primes_matching(500, [CongruenceConstraint(4, 3),
                                               CongruenceConstraint(q, 2)])
              if p > q]
        assert ps, q
        for p in ps:
            assert verify_theorem3(p, q).passed, (p, q)


def test_t3_regime_errors():
    with pytest.raises(RegimeError):
        verify_theorem3(13, 11)    # 13 = 1 mod 4
    with pytest.raises(RegimeError):
        verify_theorem3(19, 3)     # 19 = 1 mod 3
    assert verify_theorem3(23, 3).passed   # 23 = 2 mod 3 is in regime


def test_t4_frozen_and_range():
    assert verify_theorem4(23, 5).passed
    assert verify_theorem4(31, 7).passed
    assert verify_theorem4(47, 11).passed
    for q in (5, 7, 11, 13, 17, 19):
        for p in primes_matching(2000, [CongruenceConstraint(4, 3),
                                        CongruenceConstraint(q, 3)]):
            if p > q:
                v = verify_theorem4(p, q)
                assert v.passed, (p, q, v)


def test_t4_regime_errors():
    with pytest.raises(RegimeError):
        verify_theorem4(31, 3)     # q = 3 excluded
    with pytest.raises(RegimeError):
        verify_theorem4(29, 13)    # 29 = 1 mod 4


def test_eq2_parity_frozen_values():
    v = verify_eq2_parity(7, 3)
    assert v.predicted == (2, 0, 0) and v.computed == (2, 0, 0)
    v = verify_eq2_parity(31, 3)
    assert v.predicted == (6, 2, 0) and v.computed == (6, 2, 0)
    v = verify_eq2_parity(43, 7)
    assert v.predicted == (4, 16, 0) and v.computed == (4, 16, 0)


def test_eq2_parity_range():
    for p, q in split_pairs((3, 5, 7, 11, 13, 17, 19), 2000):
        assert verify_eq2_parity(p, q).passed, (p, q)


def test_symmetry_range():
    for p, q in split_pairs((3, 5, 7, 11, 13), 2000):
        v = verify_symmetry(p, q)
        assert v.passed, (p, q, v)


def test_symmetry_detail_reports_values():
    v = verify_symmetry(7, 3)
    assert "central=5" in v.detail and "full=6" in v.detail


def test_dispatch():
    assert verify("mordell", 7).passed
    assert verify("t1", 7, 3).passed
    with pytest.raises(ValueError):
        verify("nope", 7, 3)
    with pytest.raises(ValueError):
        verify("t1", 7)            # missing q


def test_regime_q_reason():
    assert regime_q_reason("mordell", None) is None
    assert regime_q_reason("t1", 4) is not None
    assert regime_q_reason("t1", 9) is not None
    assert regime_q_reason("eq_a", 3) is not None
    assert regime_q_reason("eq_a", 13) is not None   # 13 = 1 mod 4
    assert regime_q_reason("t2", 5) is not None
    assert regime_q_reason("t2", 3) is None
    assert regime_q_reason("t4", 3) is not None
    assert regime_q_reason("t4", 5) is None
    assert regime_q_reason("symmetry", 13) is None


def test_scan_domain_constraints_match_verifier_regimes():
    # every prime produced by the domain recipe must be accepted by the
    # verifier, for each theorem and a couple of q
    cases = [("mordell", None), ("t1", 5), ("corollary", 7), ("t2", 7),
             ("eq_a", 7), ("t3", 7), ("t4", 7), ("eq2_parity", 3),
             ("symmetry", 3)]
    for tid, q in cases:
        constraints, min_p = scan_domain(tid, q)
        ps = [p for p in primes_matching(400, constraints) if p > min_p]
        assert ps, (tid, q)
        for p in ps:
            v = verify(tid, p, q)   # must not raise RegimeError
            assert v.theorem_id == tid


def test_verdict_pass_flag_is_equality():
    v = verify_theorem1(7, 3)
    assert v.passed == (v.predicted == v.computed)
    assert v.p == 7 and v.q == 3 and v.theorem_id == "t1"


def test_class_number_parity_drives_mordell_sign():
    # spot-check the sign table against independently computed h
    for p, h, sign in ((7, 1, -1), (23, 3, 1), (31, 3, 1), (47, 5, -1),
                       (71, 7, 1)):
        assert class_number_dirichlet(p).h == h
        assert verify_mordell(p).predicted == sign
