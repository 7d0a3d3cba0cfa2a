"""Structured pass/fail records produced by the identity verifiers."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Verdict:
    """Outcome of checking one claim at one (p, q) pair.

    ``predicted`` holds the value the theorem asserts, ``computed`` the value
    obtained by direct calculation.  Both are ints or flat tuples of ints so
    they serialize cleanly; ``passed`` is true exactly when they are equal.
    """

    theorem_id: str
    p: int
    q: int | None
    predicted: object
    computed: object
    passed: bool
    detail: str = ""


def make_verdict(theorem_id: str, p: int, q: int | None,
                 predicted: object, computed: object, detail: str = "") -> Verdict:
    return Verdict(theorem_id=theorem_id, p=p, q=q, predicted=predicted,
                   computed=computed, passed=predicted == computed, detail=detail)
