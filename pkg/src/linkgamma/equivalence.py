"""Equivalence of gamma data modulo its indeterminacy.

Two truncated sequences represent the same class when one is carried to
the other by an integer power of the shift-plus-identity operator; two
rational functions represent the same class when they differ by an integer
power of t.  Both directions of the shift are admitted (the operator is a
bijection on sequences), the negative direction via the inverse recurrence
rather than a closed binomial formula.

A pair of identically zero truncations is reported as *indeterminate*, not
equivalent: a truncation cannot distinguish the zero class from a class
whose support starts beyond the truncation order, and no false
certificates are issued.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exactnum import RatFn, power_of_t_quotient
from .gamma import GammaSeq
from .transforms import apply_shift

EQUIVALENT = "equivalent"
DISTINCT = "distinct"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class EquivVerdict:
    """Outcome of a sequence comparison.

    ``equivalent`` carries the shift exponent taking the first sequence to
    the second on the full common truncation; ``distinct`` carries the
    smallest index by which every admissible shift has already failed.
    """

    kind: str
    shift: int | None = None
    witness_index: int | None = None

    @classmethod
    def equivalent(cls, n: int) -> "EquivVerdict":
        return cls(EQUIVALENT, shift=n)

    @classmethod
    def distinct(cls, index: int) -> "EquivVerdict":
        return cls(DISTINCT, witness_index=index)

    @classmethod
    def indeterminate(cls) -> "EquivVerdict":
        return cls(INDETERMINATE)

    def __str__(self):
        if self.kind == EQUIVALENT:
            return f"equivalent({self.shift})"
        if self.kind == DISTINCT:
            return f"distinct({self.witness_index})"
        return "indeterminate"


def _first_nonzero(s: GammaSeq):
    for k, e in enumerate(s.entries):
        if e:
            return k
    return None


def are_equivalent(a: GammaSeq, b: GammaSeq) -> EquivVerdict:
    """Decide whether two equal-order truncations lie in the same class
    modulo the shift action.

    The leading index and leading value are shift-invariant, and the entry
    one past the leading index moves by (shift exponent) * (leading value),
    which pins the only candidate exponent; the remaining entries are then
    compared outright.
    """
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")
    ka = _first_nonzero(a)
    kb = _first_nonzero(b)
    if ka is None and kb is None:
        return EquivVerdict.indeterminate()
    if ka is None or kb is None:
        return EquivVerdict.distinct(ka if kb is None else kb)
    if ka != kb:
        return EquivVerdict.distinct(min(ka, kb))
    if a.entries[ka] != b.entries[kb]:
        return EquivVerdict.distinct(ka)
    k = ka
    if k == a.order:
        return EquivVerdict.equivalent(0)
    lead = a.entries[k]
    diff = b.entries[k + 1] - a.entries[k + 1]
    if diff % lead:
        return EquivVerdict.distinct(k + 1)
    n = diff // lead
    shifted = apply_shift(a, n)
    for idx in range(k + 1, a.order + 1):
        if shifted.entries[idx] != b.entries[idx]:
            return EquivVerdict.distinct(idx)
    return EquivVerdict.equivalent(n)


def canonicalize(s: GammaSeq) -> tuple[GammaSeq, int]:
    """Canonical representative of the class of ``s`` plus the exponent
    that reaches it.

    The representative is the unique shift placing the entry after the
    leading index in the least-nonnegative residue range modulo the
    leading value.  Idempotent, and constant on equivalence classes: two
    sequences are equivalent exactly when their canonical forms agree
    entrywise.
    """
    k = _first_nonzero(s)
    if k is None or k == s.order:
        return s, 0
    lead = s.entries[k]
    nxt = s.entries[k + 1]
    residue = nxt % abs(lead)
    n = (residue - nxt) // lead
    return apply_shift(s, n), n


def ratfn_equivalent(f: RatFn, g: RatFn):
    """The integer n with ``f == t**n * g``, or None when the two rational
    functions are in different classes.  Two zero functions are in the
    same class with exponent 0."""
    if not f and not g:
        return 0
    if not g:
        raise ZeroDivisionError("comparison against zero")
    return power_of_t_quotient(f, g)
