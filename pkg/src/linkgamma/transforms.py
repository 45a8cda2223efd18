"""Sequence-level operators on truncated gamma sequences.

The shift action, the component-swap transform, mixed-derivative linking
numbers, and the recovery of the self-linking beta invariants are all
binomial sums in the sequence entries, so each is exact, additive in the
sequence, and needs only entries up to the index it produces.  Operations
fail loudly when the requested index exceeds the truncation order rather
than returning a silently shortened sequence.
"""

from __future__ import annotations

import math

from .gamma import GammaSeq


def _binom(m: int, j: int) -> int:
    # C(m, j) with the convention that out-of-range indices give 0
    if j < 0 or j > m:
        return 0
    return math.comb(m, j)


def apply_shift(s: GammaSeq, n: int) -> GammaSeq:
    """Apply the shift-plus-identity operator n times (entry k becomes
    ``s[k] + s[k-1]``).  Negative n inverts: the operator is a bijection on
    sequences, with preimage ``b[0] = a[0], b[k] = a[k] - b[k-1]``.  Entry k
    of the result depends only on entries up to k, so the truncation order
    is preserved."""
    entries = list(s.entries)
    if n >= 0:
        for _ in range(n):
            entries = [
                entries[k] + (entries[k - 1] if k else 0)
                for k in range(len(entries))
            ]
    else:
        for _ in range(-n):
            out = []
            prev = 0
            for a in entries:
                prev = a - prev
                out.append(prev)
            entries = out
    return GammaSeq(tuple(entries))


def swap_seq(s: GammaSeq) -> GammaSeq:
    """Gamma sequence after swapping the second and third components.

    Entry 0 is unchanged (linking number is symmetric); entry k becomes
    ``(-1)^k * sum_j C(k-1, j-1) s[j]`` for ``1 <= j <= k``.  The transform
    is an involution.
    """
    out = [s.entries[0]]
    for k in range(1, s.order + 1):
        acc = sum(_binom(k - 1, j - 1) * s.entries[j] for j in range(1, k + 1))
        out.append(-acc if k % 2 else acc)
    return GammaSeq(tuple(out))


def mixed_gamma0(s: GammaSeq, p: int, l: int) -> int:
    """Linking number of the p-fold derived second component with the
    l-fold derived third component, read off the plain gamma sequence as
    ``(-1)^l * sum_j C(l-1, j-1) s[p+j]`` for ``1 <= j <= l``."""
    if p < 0:
        raise ValueError("derivative count p must be nonnegative")
    if l < 1:
        raise ValueError("derivative count l must be positive")
    if p + l > s.order:
        raise ValueError(
            f"insufficient sequence order: need at least {p + l}, have {s.order}"
        )
    acc = sum(_binom(l - 1, j - 1) * s.entries[p + j] for j in range(1, l + 1))
    return -acc if l % 2 else acc


def beta_from_gamma(s: GammaSeq, k: int) -> int:
    """The k-th self-linking beta invariant of a 2-component link, read
    off the gamma sequence of the link augmented by a 0-framed push-off of
    its second component: ``(-1)^k * sum_j C(k-1, j-1) s[k+j]``.

    The input must be the gamma sequence of that augmented link, computed
    from a fixed Seifert surface.  The formula reads fixed positions of
    the sequence, so it is *not* invariant under the shift action on
    arbitrary sequences; only sequences actually arising from such links
    make the value a link invariant.
    """
    if k < 1:
        raise ValueError("beta index k must be positive")
    if 2 * k > s.order:
        raise ValueError(
            f"insufficient sequence order: need at least {2 * k}, have {s.order}"
        )
    acc = sum(_binom(k - 1, j - 1) * s.entries[k + j] for j in range(1, k + 1))
    return -acc if k % 2 else acc
