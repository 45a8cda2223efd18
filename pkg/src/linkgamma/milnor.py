"""Milnor-invariant residues of a gamma sequence.

The k-th entry of a gamma sequence lifts a higher-order linking number
that is only well defined modulo the gcd of the earlier entries.  This
module reduces each entry accordingly: modulus 0 encodes "exact integer,
no indeterminacy" (always the case at index 0, and at every index preceded
only by zeros), and positive moduli carry least-nonnegative residues.

The reductions are genuine invariants of the underlying link even though
the raw sequence is defined only up to the shift action: shifting adds the
previous entry to each entry, the previous entry is itself one of the gcd
generators, and the gcd chain is unchanged under that move.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .gamma import GammaSeq


@dataclass(frozen=True)
class MilnorResidue:
    """Entry ``index`` reduced modulo ``modulus``; modulus 0 means the
    residue is the exact integer value."""

    index: int
    modulus: int
    residue: int


def milnor_residues(s: GammaSeq) -> list[MilnorResidue]:
    """Reduce each sequence entry modulo the gcd of the entries before it.

    The modulus at index k is ``gcd{|s[i]| : i < k}`` with the empty gcd
    taken as 0 and zeros ignored by gcd; equivalently the moduli follow
    the chain ``m[k+1] = gcd(m[k], |s[k]|)``.
    """
    out = []
    modulus = 0
    for k, value in enumerate(s.entries):
        residue = value % modulus if modulus else value
        out.append(MilnorResidue(k, modulus, residue))
        modulus = math.gcd(modulus, value)
    return out
