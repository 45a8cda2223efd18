"""Gamma invariants of 3-component links from Seifert-matrix data.

A link ``(L1, L2, L3)`` whose distinguished first component bounds a genus-g
Seifert surface disjoint from the other two is described here purely
homologically by a :class:`SeifertPresentation`: the ``2g x 2g`` Seifert
matrix ``V`` of that surface, integer column vectors ``v2`` and ``v3``
giving the classes of the second and third components in the surface
complement (coordinates in the linking-dual basis, *not* the surface
basis), and the linking number ``lk23`` of those two components.

From this data the k-th gamma invariant is the integer

    gamma_k = (A^-1 (V A^-1)^(k-1) v2)^T v3,   A = V - V^T,

with ``gamma_0 = lk23``.  The skew intersection form ``A`` of a genuine
Seifert surface is unimodular, and being skew of even size its determinant
is the square of its Pfaffian, hence exactly +1; :func:`validate` enforces
this, which also makes ``A^-1`` integral so every gamma value is an
integer.

The whole sequence is equivalently packaged as a rational function: the
Taylor coefficients at t = 1 of

    h(t) = lk23 + (t - 1) * v3^T (A - (t - 1) V)^-1 v2

reproduce the gamma sequence.  :func:`h_closed_form` computes this via
adjugate and determinant over polynomial matrices, a different route from
the integer recursion above, and the test suites check coefficient-by-
coefficient agreement between the two before anything relies on the
closed form.

Whether a given matrix-valid presentation is realized by an actual link is
not decided here; validation checks exactly the conditions forced by the
algebra.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .exactnum import Poly, RatFn, ratfn_reduce
from .polylin import (
    IntMatrix,
    IntVector,
    adjugate,
    det,
    identity,
    int_inverse,
    mat_mul,
    mat_vec,
    transpose,
    vec_dot,
)


@dataclass(frozen=True)
class SeifertPresentation:
    """Homological data of a 3-component link with distinguished component."""

    genus: int
    seifert_matrix: IntMatrix
    v2: IntVector
    v3: IntVector
    lk23: int
    name: str | None = None

    def __post_init__(self):
        object.__setattr__(
            self, "seifert_matrix", tuple(tuple(row) for row in self.seifert_matrix)
        )
        object.__setattr__(self, "v2", tuple(self.v2))
        object.__setattr__(self, "v3", tuple(self.v3))


@dataclass(frozen=True)
class GammaSeq:
    """Truncated gamma sequence; ``entries[k]`` is the k-th invariant."""

    entries: tuple[int, ...]

    def __post_init__(self):
        entries = tuple(self.entries)
        if not entries:
            raise ValueError("a gamma sequence has at least its order-0 entry")
        for e in entries:
            if not isinstance(e, int) or isinstance(e, bool):
                raise TypeError("gamma entries must be integers")
        object.__setattr__(self, "entries", entries)

    @property
    def order(self) -> int:
        return len(self.entries) - 1


def intersection_form(p: SeifertPresentation) -> IntMatrix:
    """The skew form ``V - V^T`` of the presentation's surface."""
    v = p.seifert_matrix
    return tuple(
        tuple(v[i][j] - v[j][i] for j in range(len(v))) for i in range(len(v))
    )


def validate(p: SeifertPresentation) -> list[str]:
    """Check every presentation invariant; an empty list means valid."""
    problems = []
    v = p.seifert_matrix
    n = len(v)
    if not isinstance(p.genus, int) or p.genus < 1:
        problems.append(f"genus must be a positive integer, got {p.genus!r}")
    if n == 0 or any(len(row) != n for row in v):
        shape = f"{n}x{len(v[0]) if v else 0}"
        problems.append(f"seifert_matrix must be square, got shape {shape}")
        return problems
    for row in v:
        for e in row:
            if not isinstance(e, int) or isinstance(e, bool):
                problems.append("seifert_matrix entries must be integers")
                return problems
    if n % 2:
        problems.append(f"seifert_matrix has odd size {n}; expected even size 2g")
    if isinstance(p.genus, int) and p.genus >= 1 and n != 2 * p.genus:
        problems.append(f"seifert_matrix size {n} does not match genus {p.genus}")
    for label, vec in (("v2", p.v2), ("v3", p.v3)):
        if len(vec) != n:
            problems.append(f"{label} has length {len(vec)}, expected {n}")
        elif any(not isinstance(e, int) or isinstance(e, bool) for e in vec):
            problems.append(f"{label} entries must be integers")
    if not isinstance(p.lk23, int) or isinstance(p.lk23, bool):
        problems.append("lk23 must be an integer")
    d = det(intersection_form(p))
    if d != 1:
        problems.append(f"det(V - V^T) = {d}, expected 1")
    return problems


def _require_valid(p: SeifertPresentation) -> None:
    problems = validate(p)
    if problems:
        raise ValueError("invalid presentation: " + "; ".join(problems))


def derivative_class(p: SeifertPresentation, k: int) -> IntVector:
    """Homology class ``(V A^-1)^k v2`` of the k-fold derived second
    component in the surface complement."""
    _require_valid(p)
    if k < 1:
        raise ValueError("derivative order k must be positive")
    a_inv = int_inverse(intersection_form(p))
    v = p.seifert_matrix
    w = p.v2
    for _ in range(k):
        w = mat_vec(v, mat_vec(a_inv, w))
    return w


def gamma_k(p: SeifertPresentation, k: int) -> int:
    """The k-th gamma invariant of the presentation (k = 0 is ``lk23``)."""
    _require_valid(p)
    if k < 0:
        raise ValueError("gamma index must be nonnegative")
    if k == 0:
        return p.lk23
    a_inv = int_inverse(intersection_form(p))
    v = p.seifert_matrix
    u = mat_vec(a_inv, p.v2)
    for _ in range(k - 1):
        u = mat_vec(a_inv, mat_vec(v, u))
    return vec_dot(u, p.v3)


def gamma_seq(p: SeifertPresentation, order: int) -> GammaSeq:
    """Gamma invariants 0..order in a single pass of the linear recursion
    (no repeated matrix powers)."""
    _require_valid(p)
    if order < 0:
        raise ValueError("sequence order must be nonnegative")
    entries = [p.lk23]
    if order:
        a_inv = int_inverse(intersection_form(p))
        v = p.seifert_matrix
        u = mat_vec(a_inv, p.v2)
        for _ in range(order):
            entries.append(vec_dot(u, p.v3))
            u = mat_vec(a_inv, mat_vec(v, u))
    return GammaSeq(tuple(entries))


def h_closed_form(p: SeifertPresentation) -> RatFn:
    """The rational function whose Taylor coefficients at t = 1 are the
    gamma sequence:

        lk23 + (t - 1) * v3^T adjugate(A - (t-1)V) v2 / det(A - (t-1)V).

    The denominator evaluates to det(A) = 1 at t = 1, so the expansion
    center is never a pole for a valid presentation.
    """
    _require_valid(p)
    a = intersection_form(p)
    v = p.seifert_matrix
    n = len(v)
    # entry of A - (t-1)V as a polynomial in t
    m = tuple(
        tuple(Poly((a[i][j] + v[i][j], -v[i][j])) for j in range(n))
        for i in range(n)
    )
    d = det(m)
    adj = adjugate(m)
    pairing = Poly(())
    for i in range(n):
        if p.v3[i] == 0:
            continue
        for j in range(n):
            if p.v2[j] == 0:
                continue
            pairing = pairing + adj[i][j] * (p.v3[i] * p.v2[j])
    num = d * p.lk23 + Poly((-1, 1)) * pairing
    return ratfn_reduce(num, d)


def _symplectic(n: int) -> IntMatrix:
    j = [[0] * n for _ in range(n)]
    for b in range(0, n, 2):
        j[b][b + 1] = 1
        j[b + 1][b] = -1
    return tuple(tuple(row) for row in j)


def gen_presentation(seed: int, genus: int, bound: int) -> SeifertPresentation:
    """Deterministic pseudorandom valid presentation.

    Strictly-lower and diagonal entries of V are drawn from
    ``[-bound, bound]``; strictly-upper entries are set so that
    ``V - V^T`` equals the standard symplectic form, then the matrix is
    conjugated by a few random unimodular shears (which preserves
    ``det(V - V^T) = 1``).  The same arguments always produce the same
    presentation.
    """
    if genus < 1:
        raise ValueError("genus must be positive")
    if bound < 1:
        raise ValueError("bound must be positive")
    rng = random.Random(seed * 1_000_003 + genus * 1_009 + bound)
    n = 2 * genus
    j = _symplectic(n)
    v = [[0] * n for _ in range(n)]
    for i in range(n):
        for col in range(i + 1):
            v[i][col] = rng.randint(-bound, bound)
    for i in range(n):
        for col in range(i + 1, n):
            v[i][col] = v[col][i] + j[i][col]
    v = tuple(tuple(row) for row in v)
    for _ in range(rng.randint(0, n)):
        r, c = rng.randrange(n), rng.randrange(n)
        if r == c:
            continue
        shear = [list(row) for row in identity(n)]
        shear[r][c] = rng.choice((-1, 1))
        v = mat_mul(transpose(shear), mat_mul(v, shear))
    v2 = tuple(rng.randint(-bound, bound) for _ in range(n))
    v3 = tuple(rng.randint(-bound, bound) for _ in range(n))
    lk23 = rng.randint(-bound, bound)
    return SeifertPresentation(genus, v, v2, v3, lk23)
