"""Exact integer lattices: Hermite and Smith normal forms, subgroups of Z^d.

All arithmetic is on Python ints, so there is no overflow and no rounding.
Matrices are lists of rows.  A subgroup is given by generator vectors and
stored by its row-style Hermite basis: echelon form, positive pivots,
entries above each pivot reduced into ``[0, pivot)``.
"""

from __future__ import annotations

from math import gcd

__all__ = ["hermite_normal_form", "smith_invariants", "LatticeSubgroup"]


def hermite_normal_form(rows, dim: int | None = None, transform: bool = False):
    """Row-style HNF of the lattice spanned by ``rows``.

    Returns the nonzero HNF rows.  With ``transform=True`` also returns a
    matrix ``U`` (one row per HNF row, one column per input row) with
    ``U @ rows == H``.

    >>> hermite_normal_form([[2, 4], [3, 5]])
    [[1, 1], [0, 2]]
    """
    A = [list(map(int, r)) for r in rows]
    if dim is None:
        dim = len(A[0]) if A else 0
    k = len(A)
    U = [[int(i == j) for j in range(k)] for i in range(k)]
    r = 0
    for col in range(dim):
        if r == k:
            break
        # Euclid on the column below row r
        while True:
            nz = [i for i in range(r, k) if A[i][col]]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(A[i][col]))
            A[r], A[p] = A[p], A[r]
            U[r], U[p] = U[p], U[r]
            done = True
            for i in range(r + 1, k):
                q = A[i][col] // A[r][col]
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                if A[i][col]:
                    done = False
            if done:
                break
        if r < k and A[r][col]:
            if A[r][col] < 0:
                A[r] = [-a for a in A[r]]
                U[r] = [-a for a in U[r]]
            piv = A[r][col]
            for i in range(r):
                q = A[i][col] // piv
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
    H, T = A[:r], U[:r]
    return (H, T) if transform else H


def smith_invariants(rows, dim: int | None = None) -> list[int]:
    """Invariant factors of ``Z^dim / span(rows)``, in divisibility order.

    There are ``dim`` entries; a 0 is a free summand Z, a 1 is trivial.

    >>> smith_invariants([[2, 0], [0, 3]])
    [1, 6]
    >>> smith_invariants([[1, 1, 0, 0]])
    [1, 0, 0, 0]
    """
    A = [list(map(int, r)) for r in rows if any(r)]
    if dim is None:
        dim = len(A[0]) if A else 0
    diag = []
    t = 0
    while A and t < min(len(A), dim):
        # pick the smallest nonzero entry in the remaining block
        cands = [(abs(A[i][j]), i, j) for i in range(t, len(A)) for j in range(t, dim) if A[i][j]]
        if not cands:
            break
        _, i0, j0 = min(cands)
        A[t], A[i0] = A[i0], A[t]
        for row in A:
            row[t], row[j0] = row[j0], row[t]
        piv = A[t][t]
        clean = True
        for i in range(t + 1, len(A)):
            q = A[i][t] // piv
            A[i] = [a - q * b for a, b in zip(A[i], A[t])]
            clean &= A[i][t] == 0
        for j in range(t + 1, dim):
            q = A[t][j] // piv
            for row in A:
                row[j] -= q * row[t]
            clean &= A[t][j] == 0
        if not clean:
            continue
        bad = next(((i, j) for i in range(t + 1, len(A)) for j in range(t + 1, dim) if A[i][j] % piv), None)
        if bad is not None:
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
            continue
        diag.append(abs(piv))
        t += 1
    # normalize to divisibility order
    d = sorted(diag)
    for i in range(len(d)):
        for j in range(i + 1, len(d)):
            g = gcd(d[i], d[j])
            d[i], d[j] = g, d[i] * d[j] // g if g else 0
    return d + [0] * (dim - len(d))


class LatticeSubgroup:
    """Subgroup of Z^dim with canonical Hermite basis.

    >>> L = LatticeSubgroup.from_generators([[2, 2], [0, 4]], 2)
    >>> L.contains([2, 6]), L.contains([1, 1])
    (True, False)
    >>> L.invariant_factors
    [2, 4]
    """

    __slots__ = ("dim", "basis", "_transform", "_generators", "invariant_factors")

    def __init__(self, dim: int, generators=()):
        gens = [tuple(map(int, g)) for g in generators]
        for g in gens:
            if len(g) != dim:
                raise ValueError(f"vector {g} has length {len(g)}, expected {dim}")
        H, U = hermite_normal_form(gens, dim, transform=True) if gens else ([], [])
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "basis", tuple(tuple(h) for h in H))
        object.__setattr__(self, "_transform", tuple(tuple(u) for u in U))
        object.__setattr__(self, "_generators", tuple(gens))
        object.__setattr__(self, "invariant_factors", smith_invariants(H, dim))

    def __setattr__(self, name, value):
        raise AttributeError("LatticeSubgroup is immutable")

    @classmethod
    def from_generators(cls, generators, dim: int) -> LatticeSubgroup:
        return cls(dim, generators)

    @classmethod
    def from_matrix_columns(cls, matrix) -> LatticeSubgroup:
        """Image of the integer matrix, i.e. the span of its columns."""
        dim = len(matrix)
        cols = [list(c) for c in zip(*matrix)] if dim else []
        return cls(dim, cols)

    @property
    def rank(self) -> int:
        return len(self.basis)

    def __eq__(self, other):
        return isinstance(other, LatticeSubgroup) and self.dim == other.dim and self.basis == other.basis

    def __hash__(self):
        return hash((self.dim, self.basis))

    def _coords(self, v):
        """Coefficients of ``v`` on the Hermite basis, or None."""
        v = [int(x) for x in v]
        if len(v) != self.dim:
            raise ValueError(f"vector has length {len(v)}, expected {self.dim}")
        coeffs = []
        for h in self.basis:
            piv = next(j for j, x in enumerate(h) if x)
            if any(v[:piv]):
                return None
            q, rem = divmod(v[piv], h[piv])
            if rem:
                return None
            coeffs.append(q)
            v = [a - q * b for a, b in zip(v, h)]
        return coeffs if not any(v) else None

    def contains(self, v) -> bool:
        return self._coords(v) is not None

    def __contains__(self, v):
        return self.contains(v)

    def solve(self, v):
        """Integer coefficients ``x`` on the original generators with
        ``sum x_k g_k == v``, or None when ``v`` is not in the subgroup."""
        c = self._coords(v)
        if c is None:
            return None
        n = len(self._generators)
        return [sum(c[r] * self._transform[r][k] for r in range(len(c))) for k in range(n)]

    def quotient_description(self) -> str:
        """Readable form of ``Z^dim / self`` such as ``Z^3`` or ``Z/2 + Z``."""
        parts = []
        free = 0
        for d in self.invariant_factors:
            if d == 0:
                free += 1
            elif d > 1:
                parts.append(f"Z/{d}")
        if free:
            parts.append("Z" if free == 1 else f"Z^{free}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self):
        return f"LatticeSubgroup(dim={self.dim}, basis={list(self.basis)})"
