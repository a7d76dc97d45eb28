"""INT relations: linear images in Z, Z^4 and Z^2, and the quadratic INT_2 map.

Input data are vectors in Z^r indexed by patterns: ``(i, j)`` for the
order-2 data ``a_ij`` and the triple case, ``(i, j, k)`` for ``a_ij,k``.
A pair is unordered, so ``a 31`` and ``a 13`` name the same vector.

The order-2 map sends ``x = (x12, x34, x13, x24, x14, x23)`` in Z^{6r} to

    ( x12.a12 + x34.a34 + x14.a14 + x23.a23 + x12 Q x34 + x14 Q x23 ,
      x13.a13 + x24.a24 + x14.a14 + x23.a23 + x13 Q x24 + x14 Q x23 )

The pairs (x12, x34), (x13, x24) and (x14, x23) enter separately: the first
only moves the first coordinate, the second only the second, the third
moves both by the same amount.  The image of a box is therefore
``{(p + w, s + w)}`` over three independent value sets, which is how
:func:`int2_quadratic_image` enumerates it.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

import numpy as np

from .errors import BudgetExceeded, MissingPattern, ParseError
from .lattice import LatticeSubgroup

__all__ = [
    "INT2_ORDER",
    "QUAD_ORDER",
    "IntersectionData",
    "QuadImageReport",
    "Yes",
    "UnknownWithinBound",
    "parse_intersection_data",
    "int1_triple",
    "int1_quadruple_matrix",
    "int1_quadruple",
    "int2_linear_matrix",
    "int2_linear",
    "int2_value",
    "int2_quadratic_image",
    "int2_membership",
    "gcd_pullapart_check",
    "report_json",
    "report_csv",
]

INT2_ORDER = ((1, 2), (3, 4), (1, 3), (2, 4), (1, 4), (2, 3))
QUAD_ORDER = ((1, 2), (1, 3), (4, 1), (2, 3), (2, 4), (3, 4))
DEFAULT_BUDGET = 50_000_000


def _pattern_key(p) -> tuple:
    p = tuple(p)
    if len(p) == 2:
        return tuple(sorted(p))
    if len(p) == 3:
        return tuple(sorted(p[:2])) + (p[2],)
    raise ValueError(f"bad pattern {p}")


@dataclass(frozen=True)
class IntersectionData:
    """Rank ``r``, pattern vectors ``a`` and intersection matrix ``Q``.

    ``Q`` is kept as given; it is not assumed symmetric.
    """

    r: int
    a: dict = field(default_factory=dict)
    Q: tuple = ()

    def __post_init__(self):
        if self.r < 0:
            raise ValueError("r must be non-negative")
        vecs = {}
        for p, v in self.a.items():
            v = tuple(int(x) for x in v)
            if len(v) != self.r:
                raise ValueError(f"vector for a{p} has length {len(v)}, expected {self.r}")
            vecs[_pattern_key(p)] = v
        Q = tuple(tuple(int(x) for x in row) for row in self.Q) if self.Q else tuple((0,) * self.r for _ in range(self.r))
        if len(Q) != self.r or any(len(row) != self.r for row in Q):
            raise ValueError(f"Q must be {self.r}x{self.r}")
        object.__setattr__(self, "a", vecs)
        object.__setattr__(self, "Q", Q)

    def vector(self, *pattern, required: bool = True) -> tuple:
        key = _pattern_key(pattern)
        if key not in self.a:
            if required:
                name = "".join(map(str, pattern[:2])) + ("," + str(pattern[2]) if len(pattern) == 3 else "")
                raise MissingPattern(f"no data for a {name}")
            return (0,) * self.r
        return self.a[key]


def parse_intersection_data(text: str) -> IntersectionData:
    """Parse ``r = INT``, ``Q = row; row; ...``, ``a ij = v1 .. vr`` and
    ``a ij,k = v1 .. vr`` lines (``#`` starts a comment)."""
    r = None
    Q = None
    a = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        lhs, eq, rhs = line.partition("=")
        if not eq:
            raise ParseError("expected '='", lineno, 1)
        lhs = lhs.strip()
        col = raw.index("=") + 2
        try:
            if lhs == "r":
                r = int(rhs)
            elif lhs == "Q":
                Q = [[int(x) for x in row.split()] for row in rhs.split(";") if row.strip()]
            elif lhs.startswith("a"):
                pat = lhs[1:].strip()
                pair, _, k = pat.partition(",")
                if len(pair) != 2 or not pair.isdigit() or (k and not k.strip().isdigit()):
                    raise ParseError(f"bad pattern {pat!r}", lineno, raw.index("a") + 2)
                key = (int(pair[0]), int(pair[1])) + ((int(k),) if k else ())
                a[key] = [int(x) for x in rhs.split()]
            else:
                raise ParseError(f"unknown key {lhs!r}", lineno, 1)
        except ValueError:
            raise ParseError("expected integers", lineno, col) from None
    if r is None:
        lens = {len(v) for v in a.values()} | ({len(Q)} if Q else set())
        r = lens.pop() if len(lens) == 1 else 0
    try:
        return IntersectionData(r, a, tuple(map(tuple, Q)) if Q else ())
    except ValueError as err:
        raise ParseError(str(err), 1, 1) from None


# ------------------------------------------------------------------ linear maps


def int1_triple(data: IntersectionData) -> tuple[int, str]:
    """``(d, quotient)`` for the triple relations: ``d`` is the gcd of all
    entries of a12, a31, a23 (missing vectors count as zero), and the
    quotient of Z is ``Z/d``, with ``d = 0`` meaning Z itself.

    >>> int1_triple(IntersectionData(2, {(1, 2): (2, 4), (3, 1): (6, 0), (2, 3): (0, 0)}))
    (2, 'Z/2')
    """
    entries = [x for p in ((1, 2), (3, 1), (2, 3)) for x in data.vector(*p, required=False)]
    d = reduce(gcd, entries, 0)
    return d, ("Z" if d == 0 else "0" if d == 1 else f"Z/{d}")


def int1_quadruple_matrix(data: IntersectionData) -> list[list[int]]:
    """The 4 x 6r matrix; column blocks follow x12, x13, x41, x23, x24, x34
    and rows the basis trees [1,2,3;2], [1,2,4;2], [1,3,4;3], [2,3,4;3]."""
    v = lambda i, j, k, s=1: [s * x for x in data.vector(i, j, k)]
    z = [0] * data.r
    rows = [
        [v(1, 2, 3), v(1, 3, 2, -1), z, v(2, 3, 1), z, z],
        [v(1, 2, 4), z, v(4, 1, 2), z, v(2, 4, 1), z],
        [z, v(1, 3, 4), v(4, 1, 3), z, z, v(3, 4, 1)],
        [z, z, z, v(2, 3, 4), v(2, 4, 3, -1), v(3, 4, 2)],
    ]
    return [[x for block in row for x in block] for row in rows]


def int1_quadruple(data: IntersectionData) -> LatticeSubgroup:
    """Image of the quadruple relation map in Z^4; see ``invariant_factors``
    for the quotient."""
    M = int1_quadruple_matrix(data)
    return LatticeSubgroup.from_matrix_columns(M) if data.r else LatticeSubgroup(4)


def int2_linear_matrix(data: IntersectionData) -> list[list[int]]:
    """The 2 x 6r matrix; column blocks follow x12, x34, x13, x24, x14, x23."""
    a = {p: list(data.vector(*p)) for p in INT2_ORDER}
    z = [0] * data.r
    top = a[1, 2] + a[3, 4] + z + z + a[1, 4] + a[2, 3]
    bottom = z + z + a[1, 3] + a[2, 4] + a[1, 4] + a[2, 3]
    return [top, bottom]


def int2_linear(data: IntersectionData) -> LatticeSubgroup:
    """Image of the linear order-2 relation map in Z^2."""
    M = int2_linear_matrix(data)
    return LatticeSubgroup.from_matrix_columns(M) if data.r else LatticeSubgroup(2)


def int2_value(data: IntersectionData, x: dict) -> tuple[int, int]:
    """The order-2 map at ``x`` (pattern -> vector), term by term."""
    Q = data.Q
    dot = lambda u, w: sum(p * q for p, q in zip(u, w))
    qf = lambda u, w: sum(u[s] * Q[s][t] * w[t] for s in range(data.r) for t in range(data.r))
    xv = {_pattern_key(p): v for p, v in x.items()}
    a = {p: data.vector(*p) for p in INT2_ORDER}
    lin = lambda p: dot(xv[p], a[p])
    shared = lin((1, 4)) + lin((2, 3)) + qf(xv[1, 4], xv[2, 3])
    first = lin((1, 2)) + lin((3, 4)) + qf(xv[1, 2], xv[3, 4]) + shared
    second = lin((1, 3)) + lin((2, 4)) + qf(xv[1, 3], xv[2, 4]) + shared
    return first, second


# ------------------------------------------------------------------ quadratic image


@dataclass
class QuadImageReport:
    """Attained values of the order-2 map on the box ``|x| <= bound``."""

    bound: int
    points: frozenset
    projection_gcds: tuple
    projection_complete: tuple
    closure_violations: list
    window: int
    exhaustive: bool = True
    membership: dict = field(default_factory=dict)

    def contains(self, p) -> bool:
        return tuple(p) in self.points

    def sorted_points(self) -> list:
        return sorted(self.points)

    @property
    def closed_within_window(self) -> bool:
        return not self.closure_violations


def _box(r: int, B: int) -> np.ndarray:
    """All vectors of Z^{2r} with entries in [-B, B], lexicographic."""
    if r == 0:
        return np.zeros((1, 0), dtype=np.int64)
    grids = np.indices((2 * B + 1,) * (2 * r), dtype=np.int64).reshape(2 * r, -1).T
    return grids - B


def _pair_values(data: IntersectionData, p, q, B: int) -> tuple[np.ndarray, np.ndarray]:
    """Values of ``x_p.a_p + x_q.a_q + x_p Q x_q`` over the box, with the box."""
    r = data.r
    X = _box(r, B)
    u, w = X[:, :r], X[:, r:]
    ap = np.array(data.vector(*p), dtype=np.int64)
    aq = np.array(data.vector(*q), dtype=np.int64)
    Q = np.array(data.Q, dtype=np.int64).reshape(r, r)
    vals = u @ ap + w @ aq + np.einsum("ni,ij,nj->n", u, Q, w)
    return vals, X


def _cost(r: int, B: int) -> int:
    return 3 * (2 * B + 1) ** (2 * r)


def _attained(data: IntersectionData, B: int) -> frozenset:
    v1, _ = _pair_values(data, (1, 2), (3, 4), B)
    v2, _ = _pair_values(data, (1, 3), (2, 4), B)
    v3, _ = _pair_values(data, (1, 4), (2, 3), B)
    P1, P2, P3 = np.unique(v1), np.unique(v2), np.unique(v3)
    lo1, lo2 = P1[0] + P3[0], P2[0] + P3[0]
    grid = np.zeros((P1[-1] + P3[-1] - lo1 + 1, P2[-1] + P3[-1] - lo2 + 1), dtype=bool)
    for w in P3:
        grid[np.ix_(P1 + w - lo1, P2 + w - lo2)] = True
    ii, jj = np.nonzero(grid)
    return frozenset(zip((ii + lo1).tolist(), (jj + lo2).tolist()))


def _closure_violations(points: frozenset, window: int) -> list:
    inside = sorted(p for p in points if abs(p[0]) <= window and abs(p[1]) <= window)
    out = []
    for s, p in enumerate(inside):
        for q in inside[s:]:
            t = (p[0] + q[0], p[1] + q[1])
            if abs(t[0]) <= window and abs(t[1]) <= window and t not in points:
                out.append((p, q))
    return out


def _projection(points: frozenset, axis: int, window: int) -> tuple[int, bool]:
    vals = {p[axis] for p in points}
    g = reduce(gcd, vals, 0)
    if g == 0:
        return 0, True
    need = range(-(window // g) * g, window + 1, g)
    return g, all(k in vals for k in need)


def int2_quadratic_image(data: IntersectionData, B: int, budget: int = DEFAULT_BUDGET, window: int | None = None) -> QuadImageReport:
    """Enumerate the order-2 map on ``[-B, B]^{6r}``.

    The report lists the attained points, the gcd of each coordinate
    projection, whether every multiple of that gcd in ``[-window, window]``
    is attained, and the pairs of attained points in that window whose sum
    lies in the window but is not attained.  ``window`` defaults to ``B``.

    If the enumeration costs more than ``budget`` evaluations, the largest
    affordable bound is explored instead and :class:`BudgetExceeded` is
    raised carrying that non-exhaustive report.
    """
    if B < 1:
        raise ValueError("bound must be at least 1")
    window = B if window is None else window
    run = B
    while run >= 1 and _cost(data.r, run) > budget:
        run -= 1
    if run < 1:
        raise BudgetExceeded(f"bound 1 already costs {_cost(data.r, 1)} > {budget}")
    points = _attained(data, run)
    g1, c1 = _projection(points, 0, window)
    g2, c2 = _projection(points, 1, window)
    report = QuadImageReport(
        bound=run,
        points=points,
        projection_gcds=(g1, g2),
        projection_complete=(c1, c2),
        closure_violations=_closure_violations(points, window),
        window=window,
        exhaustive=run == B,
    )
    if run < B:
        raise BudgetExceeded(f"bound {B} costs {_cost(data.r, B)} > {budget}; explored bound {run}", report)
    return report


@dataclass(frozen=True)
class Yes:
    """Target attained; ``witness`` maps each pattern to its x-vector."""

    witness: dict

    def __bool__(self):
        return True


@dataclass(frozen=True)
class UnknownWithinBound:
    """Target not attained for any x with entries in ``[-bound, bound]``."""

    bound: int

    def __bool__(self):
        return False


def _first_hits(vals: np.ndarray, X: np.ndarray) -> dict:
    _, idx = np.unique(vals, return_index=True)
    return {int(vals[i]): X[i] for i in idx}


def int2_membership(target, data: IntersectionData, B: int):
    """Decide whether ``target`` is a value of the order-2 map, semi-decidably.

    Answers :class:`Yes` with a witness, or :class:`UnknownWithinBound`;
    never No.  With ``Q = 0`` the exact linear image is used, so any member
    gets a witness regardless of ``B``.
    """
    t1, t2 = map(int, target)
    r = data.r
    if not any(any(row) for row in data.Q):
        L = int2_linear(data)
        sol = L.solve((t1, t2)) if r else ([] if (t1, t2) == (0, 0) else None)
        if sol is not None:
            return Yes({p: tuple(sol[k * r:(k + 1) * r]) for k, p in enumerate(INT2_ORDER)})
        return UnknownWithinBound(B)
    v1, X1 = _pair_values(data, (1, 2), (3, 4), B)
    v2, X2 = _pair_values(data, (1, 3), (2, 4), B)
    v3, X3 = _pair_values(data, (1, 4), (2, 3), B)
    h1, h2 = _first_hits(v1, X1), _first_hits(v2, X2)
    for w, x3 in zip(v3.tolist(), X3):
        if t1 - w in h1 and t2 - w in h2:
            x1, x2 = h1[t1 - w], h2[t2 - w]
            parts = {(1, 2): x1[:r], (3, 4): x1[r:], (1, 3): x2[:r], (2, 4): x2[r:], (1, 4): x3[:r], (2, 3): x3[r:]}
            return Yes({p: tuple(int(c) for c in v) for p, v in parts.items()})
    return UnknownWithinBound(B)


def gcd_pullapart_check(pairings) -> bool:
    """True iff the gcd of all sphere pairings is 1 (a sufficient condition
    for pulling apart; False is not a verdict).

    >>> gcd_pullapart_check({("S", 1): 3, ("S", 2): 5}), gcd_pullapart_check([4, 6])
    (True, False)
    """
    vals = pairings.values() if isinstance(pairings, dict) else pairings
    return reduce(gcd, (int(v) for v in vals), 0) == 1


# ------------------------------------------------------------------ report output


def report_json(report: QuadImageReport) -> str:
    doc = {
        "bound": report.bound,
        "exhaustive": report.exhaustive,
        "points": [list(p) for p in report.sorted_points()],
        "projection_gcds": list(report.projection_gcds),
        "projection_complete": list(report.projection_complete),
        "window": report.window,
        "closure_violations": [[list(p), list(q)] for p, q in report.closure_violations],
    }
    return json.dumps(doc, indent=1) + "\n"


def report_csv(report: QuadImageReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["t1", "t2"])
    w.writerows(report.sorted_points())
    return buf.getvalue()
