import json
import random
from itertools import product

import pytest

from lambdatrees.errors import BudgetExceeded, MissingPattern, ParseError
from lambdatrees.indeterminacy import (
    INT2_ORDER,
    IntersectionData,
    UnknownWithinBound,
    Yes,
    gcd_pullapart_check,
    int1_quadruple,
    int1_quadruple_matrix,
    int1_triple,
    int2_linear,
    int2_membership,
    int2_quadratic_image,
    int2_value,
    parse_intersection_data,
    report_csv,
    report_json,
)

QUAD_PATTERNS = [(1, 2, 3), (1, 2, 4), (1, 3, 2), (1, 3, 4), (4, 1, 2), (4, 1, 3), (2, 3, 1), (2, 3, 4), (2, 4, 1), (2, 4, 3), (3, 4, 1), (3, 4, 2)]


def quad_data(r, values=None, rng=None):
    a = {}
    for p in QUAD_PATTERNS:
        a[p] = values.get(p, [0] * r) if values is not None else [rng.randint(-2, 2) for _ in range(r)]
    return IntersectionData(r, a)


def int2_data(r, a=None, Q=None, rng=None):
    vecs = {p: (a or {}).get(p, [0] * r) if rng is None else [rng.randint(-3, 3) for _ in range(r)] for p in INT2_ORDER}
    return IntersectionData(r, vecs, Q or ())


def naive_image(data, B):
    r = data.r
    pts = set()
    for flat in product(range(-B, B + 1), repeat=6 * r):
        x = {p: flat[k * r:(k + 1) * r] for k, p in enumerate(INT2_ORDER)}
        pts.add(int2_value(data, x))
    return pts


def box_linear_image(data, B):
    """Minkowski sum of {x * column : |x| <= B} over all columns."""
    from lambdatrees.indeterminacy import int2_linear_matrix

    M = int2_linear_matrix(data)
    pts = {(0, 0)}
    for col in zip(*M):
        pts = {(p + x * col[0], q + x * col[1]) for p, q in pts for x in range(-B, B + 1)}
    return pts


def test_triple():
    assert int1_triple(IntersectionData(1, {})) == (0, "Z")
    assert int1_triple(IntersectionData(1, {(1, 2): [1]}))[0] == 1
    assert int1_triple(IntersectionData(2, {(1, 2): (2, 4), (3, 1): (6, 0), (2, 3): (0, 0)})) == (2, "Z/2")


def test_quadruple_five_component_example():
    L = int1_quadruple(quad_data(1, {(1, 2, 3): [1], (1, 2, 4): [1]}))
    assert sorted(L.invariant_factors) == [0, 0, 0, 1]
    assert L.contains([1, 1, 0, 0]) and not L.contains([1, 0, 0, 0])


def test_quadruple_matrix_signs():
    vals = {p: [k + 1] for k, p in enumerate(QUAD_PATTERNS)}
    M = int1_quadruple_matrix(quad_data(1, vals))
    v = lambda *p: vals[p][0]
    assert M[0] == [v(1, 2, 3), -v(1, 3, 2), 0, v(2, 3, 1), 0, 0]
    assert M[1] == [v(1, 2, 4), 0, v(4, 1, 2), 0, v(2, 4, 1), 0]
    assert M[2] == [0, v(1, 3, 4), v(4, 1, 3), 0, 0, v(3, 4, 1)]
    assert M[3] == [0, 0, 0, v(2, 3, 4), -v(2, 4, 3), v(3, 4, 2)]


def test_quadruple_random_against_box_span(rng):
    for _ in range(20):
        data = quad_data(2, rng=rng)
        L = int1_quadruple(data)
        M = int1_quadruple_matrix(data)
        for _ in range(20):
            c = [rng.randint(-3, 3) for _ in range(12)]
            assert L.contains([sum(M[i][j] * c[j] for j in range(12)) for i in range(4)])
        for row in L.basis:
            assert L.solve(row) is not None


def test_quadruple_missing():
    with pytest.raises(MissingPattern):
        int1_quadruple(IntersectionData(1, {(1, 2, 3): [1]}))


def test_int2_linear_examples():
    assert int2_linear(int2_data(1)).rank == 0
    L = int2_linear(int2_data(1, {(1, 4): [1]}))
    assert L.basis == ((1, 1),)
    assert int2_linear(int2_data(1, {(1, 2): [1], (1, 3): [1]})).invariant_factors == [1, 1]
    with pytest.raises(MissingPattern):
        int2_linear(IntersectionData(1, {(1, 2): [1]}))


def test_quadratic_against_naive():
    rng = random.Random(7)
    for _ in range(6):
        data = int2_data(1, rng=rng) if rng.random() < 0.5 else IntersectionData(1, int2_data(1, rng=rng).a, ((rng.randint(-2, 2),),))
        rep = int2_quadratic_image(data, 2)
        assert rep.points == naive_image(data, 2)


def test_quadratic_linear_consistency(rng):
    for _ in range(10):
        data = int2_data(rng.randint(1, 2), rng=rng)
        assert int2_quadratic_image(data, 2).points == box_linear_image(data, 2)


def test_quadratic_examples():
    zero = int2_data(1)
    assert int2_quadratic_image(zero, 3).points == {(0, 0)}
    q1 = IntersectionData(1, int2_data(1).a, ((1,),))
    rep = int2_quadratic_image(q1, 3)
    for k in range(-9, 10):
        assert (k, 0) in rep.points and (0, k) in rep.points and (k, k) in rep.points
    assert rep.projection_gcds == (1, 1)
    lin = int2_data(1, {(1, 2): [2], (1, 3): [3]})
    assert int2_quadratic_image(lin, 5).points == {(2 * s, 3 * t) for s in range(-5, 6) for t in range(-5, 6)}


def test_symmetry_under_negation(rng):
    for _ in range(5):
        data = IntersectionData(1, int2_data(1, rng=rng).a, ((rng.randint(-2, 2),),))
        lin = IntersectionData(1, {p: [-v[0]] for p, v in data.a.items()}, data.Q)
        # x -> -x negates the linear part and keeps the quadratic part
        assert int2_quadratic_image(data, 2).points == int2_quadratic_image(lin, 2).points


def test_budget():
    data = IntersectionData(2, int2_data(2).a, ((1, 0), (0, 1)))
    with pytest.raises(BudgetExceeded) as err:
        int2_quadratic_image(data, 4, budget=3 * 7 ** 4)
    assert err.value.report.bound == 3 and not err.value.report.exhaustive
    with pytest.raises(BudgetExceeded):
        int2_quadratic_image(data, 4, budget=10)


def test_membership():
    q1 = IntersectionData(1, int2_data(1).a, ((1,),))
    ans = int2_membership((0, 0), q1, 1)
    assert isinstance(ans, Yes)
    ans = int2_membership((13, -7), q1, 4)
    assert isinstance(ans, Yes) and int2_value(q1, ans.witness) == (13, -7)
    assert isinstance(int2_membership((1000, 0), q1, 4), UnknownWithinBound)
    lin = int2_data(1, {(1, 2): [2], (1, 3): [3]})
    ans = int2_membership((200, -300), lin, 1)
    assert isinstance(ans, Yes) and int2_value(lin, ans.witness) == (200, -300)
    assert isinstance(int2_membership((1, 0), lin, 5), UnknownWithinBound)


def test_gcd_check():
    assert gcd_pullapart_check([3, 5])
    assert not gcd_pullapart_check([4, 6])
    assert not gcd_pullapart_check([0, 0])


def test_data_file():
    text = "r = 2\nQ = 1 0; 0 -1\na 12 = 1 2\na 31 = 0 1  # same as a 13\na 12,3 = 4 5\n"
    d = parse_intersection_data(text)
    assert d.Q == ((1, 0), (0, -1))
    assert d.vector(1, 3) == (0, 1) and d.vector(2, 1, 3) == (4, 5)
    with pytest.raises(ParseError) as err:
        parse_intersection_data("r = 1\na 1x = 3\n")
    assert err.value.line == 2
    with pytest.raises(ParseError):
        parse_intersection_data("r = 2\na 12 = 1\n")


def test_reports_are_deterministic():
    q1 = IntersectionData(1, int2_data(1).a, ((1,),))
    a, b = int2_quadratic_image(q1, 2), int2_quadratic_image(q1, 2)
    assert report_json(a) == report_json(b)
    doc = json.loads(report_json(a))
    assert doc["points"] == sorted(doc["points"])
    assert report_csv(a).splitlines()[0] == "t1,t2"
