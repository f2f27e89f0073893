import json
import random
from fractions import Fraction

import pytest
import sympy

from borelred.errors import DimensionError, NotInvertibleError, ShapeError
from borelred.matrix import (
    Matrix,
    Quadruple,
    borel_act,
    is_regular_semisimple,
    project_to_dual,
    rank,
    upper_triangular_inverse,
)
from borelred.sampling import random_borel_element, random_dual, random_rss_upper, random_vector

from helpers import mat, vec


@pytest.mark.parametrize(
    "rows, expected",
    [([[1, 1], [0, 2]], True), ([[1, 5], [0, 1]], False), ([[3]], True)],
)
def test_is_regular_semisimple(rows, expected):
    assert is_regular_semisimple(mat(rows)) is expected


def test_project_to_dual():
    assert project_to_dual(mat([[1, 2], [3, 4]])) == mat([[1, 0], [3, 4]])
    d = Matrix.diagonal(vec([1, -2, 5]))
    assert project_to_dual(d) == d
    assert project_to_dual(mat([[0, 1, 2], [0, 0, 3], [0, 0, 0]])).is_zero()


def test_borel_act_identity(running):
    assert borel_act(Matrix.identity(2), running) == running


def test_borel_act_running_example(running):
    # hand computation: b r b^-1 = diag(1,2), proj(b s b^-1) = [[1,0],[-1,-1]]
    out = borel_act(mat([[1, -1], [0, 1]]), running)
    assert out.r == mat([[1, 0], [0, 2]])
    assert out.s == mat([[1, 0], [-1, -1]])
    assert out.i == tuple(vec([0, 1]))
    assert out.j == tuple(vec([1, 0]))


def _random_quadruple(rng, n):
    return Quadruple(random_rss_upper(rng, n), random_dual(rng, n), random_vector(rng, n), random_vector(rng, n))


@pytest.mark.parametrize("n", range(1, 7))
def test_borel_act_is_group_action(n):
    rng = random.Random(100 + n)
    for _ in range(5):
        q = _random_quadruple(rng, n)
        b1, b2 = random_borel_element(rng, n), random_borel_element(rng, n)
        assert borel_act(b2, borel_act(b1, q)) == borel_act(b2 @ b1, q)


@pytest.mark.parametrize("n", range(1, 7))
def test_triangular_inverse_against_sympy(n):
    rng = random.Random(n)
    b = random_borel_element(rng, n)
    inv = upper_triangular_inverse(b)
    oracle = sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in row] for row in b.rows]).inv()
    assert inv.rows == tuple(
        tuple(Fraction(int(x.p), int(x.q)) for x in oracle.row(a)) for a in range(n)
    )


def test_triangular_inverse_rejects_singular():
    with pytest.raises(NotInvertibleError):
        upper_triangular_inverse(mat([[1, 1], [0, 0]]))
    with pytest.raises(NotInvertibleError):
        borel_act(mat([[0, 1], [0, 1]]), Quadruple(mat([[1, 0], [0, 2]]), mat([[0, 0], [0, 0]]), vec([0, 0]), vec([0, 0])))


@pytest.mark.parametrize("n", range(2, 7))
def test_conjugation_preserves_diagonal_of_r(n):
    rng = random.Random(7 * n)
    for _ in range(10):
        r = random_rss_upper(rng, n)
        b = random_borel_element(rng, n)
        assert (b @ r @ upper_triangular_inverse(b)).diag() == r.diag()


@pytest.mark.parametrize("n", range(2, 7))
def test_coadjoint_fixes_diagonal_s(n):
    rng = random.Random(11 * n)
    for _ in range(10):
        s = Matrix.diagonal(random_vector(rng, n))
        b = random_borel_element(rng, n)
        assert project_to_dual(b @ s @ upper_triangular_inverse(b)) == s


def test_quadruple_validation():
    with pytest.raises(ShapeError):
        Quadruple(mat([[1, 0], [1, 2]]), mat([[0, 0], [0, 0]]), vec([0, 0]), vec([0, 0]))
    with pytest.raises(ShapeError):
        Quadruple(mat([[1, 0], [0, 2]]), mat([[0, 1], [0, 0]]), vec([0, 0]), vec([0, 0]))
    with pytest.raises(DimensionError):
        Quadruple(mat([[1, 0], [0, 2]]), mat([[0, 0], [0, 0]]), vec([0]), vec([0, 0]))


def test_quadruple_json_roundtrip(running):
    payload = json.loads(json.dumps(running.to_json()))
    assert payload == {
        "n": 2,
        "r": [["1", "1"], ["0", "2"]],
        "s": [["0", "0"], ["-1", "0"]],
        "i": ["1", "1"],
        "j": ["1", "-1"],
    }
    assert Quadruple.from_json(payload) == running


def test_quadruple_json_rejects_bad_triangularity():
    bad = {"n": 2, "r": [["1", "0"], ["1", "2"]], "s": [["0", "0"], ["0", "0"]], "i": ["0", "0"], "j": ["0", "0"]}
    with pytest.raises(ShapeError):
        Quadruple.from_json(bad)


def test_rank():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[1, 0, 0], [0, 0, 1]]) == 2
    assert rank([[0, 0]]) == 0
