import random
from fractions import Fraction

import pytest

from invring.linalg import (
    RatMatrix,
    SpanBuilder,
    Subspace,
    char_poly,
    column_space,
    det,
    format_univariate,
    generalized_nullspace,
    inverse,
    membership,
    nullspace,
    rational_roots,
    rref,
)


def random_matrix(rng, rows, cols, span=5):
    return RatMatrix([[rng.randint(-span, span) for _ in range(cols)] for _ in range(rows)])


# --- rref -------------------------------------------------------------------

def test_rref_identity():
    m = RatMatrix.identity(4)
    reduced, pivots = rref(m)
    assert reduced == m
    assert pivots == (0, 1, 2, 3)


def test_rref_zero():
    m = RatMatrix.zeros(3, 2)
    reduced, pivots = rref(m)
    assert reduced == m
    assert pivots == ()


def test_rref_rank_one():
    reduced, pivots = rref(RatMatrix([[2, 4], [1, 2]]))
    assert reduced == RatMatrix([[1, 2], [0, 0]])
    assert pivots == (0,)


def test_rref_idempotent():
    rng = random.Random(1)
    for _ in range(25):
        m = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 6))
        reduced, _ = rref(m)
        again, _ = rref(reduced)
        assert again == reduced


# --- kernels and images -----------------------------------------------------

def test_nullspace_examples():
    assert nullspace(RatMatrix.identity(3)).dim == 0
    assert nullspace(RatMatrix.zeros(3, 3)) == Subspace.full(3)
    assert nullspace(RatMatrix([[1, -1]])) == Subspace.from_spanning(2, [[1, 1]])


def test_column_space_examples():
    assert column_space(RatMatrix.identity(3)) == Subspace.full(3)
    assert column_space(RatMatrix.zeros(2, 2)).dim == 0
    assert column_space(RatMatrix([[1], [2]])) == Subspace.from_spanning(2, [[1, 2]])


def test_rank_nullity_random():
    rng = random.Random(2)
    for rows, cols in [(5, 7), (12, 9), (30, 30), (17, 23)]:
        m = random_matrix(rng, rows, cols, span=3)
        assert nullspace(m).dim + column_space(m).dim == cols


def test_kernel_vectors_are_killed():
    rng = random.Random(8)
    for _ in range(10):
        m = random_matrix(rng, 4, 6)
        for v in nullspace(m).basis:
            assert all(x == 0 for x in m.apply(v))


# --- subspaces ----------------------------------------------------------------

def test_intersect_examples():
    u = Subspace.from_spanning(3, [[1, 0, 0], [0, 1, 0]])
    v = Subspace.from_spanning(3, [[0, 1, 0], [0, 0, 1]])
    assert u.intersect(u) == u
    assert u.intersect(Subspace.zero(3)).dim == 0
    assert u.intersect(v) == Subspace.from_spanning(3, [[0, 1, 0]])


def test_intersect_commutative_associative():
    rng = random.Random(4)
    for _ in range(15):
        spans = [
            Subspace.from_spanning(5, [[rng.randint(-3, 3) for _ in range(5)] for _ in range(3)])
            for _ in range(3)
        ]
        u, v, w = spans
        assert u.intersect(v) == v.intersect(u)
        assert u.intersect(v).intersect(w) == u.intersect(v.intersect(w))


def test_intersection_dimension_formula():
    rng = random.Random(6)
    for _ in range(15):
        u = Subspace.from_spanning(6, [[rng.randint(-2, 2) for _ in range(6)] for _ in range(3)])
        v = Subspace.from_spanning(6, [[rng.randint(-2, 2) for _ in range(6)] for _ in range(3)])
        assert u.intersect(v).dim == u.dim + v.dim - u.sum_with(v).dim


def test_membership():
    u = Subspace.from_spanning(2, [[1, 1]])
    assert membership([0, 0], u)
    assert membership([1, 1], u)
    assert not membership([1, 0], Subspace.from_spanning(2, [[0, 1]]))


# --- generalized kernels ------------------------------------------------------

def test_generalized_nullspace_examples():
    m = RatMatrix([[1, 0], [0, 2]])
    assert generalized_nullspace(m, 1) == Subspace.from_spanning(2, [[1, 0]])
    nil = RatMatrix([[0, 1], [0, 0]])
    assert generalized_nullspace(nil, 0) == Subspace.full(2)
    jordan = RatMatrix([[1, 1], [0, 1]])
    assert generalized_nullspace(jordan, 1) == Subspace.full(2)


def test_generalized_nullspace_contains_kernel_and_is_invariant():
    rng = random.Random(9)
    for _ in range(10):
        m = random_matrix(rng, 4, 4, span=2)
        lam = Fraction(rng.randint(-2, 2))
        shifted = m - RatMatrix.identity(4) * lam
        gen = generalized_nullspace(m, lam)
        for v in nullspace(shifted).basis:
            assert gen.contains(v)
        for v in gen.basis:
            assert gen.contains(m.apply(v))


# --- determinants and inverses ------------------------------------------------

def test_det_and_inverse():
    m = RatMatrix([[2, 1], [1, 1]])
    assert det(m) == 1
    assert inverse(m) @ m == RatMatrix.identity(2)
    assert det(RatMatrix([[1, 2], [2, 4]])) == 0
    with pytest.raises(ValueError):
        inverse(RatMatrix([[1, 2], [2, 4]]))


def test_det_multiplicative():
    rng = random.Random(10)
    for _ in range(10):
        a = random_matrix(rng, 4, 4, span=3)
        b = random_matrix(rng, 4, 4, span=3)
        assert det(a @ b) == det(a) * det(b)


# --- span builder ---------------------------------------------------------------

def test_span_builder_completion():
    builder = SpanBuilder(3, [[1, 0, 0]])
    assert not builder.add([2, 0, 0])
    assert builder.add([1, 1, 0])
    assert builder.contains([3, 5, 0])
    assert not builder.contains([0, 0, 1])
    assert builder.to_subspace() == Subspace.from_spanning(3, [[1, 0, 0], [0, 1, 0]])


# --- characteristic polynomials --------------------------------------------------

def test_char_poly_rotation():
    coeffs = char_poly(RatMatrix([[0, 1], [-1, 0]]))
    assert coeffs == [1, 0, 1]
    assert format_univariate(coeffs) == "t^2 + 1"


def test_char_poly_matches_det_eval():
    rng = random.Random(12)
    for _ in range(8):
        m = random_matrix(rng, 4, 4, span=3)
        coeffs = char_poly(m)
        for x in (Fraction(0), Fraction(1), Fraction(-2), Fraction(1, 2)):
            lhs = det(RatMatrix.identity(4) * x - m)
            rhs = sum(c * x ** (4 - i) for i, c in enumerate(coeffs))
            assert lhs == rhs


def test_rational_roots_full_split():
    # (t - 1/2)^2 * (t + 3) * t, expanded
    coeffs = [Fraction(1)]
    for root in (Fraction(1, 2), Fraction(1, 2), Fraction(-3), Fraction(0)):
        coeffs = [coeffs[0]] + [
            coeffs[i + 1] - root * coeffs[i] for i in range(len(coeffs) - 1)
        ] + [-root * coeffs[-1]]
    roots, remainder = rational_roots(coeffs)
    assert remainder == []
    assert sorted(roots) == [(Fraction(-3), 1), (Fraction(0), 1), (Fraction(1, 2), 2)]


def test_rational_roots_unsplit_remainder():
    roots, remainder = rational_roots([Fraction(1), Fraction(0), Fraction(1)])
    assert roots == []
    assert remainder == [1, 0, 1]

    # t * (t^2 + 1)
    roots, remainder = rational_roots([Fraction(1), Fraction(0), Fraction(1), Fraction(0)])
    assert roots == [(Fraction(0), 1)]
    assert remainder == [1, 0, 1]


def test_format_univariate():
    assert format_univariate([Fraction(1), Fraction(-2), Fraction(1)]) == "t^2 - 2*t + 1"
    assert format_univariate([Fraction(-1, 2), Fraction(0)]) == "-1/2*t"
    assert format_univariate([Fraction(0)]) == "0"
