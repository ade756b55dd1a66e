"""
Tests for exact vectors, matrices and subspaces
"""
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import e, q_vectors, vec
from src.core.errors import DimensionMismatch, MixedFieldError, SingularMatrix
from src.core.linalg import (
    Matrix,
    Subspace,
    Vector,
    is_subspace_of,
    member,
    null_space,
    rref,
    span,
    subspace_compare,
    subspace_intersect,
    subspace_sum,
)
from src.core.scalars import FIELD_Q, FIELD_QA, Scalar, parse_scalar


def matrix(rows):
    return Matrix.of(rows, FIELD_Q)


class TestRref:
    def test_reduces_and_keeps_zero_rows(self):
        m = matrix([[2, 4, 6], [1, 2, 4], [3, 6, 10]])
        assert rref(m) == matrix([[1, 2, 0], [0, 0, 1], [0, 0, 0]])

    def test_identity_is_fixed(self):
        assert rref(Matrix.identity(3, FIELD_Q)) == Matrix.identity(3, FIELD_Q)

    def test_over_rational_functions(self):
        a = parse_scalar("a", FIELD_QA)
        m = Matrix([[a, Scalar.one(FIELD_QA)], [Scalar.one(FIELD_QA), Scalar.zero(FIELD_QA)]])
        assert rref(m) == Matrix.identity(2, FIELD_QA)


class TestMatrix:
    def test_rank_and_determinant(self):
        m = matrix([[1, 2], [3, 4]])
        assert m.rank() == 2
        assert m.determinant() == Scalar.rational(-2)
        assert matrix([[1, 2], [2, 4]]).determinant() == Scalar.rational(0)

    def test_inverse(self):
        m = matrix([[2, 1], [1, 1]])
        assert m @ m.inverse() == Matrix.identity(2, FIELD_Q)

    def test_singular_inverse(self):
        with pytest.raises(SingularMatrix):
            matrix([[1, 2], [2, 4]]).inverse()

    def test_apply_checks_length(self):
        with pytest.raises(DimensionMismatch):
            matrix([[1, 0], [0, 1]]).apply(vec(1, 2, 3))

    def test_ragged_rows(self):
        with pytest.raises(DimensionMismatch):
            Matrix.of([[1, 2], [3]], FIELD_Q)


class TestVector:
    def test_render(self):
        assert vec(1, 0, -2).render() == "e1 - 2*e3"
        assert vec(0, 0).render() == "0"
        assert vec(-1, "1/2").render() == "-e1 + (1/2)*e2"

    def test_mixed_fields(self):
        with pytest.raises(MixedFieldError):
            Vector([Scalar.one(FIELD_Q), Scalar.one(FIELD_QA)])


class TestSubspaces:
    def test_null_space(self):
        kernel = null_space(matrix([[1, 1, 0], [0, 0, 1]]))
        assert kernel == span([vec(1, -1, 0)], 3)
        assert kernel.dim == 1

    def test_span_is_canonical(self):
        first = span([vec(1, 1, 0), vec(1, -1, 0)], 3)
        second = span([e(1, 3), e(2, 3)], 3)
        assert first == second
        assert first.pivots == (0, 1)

    def test_empty_span_needs_a_field(self):
        assert span([], 3, FIELD_Q) == Subspace.zero(3, FIELD_Q)
        with pytest.raises(ValueError):
            span([], 3)

    def test_span_checks_length(self):
        with pytest.raises(DimensionMismatch):
            span([vec(1, 0)], 3)

    def test_sum_and_intersection(self):
        a = span([e(1, 3), e(2, 3)], 3)
        b = span([e(2, 3), e(3, 3)], 3)
        assert subspace_intersect(a, b) == span([e(2, 3)], 3)
        assert subspace_sum(a, b) == Subspace.full(3, FIELD_Q)

    def test_intersection_with_zero(self):
        a = span([e(1, 2)], 2)
        assert subspace_intersect(a, Subspace.zero(2, FIELD_Q)).is_zero()

    def test_compare(self):
        small = span([e(2, 3)], 3)
        big = span([e(1, 3), e(2, 3)], 3)
        other = span([e(3, 3)], 3)
        assert subspace_compare(small, big) == "a_in_b"
        assert subspace_compare(big, small) == "b_in_a"
        assert subspace_compare(small, other) == "incomparable"
        assert subspace_compare(big, span([vec(1, 1, 0), e(2, 3)], 3)) == "equal"
        assert is_subspace_of(small, big)

    def test_membership(self):
        plane = span([vec(1, 1, 0), vec(0, 1, 1)], 3)
        assert member(vec(1, 2, 1), plane)
        assert not member(e(1, 3), plane)
        assert vec(2, 2, 0) in plane

    def test_membership_checks_length(self):
        with pytest.raises(DimensionMismatch):
            member(vec(1, 0), Subspace.full(3, FIELD_Q))

    def test_image(self):
        swap = matrix([[0, 1], [1, 0]])
        assert span([e(1, 2)], 2).image(swap) == span([e(2, 2)], 2)

    def test_render(self):
        assert span([e(2, 3), e(3, 3)], 3).render() == "⟨e2, e3⟩"
        assert Subspace.zero(3, FIELD_Q).render() == "0"


def _spans(dim):
    return st.lists(q_vectors(dim), min_size=0, max_size=dim).map(lambda vs: span(vs, dim, FIELD_Q))


@st.composite
def _span_pairs(draw):
    dim = draw(st.integers(min_value=2, max_value=6))
    return draw(_spans(dim)), draw(_spans(dim))


@settings(max_examples=200, deadline=None)
@given(_span_pairs())
def test_dimension_formula(pair):
    a, b = pair
    assert subspace_sum(a, b).dim + subspace_intersect(a, b).dim == a.dim + b.dim


@settings(max_examples=200, deadline=None)
@given(_span_pairs())
def test_intersection_lies_in_both(pair):
    a, b = pair
    meet = subspace_intersect(a, b)
    assert is_subspace_of(meet, a)
    assert is_subspace_of(meet, b)
    assert is_subspace_of(a, subspace_sum(a, b))


@st.composite
def _matrices(draw):
    cols = draw(st.integers(min_value=2, max_value=6))
    rows = draw(st.lists(q_vectors(cols), min_size=1, max_size=cols + 1))
    return Matrix([v.entries for v in rows], cols=cols, field=FIELD_Q)


@settings(max_examples=200, deadline=None)
@given(_matrices())
def test_rank_nullity(m):
    kernel = null_space(m)
    assert m.rank() + kernel.dim == m.n_cols
    for v in kernel.vectors():
        assert m.apply(v).is_zero()


@settings(max_examples=80)
@given(st.lists(q_vectors(3), min_size=0, max_size=4), st.randoms(use_true_random=False))
def test_span_does_not_depend_on_order(vectors, random):
    shuffled = list(vectors)
    random.shuffle(shuffled)
    assert span(vectors, 3, FIELD_Q) == span(shuffled, 3, FIELD_Q)


@settings(max_examples=80)
@given(st.lists(q_vectors(3), min_size=1, max_size=4))
def test_rref_is_idempotent(rows):
    m = Matrix([v.entries for v in rows], cols=3, field=FIELD_Q)
    assert rref(rref(m)) == rref(m)
