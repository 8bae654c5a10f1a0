"""Exact linear algebra, checked against frozen values and a sympy oracle.

The sympy routes (Gram-Schmidt projector assembly, sympy nullspace) are
algorithmically independent of the package's Gauss-Jordan implementation.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from malgebra.errors import InputError
from malgebra.ratlin import (
    Ray,
    Subspace,
    identity_matrix,
    is_symmetric_idempotent,
    mat_mul,
    mat_vec,
    parse_ray,
    primitive,
    primitive_vectors,
    projection_matrix,
    rational,
    format_rational,
    subspace_rays,
    zero_matrix,
)

F = Fraction


def frac_matrix(rows):
    return tuple(tuple(F(x) for x in row) for row in rows)


def sympy_projector(basis, dim):
    """Independent oracle: Gram-Schmidt, then sum of rank-one projectors."""
    vecs = [sympy.Matrix([sympy.Rational(x) for x in b]) for b in basis]
    ortho = []
    for v in vecs:
        u = v[:, :]
        for q in ortho:
            u = u - (q.dot(v) / q.dot(q)) * q
        if any(x != 0 for x in u):
            ortho.append(u)
    p = sympy.zeros(dim, dim)
    for q in ortho:
        p = p + (q * q.T) / q.dot(q)
    return p


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(x) for x in row] for row in m])


# frozen examples ----------------------------------------------------------


def test_projection_of_diagonal_line():
    assert projection_matrix([[1, 1]], 2) == frac_matrix(
        [[F(1, 2), F(1, 2)], [F(1, 2), F(1, 2)]]
    )


def test_projection_of_empty_basis_is_zero():
    assert projection_matrix([], 2) == zero_matrix(2)


def test_projection_of_standard_basis_is_identity():
    assert projection_matrix([[1, 0], [0, 1]], 2) == identity_matrix(2)


def test_projection_reduces_dependent_generators():
    dependent = projection_matrix([[1, 1], [2, 2], [3, 3]], 2)
    assert dependent == projection_matrix([[1, 1]], 2)


def test_projection_dimension_mismatch():
    with pytest.raises(InputError):
        projection_matrix([[1, 0], [0, 1, 0]])
    with pytest.raises(InputError):
        projection_matrix([], dim=None)


def test_orthocomplement_of_diagonal():
    s = Subspace.from_generators(2, [[1, 1]])
    assert s.orthocomplement.basis == ((1, -1),)


def test_orthocomplement_of_zero_is_full():
    assert Subspace.zero(2).orthocomplement == Subspace.full(2)


def test_orthocomplement_in_three_dimensions():
    s = Subspace.from_generators(3, [[1, 1, 0]])
    assert s.orthocomplement == Subspace.from_generators(3, [[1, -1, 0], [0, 0, 1]])


def test_intersect_orthogonal_axes_is_zero():
    x = Subspace.from_generators(2, [[1, 0]])
    y = Subspace.from_generators(2, [[0, 1]])
    assert x.intersect(y) == Subspace.zero(2)


def test_intersect_with_full_space_is_identity():
    d = Subspace.from_generators(2, [[1, 1]])
    assert d.intersect(Subspace.full(2)) == d


def test_intersect_planes():
    xy = Subspace.from_generators(3, [[1, 0, 0], [0, 1, 0]])
    other = Subspace.from_generators(3, [[1, 1, 0], [0, 0, 1]])
    assert xy.intersect(other) == Subspace.from_generators(3, [[1, 1, 0]])


def test_contains_scalar_multiple():
    d = Subspace.from_generators(2, [[1, 1]])
    assert d.contains((F(3), F(3)))
    assert not d.contains((F(1), F(0)))


def test_contains_combination():
    s = Subspace.from_generators(3, [[1, 1, 0], [0, 0, 1]])
    assert s.contains((F(1), F(1), F(1)))


def test_contains_dimension_mismatch():
    with pytest.raises(InputError):
        Subspace.from_generators(2, [[1, 1]]).contains((F(1), F(1), F(1)))


def test_rational_parsing_and_formatting():
    assert rational("3/4") == F(3, 4)
    assert rational("-2") == F(-2)
    assert rational(5) == F(5)
    assert format_rational(F(6, 8)) == "3/4"
    assert format_rational(F(-7)) == "-7"
    with pytest.raises(InputError):
        rational("x")
    with pytest.raises(InputError):
        rational("1/0")


def test_ray_canonicalization():
    assert Ray.from_vector([F(-1, 2), F(-1, 2)]).direction == (1, 1)
    assert Ray.from_vector([0, -3]).direction == (0, 1)
    assert Ray.from_vector([0, 0]).is_zero
    assert str(Ray.from_vector([2, -4])) == "(1,-2)"
    assert parse_ray("(1,-2)", 2) == Ray.from_vector([1, -2])
    assert parse_ray("0", 2) == Ray.zero(2)
    with pytest.raises(InputError):
        parse_ray("garbage", 2)


def test_primitive_rejects_zero():
    with pytest.raises(ValueError):
        primitive((F(0), F(0)))


def test_primitive_vectors_window():
    window = primitive_vectors(2, 1)
    assert window == [(0, 1), (1, -1), (1, 0), (1, 1)]


def test_subspace_rays_are_inside():
    s = Subspace.from_generators(3, [[1, 1, 0], [0, 0, 1]])
    rays = subspace_rays(s, 2)
    assert rays
    assert all(s.contains_ray(r) for r in rays)
    assert Ray.from_vector([1, 1, 1]) in rays


# sympy oracle -------------------------------------------------------------

ORACLE_CASES = [
    (2, [[1, 2]]),
    (2, [[3, -5]]),
    (3, [[1, 2, 3]]),
    (3, [[1, 0, 1], [0, 1, 1]]),
    (3, [[1, 2, 3], [2, 4, 6], [0, 1, 1]]),
    (4, [[1, 1, 0, 0], [0, 0, 1, -1]]),
    (4, [[1, 2, 3, 4], [4, 3, 2, 1], [1, 1, 1, 1]]),
]


@pytest.mark.parametrize("dim,basis", ORACLE_CASES)
def test_projection_against_gram_schmidt_oracle(dim, basis):
    ours = to_sympy(projection_matrix(basis, dim))
    assert ours == sympy_projector(basis, dim)


@pytest.mark.parametrize("dim,basis", ORACLE_CASES)
def test_orthocomplement_against_sympy_nullspace(dim, basis):
    s = Subspace.from_generators(dim, basis)
    oracle = sympy.Matrix([[sympy.Rational(x) for x in row] for row in basis])
    null_basis = [[F(int(x.p), int(x.q)) for x in v] for v in oracle.nullspace()]
    assert s.orthocomplement == Subspace.from_generators(dim, null_basis)


# properties ---------------------------------------------------------------

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def subspace_strategy(max_dim=4):
    return st.integers(min_value=1, max_value=max_dim).flatmap(
        lambda dim: st.lists(
            st.lists(small_fractions, min_size=dim, max_size=dim),
            min_size=0,
            max_size=dim + 1,
        ).map(lambda gens: Subspace.from_generators(dim, gens))
    )


@settings(max_examples=60, deadline=None)
@given(subspace_strategy())
def test_projection_is_symmetric_idempotent(s):
    assert is_symmetric_idempotent(s.projection)


@settings(max_examples=60, deadline=None)
@given(subspace_strategy())
def test_double_orthocomplement_is_identity(s):
    assert s.orthocomplement.orthocomplement == s


@settings(max_examples=60, deadline=None)
@given(subspace_strategy())
def test_complementary_projections_sum_to_identity(s):
    p, q = s.projection, s.orthocomplement.projection
    total = tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(p, q))
    assert total == identity_matrix(s.dim)


@settings(max_examples=40, deadline=None)
@given(
    st.integers(min_value=1, max_value=3).flatmap(
        lambda dim: st.tuples(
            st.lists(st.lists(small_fractions, min_size=dim, max_size=dim), max_size=dim),
            st.lists(st.lists(small_fractions, min_size=dim, max_size=dim), max_size=dim),
        ).map(
            lambda pair: (
                Subspace.from_generators(dim, pair[0]),
                Subspace.from_generators(dim, pair[1]),
            )
        )
    )
)
def test_intersection_commutative_idempotent(pair):
    a, b = pair
    assert a.intersect(b) == b.intersect(a)
    assert a.intersect(a) == a


@settings(max_examples=60, deadline=None)
@given(
    st.integers(min_value=1, max_value=3).flatmap(
        lambda dim: st.tuples(
            st.lists(st.lists(small_fractions, min_size=dim, max_size=dim), max_size=dim),
            st.lists(small_fractions, min_size=dim, max_size=dim),
        ).map(lambda pair: (Subspace.from_generators(dim, pair[0]), tuple(pair[1])))
    )
)
def test_projection_splits_vector(case):
    s, v = case
    proj = s.project_vector(v)
    residue = tuple(a - b for a, b in zip(v, proj))
    assert s.contains(proj)
    assert all(
        sum(a * b for a, b in zip(residue, basis_vec)) == 0
        for basis_vec in s.basis_vectors
    )


def test_basis_vectors_project_to_themselves():
    s = Subspace.from_generators(3, [[1, 2, 3], [0, 1, 1]])
    for b in s.basis_vectors:
        assert s.project_vector(b) == b
    for v in s.orthocomplement.basis_vectors:
        assert s.project_vector(v) == (F(0),) * 3


def test_matrix_shape_errors():
    with pytest.raises(InputError):
        mat_vec(identity_matrix(2), (F(1),))
    with pytest.raises(InputError):
        mat_mul(identity_matrix(2), identity_matrix(3))
