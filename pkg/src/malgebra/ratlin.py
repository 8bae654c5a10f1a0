"""Exact linear algebra over the rationals.

Vectors are tuples of ``Fraction``, matrices are tuples of row tuples.  Every
operation is exact, so equality checks carry no tolerance.  Subspaces of Q^n
are stored in a canonical form (reduced row echelon basis, rows scaled to
coprime integers with positive leading entry), which makes span equality a
plain ``==`` and lets subspaces serve as dict keys.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InputError

Rational = Fraction
Vector = tuple[Fraction, ...]
Matrix = tuple[tuple[Fraction, ...], ...]


def rational(value) -> Fraction:
    """Coerce ints, Fractions and "p/q" / "p" strings to an exact rational."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int) and not isinstance(value, bool):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InputError(f"not a rational: {value!r}") from exc
    raise InputError(f"not a rational: {value!r}")


def format_rational(q: Fraction) -> str:
    """Serialize as "p/q" with positive denominator, or bare "p" for integers."""
    return str(Fraction(q))


def vector(values: Iterable, dim: int | None = None) -> Vector:
    v = tuple(rational(x) for x in values)
    if dim is not None and len(v) != dim:
        raise InputError(f"vector {values!r} does not have dimension {dim}")
    return v


def dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    if len(u) != len(v):
        raise InputError(f"dot of vectors with lengths {len(u)} and {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in v)


def identity_matrix(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
    )


def zero_matrix(n: int) -> Matrix:
    return tuple((Fraction(0),) * n for _ in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def mat_vec(m: Matrix, v: Sequence[Fraction]) -> Vector:
    if m and len(m[0]) != len(v):
        raise InputError(f"matrix width {len(m[0])} does not match vector length {len(v)}")
    return tuple(dot(row, v) for row in m)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    if a and b and len(a[0]) != len(b):
        raise InputError("incompatible matrix shapes")
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def rref(rows: Iterable[Sequence[Fraction]]) -> tuple[list[Vector], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [list(r) for r in rows]
    if not m:
        return [], []
    n_cols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot_row = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        lead = m[r][c]
        m[r] = [e / lead for e in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return [tuple(row) for row in m[:r]], pivots


def invert_matrix(m: Matrix) -> Matrix:
    """Gauss-Jordan inverse of a square rational matrix."""
    n = len(m)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(m)]
    for c in range(n):
        pivot_row = next((i for i in range(c, n) if aug[i][c] != 0), None)
        if pivot_row is None:
            raise ValueError("matrix is singular")
        aug[c], aug[pivot_row] = aug[pivot_row], aug[c]
        lead = aug[c][c]
        aug[c] = [e / lead for e in aug[c]]
        for i in range(n):
            if i != c and aug[i][c] != 0:
                f = aug[i][c]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[c])]
    return tuple(tuple(row[n:]) for row in aug)


def nullspace(rows: Iterable[Sequence[Fraction]], dim: int) -> list[Vector]:
    """Basis of the solution space of ``rows @ x = 0`` in Q^dim."""
    reduced, pivots = rref(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -reduced[i][f]
        basis.append(tuple(v))
    return basis


def primitive(v: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector to coprime integers, leading entry positive."""
    if is_zero_vector(v):
        raise ValueError("cannot canonicalize the zero vector")
    scale = math.lcm(*(Fraction(x).denominator for x in v))
    ints = [int(x * scale) for x in v]
    g = math.gcd(*ints)
    ints = [x // g for x in ints]
    if next(x for x in ints if x) < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def projection_matrix(basis: Sequence[Sequence], dim: int | None = None) -> Matrix:
    """Orthogonal projection onto the span of the given generators.

    Dependent generators are reduced away first; an empty span projects to
    the zero matrix (``dim`` is then required to fix the ambient dimension).
    """
    gens = [vector(b) for b in basis]
    if dim is None:
        if not gens:
            raise InputError("projection of an empty generator list needs an explicit dimension")
        dim = len(gens[0])
    for g in gens:
        if len(g) != dim:
            raise InputError(f"generator {g} does not have dimension {dim}")
    rows, _ = rref(gens)
    if not rows:
        return zero_matrix(dim)
    # P = B^T (B B^T)^-1 B with the reduced basis stacked as rows of B; the
    # Gram matrix of independent rows is always invertible over Q.
    bt = transpose(tuple(rows))
    gram = mat_mul(tuple(rows), bt)
    return mat_mul(mat_mul(bt, invert_matrix(gram)), tuple(rows))


def is_symmetric_idempotent(m: Matrix) -> bool:
    return m == transpose(m) and mat_mul(m, m) == m


@dataclass(frozen=True)
class Ray:
    """A one-dimensional subspace of Q^dim in canonical integer form.

    ``direction`` is a coprime integer tuple whose first nonzero entry is
    positive; ``None`` marks the distinguished zero ray.  Two rays are equal
    iff their canonical directions are identical.
    """

    dim: int
    direction: tuple[int, ...] | None = None

    @classmethod
    def zero(cls, dim: int) -> "Ray":
        return cls(dim, None)

    @classmethod
    def from_vector(cls, values: Iterable, dim: int | None = None) -> "Ray":
        v = vector(values, dim)
        if dim is None:
            dim = len(v)
        if is_zero_vector(v):
            return cls.zero(dim)
        return cls(dim, primitive(v))

    @property
    def is_zero(self) -> bool:
        return self.direction is None

    @property
    def vector(self) -> Vector:
        if self.direction is None:
            return zero_vector(self.dim)
        return tuple(Fraction(x) for x in self.direction)

    @property
    def sort_key(self):
        return (0,) if self.direction is None else (1, self.direction)

    def __str__(self) -> str:
        if self.direction is None:
            return "0"
        return "(" + ",".join(str(x) for x in self.direction) + ")"


def parse_ray(text: str, dim: int) -> Ray:
    """Inverse of ``str(ray)``: "0" or "(a,b,...)" with integer entries."""
    text = text.strip()
    if text == "0":
        return Ray.zero(dim)
    if not (text.startswith("(") and text.endswith(")")):
        raise InputError(f"not a ray: {text!r}")
    try:
        entries = [int(p) for p in text[1:-1].split(",")]
    except ValueError as exc:
        raise InputError(f"not a ray: {text!r}") from exc
    return Ray.from_vector(entries, dim)


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^dim held as a canonical basis.

    Construct through :meth:`from_generators`, which reduces arbitrary
    (possibly dependent) generators to the canonical form.  The projection
    matrix is symmetric and idempotent; the orthocomplement projector is its
    complement to the identity.
    """

    dim: int
    basis: tuple[tuple[int, ...], ...]

    @classmethod
    def from_generators(cls, dim: int, generators: Iterable[Sequence]) -> "Subspace":
        vecs = []
        for g in generators:
            v = vector(g)
            if len(v) != dim:
                raise InputError(f"generator {g!r} does not have dimension {dim}")
            vecs.append(v)
        rows, _ = rref(vecs)
        return cls(dim, tuple(primitive(r) for r in rows))

    @classmethod
    def zero(cls, dim: int) -> "Subspace":
        return cls(dim, ())

    @classmethod
    def full(cls, dim: int) -> "Subspace":
        return cls.from_generators(dim, identity_matrix(dim))

    @property
    def rank(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return len(self.basis) == self.dim

    @cached_property
    def projection(self) -> Matrix:
        return projection_matrix(self.basis, self.dim)

    @cached_property
    def orthocomplement(self) -> "Subspace":
        if not self.basis:
            return Subspace.full(self.dim)
        return Subspace.from_generators(self.dim, nullspace(self.basis_vectors, self.dim))

    @property
    def basis_vectors(self) -> list[Vector]:
        return [tuple(Fraction(x) for x in row) for row in self.basis]

    def project_vector(self, v: Sequence[Fraction]) -> Vector:
        if len(v) != self.dim:
            raise InputError(f"vector of length {len(v)} in Q^{self.dim}")
        return mat_vec(self.projection, v)

    def project_ray(self, ray: Ray) -> Ray:
        if ray.dim != self.dim:
            raise InputError(f"ray of dimension {ray.dim} in Q^{self.dim}")
        if ray.is_zero:
            return ray
        return Ray.from_vector(self.project_vector(ray.vector), self.dim)

    def contains(self, v: Sequence[Fraction]) -> bool:
        """Membership of a vector: the projection must fix it exactly."""
        return self.project_vector(v) == tuple(v)

    def contains_ray(self, ray: Ray) -> bool:
        if ray.dim != self.dim:
            raise InputError(f"ray of dimension {ray.dim} in Q^{self.dim}")
        return ray.is_zero or self.contains(ray.vector)

    def contains_subspace(self, other: "Subspace") -> bool:
        if other.dim != self.dim:
            raise InputError("ambient dimensions differ")
        return all(self.contains(b) for b in other.basis_vectors)

    def span_with(self, other: "Subspace") -> "Subspace":
        if other.dim != self.dim:
            raise InputError("ambient dimensions differ")
        return Subspace.from_generators(self.dim, list(self.basis) + list(other.basis))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Intersection, via the complement of the span of the two complements."""
        if other.dim != self.dim:
            raise InputError("ambient dimensions differ")
        return self.orthocomplement.span_with(other.orthocomplement).orthocomplement

    @classmethod
    def from_projection(cls, matrix: Matrix) -> "Subspace":
        """Column space of a symmetric idempotent matrix."""
        cols = [col for col in transpose(matrix) if not is_zero_vector(col)]
        return cls.from_generators(len(matrix), cols)

    def __str__(self) -> str:
        if self.is_zero:
            return "span{}"
        return "span{" + ";".join("(" + ",".join(str(x) for x in b) + ")" for b in self.basis) + "}"


def primitive_vectors(dim: int, height: int) -> list[tuple[int, ...]]:
    """All canonical primitive integer vectors with entries of magnitude <= height."""
    seen = set()
    for entries in itertools.product(range(-height, height + 1), repeat=dim):
        if all(e == 0 for e in entries):
            continue
        g = math.gcd(*entries)
        if g != 1:
            continue
        if next(e for e in entries if e) < 0:
            continue
        seen.add(entries)
    return sorted(seen)


def subspace_rays(sub: Subspace, height: int) -> list[Ray]:
    """Rays inside a subspace: bounded integer combinations of its basis."""
    if sub.is_zero:
        return []
    k = sub.rank
    seen = set()
    for coeffs in itertools.product(range(-height, height + 1), repeat=k):
        if all(c == 0 for c in coeffs):
            continue
        v = [0] * sub.dim
        for c, row in zip(coeffs, sub.basis):
            if c:
                for i, x in enumerate(row):
                    v[i] += c * x
        seen.add(Ray.from_vector(v, sub.dim))
    return sorted(seen, key=lambda r: r.sort_key)
