"""Exact linear algebra over the rationals.

Vectors and matrix rows are sequences of ints or Fractions.  Division only
ever happens through ``Fraction``, so every result is exact.  The canonical
representative of a subspace is the reduced row echelon basis of its span;
two subspaces are equal iff their canonical bases are equal tuples.
"""

from __future__ import annotations

from fractions import Fraction

from .scalars import simplify


def identity_matrix(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_matrix(n):
    return tuple((0,) * n for _ in range(n))


def mat_vec(matrix, vector):
    out = []
    for row in matrix:
        acc = 0
        for a, x in zip(row, vector):
            if a and x:
                acc += a * x
        out.append(acc)
    return tuple(out)


def mat_mul(a, b):
    cols = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a
    )


def mat_add(a, b):
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_sub(a, b):
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def is_zero_matrix(matrix):
    return all(not x for row in matrix for x in row)


class RowReducer:
    """Incremental accumulator keeping a reduced row echelon basis of its input rows."""

    def __init__(self, ncols):
        self.ncols = ncols
        self._rows = []    # fully reduced, pivot entries equal to 1
        self._pivots = []  # pivot column of each row, strictly increasing

    @property
    def rank(self):
        return len(self._rows)

    def residual(self, vector):
        """Reduce ``vector`` against the current basis; the remainder is returned."""
        work = list(vector)
        for row, p in zip(self._rows, self._pivots):
            c = work[p]
            if c:
                for j in range(p, self.ncols):
                    work[j] -= c * row[j]
        return work

    def contains(self, vector):
        return not any(self.residual(vector))

    def add(self, vector):
        """Absorb a row.  Returns True when it increased the rank."""
        work = self.residual(vector)
        pivot = next((j for j, x in enumerate(work) if x), None)
        if pivot is None:
            return False
        pv = work[pivot]
        if pv != 1:
            inv = Fraction(1) / pv
            work = [x * inv for x in work]
        for i, row in enumerate(self._rows):
            c = row[pivot]
            if c:
                self._rows[i] = [x - c * y for x, y in zip(row, work)]
        at = next(
            (i for i, p in enumerate(self._pivots) if p > pivot), len(self._pivots)
        )
        self._rows.insert(at, work)
        self._pivots.insert(at, pivot)
        return True

    def add_many(self, vectors):
        for v in vectors:
            self.add(v)

    def rows(self):
        return tuple(tuple(simplify(x) for x in row) for row in self._rows)

    def nullspace(self):
        """Canonical basis of the solution space of (all added rows) * x = 0."""
        pivots = set(self._pivots)
        vectors = []
        for free in range(self.ncols):
            if free in pivots:
                continue
            v = [0] * self.ncols
            v[free] = 1
            for row, p in zip(self._rows, self._pivots):
                v[p] = -row[free]
            vectors.append(v)
        return row_space(vectors, self.ncols)


def rref(rows, ncols):
    red = RowReducer(ncols)
    red.add_many(rows)
    return red.rows()


def row_space(vectors, ncols):
    """Canonical (reduced echelon) basis of the span of the given vectors."""
    return rref(vectors, ncols)


def nullspace(rows, ncols):
    red = RowReducer(ncols)
    red.add_many(rows)
    return red.nullspace()


def subspace_contains(basis, vector, ncols):
    red = RowReducer(ncols)
    red.add_many(basis)
    return red.contains(vector)


def subspace_le(inner, outer, ncols):
    red = RowReducer(ncols)
    red.add_many(outer)
    return all(red.contains(v) for v in inner)


def subspace_eq(a, b, ncols):
    return row_space(a, ncols) == row_space(b, ncols)


def orthogonal_complement(basis, ncols):
    return nullspace(basis, ncols)


def subspace_intersect(a, b, ncols):
    rows = list(orthogonal_complement(a, ncols))
    rows.extend(orthogonal_complement(b, ncols))
    return nullspace(rows, ncols)


def subspace_sum(a, b, ncols):
    return row_space(list(a) + list(b), ncols)
