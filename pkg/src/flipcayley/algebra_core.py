"""Finite-dimensional unital algebras with involution, given by structure constants.

Everything is exact over the rationals.  Additive self-maps of a
finite-dimensional rational vector space are automatically linear, so the
structural subsets (commuter, one-sided nuclei, nucleus, center, and their
star-fixed parts) are nullspaces of commutator/associator constraint maps and
are computed by exact elimination.  Returned bases are in reduced row echelon
form, the canonical subspace representative used throughout the package.
"""

from __future__ import annotations

from . import linalg
from .scalars import format_rational, parse_rational, simplify

NUCLEUS_SIDES = ("left", "middle", "right", "full")


class AlgebraElement:
    """Immutable coordinate vector relative to the parent algebra's basis."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(coords)

    def __add__(self, other):
        return AlgebraElement(
            a + b for a, b in zip(self.coords, other.coords, strict=True)
        )

    def __sub__(self, other):
        return AlgebraElement(
            a - b for a, b in zip(self.coords, other.coords, strict=True)
        )

    def __neg__(self):
        return AlgebraElement(-a for a in self.coords)

    def scaled(self, scalar):
        return AlgebraElement(scalar * a for a in self.coords)

    def is_zero(self):
        return not any(self.coords)

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.coords == other.coords
        return NotImplemented

    def __hash__(self):
        return hash(self.coords)

    def __len__(self):
        return len(self.coords)

    def __repr__(self):
        return f"AlgebraElement({list(self.coords)!r})"


def zero_element(dim):
    return AlgebraElement((0,) * dim)


def basis_element(dim, index):
    return AlgebraElement(tuple(1 if i == index else 0 for i in range(dim)))


class StructureConstants:
    """Multiplication table: entry (i, j) holds the coordinates of e_i * e_j."""

    __slots__ = ("dim", "table", "unit_index")

    def __init__(self, dim, table, unit_index=0):
        if dim <= 0:
            raise ValueError("dim must be positive")
        if not 0 <= unit_index < dim:
            raise ValueError("unit_index out of range")
        if len(table) != dim:
            raise ValueError("table must have dim rows")
        rows = []
        for row in table:
            if len(row) != dim:
                raise ValueError("table must be square")
            entries = []
            for entry in row:
                coords = tuple(simplify(c) for c in entry)
                if len(coords) != dim:
                    raise ValueError("table entries must have length dim")
                entries.append(coords)
            rows.append(tuple(entries))
        self.dim = dim
        self.table = tuple(rows)
        self.unit_index = unit_index
        self._check_unit()

    def _check_unit(self):
        u = self.unit_index
        for j in range(self.dim):
            ej = tuple(1 if i == j else 0 for i in range(self.dim))
            if self.table[u][j] != ej:
                raise ValueError(f"unit axiom fails: e{u}*e{j} != e{j}")
            if self.table[j][u] != ej:
                raise ValueError(f"unit axiom fails: e{j}*e{u} != e{j}")


class Involution:
    """Matrix of the star map acting on coordinate columns."""

    __slots__ = ("matrix", "_cols")

    def __init__(self, matrix):
        rows = tuple(tuple(simplify(c) for c in row) for row in matrix)
        n = len(rows)
        if any(len(row) != n for row in rows):
            raise ValueError("involution matrix must be square")
        self.matrix = rows
        self._cols = tuple(
            tuple((i, rows[i][j]) for i in range(n) if rows[i][j])
            for j in range(n)
        )

    def apply(self, elem):
        out = [0] * len(self._cols)
        for j, xj in enumerate(elem.coords):
            if not xj:
                continue
            for i, m in self._cols[j]:
                out[i] += m * xj
        return AlgebraElement(out)

    def is_identity(self):
        return self.matrix == linalg.identity_matrix(len(self.matrix))


class StarAlgebra:
    """Structure constants plus an involution; the workhorse algebra object.

    Instances are immutable once constructed.  Derived data (subspace bases,
    property flags) is memoized; a duplicated computation under concurrent
    access is harmless because all values are value-equal.
    """

    __slots__ = ("sc", "involution", "_sparse", "_cache")

    def __init__(self, sc, involution, check=True):
        if len(involution.matrix) != sc.dim:
            raise ValueError("involution dimension mismatch")
        self.sc = sc
        self.involution = involution
        self._sparse = tuple(
            tuple(
                tuple((k, c) for k, c in enumerate(entry) if c)
                for entry in row
            )
            for row in sc.table
        )
        self._cache = {}
        if check:
            self._check_involution()

    # ------------------------------------------------------------------ basics
    @property
    def dim(self):
        return self.sc.dim

    @property
    def unit(self):
        return basis_element(self.dim, self.sc.unit_index)

    def basis(self):
        return [basis_element(self.dim, i) for i in range(self.dim)]

    def element(self, coords):
        coords = tuple(simplify(c) for c in coords)
        if len(coords) != self.dim:
            raise ValueError("dimension mismatch")
        return AlgebraElement(coords)

    def zero(self):
        return zero_element(self.dim)

    def cached(self, key, compute):
        try:
            return self._cache[key]
        except KeyError:
            value = compute()
            self._cache[key] = value
            return value

    # -------------------------------------------------------------- arithmetic
    def mul(self, x, y):
        n = self.dim
        if len(x.coords) != n or len(y.coords) != n:
            raise ValueError("dimension mismatch")
        out = [0] * n
        sparse = self._sparse
        for i, xi in enumerate(x.coords):
            if not xi:
                continue
            row = sparse[i]
            for j, yj in enumerate(y.coords):
                if not yj:
                    continue
                c = xi * yj
                for k, t in row[j]:
                    out[k] += c * t
        return AlgebraElement(out)

    def star(self, x):
        if len(x.coords) != self.dim:
            raise ValueError("dimension mismatch")
        return self.involution.apply(x)

    def commutator(self, x, y):
        return self.mul(x, y) - self.mul(y, x)

    def associator(self, x, y, z):
        return self.mul(self.mul(x, y), z) - self.mul(x, self.mul(y, z))

    def _check_involution(self):
        m = self.involution.matrix
        if linalg.mat_mul(m, m) != linalg.identity_matrix(self.dim):
            raise ValueError("involution must square to the identity")
        if self.star(self.unit) != self.unit:
            raise ValueError("involution must fix the unit")
        basis = self.basis()
        for a in basis:
            for b in basis:
                if self.star(self.mul(a, b)) != self.mul(self.star(b), self.star(a)):
                    raise ValueError("involution must be anti-multiplicative")

    # ------------------------------------------------------ predicate witnesses
    def commutativity_witness(self):
        basis = self.basis()
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                c = self.commutator(basis[i], basis[j])
                if not c.is_zero():
                    return (basis[i], basis[j], c)
        return None

    def associativity_witness(self):
        basis = self.basis()
        for a in basis:
            for b in basis:
                for c in basis:
                    v = self.associator(a, b, c)
                    if not v.is_zero():
                        return (a, b, c, v)
        return None

    def flexibility_witness(self):
        """First basis triple violating the linearized flexible law (char-0 valid)."""
        basis = self.basis()
        for i in range(self.dim):
            for k in range(i, self.dim):
                for j in range(self.dim):
                    v = self.associator(basis[i], basis[j], basis[k]) + self.associator(
                        basis[k], basis[j], basis[i]
                    )
                    if not v.is_zero():
                        return (basis[i], basis[j], basis[k], v)
        return None

    def alternativity_witness(self):
        """First basis triple violating a linearized alternative law (char-0 valid)."""
        basis = self.basis()
        for i in range(self.dim):
            for j in range(i, self.dim):
                for k in range(self.dim):
                    v = self.associator(basis[i], basis[j], basis[k]) + self.associator(
                        basis[j], basis[i], basis[k]
                    )
                    if not v.is_zero():
                        return ("left", basis[i], basis[j], basis[k], v)
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(j, self.dim):
                    v = self.associator(basis[i], basis[j], basis[k]) + self.associator(
                        basis[i], basis[k], basis[j]
                    )
                    if not v.is_zero():
                        return ("right", basis[i], basis[j], basis[k], v)
        return None

    def is_commutative(self):
        return self.cached("commutative", lambda: self.commutativity_witness() is None)

    def is_associative(self):
        return self.cached("associative", lambda: self.associativity_witness() is None)

    def is_flexible(self):
        return self.cached("flexible", lambda: self.flexibility_witness() is None)

    def is_alternative(self):
        return self.cached("alternative", lambda: self.alternativity_witness() is None)

    # ------------------------------------------------------ structural subspaces
    def constraint_rows(self, maps):
        """Stacked rows of the matrices of the given linear maps."""
        basis = self.basis()
        n = self.dim
        rows = []
        for apply_map in maps:
            cols = [apply_map(e).coords for e in basis]
            for r in range(n):
                rows.append(tuple(cols[c][r] for c in range(n)))
        return tuple(rows)

    def _rows(self, key):
        def build():
            basis = self.basis()
            if key == "commuter":
                maps = [lambda x, b=b: self.commutator(x, b) for b in basis]
            elif key == "nucleus_left":
                maps = [
                    lambda x, b=b, c=c: self.associator(x, b, c)
                    for b in basis
                    for c in basis
                ]
            elif key == "nucleus_middle":
                maps = [
                    lambda x, b=b, c=c: self.associator(b, x, c)
                    for b in basis
                    for c in basis
                ]
            elif key == "nucleus_right":
                maps = [
                    lambda x, b=b, c=c: self.associator(b, c, x)
                    for b in basis
                    for c in basis
                ]
            elif key == "star_fixed":
                return linalg.mat_sub(
                    self.involution.matrix, linalg.identity_matrix(self.dim)
                )
            else:
                raise ValueError(f"unknown constraint kind {key!r}")
            return self.constraint_rows(maps)

        return self.cached(("rows", key), build)

    def _nullspace_elements(self, rows):
        return tuple(
            AlgebraElement(v) for v in linalg.nullspace(rows, self.dim)
        )

    def commuter_basis(self):
        return self.cached(
            "commuter_basis", lambda: self._nullspace_elements(self._rows("commuter"))
        )

    def nucleus_basis(self, side="full"):
        if side not in NUCLEUS_SIDES:
            raise ValueError(f"side must be one of {NUCLEUS_SIDES}")

        def build():
            if side == "full":
                rows = (
                    self._rows("nucleus_left")
                    + self._rows("nucleus_middle")
                    + self._rows("nucleus_right")
                )
            else:
                rows = self._rows(f"nucleus_{side}")
            return self._nullspace_elements(rows)

        return self.cached(("nucleus_basis", side), build)

    def center_basis(self):
        def build():
            rows = (
                self._rows("commuter")
                + self._rows("nucleus_left")
                + self._rows("nucleus_middle")
                + self._rows("nucleus_right")
            )
            return self._nullspace_elements(rows)

        return self.cached("center_basis", build)

    def c_star_basis(self):
        def build():
            rows = self._rows("commuter") + self._rows("star_fixed")
            return self._nullspace_elements(rows)

        return self.cached("c_star_basis", build)

    def z_star_basis(self):
        def build():
            rows = (
                self._rows("commuter")
                + self._rows("nucleus_left")
                + self._rows("nucleus_middle")
                + self._rows("nucleus_right")
                + self._rows("star_fixed")
            )
            return self._nullspace_elements(rows)

        return self.cached("z_star_basis", build)

    # ------------------------------------------------------------------------ io
    def to_json_dict(self):
        return {
            "dim": self.dim,
            "unit_index": self.sc.unit_index,
            "table": [
                [[format_rational(c) for c in entry] for entry in row]
                for row in self.sc.table
            ],
            "star": [
                [format_rational(c) for c in row] for row in self.involution.matrix
            ],
        }

    @classmethod
    def from_json_dict(cls, data):
        table = [
            [[parse_rational(c) for c in entry] for entry in row]
            for row in data["table"]
        ]
        star = [[parse_rational(c) for c in row] for row in data["star"]]
        sc = StructureConstants(data["dim"], table, data["unit_index"])
        return cls(sc, Involution(star))
