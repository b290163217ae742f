"""Structural sets of flipped polynomial rings, by criteria and by brute force.

Membership of a polynomial in the commuter, nuclei or center of the flipped
star-skew ring is decided by independent linear conditions on each
coefficient, depending only on the degree's parity.  ``degreewise_set``
solves those conditions exactly.  ``degreewise_set_bruteforce`` is the
independent oracle: it multiplies actual monomials in the ring and solves
the resulting constraint systems, using test degrees up to 2 in the other
slots (degrees 0 and 1 already generate every constraint; one more is a
safety margin).  The test suites require the two routes to coincide.

Generator membership in the one-sided nuclei and the inheritance of
commutativity/associativity/flexibility/alternativity by the ring are
decided by closed criteria on the coefficient algebra, each paired with a
brute-force or quotient-based cross-check elsewhere in the package.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .algebra_core import AlgebraElement
from .flip_poly import star_skew_ring

SET_KINDS = ("commuter", "left_right_nucleus", "middle_nucleus", "nucleus", "center")
X_SIDES = ("left", "middle", "right")
CRITERIA_BOUND_LIMIT = 8
BRUTE_BOUND_LIMIT = 4
BRUTE_DEGREE_WINDOW = 2


@dataclass(frozen=True, eq=True)
class DegreewiseSet:
    """Per-degree subspace bases (reduced echelon form) up to a degree bound."""

    kind: str
    bound: int
    per_degree: dict

    def dims(self):
        return {degree: len(basis) for degree, basis in self.per_degree.items()}

    def __eq__(self, other):
        if not isinstance(other, DegreewiseSet):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.bound == other.bound
            and self.per_degree == other.per_degree
        )


# ----------------------------------------------------------- map-shape predicates
def sigma_is_endomorphism(ring):
    algebra = ring.coeff_algebra
    basis = algebra.basis()
    sigma = ring.sigma
    for r in basis:
        for s in basis:
            if sigma(algebra.mul(r, s)) != algebra.mul(sigma(r), sigma(s)):
                return False
    return True


def delta_is_left_sigma_derivation(ring):
    algebra = ring.coeff_algebra
    basis = algebra.basis()
    sigma, delta = ring.sigma, ring.delta
    for r in basis:
        for s in basis:
            expected = algebra.mul(sigma(r), delta(s)) + algebra.mul(delta(r), s)
            if delta(algebra.mul(r, s)) != expected:
                return False
    return True


def delta_is_right_sigma_derivation(ring):
    algebra = ring.coeff_algebra
    basis = algebra.basis()
    sigma, delta = ring.sigma, ring.delta
    for r in basis:
        for s in basis:
            expected = algebra.mul(delta(r), sigma(s)) + algebra.mul(r, delta(s))
            if delta(algebra.mul(r, s)) != expected:
                return False
    return True


# ------------------------------------------------------- generator nucleus tests
def x_in_nucleus(ring, side):
    """Generator membership in a one-sided nucleus, by the closed criteria.

    left: sigma is an endomorphism and delta is a two-sided sigma-derivation.
    middle: the smallest delta-stable subspace containing the image of sigma
    lies inside the commuter (the span chain stabilizes within dim steps, so
    the quantifier over all iterates is exact, not truncated).
    right: the coefficient algebra is commutative.
    """
    if side not in X_SIDES:
        raise ValueError(f"side must be one of {X_SIDES}")
    algebra = ring.coeff_algebra
    if side == "left":
        return (
            sigma_is_endomorphism(ring)
            and delta_is_left_sigma_derivation(ring)
            and delta_is_right_sigma_derivation(ring)
        )
    if side == "middle":
        reducer = linalg.RowReducer(algebra.dim)
        for e in algebra.basis():
            reducer.add(ring.sigma(e).coords)
        changed = True
        while changed:
            changed = False
            for row in reducer.rows():
                if reducer.add(linalg.mat_vec(ring.delta.matrix, row)):
                    changed = True
        commuter = [e.coords for e in algebra.commuter_basis()]
        return all(
            linalg.subspace_contains(commuter, row, algebra.dim)
            for row in reducer.rows()
        )
    return algebra.is_commutative()


def x_in_nucleus_bruteforce(ring, side, degree_bound=4):
    """Oracle: vanishing of all associators with the generator in the given slot."""
    if side not in X_SIDES:
        raise ValueError(f"side must be one of {X_SIDES}")
    if not 0 <= degree_bound <= BRUTE_BOUND_LIMIT:
        raise ValueError(f"degree_bound must be between 0 and {BRUTE_BOUND_LIMIT}")
    algebra = ring.coeff_algebra
    x_poly = ring.x()
    basis = algebra.basis()
    for j in range(degree_bound + 1):
        for k in range(degree_bound + 1):
            for b in basis:
                for c in basis:
                    p = ring.monomial(j, b)
                    q = ring.monomial(k, c)
                    if side == "left":
                        slots = (x_poly, p, q)
                    elif side == "middle":
                        slots = (p, x_poly, q)
                    else:
                        slots = (p, q, x_poly)
                    left = ring.mul(ring.mul(slots[0], slots[1]), slots[2])
                    right = ring.mul(slots[0], ring.mul(slots[1], slots[2]))
                    if left != right:
                        return False
    return True


# ------------------------------------------------------------ inheritance criteria
def ring_is_associative_criterion(ring):
    """Associativity of the flipped ring, decided on the coefficient algebra."""
    algebra = ring.coeff_algebra
    return (
        algebra.is_associative()
        and algebra.is_commutative()
        and sigma_is_endomorphism(ring)
        and delta_is_left_sigma_derivation(ring)
    )


def _norms_commute(algebra):
    """a a* commutes with everything, decided through its char-0 polarization."""
    commuter = [e.coords for e in algebra.commuter_basis()]
    basis = algebra.basis()
    for i, a in enumerate(basis):
        for b in basis[i:]:
            v = algebra.mul(a, algebra.star(b)) + algebra.mul(b, algebra.star(a))
            if not linalg.subspace_contains(commuter, v.coords, algebra.dim):
                return False
    return True


def b_flexible_criterion(algebra):
    """Flexibility of the flipped star-skew ring over this algebra."""
    if not algebra.is_flexible():
        return False
    if not _norms_commute(algebra):
        return False
    basis = algebra.basis()
    for a in basis:
        for b in basis:
            for c in basis:
                if algebra.associator(a, b, c) != algebra.associator(
                    a, algebra.star(b), algebra.star(c)
                ):
                    return False
    return True


def b_alternative_criterion(algebra):
    """Alternativity of the flipped star-skew ring over this algebra."""
    if not algebra.is_alternative():
        return False
    if not _norms_commute(algebra):
        return False
    nucleus = [e.coords for e in algebra.nucleus_basis("full")]
    for a in algebra.basis():
        v = a.scaled(2) + algebra.star(a)
        if not linalg.subspace_contains(nucleus, v.coords, algebra.dim):
            return False
    return True


def b_commutative_criterion(algebra):
    """Commutativity of the flipped star-skew ring over this algebra."""
    return algebra.is_commutative() and algebra.involution.is_identity()


def alpha_trivial_criterion(algebra):
    """Triviality of the sign-alternating involution: trivial star and 2A = 0."""
    if not algebra.involution.is_identity():
        return False
    return all((e + e).is_zero() for e in algebra.basis())


# -------------------------------------------------------- degreewise sets: criteria
def _rows_from_maps(algebra, maps):
    return algebra.constraint_rows(maps)


def _named_rows(algebra, name):
    def build():
        basis = algebra.basis()
        mul = algebra.mul
        star = algebra.star
        if name == "commuter":
            maps = [lambda x, b=b: algebra.commutator(x, b) for b in basis]
        elif name == "star_fixed":
            return linalg.mat_sub(
                algebra.involution.matrix, linalg.identity_matrix(algebra.dim)
            )
        elif name == "kill_star_skew":
            # a (b* - b) = 0 for all b
            maps = [lambda x, b=b: mul(x, star(b) - b) for b in basis]
        elif name == "kill_commutators":
            maps = [
                lambda x, b=b, c=c: mul(x, algebra.commutator(b, c))
                for i, b in enumerate(basis)
                for c in basis[i + 1:]
            ]
        elif name == "nucleus_left":
            maps = [
                lambda x, b=b, c=c: algebra.associator(x, b, c)
                for b in basis
                for c in basis
            ]
        elif name == "nucleus_middle":
            maps = [
                lambda x, b=b, c=c: algebra.associator(b, x, c)
                for b in basis
                for c in basis
            ]
        elif name == "nucleus_right":
            maps = [
                lambda x, b=b, c=c: algebra.associator(b, c, x)
                for b in basis
                for c in basis
            ]
        elif name == "swap_right":
            # (a b) c = a (c b)
            maps = [
                lambda x, b=b, c=c: mul(mul(x, b), c) - mul(x, mul(c, b))
                for b in basis
                for c in basis
            ]
        elif name == "outer_twist":
            # (b c) a = c (b a)
            maps = [
                lambda x, b=b, c=c: mul(mul(b, c), x) - mul(c, mul(b, x))
                for b in basis
                for c in basis
            ]
        elif name == "exchange_right":
            # (a b) c = (a c) b
            maps = [
                lambda x, b=b, c=c: mul(mul(x, b), c) - mul(mul(x, c), b)
                for b in basis
                for c in basis
            ]
        elif name == "exchange_left":
            # b (c a) = c (b a)
            maps = [
                lambda x, b=b, c=c: mul(b, mul(c, x)) - mul(c, mul(b, x))
                for b in basis
                for c in basis
            ]
        else:
            raise ValueError(f"unknown row kind {name!r}")
        return _rows_from_maps(algebra, maps)

    return algebra.cached(("sa_rows", name), build)


_Z_ROWS = ("commuter", "nucleus_left", "nucleus_middle", "nucleus_right")

# (even-degree row kinds, odd-degree row kinds) for each structural set
_KIND_ROWS = {
    "commuter": (
        ("commuter", "star_fixed"),
        ("commuter", "star_fixed", "kill_star_skew"),
    ),
    "left_right_nucleus": (
        _Z_ROWS,
        ("commuter", "nucleus_middle", "swap_right", "outer_twist"),
    ),
    "middle_nucleus": (
        ("commuter", "nucleus_middle"),
        ("commuter", "exchange_right", "exchange_left"),
    ),
    "nucleus": (
        _Z_ROWS,
        _Z_ROWS + ("kill_commutators",),
    ),
    "center": (
        _Z_ROWS + ("star_fixed",),
        _Z_ROWS + ("star_fixed", "kill_star_skew"),
    ),
}


def _solve_named(algebra, names, extra_rows=()):
    def build():
        rows = []
        for name in names:
            rows.extend(_named_rows(algebra, name))
        rows.extend(extra_rows)
        return tuple(
            AlgebraElement(v) for v in linalg.nullspace(rows, algebra.dim)
        )

    if extra_rows:
        return build()
    return algebra.cached(("sa_solve", names), build)


def degreewise_set(algebra, which, bound):
    """Per-degree admissible-coefficient subspaces of the named structural set.

    The conditions are per-coefficient, so truncating at the bound loses
    nothing about degrees up to the bound.
    """
    if which not in SET_KINDS:
        raise ValueError(f"which must be one of {SET_KINDS}")
    if not 0 <= bound <= CRITERIA_BOUND_LIMIT:
        raise ValueError(f"bound must be between 0 and {CRITERIA_BOUND_LIMIT}")
    even_names, odd_names = _KIND_ROWS[which]
    even = _solve_named(algebra, tuple(even_names))
    odd = _solve_named(algebra, tuple(odd_names))
    per_degree = {i: even if i % 2 == 0 else odd for i in range(bound + 1)}
    return DegreewiseSet(which, bound, per_degree)


def z_star_of_b(algebra, bound):
    """Star-fixed part of the center, degree by degree.

    The canonical involution acts on the degree-i coefficient by
    (-1)^i *^(i+1); its fixed-point condition is star-fixedness at even
    degrees and vanishing at odd degrees (the latter because doubling the
    coefficient never gives zero over the rationals unless it is zero).
    """
    if not 0 <= bound <= CRITERIA_BOUND_LIMIT:
        raise ValueError(f"bound must be between 0 and {CRITERIA_BOUND_LIMIT}")
    even_names, odd_names = _KIND_ROWS["center"]
    n = algebra.dim
    even_fix = linalg.mat_sub(algebra.involution.matrix, linalg.identity_matrix(n))
    odd_fix = tuple(
        tuple(-2 if i == j else 0 for j in range(n)) for i in range(n)
    )
    even = _solve_named(algebra, tuple(even_names), extra_rows=even_fix)
    odd = _solve_named(algebra, tuple(odd_names), extra_rows=odd_fix)
    per_degree = {i: even if i % 2 == 0 else odd for i in range(bound + 1)}
    return DegreewiseSet("z_star", bound, per_degree)


# Spec-facing alias: the ring whose center is being carved up is called B there.
z_star_of_B = z_star_of_b


# ----------------------------------------------------- degreewise sets: brute force
def _brute_primitive_rows(algebra, ring, degree, primitive):
    """Constraint rows on the degree-``degree`` coefficient, via real ring products."""

    def build():
        basis = algebra.basis()
        n = algebra.dim
        window = range(BRUTE_DEGREE_WINDOW + 1)
        constraints = []
        if primitive == "commuter":
            for j in window:
                for b in basis:
                    constraints.append(("c", b, j, None, None))
        else:
            for j in window:
                for k in window:
                    for b in basis:
                        for c in basis:
                            constraints.append((primitive, b, j, c, k))

        def value(kind, a, b, j, c, k):
            pa = ring.monomial(degree, a)
            pb = ring.monomial(j, b)
            if kind == "c":
                return ring.mul(pa, pb) - ring.mul(pb, pa)
            pc = ring.monomial(k, c)
            if kind == "left":
                slots = (pa, pb, pc)
            elif kind == "middle":
                slots = (pb, pa, pc)
            else:
                slots = (pb, pc, pa)
            return ring.mul(ring.mul(slots[0], slots[1]), slots[2]) - ring.mul(
                slots[0], ring.mul(slots[1], slots[2])
            )

        rows = []
        for kind, b, j, c, k in constraints:
            images = [value(kind, a, b, j, c, k) for a in basis]
            support = sorted({d for img in images for d in img.coeffs})
            for d in support:
                cols = [img.coeff(d, n).coords for img in images]
                for r in range(n):
                    rows.append(tuple(cols[u][r] for u in range(n)))
        return tuple(rows)

    return algebra.cached(("brute_rows", degree, primitive), build)


def _brute_nullspace(algebra, ring, degree, primitives):
    rows = []
    for primitive in primitives:
        rows.extend(_brute_primitive_rows(algebra, ring, degree, primitive))
    return tuple(AlgebraElement(v) for v in linalg.nullspace(rows, algebra.dim))


def degreewise_set_bruteforce(algebra, which, bound):
    """Oracle for ``degreewise_set``: solve constraints from actual ring products.

    For the combined left/right set the two one-sided systems are solved
    separately; a mismatch would contradict the expected equality of the two
    nuclei and is raised instead of silently merged.
    """
    if which not in SET_KINDS:
        raise ValueError(f"which must be one of {SET_KINDS}")
    if not 0 <= bound <= BRUTE_BOUND_LIMIT:
        raise ValueError(f"bound must be between 0 and {BRUTE_BOUND_LIMIT}")
    ring = star_skew_ring(algebra)
    per_degree = {}
    for degree in range(bound + 1):
        if which == "commuter":
            basis = _brute_nullspace(algebra, ring, degree, ("commuter",))
        elif which == "middle_nucleus":
            basis = _brute_nullspace(algebra, ring, degree, ("middle",))
        elif which == "left_right_nucleus":
            left = _brute_nullspace(algebra, ring, degree, ("left",))
            right = _brute_nullspace(algebra, ring, degree, ("right",))
            if left != right:
                raise ValueError(
                    f"left and right nucleus disagree at degree {degree}: "
                    f"{[e.coords for e in left]} vs {[e.coords for e in right]}"
                )
            basis = left
        elif which == "nucleus":
            basis = _brute_nullspace(algebra, ring, degree, ("left", "middle", "right"))
        else:  # center
            basis = _brute_nullspace(
                algebra, ring, degree, ("commuter", "left", "middle", "right")
            )
        per_degree[degree] = basis
    return DegreewiseSet(which, bound, per_degree)
