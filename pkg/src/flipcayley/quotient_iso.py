"""Reduction modulo X^2 - mu and the structural identifications around it.

The quotient of the flipped star-skew ring by X^2 - mu keeps the canonical
representative a + bX of every class, folding X^(2n) into mu^n and
X^(2n+1) into mu^n X.  On representatives the induced product is exactly
the doubling formula

    (a, b)(c, d) = (ac + mu d*b, da + bc*),

and the coordinate map (a, b) -> a-coords ++ b-coords identifies the
quotient with the doubled algebra built by `cayley_dickson` (same basis
ordering, by construction).

The un-quotiented ring is itself a double: of the ordinary polynomial
algebra in a central variable t, with t as the doubling scalar.  The
identification substitutes t -> X^2 in the first slot and t -> X^2 followed
by a right factor X in the second.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra_core import (
    AlgebraElement,
    Involution,
    StarAlgebra,
    StructureConstants,
    zero_element,
)
from .flip_poly import Poly, ordinary_ring, star_skew_ring
from .involutions import alpha
from .scalars import simplify


@dataclass(frozen=True)
class QuotElement:
    """Canonical representative (a, b) of the class of a + bX."""

    a: AlgebraElement
    b: AlgebraElement


@dataclass(frozen=True)
class PolyPair:
    """Element (p, q) of the double of the ordinary polynomial algebra."""

    p: Poly
    q: Poly


def reduce(ring, p, mu):
    """Fold each X^(2n) term into mu^n and each X^(2n+1) term into mu^n X."""
    mu = simplify(mu)
    if mu == 0:
        raise ValueError("mu must be a cancellable (nonzero) scalar")
    dim = ring.coeff_algebra.dim
    a = zero_element(dim)
    b = zero_element(dim)
    for degree, coeff in p.coeffs.items():
        folded = coeff.scaled(mu ** (degree // 2))
        if degree % 2 == 0:
            a = a + folded
        else:
            b = b + folded
    return QuotElement(a, b)


def quot_mul(algebra, mu, u, v):
    """(a, b)(c, d) = (ac + mu d*b, da + bc*)."""
    mu = simplify(mu)
    if mu == 0:
        raise ValueError("mu must be a cancellable (nonzero) scalar")
    a, b, c, d = u.a, u.b, v.a, v.b
    first = algebra.mul(a, c) + algebra.mul(algebra.star(d), b).scaled(mu)
    second = algebra.mul(d, a) + algebra.mul(b, algebra.star(c))
    return QuotElement(first, second)


def quot_star(algebra, u):
    """(a, b) -> (a*, -b), the involution alpha pushes down to the quotient."""
    return QuotElement(algebra.star(u.a), -u.b)


def phi(algebra, u):
    """Coordinate identification with the double: concatenate the two slots."""
    return AlgebraElement(u.a.coords + u.b.coords)


def phi_inv(algebra, w):
    n = algebra.dim
    if len(w.coords) != 2 * n:
        raise ValueError("expected an element of the doubled algebra")
    return QuotElement(AlgebraElement(w.coords[:n]), AlgebraElement(w.coords[n:]))


class QuotientRing:
    """The flipped star-skew ring modulo X^2 - mu, on canonical (a, b) pairs."""

    def __init__(self, algebra, mu):
        mu = simplify(mu)
        if mu == 0:
            raise ValueError("mu must be a cancellable (nonzero) scalar")
        self.algebra = algebra
        self.mu = mu
        self.ring = star_skew_ring(algebra)

    def lift(self, u):
        return Poly({0: u.a}) + Poly({1: u.b})

    def reduce(self, p):
        return reduce(self.ring, p, self.mu)

    def mul(self, u, v):
        return quot_mul(self.algebra, self.mu, u, v)

    def mul_via_reduction(self, u, v):
        """Independent route: multiply representatives in the ring, then reduce."""
        return self.reduce(self.ring.mul(self.lift(u), self.lift(v)))

    def star(self, u):
        return quot_star(self.algebra, u)

    def star_via_reduction(self, u):
        return self.reduce(alpha(self.ring, self.lift(u)))

    def phi(self, u):
        return phi(self.algebra, u)

    def phi_inv(self, w):
        return phi_inv(self.algebra, w)

    def basis(self):
        zero = zero_element(self.algebra.dim)
        out = [QuotElement(e, zero) for e in self.algebra.basis()]
        out.extend(QuotElement(zero, e) for e in self.algebra.basis())
        return out

    def to_star_algebra(self, check=True):
        """Structure constants of the quotient under the coordinate identification."""
        basis = self.basis()
        n = len(basis)
        table = [
            [self.phi(self.mul(basis[i], basis[j])).coords for j in range(n)]
            for i in range(n)
        ]
        star_cols = [self.phi(self.star(b)).coords for b in basis]
        star = [tuple(star_cols[j][i] for j in range(n)) for i in range(n)]
        sc = StructureConstants(n, table, self.algebra.sc.unit_index)
        return StarAlgebra(sc, Involution(star), check=check)


# ----------------------------------------------- the double of the polynomial ring
def _star_coeffwise(algebra, p):
    return Poly({d: algebra.star(c) for d, c in p.coeffs.items()})


def _t_shift(p):
    return Poly({d + 1: c for d, c in p.coeffs.items()})


def cayley_t_mul(algebra, u, v):
    """Product in the double of the ordinary polynomial algebra, scalar t.

    Multiplication by the doubling scalar is a degree shift in t.
    """
    ring = ordinary_ring(algebra)
    p, q, r, s = u.p, u.q, v.p, v.q
    first = ring.mul(p, r) + _t_shift(ring.mul(_star_coeffwise(algebra, s), q))
    second = ring.mul(s, p) + ring.mul(q, _star_coeffwise(algebra, r))
    return PolyPair(first, second)


def cayley_t_star(algebra, u):
    return PolyPair(
        _star_coeffwise(algebra, u.p),
        Poly({d: -c for d, c in u.q.coeffs.items()}),
    )


def cayley_t_unit(algebra):
    return PolyPair(Poly({0: algebra.unit}), Poly())


def psi(algebra, pair):
    """(p(t), q(t)) -> p(X^2) + q(X^2) X."""
    acc = {2 * d: c for d, c in pair.p.coeffs.items()}
    acc.update({2 * d + 1: c for d, c in pair.q.coeffs.items()})
    return Poly(acc)


def psi_inv(algebra, p):
    """Split by degree parity; inverse of ``psi``."""
    even = {}
    odd = {}
    for degree, coeff in p.coeffs.items():
        if degree % 2 == 0:
            even[degree // 2] = coeff
        else:
            odd[degree // 2] = coeff
    return PolyPair(Poly(even), Poly(odd))
