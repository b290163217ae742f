"""Generalized polynomial rings with an optional flip on odd-degree right factors.

A ring here is the additive group of finitely supported coefficient
sequences over a star-algebra, with the monomial product driven by two
additive structure maps sigma and delta through the pi-function calculus:

    unflipped:  (a X^m)(b X^n) = sum_i (a * pi_i^m(b)) X^(i+n)
    flipped:    (a X^m)(b X^n) = sum_i tau_n(a, pi_i^m(b)) X^(i+n)

where tau_n multiplies in the given order for even n and in reversed order
for odd n.  pi_i^m is the sum of all compositions of i copies of sigma and
m-i copies of delta; it is evaluated through the recurrence

    pi_i^(m+1) = pi_(i-1)^m o sigma + pi_i^m o delta

with memoized matrices, while the combinatorial sum survives as the
independent test oracle ``pi_oracle``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import linalg
from .algebra_core import AlgebraElement, zero_element
from .scalars import format_rational, parse_rational, simplify

ORACLE_DEGREE_LIMIT = 12
AXIOM_DEGREE_LIMIT = 8
AXIOM_FAMILIES = ("O", "N", "F")


class AdditiveMap:
    """Additive (hence rational-linear) self-map of the coefficient algebra."""

    KINDS = ("sigma", "delta")
    __slots__ = ("matrix", "kind")

    def __init__(self, matrix, kind):
        if kind not in self.KINDS:
            raise ValueError("kind must be 'sigma' or 'delta'")
        rows = tuple(tuple(simplify(c) for c in row) for row in matrix)
        if any(len(row) != len(rows) for row in rows):
            raise ValueError("matrix must be square")
        self.matrix = rows
        self.kind = kind

    def __call__(self, elem):
        return AlgebraElement(linalg.mat_vec(self.matrix, elem.coords))

    def check_unit_constraint(self, algebra):
        image = self(algebra.unit)
        if self.kind == "sigma" and image != algebra.unit:
            raise ValueError("sigma must map the unit to the unit")
        if self.kind == "delta" and not image.is_zero():
            raise ValueError("delta must map the unit to zero")

    @classmethod
    def identity(cls, dim, kind="sigma"):
        return cls(linalg.identity_matrix(dim), kind)

    @classmethod
    def zero(cls, dim, kind="delta"):
        return cls(linalg.zero_matrix(dim), kind)

    @classmethod
    def from_star(cls, algebra):
        return cls(algebra.involution.matrix, "sigma")


class Poly:
    """Finitely supported map degree -> coefficient; zeros are never stored."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        items = coeffs.items() if isinstance(coeffs, dict) else coeffs
        clean = {}
        for degree, coeff in items:
            if not isinstance(degree, int) or degree < 0:
                raise ValueError("degrees must be natural numbers")
            if degree in clean:
                raise ValueError("duplicate degree")
            if not coeff.is_zero():
                clean[degree] = coeff
        self.coeffs = dict(sorted(clean.items()))

    @classmethod
    def monomial(cls, degree, coeff):
        return cls({degree: coeff})

    @classmethod
    def zero(cls):
        return cls()

    def support(self):
        return tuple(self.coeffs)

    def coeff(self, degree, dim):
        return self.coeffs.get(degree, zero_element(dim))

    def degree(self):
        return max(self.coeffs, default=-1)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        acc = dict(self.coeffs)
        for degree, coeff in other.coeffs.items():
            acc[degree] = acc[degree] + coeff if degree in acc else coeff
        return Poly(acc)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return Poly({degree: -coeff for degree, coeff in self.coeffs.items()})

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __repr__(self):
        return f"Poly({poly_to_text(self)!r})"


class FlipPolyRing:
    """Polynomial ring over a star-algebra, configured by (sigma, delta, flipped).

    The pi-function matrices are memoized per (i, m); a duplicated
    computation under concurrent access rewrites the same value, so rings
    can be shared across threads.
    """

    __slots__ = ("coeff_algebra", "sigma", "delta", "flipped", "_pi_cache")

    def __init__(self, coeff_algebra, sigma, delta, flipped):
        if sigma.kind != "sigma" or delta.kind != "delta":
            raise ValueError("maps must be passed as (sigma, delta)")
        if len(sigma.matrix) != coeff_algebra.dim or len(delta.matrix) != coeff_algebra.dim:
            raise ValueError("dimension mismatch")
        sigma.check_unit_constraint(coeff_algebra)
        delta.check_unit_constraint(coeff_algebra)
        self.coeff_algebra = coeff_algebra
        self.sigma = sigma
        self.delta = delta
        self.flipped = bool(flipped)
        # matrix of pi_i^m keyed by (i, m); None marks the zero map
        self._pi_cache = {(0, 0): linalg.identity_matrix(coeff_algebra.dim)}

    # -------------------------------------------------------------- construction
    def constant(self, elem):
        return Poly({0: elem})

    def monomial(self, degree, coeff):
        return Poly({degree: coeff})

    def one(self):
        return Poly({0: self.coeff_algebra.unit})

    def x(self):
        return Poly({1: self.coeff_algebra.unit})

    # ------------------------------------------------------------------- kernels
    def tau(self, n, r, s):
        """Multiply in order for even n, reversed for odd n."""
        if n % 2 == 0:
            return self.coeff_algebra.mul(r, s)
        return self.coeff_algebra.mul(s, r)

    def pi_matrix(self, i, m):
        if i < 0 or i > m:
            return None
        try:
            return self._pi_cache[(i, m)]
        except KeyError:
            pass
        parts = []
        left = self.pi_matrix(i - 1, m - 1)
        if left is not None:
            parts.append(linalg.mat_mul(left, self.sigma.matrix))
        right = self.pi_matrix(i, m - 1)
        if right is not None:
            parts.append(linalg.mat_mul(right, self.delta.matrix))
        if not parts:
            total = None
        else:
            total = parts[0]
            for extra in parts[1:]:
                total = linalg.mat_add(total, extra)
            if linalg.is_zero_matrix(total):
                total = None
        self._pi_cache[(i, m)] = total
        return total

    def pi(self, i, m, s):
        """pi_i^m(s) through the memoized recurrence."""
        mat = self.pi_matrix(i, m)
        if mat is None:
            return self.coeff_algebra.zero()
        return AlgebraElement(linalg.mat_vec(mat, s.coords))

    def pi_oracle(self, i, m, s):
        """pi_i^m(s) by explicit enumeration of all C(m, i) compositions."""
        if i < 0 or i > m:
            return self.coeff_algebra.zero()
        if m > ORACLE_DEGREE_LIMIT:
            raise ValueError(f"oracle enumeration is bounded at m <= {ORACLE_DEGREE_LIMIT}")
        total = self.coeff_algebra.zero()
        for sigma_slots in itertools.combinations(range(m), i):
            chosen = set(sigma_slots)
            value = s
            for position in range(m - 1, -1, -1):
                value = self.sigma(value) if position in chosen else self.delta(value)
            total = total + value
        return total

    def monomial_product(self, m, a, n, b):
        """(a X^m)(b X^n) as a dict degree -> coefficient."""
        acc = {}
        mul = self.coeff_algebra.mul
        flip = self.flipped and n % 2
        for i in range(m + 1):
            mat = self.pi_matrix(i, m)
            if mat is None:
                continue
            pib = AlgebraElement(linalg.mat_vec(mat, b.coords))
            if pib.is_zero():
                continue
            coeff = mul(pib, a) if flip else mul(a, pib)
            if coeff.is_zero():
                continue
            k = i + n
            acc[k] = acc[k] + coeff if k in acc else coeff
        return acc

    def mul(self, p, q):
        acc = {}
        for m, a in p.coeffs.items():
            for n, b in q.coeffs.items():
                for k, coeff in self.monomial_product(m, a, n, b).items():
                    acc[k] = acc[k] + coeff if k in acc else coeff
        return Poly(acc)


def star_skew_ring(algebra):
    """The flipped ring with sigma equal to the involution and delta zero."""
    dim = algebra.dim
    return FlipPolyRing(
        algebra, AdditiveMap.from_star(algebra), AdditiveMap.zero(dim), flipped=True
    )


def ordinary_ring(algebra, sigma=None, delta=None):
    """Unflipped generalized polynomial ring; defaults to the plain one."""
    dim = algebra.dim
    return FlipPolyRing(
        algebra,
        sigma if sigma is not None else AdditiveMap.identity(dim),
        delta if delta is not None else AdditiveMap.zero(dim),
        flipped=False,
    )


def tau(algebra, n, r, s):
    """Order-preserving product for even n, reversed product for odd n."""
    if n % 2 == 0:
        return algebra.mul(r, s)
    return algebra.mul(s, r)


def poly_mul(ring, p, q):
    """Product in the given ring; function form of ``ring.mul``."""
    return ring.mul(p, q)


# ------------------------------------------------------------------ product rules
class ProductRule:
    """Degreewise product rule (m, n, a, b) -> {degree: coefficient}.

    Biadditivity in (a, b) is part of the contract and is spot-checked in the
    tests; finite support holds because a rule returns a dict.  A rule
    constructed by ``tabulated`` only answers inside its degree window.
    """

    def __init__(self, algebra, eval_fn, label="rule", window=None):
        self.algebra = algebra
        self._eval = eval_fn
        self.label = label
        self.window = window

    def __call__(self, m, n, a, b):
        if self.window is not None and (m > self.window or n > self.window):
            raise ValueError(f"{self.label} is only defined for degrees <= {self.window}")
        return {k: v for k, v in self._eval(m, n, a, b).items() if not v.is_zero()}

    def flipped(self):
        """Swap the coefficient arguments whenever the right factor has odd degree."""

        def ev(m, n, a, b):
            if n % 2:
                return self._eval(m, n, b, a)
            return self._eval(m, n, a, b)

        return ProductRule(self.algebra, ev, f"flip({self.label})", self.window)

    def tabulated(self, max_degree):
        """Freeze the rule into a stored basis-pair table for m, n <= max_degree."""
        basis = self.algebra.basis()
        table = {
            (m, n, i, j): self(m, n, basis[i], basis[j])
            for m in range(max_degree + 1)
            for n in range(max_degree + 1)
            for i in range(len(basis))
            for j in range(len(basis))
        }

        def ev(m, n, a, b):
            acc = {}
            for i, ai in enumerate(a.coords):
                if not ai:
                    continue
                for j, bj in enumerate(b.coords):
                    if not bj:
                        continue
                    for k, v in table[(m, n, i, j)].items():
                        part = v.scaled(ai * bj)
                        acc[k] = acc[k] + part if k in acc else part
            return acc

        return ProductRule(self.algebra, ev, f"table({self.label})", max_degree)

    @classmethod
    def of_ring(cls, ring, label=None):
        return cls(
            ring.coeff_algebra,
            lambda m, n, a, b: ring.monomial_product(m, a, n, b),
            label or ("flipped ring rule" if ring.flipped else "ring rule"),
        )

    @classmethod
    def from_family(cls, algebra, family, degree_window, support_limit):
        """Wrap a raw (m, n, k, a, b) -> coefficient family with explicit finite bounds."""

        def ev(m, n, a, b):
            out = {}
            for k in range(support_limit + 1):
                v = family(m, n, k, a, b)
                if not v.is_zero():
                    out[k] = v
            return out

        return cls(algebra, ev, "family rule", degree_window)


def flip_rule(rule):
    """The rule composed with the argument swap on odd right degrees."""
    return rule.flipped()


def rules_agree(rule_a, rule_b, max_degree):
    """Extensional equality on all basis pairs with m, n <= max_degree."""
    basis = rule_a.algebra.basis()
    for m in range(max_degree + 1):
        for n in range(max_degree + 1):
            for a in basis:
                for b in basis:
                    if rule_a(m, n, a, b) != rule_b(m, n, a, b):
                        return False
    return True


# ------------------------------------------------------------------ axiom checks
@dataclass
class AxiomFailure:
    axiom: str
    witness: str


@dataclass
class AxiomReport:
    family: str
    degree_bound: int
    checked: int = 0
    failures: list[AxiomFailure] = field(default_factory=list)

    @property
    def passed(self):
        return not self.failures

    def first_counterexample(self):
        return self.failures[0] if self.failures else None

    def summary(self):
        head = f"family {self.family}, bound {self.degree_bound}: {self.checked} identities checked"
        if self.passed:
            return head + ", all hold"
        first = self.failures[0]
        return head + f", {len(self.failures)} failed; first: [{first.axiom}] {first.witness}"


def _poly_associator(ring, p, q, r):
    return ring.mul(ring.mul(p, q), r) - ring.mul(p, ring.mul(q, r))


def check_axioms(ring, family, degree_bound):
    """Exhaustively test one axiom family on basis coefficients up to the bound.

    Families: "O" (generator reduction plus an associativity sample over all
    monomial triples), "N" (same generator axioms plus vanishing associators
    with the generator in the middle or right slot), "F" (the recursive
    product identities of the flipped rings).
    """
    if family not in AXIOM_FAMILIES:
        raise ValueError(f"family must be one of {AXIOM_FAMILIES}")
    if not 0 <= degree_bound <= AXIOM_DEGREE_LIMIT:
        raise ValueError(f"degree_bound must be between 0 and {AXIOM_DEGREE_LIMIT}")
    algebra = ring.coeff_algebra
    basis = algebra.basis()
    x_poly = ring.x()
    report = AxiomReport(family, degree_bound)

    def record(ok, axiom, witness):
        report.checked += 1
        if not ok:
            report.failures.append(AxiomFailure(axiom, witness()))

    # power basis: (r X^m) X = r X^(m+1)
    for m in range(degree_bound + 1):
        for r in basis:
            lhs = ring.mul(ring.monomial(m, r), x_poly)
            rhs = ring.monomial(m + 1, r)
            record(
                lhs == rhs,
                f"{family}1",
                lambda m=m, r=r, lhs=lhs: f"(rX^{m})X != rX^{m + 1} for r={r.coords}: got {poly_to_text(lhs)}",
            )

    # generator reduction: X r = sigma(r) X + delta(r)
    for r in basis:
        lhs = ring.mul(x_poly, ring.constant(r))
        rhs = ring.monomial(1, ring.sigma(r)) + ring.constant(ring.delta(r))
        record(
            lhs == rhs,
            f"{family}2",
            lambda r=r, lhs=lhs, rhs=rhs: f"Xr != sigma(r)X + delta(r) for r={r.coords}: {poly_to_text(lhs)} vs {poly_to_text(rhs)}",
        )

    if family == "F":
        for m in range(degree_bound + 1):
            for n in range(degree_bound + 1):
                for r in basis:
                    for s in basis:
                        lhs = ring.mul(ring.monomial(m + 1, r), ring.monomial(n, s))
                        rhs = ring.mul(
                            ring.mul(ring.monomial(m, r), ring.monomial(n, ring.sigma(s))),
                            x_poly,
                        ) + ring.mul(ring.monomial(m, r), ring.monomial(n, ring.delta(s)))
                        record(
                            lhs == rhs,
                            "F3a",
                            lambda m=m, n=n, r=r, s=s, lhs=lhs, rhs=rhs: (
                                f"m={m} n={n} r={r.coords} s={s.coords}: "
                                f"{poly_to_text(lhs)} vs {poly_to_text(rhs)}"
                            ),
                        )
        for n in range(degree_bound + 1):
            for r in basis:
                for s in basis:
                    lhs = ring.mul(ring.constant(r), ring.monomial(n, s))
                    rhs = ring.monomial(n, ring.tau(n, r, s))
                    record(
                        lhs == rhs,
                        "F3b",
                        lambda n=n, r=r, s=s, lhs=lhs, rhs=rhs: (
                            f"n={n} r={r.coords} s={s.coords}: "
                            f"{poly_to_text(lhs)} vs {poly_to_text(rhs)}"
                        ),
                    )
    elif family == "N":
        for j in range(degree_bound + 1):
            for k in range(degree_bound + 1):
                for b in basis:
                    for c in basis:
                        p = ring.monomial(j, b)
                        q = ring.monomial(k, c)
                        right = _poly_associator(ring, p, q, x_poly)
                        record(
                            right.is_zero(),
                            "N3",
                            lambda j=j, k=k, b=b, c=c, right=right: (
                                f"(bX^{j}, cX^{k}, X) != 0 for b={b.coords} c={c.coords}: "
                                f"{poly_to_text(right)}"
                            ),
                        )
                        middle = _poly_associator(ring, p, x_poly, q)
                        record(
                            middle.is_zero(),
                            "N3",
                            lambda j=j, k=k, b=b, c=c, middle=middle: (
                                f"(bX^{j}, X, cX^{k}) != 0 for b={b.coords} c={c.coords}: "
                                f"{poly_to_text(middle)}"
                            ),
                        )
    else:  # "O": associativity sampled over all bounded monomial triples
        for i in range(degree_bound + 1):
            for j in range(degree_bound + 1):
                for k in range(degree_bound + 1):
                    for a in basis:
                        for b in basis:
                            for c in basis:
                                value = _poly_associator(
                                    ring,
                                    ring.monomial(i, a),
                                    ring.monomial(j, b),
                                    ring.monomial(k, c),
                                )
                                record(
                                    value.is_zero(),
                                    "O3",
                                    lambda i=i, j=j, k=k, a=a, b=b, c=c, value=value: (
                                        f"(aX^{i}, bX^{j}, cX^{k}) != 0 for a={a.coords} "
                                        f"b={b.coords} c={c.coords}: {poly_to_text(value)}"
                                    ),
                                )
    return report


# ------------------------------------------------------------------------ grading
def graded_split(ring, p):
    """Split into even and odd layers, reindexed to the squared generator.

    Requires sigma*delta + delta*sigma = 0 (trivially true for delta = 0).
    """
    anti = linalg.mat_add(
        linalg.mat_mul(ring.sigma.matrix, ring.delta.matrix),
        linalg.mat_mul(ring.delta.matrix, ring.sigma.matrix),
    )
    if not linalg.is_zero_matrix(anti):
        raise ValueError("grading requires sigma*delta + delta*sigma = 0")
    even = {}
    odd = {}
    for degree, coeff in p.coeffs.items():
        if degree % 2 == 0:
            even[degree // 2] = coeff
        else:
            odd[degree // 2] = coeff
    return Poly(even), Poly(odd)


def graded_join(ring, even, odd):
    """Inverse of graded_split."""
    acc = {2 * d: c for d, c in even.coeffs.items()}
    acc.update({2 * d + 1: c for d, c in odd.coeffs.items()})
    return Poly(acc)


def even_square_ring(ring):
    """The ring the even layer multiplies in: maps squared, no flip."""
    return FlipPolyRing(
        ring.coeff_algebra,
        AdditiveMap(linalg.mat_mul(ring.sigma.matrix, ring.sigma.matrix), "sigma"),
        AdditiveMap(linalg.mat_mul(ring.delta.matrix, ring.delta.matrix), "delta"),
        flipped=False,
    )


# --------------------------------------------------------------------- text forms
def poly_to_text(p):
    """Render as ``[c0,...] + [c0,...]*X + [c0,...]*X^k``."""
    if p.is_zero():
        return "0"
    parts = []
    for degree, coeff in p.coeffs.items():
        vec = "[" + ",".join(format_rational(c) for c in coeff.coords) + "]"
        if degree == 0:
            parts.append(vec)
        elif degree == 1:
            parts.append(vec + "*X")
        else:
            parts.append(f"{vec}*X^{degree}")
    return " + ".join(parts)


def _split_signed_terms(text):
    terms = []
    current = ""
    depth = 0
    for ch in text:
        if ch == "[":
            depth += 1
        elif ch == "]":
            depth -= 1
            if depth < 0:
                raise ValueError("unbalanced brackets")
        if ch in "+-" and depth == 0 and current.strip():
            terms.append(current.strip())
            current = ch
        else:
            current += ch
    if depth != 0:
        raise ValueError("unbalanced brackets")
    if current.strip():
        terms.append(current.strip())
    return terms


def parse_poly(text, dim):
    """Parse the textual polynomial form; coefficients are bracketed vectors."""
    body = text.strip()
    if body in ("0", "+0", "-0"):
        return Poly()
    acc = {}
    for term in _split_signed_terms(body):
        sign = 1
        if term.startswith(("+", "-")):
            sign = -1 if term[0] == "-" else 1
            term = term[1:].strip()
        if not term.startswith("["):
            raise ValueError(f"cannot parse polynomial term {term!r}")
        close = term.index("]")
        inner = term[1:close]
        coords = [parse_rational(c) for c in inner.split(",")] if inner.strip() else []
        if len(coords) != dim:
            raise ValueError(f"coefficient vector must have length {dim}")
        rest = term[close + 1:].strip()
        if not rest:
            degree = 0
        else:
            if not rest.startswith("*"):
                raise ValueError(f"cannot parse polynomial term {term!r}")
            rest = rest[1:].strip()
            if rest == "X":
                degree = 1
            elif rest.startswith("X^"):
                degree = int(rest[2:])
            else:
                raise ValueError(f"cannot parse polynomial term {term!r}")
        coeff = AlgebraElement(coords)
        if sign < 0:
            coeff = -coeff
        acc[degree] = acc[degree] + coeff if degree in acc else coeff
    return Poly(acc)


def poly_to_json(p):
    """JSON mirror: a {degree: coords} map with scalar strings."""
    return {
        str(degree): [format_rational(c) for c in coeff.coords]
        for degree, coeff in p.coeffs.items()
    }


def poly_from_json(data, dim):
    acc = {}
    for degree, coords in data.items():
        values = [parse_rational(c) for c in coords]
        if len(values) != dim:
            raise ValueError(f"coefficient vector must have length {dim}")
        acc[int(degree)] = AlgebraElement(values)
    return Poly(acc)
