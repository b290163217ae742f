"""Named verification suites behind the ``verify`` CLI subcommand.

Each suite checks one structural statement end to end and reports PASS or
FAIL with the first counterexample.  Suites are deterministic: the same
inputs always produce a byte-identical report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from . import structure_analysis as sa
from .cayley_dickson import cayley_double, named, tower
from .flip_poly import (
    ProductRule,
    check_axioms,
    flip_rule,
    poly_to_text,
    rules_agree,
    star_skew_ring,
    FlipPolyRing,
)
from .flip_poly import Poly
from .quotient_iso import (
    PolyPair,
    QuotientRing,
    cayley_t_mul,
    cayley_t_star,
    psi,
    psi_inv,
)
from .involutions import alpha

THM1_ALGEBRAS = ("R", "C", "C'", "H", "H'")
THM2_ALGEBRAS = ("C", "H")
PROPS_ALGEBRAS = ("R", "C", "C'", "H", "H'", "O")
CENTERS_ALGEBRAS = ("R", "C", "H", "O")


@dataclass
class SuiteResult:
    name: str
    tag: str
    lines: list = field(default_factory=list)
    failure: str | None = None

    @property
    def passed(self):
        return self.failure is None

    def render(self):
        out = [f"suite {self.name} [{self.tag}]"]
        out.extend("  " + line for line in self.lines)
        if self.passed:
            out.append("  result: PASS")
        else:
            out.append(f"  result: FAIL - {self.failure}")
        return out


def _algebra_set(names, restrict):
    chosen = [restrict] if restrict else list(names)
    return [(name, named(name)) for name in chosen]


def suite_thm1(algebra=None, mu=None, bound=None):
    """Quotient by X^2 - mu versus the doubled algebra, as star-algebras."""
    result = SuiteResult("thm1", "quotient-matches-cayley-double")
    mus = [mu] if mu is not None else [-1, 1]
    for name, A in _algebra_set(THM1_ALGEBRAS, algebra):
        for m in mus:
            quotient = QuotientRing(A, m)
            double = cayley_double(A, m)
            basis = quotient.basis()
            for w in double.basis():
                if quotient.phi(quotient.phi_inv(w)) != w:
                    result.failure = f"{name}, mu={m}: phi o phi_inv misses {w.coords}"
                    return result
            for u, v in product(basis, repeat=2):
                via_reduction = quotient.mul_via_reduction(u, v)
                if via_reduction != quotient.mul(u, v):
                    result.failure = (
                        f"{name}, mu={m}: reduction and doubling formula disagree on "
                        f"({quotient.phi(u).coords}, {quotient.phi(v).coords})"
                    )
                    return result
                if quotient.phi(via_reduction) != double.mul(
                    quotient.phi(u), quotient.phi(v)
                ):
                    result.failure = (
                        f"{name}, mu={m}: products differ on "
                        f"({quotient.phi(u).coords}, {quotient.phi(v).coords})"
                    )
                    return result
            for u in basis:
                if quotient.star(u) != quotient.star_via_reduction(u):
                    result.failure = f"{name}, mu={m}: star reduction mismatch"
                    return result
                if quotient.phi(quotient.star(u)) != double.star(quotient.phi(u)):
                    result.failure = (
                        f"{name}, mu={m}: stars differ on {quotient.phi(u).coords}"
                    )
                    return result
            result.lines.append(
                f"{name}, mu={m}: {len(basis)}x{len(basis)} products and "
                f"{len(basis)} stars agree"
            )
    return result


def _pair_monomials(algebra, tdeg):
    out = []
    zero = Poly()
    for d in range(tdeg + 1):
        for e in algebra.basis():
            mono = Poly({d: e})
            out.append(PolyPair(mono, zero))
            out.append(PolyPair(zero, mono))
    return out


def suite_thm2(algebra=None, mu=None, bound=None):
    """The flipped ring as the double of the polynomial algebra in t."""
    result = SuiteResult("thm2", "ring-is-double-of-poly-algebra")
    tdeg = 2
    for name, A in _algebra_set(THM2_ALGEBRAS, algebra):
        ring = star_skew_ring(A)
        gens = _pair_monomials(A, tdeg)
        for u, v in product(gens, repeat=2):
            lhs = psi(A, cayley_t_mul(A, u, v))
            rhs = ring.mul(psi(A, u), psi(A, v))
            if lhs != rhs:
                result.failure = (
                    f"{name}: psi not multiplicative on "
                    f"({poly_to_text(u.p)};{poly_to_text(u.q)}) x "
                    f"({poly_to_text(v.p)};{poly_to_text(v.q)}): "
                    f"{poly_to_text(lhs)} vs {poly_to_text(rhs)}"
                )
                return result
        for u in gens:
            if psi(A, cayley_t_star(A, u)) != alpha(ring, psi(A, u)):
                result.failure = f"{name}: psi not star-compatible"
                return result
            if psi_inv(A, psi(A, u)) != u:
                result.failure = f"{name}: psi_inv o psi differs from the identity"
                return result
        result.lines.append(
            f"{name}: multiplicative on {len(gens)}^2 generator pairs, "
            f"star-compatible, inverse round-trips"
        )
    return result


def suite_props(algebra=None, mu=None, bound=None):
    """Inheritance criteria against direct evaluation on the quotient algebras."""
    result = SuiteResult("props", "inheritance-criteria")
    mus = [mu] if mu is not None else [-1, 1]
    for name, A in _algebra_set(PROPS_ALGEBRAS, algebra):
        ring = star_skew_ring(A)
        commutative = sa.b_commutative_criterion(A)
        associative = sa.ring_is_associative_criterion(ring)
        flexible = sa.b_flexible_criterion(A)
        alternative = sa.b_alternative_criterion(A)
        alpha_trivial = sa.alpha_trivial_criterion(A)
        for m in mus:
            quotient_algebra = QuotientRing(A, m).to_star_algebra()
            checks = (
                ("commutative", commutative, quotient_algebra.is_commutative()),
                ("associative", associative, quotient_algebra.is_associative()),
                ("flexible", flexible, quotient_algebra.is_flexible()),
                ("alternative", alternative, quotient_algebra.is_alternative()),
                (
                    "trivial involution",
                    alpha_trivial,
                    quotient_algebra.involution.is_identity(),
                ),
            )
            for label, predicted, actual in checks:
                if predicted != actual:
                    result.failure = (
                        f"{name}, mu={m}: criterion says {label}={predicted} "
                        f"but the quotient has {label}={actual}"
                    )
                    return result
        flags = "".join(
            "T" if f else "F"
            for f in (commutative, associative, alternative, flexible)
        )
        result.lines.append(
            f"{name}: (comm, assoc, alt, flex) = {flags}, matches both quotients"
        )
    return result


def suite_centers(algebra=None, mu=None, bound=None):
    """Degreewise structural sets: criteria versus the brute-force oracle."""
    result = SuiteResult("centers", "structural-sets-crosscheck")
    b = min(bound if bound is not None else 4, sa.BRUTE_BOUND_LIMIT)
    for name, A in _algebra_set(CENTERS_ALGEBRAS, algebra):
        dims = {}
        for kind in sa.SET_KINDS:
            predicted = sa.degreewise_set(A, kind, b)
            brute = sa.degreewise_set_bruteforce(A, kind, b)
            if predicted != brute:
                result.failure = (
                    f"{name}, {kind}: criteria dims {predicted.dims()} vs "
                    f"brute-force dims {brute.dims()}"
                )
                return result
            dims[kind] = predicted.dims()
        summary = ", ".join(
            f"{kind}={list(dims[kind].values())}" for kind in sa.SET_KINDS
        )
        result.lines.append(f"{name} (bound {b}): {summary}")
    return result


def suite_corollary(algebra=None, mu=None, bound=None):
    """Commuter/center/nucleus patterns along the -1 doubling tower."""
    result = SuiteResult("corollary", "tower-patterns")
    b = bound if bound is not None else 6
    for n in range(5):
        A = tower([-1] * n)
        commuter = sa.degreewise_set(A, "commuter", b)
        center = sa.degreewise_set(A, "center", b)
        z_star = sa.z_star_of_b(A, b)
        nucleus = sa.degreewise_set(A, "nucleus", b)
        if commuter.per_degree != center.per_degree:
            result.failure = f"tower n={n}: commuter and center differ"
            return result
        for i in range(b + 1):
            c_dim = len(center.per_degree[i])
            zs_dim = len(z_star.per_degree[i])
            n_dim = len(nucleus.per_degree[i])
            want_c = 1 if (n == 0 or i % 2 == 0) else 0
            want_zs = 1 if i % 2 == 0 else 0
            want_n = A.dim if n <= 1 else (1 if i % 2 == 0 else 0)
            if (c_dim, zs_dim, n_dim) != (want_c, want_zs, want_n):
                result.failure = (
                    f"tower n={n}, degree {i}: dims (center, star-center, nucleus) = "
                    f"({c_dim}, {zs_dim}, {n_dim}), expected "
                    f"({want_c}, {want_zs}, {want_n})"
                )
                return result
        result.lines.append(
            f"tower n={n} (dim {A.dim}): center/star-center/nucleus dims match "
            f"the expected pattern up to degree {b}"
        )
    return result


def suite_axioms(algebra=None, mu=None, bound=None):
    """Ring axiom families and the flip/unflip coincidence over commutative bases."""
    result = SuiteResult("axioms", "ring-axioms")
    b = bound if bound is not None else 4
    H = named("H")
    C = named("C")
    ring_h = star_skew_ring(H)
    ring_c = star_skew_ring(C)

    rep = check_axioms(ring_h, "F", b)
    if not rep.passed:
        result.failure = f"F-family fails on the quaternion ring: {rep.summary()}"
        return result
    result.lines.append(f"F-family on the quaternion ring: {rep.summary()}")

    rep = check_axioms(ring_h, "N", b)
    if rep.passed:
        result.failure = (
            "N-family unexpectedly holds on the quaternion ring "
            "(the generator should fail the right-slot axiom)"
        )
        return result
    first = rep.first_counterexample()
    result.lines.append(
        f"N-family on the quaternion ring fails as predicted; witness: "
        f"[{first.axiom}] {first.witness}"
    )

    rep = check_axioms(ring_c, "O", b)
    if not rep.passed:
        result.failure = f"O-family fails on the complex ring: {rep.summary()}"
        return result
    result.lines.append(f"O-family on the complex ring: {rep.summary()}")

    unflipped_c = FlipPolyRing(C, ring_c.sigma, ring_c.delta, flipped=False)
    if not rules_agree(
        ProductRule.of_ring(ring_c), ProductRule.of_ring(unflipped_c), 5
    ):
        result.failure = "flipped and unflipped products differ over the complex numbers"
        return result
    result.lines.append(
        "flipped = unflipped over the commutative base (degrees <= 5)"
    )

    unflipped_h = FlipPolyRing(H, ring_h.sigma, ring_h.delta, flipped=False)
    witness = None
    basis = H.basis()
    for m in range(3):
        for n in range(3):
            for r in basis:
                for s in basis:
                    if ring_h.monomial_product(m, r, n, s) != unflipped_h.monomial_product(
                        m, r, n, s
                    ):
                        witness = (m, n, r, s)
                        break
                if witness:
                    break
            if witness:
                break
        if witness:
            break
    if witness is None:
        result.failure = (
            "flipped and unflipped products coincide over the quaternions, "
            "which would make the flip vacuous on a noncommutative base"
        )
        return result
    m, n, r, s = witness
    result.lines.append(
        f"flipped != unflipped over the quaternions; witness degrees (m={m}, n={n})"
    )

    rule = ProductRule.of_ring(ring_h).tabulated(4)
    if not rules_agree(flip_rule(flip_rule(rule)), rule, 4):
        result.failure = "double flip of the tabulated rule is not the identity"
        return result
    result.lines.append("double flip of the tabulated rule returns the rule (degrees <= 4)")
    return result


SUITES = {
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "props": suite_props,
    "centers": suite_centers,
    "corollary": suite_corollary,
    "axioms": suite_axioms,
}


def run_suite(name, algebra=None, mu=None, bound=None):
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(
            f"unknown suite {name!r}; valid suites: {', '.join(SUITES)}"
        ) from None
    return suite(algebra=algebra, mu=mu, bound=bound)


def run_all(algebra=None, mu=None, bound=None):
    return [run_suite(name, algebra=algebra, mu=mu, bound=bound) for name in SUITES]
