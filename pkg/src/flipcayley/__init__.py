"""Exact-arithmetic Cayley-Dickson algebras and flipped polynomial rings."""

from .algebra_core import (
    AlgebraElement,
    Involution,
    StarAlgebra,
    StructureConstants,
    basis_element,
    zero_element,
)
from .cayley_dickson import (
    NAMED_TOWERS,
    cayley_double,
    find_zero_divisor,
    named,
    rational_base,
    tower,
)
from .flip_poly import (
    AdditiveMap,
    AxiomReport,
    FlipPolyRing,
    Poly,
    ProductRule,
    check_axioms,
    flip_rule,
    graded_join,
    graded_split,
    ordinary_ring,
    parse_poly,
    poly_mul,
    poly_to_text,
    rules_agree,
    star_skew_ring,
    tau,
)
from .involutions import alpha, beta, degree_one_extension_violations
from .quotient_iso import (
    PolyPair,
    QuotElement,
    QuotientRing,
    cayley_t_mul,
    cayley_t_star,
    phi,
    phi_inv,
    psi,
    psi_inv,
    quot_mul,
    quot_star,
    reduce,
)
from .scalars import Rational, rat, rat_add, rat_inv, rat_mul, rat_neg

__version__ = "0.1.0"

__all__ = [
    "AdditiveMap",
    "AlgebraElement",
    "AxiomReport",
    "FlipPolyRing",
    "Involution",
    "NAMED_TOWERS",
    "Poly",
    "PolyPair",
    "ProductRule",
    "QuotElement",
    "QuotientRing",
    "Rational",
    "StarAlgebra",
    "StructureConstants",
    "alpha",
    "basis_element",
    "beta",
    "cayley_double",
    "cayley_t_mul",
    "cayley_t_star",
    "check_axioms",
    "degree_one_extension_violations",
    "find_zero_divisor",
    "flip_rule",
    "graded_join",
    "graded_split",
    "named",
    "ordinary_ring",
    "parse_poly",
    "phi",
    "phi_inv",
    "poly_mul",
    "poly_to_text",
    "psi",
    "psi_inv",
    "quot_mul",
    "quot_star",
    "rat",
    "rat_add",
    "rat_inv",
    "rat_mul",
    "rat_neg",
    "rational_base",
    "reduce",
    "rules_agree",
    "star_skew_ring",
    "tau",
    "tower",
    "zero_element",
]
