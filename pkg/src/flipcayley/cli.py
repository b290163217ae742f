"""Command-line front end: build algebras, multiply, inspect structure, verify.

Element literals are signed sums of basis symbols with rational
coefficients, e.g. ``1/2*e0 - e3`` (optionally wrapped in brackets).
Polynomial literals use bracketed coordinate vectors per degree,
e.g. ``[1,0,0,0] + [0,1,0,0]*X^2``.

Exit codes: 0 success, 1 a check or suite failed (witness printed),
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys

from . import structure_analysis as sa
from . import verify as verify_mod
from .algebra_core import AlgebraElement
from .cayley_dickson import NAMED_TOWERS, find_zero_divisor, named, tower
from .flip_poly import (
    check_axioms,
    parse_poly,
    poly_to_json,
    poly_to_text,
    star_skew_ring,
)
from .involutions import alpha, beta, degree_one_extension_violations
from .quotient_iso import QuotientRing
from .scalars import format_rational, parse_rational, simplify

DEFAULT_DEGREE_CAP = 6


class CliError(Exception):
    """Bad arguments or unparseable literals; mapped to exit code 2."""


# ------------------------------------------------------------------ literals
_ELEMENT_TERM = re.compile(r"^(\d+(?:/\d+)?)?\s*\*?\s*e(\d+)$")
_SCALAR_TERM = re.compile(r"^\d+(?:/\d+)?$")


def _split_terms(text):
    terms = []
    current = ""
    for ch in text:
        if ch in "+-" and current.strip():
            terms.append(current.strip())
            current = ch
        else:
            current += ch
    if current.strip():
        terms.append(current.strip())
    if not terms:
        raise CliError("empty element literal")
    return terms


def parse_element(text, dim, unit_index=0):
    body = text.strip()
    if body.startswith("[") and body.endswith("]"):
        body = body[1:-1].strip()
    if "[" in body or "]" in body:
        raise CliError(f"cannot parse element literal {text!r}")
    coords = [0] * dim
    for term in _split_terms(body):
        sign = 1
        if term.startswith(("+", "-")):
            sign = -1 if term[0] == "-" else 1
            term = term[1:].strip()
        match = _ELEMENT_TERM.match(term)
        if match:
            coefficient = parse_rational(match.group(1)) if match.group(1) else 1
            index = int(match.group(2))
            if index >= dim:
                raise CliError(f"basis symbol e{index} out of range for dim {dim}")
            coords[index] += sign * coefficient
        elif _SCALAR_TERM.match(term):
            coords[unit_index] += sign * parse_rational(term)
        else:
            raise CliError(f"cannot parse element term {term!r}")
    return AlgebraElement(simplify(c) for c in coords)


def format_element(elem):
    parts = []
    for i, c in enumerate(elem.coords):
        if not c:
            continue
        positive = c > 0
        magnitude = c if positive else -c
        body = f"e{i}" if magnitude == 1 else f"{format_rational(magnitude)}*e{i}"
        parts.append((positive, body))
    if not parts:
        return "0"
    positive, body = parts[0]
    out = body if positive else "-" + body
    for positive, body in parts[1:]:
        out += (" + " if positive else " - ") + body
    return out


# ------------------------------------------------------------------- helpers
def _degree_cap():
    raw = os.environ.get("FLIPCAYLEY_MAX_DEGREE")
    if raw is None:
        return DEFAULT_DEGREE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise CliError(f"FLIPCAYLEY_MAX_DEGREE must be an integer, got {raw!r}")
    if cap < 0:
        raise CliError("FLIPCAYLEY_MAX_DEGREE must be nonnegative")
    return cap


def _capped_bound(requested, default):
    cap = _degree_cap()
    bound = default if requested is None else requested
    if bound > cap:
        print(
            f"note: degree bound {bound} capped to {cap} (FLIPCAYLEY_MAX_DEGREE)",
            file=sys.stderr,
        )
        bound = cap
    return bound


def _build_algebra(args):
    if args.algebra and args.mus:
        raise CliError("use either --algebra or --mus, not both")
    if args.algebra:
        try:
            return named(args.algebra)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    if args.mus:
        try:
            mus = [parse_rational(part) for part in args.mus.split(",") if part.strip()]
            return tower(mus)
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"bad --mus value: {exc}") from None
    raise CliError("an algebra is required: pass --algebra NAME or --mus LIST")


def _parse_poly(text, dim):
    try:
        return parse_poly(text, dim)
    except ValueError as exc:
        raise CliError(f"bad polynomial literal: {exc}") from None


# -------------------------------------------------------------- subcommands
def cmd_algebra(args):
    algebra = _build_algebra(args)
    if args.json:
        print(json.dumps(algebra.to_json_dict(), indent=2))
        return 0
    print(f"dim: {algebra.dim}")
    print(f"unit: e{algebra.sc.unit_index}")
    print(f"commutative: {algebra.is_commutative()}")
    print(f"associative: {algebra.is_associative()}")
    print(f"alternative: {algebra.is_alternative()}")
    print(f"flexible: {algebra.is_flexible()}")
    if args.zero_divisors:
        hit = find_zero_divisor(algebra)
        if hit is None:
            print("zero divisors: none found by the sparse search")
        else:
            x, y = hit
            print(
                f"zero divisors: ({format_element(x)}) * ({format_element(y)}) = 0"
            )
    return 0


def cmd_mul(args):
    algebra = _build_algebra(args)
    x = parse_element(args.x, algebra.dim, algebra.sc.unit_index)
    y = parse_element(args.y, algebra.dim, algebra.sc.unit_index)
    result = algebra.mul(x, y)
    if args.json:
        print(json.dumps([format_rational(c) for c in result.coords]))
    else:
        print(format_element(result))
    return 0


def cmd_assoc(args):
    algebra = _build_algebra(args)
    x = parse_element(args.x, algebra.dim, algebra.sc.unit_index)
    y = parse_element(args.y, algebra.dim, algebra.sc.unit_index)
    z = parse_element(args.z, algebra.dim, algebra.sc.unit_index)
    result = algebra.associator(x, y, z)
    if args.json:
        print(json.dumps([format_rational(c) for c in result.coords]))
    else:
        print(format_element(result))
    return 0


def cmd_table(args):
    algebra = _build_algebra(args)
    if args.json:
        print(json.dumps(algebra.to_json_dict(), indent=2))
        return 0
    basis = algebra.basis()
    names = [f"e{i}" for i in range(algebra.dim)]
    rows = [["*"] + names]
    for i, x in enumerate(basis):
        rows.append([names[i]] + [format_element(algebra.mul(x, y)) for y in basis])
    widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
    for row in rows:
        print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return 0


def cmd_check(args):
    algebra = _build_algebra(args)
    ring = star_skew_ring(algebra)
    bound = _capped_bound(args.bound, 4)
    try:
        report = check_axioms(ring, args.family, bound)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    print(report.summary())
    return 0 if report.passed else 1


def cmd_involution(args):
    algebra = _build_algebra(args)
    ring = star_skew_ring(algebra)
    if args.validate is not None:
        candidate = _parse_poly(args.validate, algebra.dim)
        violations = degree_one_extension_violations(ring, candidate)
        if not violations:
            print("candidate satisfies the necessary extension conditions")
            return 0
        for violation in violations:
            print(f"violated: {violation}")
        return 1
    if args.poly is None:
        raise CliError("a polynomial literal is required (or use --validate)")
    p = _parse_poly(args.poly, algebra.dim)
    image = alpha(ring, p) if args.which == "alpha" else beta(ring, p)
    if args.json:
        print(json.dumps(poly_to_json(image)))
    else:
        print(poly_to_text(image))
    return 0


def cmd_quotient(args):
    algebra = _build_algebra(args)
    try:
        mu = parse_rational(args.mu)
        quotient = QuotientRing(algebra, mu)
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(f"bad --mu value: {exc}") from None
    doubled_dim = 2 * algebra.dim
    if args.action == "table":
        quotient_algebra = quotient.to_star_algebra()
        if args.json:
            print(json.dumps(quotient_algebra.to_json_dict(), indent=2))
        else:
            basis = quotient_algebra.basis()
            names = [f"e{i}" for i in range(doubled_dim)]
            rows = [["*"] + names]
            for i, x in enumerate(basis):
                rows.append(
                    [names[i]]
                    + [format_element(quotient_algebra.mul(x, y)) for y in basis]
                )
            widths = [max(len(row[c]) for row in rows) for c in range(len(rows[0]))]
            for row in rows:
                print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        return 0
    if args.action == "mul":
        if len(args.operands) != 2:
            raise CliError("quotient mul needs exactly two element literals")
        u = quotient.phi_inv(parse_element(args.operands[0], doubled_dim))
        v = quotient.phi_inv(parse_element(args.operands[1], doubled_dim))
        result = quotient.phi(quotient.mul(u, v))
    elif args.action == "star":
        if len(args.operands) != 1:
            raise CliError("quotient star needs exactly one element literal")
        u = quotient.phi_inv(parse_element(args.operands[0], doubled_dim))
        result = quotient.phi(quotient.star(u))
    else:
        raise CliError(f"unknown quotient action {args.action!r}")
    if args.json:
        print(json.dumps([format_rational(c) for c in result.coords]))
    else:
        print(format_element(result))
    return 0


def cmd_analyze(args):
    algebra = _build_algebra(args)
    bound = _capped_bound(args.bound, 6)
    if args.set == "z_star":
        degree_set = sa.z_star_of_b(algebra, bound)
    else:
        degree_set = sa.degreewise_set(algebra, args.set, bound)
    cross_failure = None
    checked_to = None
    if args.cross_check and args.set != "z_star":
        checked_to = min(bound, sa.BRUTE_BOUND_LIMIT)
        try:
            brute = sa.degreewise_set_bruteforce(algebra, args.set, checked_to)
        except ValueError as exc:
            cross_failure = str(exc)
        else:
            for degree in range(checked_to + 1):
                if degree_set.per_degree[degree] != brute.per_degree[degree]:
                    cross_failure = (
                        f"degree {degree}: criteria basis "
                        f"{[e.coords for e in degree_set.per_degree[degree]]} != "
                        f"brute-force basis "
                        f"{[e.coords for e in brute.per_degree[degree]]}"
                    )
                    break
    if args.json:
        payload = {
            "set": args.set,
            "bound": bound,
            "degrees": [
                {
                    "degree": degree,
                    "dim": len(basis),
                    "basis": [
                        [format_rational(c) for c in e.coords] for e in basis
                    ],
                }
                for degree, basis in degree_set.per_degree.items()
            ],
        }
        if args.cross_check and args.set != "z_star":
            payload["cross_check"] = {
                "bound": checked_to,
                "ok": cross_failure is None,
            }
            if cross_failure:
                payload["cross_check"]["witness"] = cross_failure
        print(json.dumps(payload, indent=2))
    else:
        rows = [["degree", "dim", "basis"]]
        for degree, basis in degree_set.per_degree.items():
            rendered = "; ".join(format_element(e) for e in basis) or "-"
            rows.append([str(degree), str(len(basis)), rendered])
        widths = [max(len(row[c]) for row in rows) for c in range(3)]
        for row in rows:
            print("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        if args.cross_check and args.set != "z_star":
            if cross_failure is None:
                print(f"cross-check vs brute force (bound {checked_to}): OK")
            else:
                print(f"cross-check FAILED: {cross_failure}")
    return 1 if cross_failure else 0


def cmd_verify(args):
    if args.run_all or args.suite in (None, "all"):
        names = list(verify_mod.SUITES)
    else:
        names = [args.suite]
    mu = None
    if args.mu is not None:
        try:
            mu = parse_rational(args.mu)
        except (ValueError, ZeroDivisionError) as exc:
            raise CliError(f"bad --mu value: {exc}") from None
    if args.algebra is not None and args.algebra not in NAMED_TOWERS:
        raise CliError(
            f"unknown algebra {args.algebra!r}; valid names: {', '.join(NAMED_TOWERS)}"
        )
    cap = _degree_cap()
    failed = False
    for name in names:
        result = verify_mod.run_suite(name, algebra=args.algebra, mu=mu, bound=min(6, cap))
        for line in result.render():
            print(line)
        if not result.passed:
            failed = True
    return 1 if failed else 0


# ------------------------------------------------------------------- parser
def build_parser():
    parser = argparse.ArgumentParser(
        prog="flipcayley",
        description=(
            "Exact computer algebra for iterated doubling algebras and flipped "
            "polynomial rings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def with_algebra(p):
        p.add_argument("--algebra", help=f"named algebra: {', '.join(NAMED_TOWERS)}")
        p.add_argument("--mus", help="doubling scalars, e.g. --mus=-1,-1,1")
        p.add_argument("--json", action="store_true", help="emit JSON")
        return p

    p = with_algebra(sub.add_parser("algebra", help="build an algebra and describe it"))
    p.add_argument(
        "--zero-divisors",
        action="store_true",
        help="also run the sparse zero-divisor search",
    )
    p.set_defaults(func=cmd_algebra)

    p = with_algebra(sub.add_parser("mul", help="multiply two elements"))
    p.add_argument("x")
    p.add_argument("y")
    p.set_defaults(func=cmd_mul)

    p = with_algebra(sub.add_parser("assoc", help="associator of three elements"))
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("z")
    p.set_defaults(func=cmd_assoc)

    p = with_algebra(sub.add_parser("table", help="full basis multiplication table"))
    p.set_defaults(func=cmd_table)

    p = with_algebra(
        sub.add_parser("check", help="run an axiom family on the flipped ring")
    )
    p.add_argument("--family", choices=("O", "N", "F"), required=True)
    p.add_argument("--bound", type=int, help="degree bound (default 4)")
    p.set_defaults(func=cmd_check)

    p = with_algebra(
        sub.add_parser("involution", help="apply alpha/beta, or validate a candidate")
    )
    p.add_argument("--which", choices=("alpha", "beta"), default="alpha")
    p.add_argument("--validate", metavar="POLY", help="candidate image of X to validate")
    p.add_argument("poly", nargs="?", help="polynomial literal")
    p.set_defaults(func=cmd_involution)

    p = with_algebra(
        sub.add_parser("quotient", help="work modulo X^2 - mu on (a, b) classes")
    )
    p.add_argument("--mu", required=True)
    p.add_argument("action", choices=("mul", "star", "table"))
    p.add_argument("operands", nargs="*")
    p.set_defaults(func=cmd_quotient)

    p = with_algebra(
        sub.add_parser("analyze", help="degreewise structural sets of the flipped ring")
    )
    p.add_argument(
        "--set",
        choices=sa.SET_KINDS + ("z_star",),
        required=True,
    )
    p.add_argument("--bound", type=int, help="degree bound (default 6)")
    p.add_argument("--cross-check", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="run the named verification suites")
    p.add_argument("--suite", choices=tuple(verify_mod.SUITES) + ("all",))
    p.add_argument("--all", action="store_true", dest="run_all")
    p.add_argument("--algebra", help="restrict to one named algebra where applicable")
    p.add_argument("--mu", help="restrict to one doubling scalar where applicable")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
