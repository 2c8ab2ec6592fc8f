"""Command-line frontend.

Exit codes: 0 success, 1 cross-check/invariant failure, 2 mathematical
precondition failure, 3 resource cutoff, 4 input/parse error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass
from fractions import Fraction

from . import gbscheme
from .borderscheme import (SchemePoint, border_scheme_ideal, generic_prebasis,
                           is_border_basis_point, multiplication_matrix,
                           oracle_is_border_basis, prebasis_universe)
from .errors import (DivisorClosureError, MalformedRulesError, NotAPointError,
                     OrderingDomainError, ParseError, PreconditionError,
                     ResourceLimitError, SchemeError, UniverseMismatchError)
from .gbscheme import (Route, affine_cell_detect, deform, fiber, find_weights,
                       gb_scheme_ideal, ideal_from_point, is_sigma_cornercut,
                       point_from_ideal, split_variables, verify_homogeneity)
from .groebner import (Ideal, ResourceLimits, gb_to_json, ideal_from_json,
                       ideal_to_json, ideals_equal, krull_dimension,
                       leading_term_ideal, linear_substitution_preprocess)
from .orderideals import OrderIdealData, order_ideal_from_strings
from .orderings import DegRevLex, ordering_from_name
from .poly import Polynomial, parse_polynomial
from .universe import VariableUniverse

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z_0-9]*")
_XN_RE = re.compile(r"^x(\d+)$")


@dataclass
class JobConfig:
    command: str
    output_format: str
    limits: ResourceLimits
    route: Route | None = None
    sigma_name: str | None = None


def infer_x_universe(text: str, n: int | None = None,
                     vars_csv: str | None = None) -> VariableUniverse:
    """Variable universe for inline monomial lists.

    Defaults: names x, y, z (n <= 3) or x1..xn; ``--vars`` overrides.
    """
    if vars_csv:
        names = [v.strip() for v in vars_csv.split(",") if v.strip()]
        if not names or len(set(names)) != len(names):
            raise ParseError(f"bad variable list {vars_csv!r}")
        return VariableUniverse.for_x(names)
    seen = [m.group() for m in _NAME_RE.finditer(text)]
    seen = list(dict.fromkeys(s for s in seen if s != "t"))
    if seen and all(_XN_RE.match(s) for s in seen):
        count = max(int(_XN_RE.match(s).group(1)) for s in seen)
        count = max(count, n or 0)
        return VariableUniverse.for_x([f"x{k}" for k in range(1, count + 1)])
    if not all(s in ("x", "y", "z") for s in seen):
        unknown = [s for s in seen if s not in ("x", "y", "z")]
        raise ParseError(
            f"cannot infer variables from {unknown}; pass --vars explicitly")
    base = ["x", "y", "z"]
    count = max(len([s for s in base if s in seen])
                if seen else 0, n or 0,
                (base.index(max(seen, key=base.index)) + 1) if seen else 0)
    if count == 0:
        raise ParseError("cannot infer the number of variables; pass -n or --vars")
    if count > 3:
        raise ParseError("more than three default variables; pass --vars")
    return VariableUniverse.for_x(base[:count])


def load_order_ideal(args) -> OrderIdealData:
    text = args.order_ideal
    if text is None:
        raise ParseError("missing order ideal (-O)")
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read().strip()
    u = infer_x_universe(text, getattr(args, "nvars", None),
                         getattr(args, "vars", None))
    return order_ideal_from_strings(text, u)


def load_point(path: str) -> SchemePoint:
    with open(path, encoding="utf-8") as fh:
        return SchemePoint.from_json(json.load(fh))


def get_sigma(args, odata: OrderIdealData):
    return ordering_from_name(odata.u, args.sigma)


def emit(args, doc: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        for line in text_lines:
            print(line)


def limits_from(args) -> ResourceLimits:
    return ResourceLimits(max_basis=args.max_basis, max_degree=args.max_degree)


# -- commands -------------------------------------------------------------------


def cmd_validate(args) -> int:
    odata = load_order_ideal(args)
    doc = odata.to_json()
    lines = [
        f"order ideal: {', '.join(t.format() for t in odata.terms)}",
        f"mu = {odata.mu}, nu = {odata.nu}, eta = {odata.eta}",
        f"border: {', '.join(b.format() for b in odata.border)}",
        f"corners: {', '.join(b.format() for b in odata.corners)}",
    ]
    emit(args, doc, lines)
    return 0


def cmd_border_scheme(args) -> int:
    odata = load_order_ideal(args)
    ideal = border_scheme_ideal(odata)
    doc = ideal_to_json(ideal)
    doc["order_ideal"] = odata.to_json()
    lines = [f"I(B) in {len(ideal.u.names)} variables, "
             f"{len(ideal.generators)} generators:"]
    lines += [f"  {g.format()}" for g in ideal.generators]
    if args.matrices:
        u_xc = prebasis_universe(odata)
        doc["prebasis"] = [g.to_json() for g in generic_prebasis(odata, u_xc)]
        lines.append("generic prebasis:")
        lines += [f"  g{j} = {g.format()}"
                  for j, g in enumerate(generic_prebasis(odata, u_xc), start=1)]
        doc["matrices"] = []
        for k, name in enumerate(odata.u.names, start=1):
            m = multiplication_matrix(odata, k)
            doc["matrices"].append(
                {"variable": name,
                 "rows": [[e.format() for e in row] for row in m.entries]})
            lines.append(f"multiplication matrix for {name}:")
            lines += ["  [" + ", ".join(e.format() for e in row) + "]"
                      for row in m.entries]
    emit(args, doc, lines)
    return 0


def cmd_gb_scheme(args) -> int:
    odata = load_order_ideal(args)
    sigma = get_sigma(args, odata)
    limits = limits_from(args)
    route = Route(args.route)
    ideal = gb_scheme_ideal(odata, sigma, route, limits=limits)
    doc = ideal_to_json(ideal)
    doc["route"] = route.value
    doc["sigma"] = sigma.descriptor()
    doc["sigma_cornercut"] = is_sigma_cornercut(odata, sigma)
    lines = [f"I(G) via {route.value} route in {len(ideal.u.names)} variables "
             f"({len(ideal.generators)} generators):"]
    lines += [f"  {g.format()}" for g in ideal.generators] or ["  0"]
    status = 0
    if args.cross_check:
        other = gb_scheme_ideal(odata, sigma, Route(args.cross_check),
                                limits=limits)
        equal = ideals_equal(ideal, other, limits=limits)
        doc["cross_check"] = {"route": args.cross_check, "equal": equal}
        lines.append("IDEALS EQUAL" if equal else "IDEALS DIFFER")
        if not equal:
            status = 1
    emit(args, doc, lines)
    return status


def cmd_weights(args) -> int:
    odata = load_order_ideal(args)
    sigma = get_sigma(args, odata)
    ws = find_weights(odata, sigma)
    sv = split_variables(odata, sigma)
    doc = {"weights": ws.to_json(),
           "split": {"S": sorted(map(list, sv.S)), "L": sorted(map(list, sv.L)),
                     "S_corner": sorted(map(list, sv.S_corner)),
                     "s": sv.s}}
    lines = [f"V: {ws.V}",
             f"W: {{{', '.join(f'({i},{j}): {w}' for (i, j), w in sorted(ws.W.items()))}}}",
             f"Wbar: {{{', '.join(f'({i},{j}): {w}' for (i, j), w in sorted(ws.Wbar.items()))}}}",
             f"L positions: {sorted(sv.L)}",
             f"s(cO, sigma) = {sv.s}"]
    status = 0
    if args.verify:
        report = verify_homogeneity(odata, sigma, ws, limits_from(args))
        doc["homogeneity"] = report.to_json()
        for claim in report.claims:
            mark = "PASS" if claim.passed else "FAIL"
            lines.append(f"claim ({claim.claim}) {mark}: {claim.description}"
                         + (f" [witness: {claim.witness}]" if claim.witness else ""))
        if not report.all_passed:
            status = 1
    emit(args, doc, lines)
    return status


def cmd_check_point(args) -> int:
    odata = load_order_ideal(args)
    point = load_point(args.point)
    commuting = is_border_basis_point(odata, point)
    verdict, reason = oracle_is_border_basis(odata, point, limits_from(args))
    doc = {"commuting_matrices": commuting,
           "oracle": {"is_border_basis": verdict, "diagnostic": reason}}
    lines = [f"multiplication matrices commute: {commuting}",
             f"oracle verdict: {verdict} ({reason})"]
    status = 0
    if commuting != verdict:
        lines.append("DISAGREEMENT between commutator check and oracle")
        status = 1
    emit(args, doc, lines)
    return status


def _parse_ideal_arg(args) -> tuple[Ideal, VariableUniverse]:
    if args.gens:
        chunks = [c.strip() for c in args.gens.split(";") if c.strip()]
        u = infer_x_universe(args.gens, getattr(args, "nvars", None),
                            getattr(args, "vars", None))
        return Ideal(u, [parse_polynomial(c, u) for c in chunks]), u
    if args.ideal_json:
        with open(args.ideal_json, encoding="utf-8") as fh:
            ideal, _ = ideal_from_json(json.load(fh))
        return ideal, ideal.u
    raise ParseError("pass either --gens or --ideal-json")


def cmd_round_trip(args) -> int:
    ideal, u = _parse_ideal_arg(args)
    sigma = ordering_from_name(u, args.sigma)
    limits = limits_from(args)
    odata, full_point = point_from_ideal(ideal, sigma, limits)
    sv = split_variables(odata, sigma)
    restricted = full_point.restrict(sv.S_corner)
    back = ideal_from_point(odata, sigma, restricted, limits)
    original = ideal.groebner_basis(sigma, limits)
    same = tuple(original) == tuple(back)
    doc = {"order_ideal": odata.to_json(),
           "point": full_point.to_json(),
           "free_point": restricted.to_json(),
           "reduced_gb": [g.to_json() for g in back],
           "round_trip_ok": same}
    lines = [f"O = {', '.join(t.format() for t in odata.terms)}",
             f"point: {full_point.to_json()['c']}",
             "reduced GB: " + "; ".join(g.format() for g in back),
             "ROUND TRIP OK" if same else "ROUND TRIP MISMATCH"]
    emit(args, doc, lines)
    return 0 if same else 1


def cmd_deform(args) -> int:
    odata = load_order_ideal(args)
    sigma = get_sigma(args, odata)
    point = load_point(args.point)
    limits = limits_from(args)
    ws = find_weights(odata, sigma)
    family = deform(odata, sigma, ws, point, limits)
    doc = family.to_json()
    lines = ["family generators:"]
    lines += [f"  {g.format()}" for g in family.generators]
    if args.at is not None:
        t0 = Fraction(args.at)
        fib = fiber(family, t0)
        gb = fib.groebner_basis(sigma, limits)
        doc["fiber_at"] = str(t0)
        doc["fiber_reduced_gb"] = [g.to_json() for g in gb]
        lines.append(f"fiber at t = {t0}: "
                     + ", ".join(g.format() for g in reversed(gb)))
    emit(args, doc, lines)
    return 0


def cmd_affine_cell(args) -> int:
    odata = load_order_ideal(args)
    sigma = get_sigma(args, odata)
    limits = limits_from(args)
    ws = find_weights(odata, sigma)
    ideal = gb_scheme_ideal(odata, sigma, Route(args.route), limits=limits)
    result = affine_cell_detect(ideal, ws.w_names())
    doc = result.to_json()
    if result.is_affine_space:
        lines = [f"AFFINE SPACE with {len(result.free_variables)} free variables:",
                 "  " + ", ".join(result.free_variables)]
    else:
        lines = [f"RESIDUAL ideal with {len(result.residual.generators)} "
                 f"generators in {len(result.free_variables)} variables"]
    emit(args, doc, lines)
    return 0


def cmd_dimension(args) -> int:
    limits = limits_from(args)
    if args.ideal == "border-scheme":
        odata = load_order_ideal(args)
        ideal = border_scheme_ideal(odata)
    elif args.ideal == "gb-scheme":
        odata = load_order_ideal(args)
        sigma = get_sigma(args, odata)
        ideal = gb_scheme_ideal(odata, sigma, Route(args.route), limits=limits)
    else:
        with open(args.ideal, encoding="utf-8") as fh:
            ideal, _ = ideal_from_json(json.load(fh))
    doc = {"variables": len(ideal.u.names), "generators": len(ideal.generators)}
    if args.preprocess == "linear":
        compressed, trail = linear_substitution_preprocess(ideal)
        doc["preprocessed"] = {"variables": len(compressed.u.names),
                               "generators": len(compressed.generators),
                               "eliminated": len(trail)}
    dim = krull_dimension(ideal, preprocess=args.preprocess, limits=limits)
    doc["dimension"] = dim
    lines = [f"dimension = {dim}"]
    if "preprocessed" in doc:
        lines.append(
            "after linear preprocessing: %d generators in %d variables"
            % (doc["preprocessed"]["generators"], doc["preprocessed"]["variables"]))
    emit(args, doc, lines)
    return 0


# -- argument plumbing ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="basisschemes",
        description="Border basis and Groebner basis schemes of "
                    "zero-dimensional ideals (exact arithmetic).")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, order_ideal=True, sigma=False, route=False):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--max-basis", type=int, default=4000)
        p.add_argument("--max-degree", type=int, default=120)
        if order_ideal:
            p.add_argument("-O", "--order-ideal",
                           help="comma-separated monomials, or @file")
            p.add_argument("-n", "--nvars", type=int,
                           help="number of variables (default: inferred)")
            p.add_argument("--vars", help="comma-separated variable names")
        if sigma:
            p.add_argument("--sigma", required=True,
                           choices=("lex", "deglex", "degrevlex"))
        if route:
            p.add_argument("--route", default="substitution",
                           choices=[r.value for r in Route])

    p = sub.add_parser("validate", help="validate an order ideal")
    common(p)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("border-scheme", help="commutator ideal of the border scheme")
    common(p)
    p.add_argument("--matrices", action="store_true",
                   help="also print prebasis and multiplication matrices")
    p.set_defaults(func=cmd_border_scheme)

    p = sub.add_parser("gb-scheme", help="defining ideal of the Groebner scheme")
    common(p, sigma=True, route=True)
    p.add_argument("--cross-check", choices=[r.value for r in Route],
                   help="also run a second route and compare reduced bases")
    p.set_defaults(func=cmd_gb_scheme)

    p = sub.add_parser("weights", help="positive weight systems V, W, Wbar")
    common(p, sigma=True)
    p.add_argument("--verify", action="store_true",
                   help="check the four homogeneity claims")
    p.set_defaults(func=cmd_weights)

    p = sub.add_parser("check-point", help="border basis point checks")
    common(p)
    p.add_argument("--point", required=True, help="scheme point JSON file")
    p.set_defaults(func=cmd_check_point)

    p = sub.add_parser("round-trip", help="ideal -> point -> ideal round trip")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--max-basis", type=int, default=4000)
    p.add_argument("--max-degree", type=int, default=120)
    p.add_argument("--gens", help="semicolon-separated generators")
    p.add_argument("--ideal-json", help="ideal JSON file")
    p.add_argument("-n", "--nvars", type=int)
    p.add_argument("--vars")
    p.add_argument("--sigma", required=True, choices=("lex", "deglex", "degrevlex"))
    p.set_defaults(func=cmd_round_trip)

    p = sub.add_parser("deform", help="flat degeneration family and fibers")
    common(p, sigma=True)
    p.add_argument("--point", required=True, help="scheme point JSON file")
    p.add_argument("--at", help="evaluate the family at this rational t")
    p.set_defaults(func=cmd_deform)

    p = sub.add_parser("affine-cell", help="iterative linear elimination test")
    common(p, sigma=True, route=True)
    p.set_defaults(func=cmd_affine_cell)

    p = sub.add_parser("dimension", help="Krull dimension of a scheme ideal")
    common(p, sigma=False, route=True)
    p.add_argument("--ideal", required=True,
                   help="'border-scheme', 'gb-scheme', or an ideal JSON file")
    p.add_argument("--sigma", choices=("lex", "deglex", "degrevlex"))
    p.add_argument("--preprocess", choices=("linear",),
                   help="eliminate linearly-solvable variables first")
    p.set_defaults(func=cmd_dimension)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ParseError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except (PreconditionError, DivisorClosureError, NotAPointError,
            MalformedRulesError, OrderingDomainError,
            UniverseMismatchError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SchemeError as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
