"""Command-line front end.

Subcommands: census, table, ext-analyze, ext-order, lift, resolve.
Exit status 0 on success, 2 on usage errors (argparse's default), 3 on
domain errors, with a diagnostic naming the violated precondition on
stderr.  JSON output (--json) is emitted with sorted keys so identical
invocations are byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import PerikitError
from .intlinalg import char_poly
from .torusext import (
    CyclicExtension,
    Unresolved,
    component_order,
    element_order,
    find_mk_representative,
    fixed_subgroup,
    is_periodic,
    order_bound_cor5,
    order_bound_prop7,
    resolve_order_constraints,
)
from .monomial import order as monomial_order
from .weyl import (
    SignedPermutation,
    all_builtin_types,
    census,
    lift_order_rule,
    lift_to_normalizer,
    root_system,
    weyl_image,
)


def _emit_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, indent=2))


def _parse_type(args):
    return root_system(args.family, getattr(args, "rank", None))


def _load_extension(args) -> CyclicExtension:
    if getattr(args, "matrix_inline", None):
        data = json.loads(args.matrix_inline)
    else:
        if not args.path:
            raise ValueError("provide an extension file or --matrix-inline")
        with open(args.path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    return CyclicExtension.from_json(data)


def _cmd_census(args) -> int:
    t = _parse_type(args)
    report = census(t, allow_e7=args.allow_e7, closed_form=args.closed_form)
    if args.json:
        _emit_json(report.to_json())
    else:
        print(f"type:               {report.label} ({t.matrix_group_name})")
        print(f"weyl_order:         {report.weyl_order}")
        print(f"periodic:           {report.periodic_count}")
        print(f"coxeter:            {report.coxeter_count}")
        print(f"coxeter_number:     {report.coxeter_number}")
        print(f"exponents:          {' '.join(map(str, report.exponents))}")
        print(f"solomon:            {' '.join(map(str, report.solomon))}")
        print(f"enumerated:         {'yes' if report.enumerated else 'no (closed form)'}")
        if report.coxeter_power_orders:
            orders = " ".join(map(str, report.coxeter_power_orders))
            print(f"coxeter_power_orders: {orders}")
    return 0


def render_table(reports) -> str:
    """Aligned text table, one row per type: |W|, g_n, N_c."""
    header = ("type", "group", "|W|", "g_n", "N_c", "")
    rows = [header]
    for rep in reports:
        rows.append(
            (
                rep.label,
                root_system(rep.family, rep.rank).matrix_group_name,
                str(rep.weyl_order),
                str(rep.periodic_count),
                str(rep.coxeter_count),
                "" if rep.enumerated else "closed form",
            )
        )
    widths = [max(len(r[i]) for r in rows) for i in range(len(header))]
    lines = []
    for r in rows:
        line = "  ".join(str(cell).ljust(widths[i]) for i, cell in enumerate(r))
        lines.append(line.rstrip())
    return "\n".join(lines)


def _cmd_table(args) -> int:
    reports = []
    for t in all_builtin_types():
        closed = args.closed_form or t.family in ("E7", "E8")
        reports.append(census(t, allow_e7=args.allow_e7, closed_form=closed))
    if args.json:
        _emit_json([rep.to_json() for rep in reports])
    else:
        print(render_table(reports))
    return 0


def _cmd_ext_analyze(args) -> int:
    ext = _load_extension(args)
    chi = char_poly(ext.auto.matrix)
    component_1_periodic = is_periodic(ext.auto)
    components = []
    for i in range(ext.degree):
        try:
            orderval = component_order(ext, i)
            periodic = True
        except PerikitError:
            orderval = None
            periodic = False
        components.append({"index": i, "periodic": periodic, "order": orderval})
    result = {
        "rank": ext.rank,
        "degree": ext.degree,
        "auto_order": ext.auto_order,
        "char_poly_at_1": chi.eval(1),
        "components": components,
        "fixed_subgroup": None,
        "bounds": None,
        "mk_representative": None,
    }
    if component_1_periodic:
        fixed = fixed_subgroup(ext.auto)
        result["fixed_subgroup"] = {
            "cardinality": fixed.cardinality,
            "orders": list(fixed.orders),
            "generators": [g.to_strings() for g in fixed.generators],
        }
        result["bounds"] = {
            "every_order_divides": order_bound_cor5(ext),
            "order_upper_bound": order_bound_prop7(ext),
        }
        rep = find_mk_representative(ext)
        result["mk_representative"] = {
            "component": rep.i,
            "torsion_part": rep.x.to_strings(),
            "order": element_order(rep),
        }
    if args.json:
        _emit_json(result)
    else:
        print(f"rank:        {result['rank']}")
        print(f"degree:      {result['degree']}")
        print(f"auto_order:  {result['auto_order']}")
        print(f"chi(1):      {result['char_poly_at_1']}")
        for comp in components:
            order_text = comp["order"] if comp["periodic"] else "-"
            flag = "periodic" if comp["periodic"] else "not periodic"
            print(f"component {comp['index']}: {flag:13s} order {order_text}")
        if result["fixed_subgroup"] is not None:
            fs = result["fixed_subgroup"]
            print(f"fixed subgroup: cardinality {fs['cardinality']}, "
                  f"cyclic orders {fs['orders']}")
            bounds = result["bounds"]
            print(f"bounds: every order divides {bounds['every_order_divides']}, "
                  f"orders <= {bounds['order_upper_bound']}")
            rep = result["mk_representative"]
            print(f"small representative: component {rep['component']}, "
                  f"torsion part {rep['torsion_part']}, order {rep['order']}")
    return 0


def _cmd_ext_order(args) -> int:
    ext = _load_extension(args)
    value = component_order(ext, args.index)
    if args.json:
        _emit_json({"component": args.index, "order": value})
    else:
        print(value)
    return 0


def _parse_cycles(text: str):
    text = text.strip()
    if not text:
        return []
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError('cycles look like "(1 2 3)(4 5)"')
    cycles = []
    for chunk in text[1:-1].split(")("):
        items = chunk.replace(",", " ").split()
        if not items:
            raise ValueError("empty cycle")
        cycles.append(tuple(int(v) for v in items))
    return cycles


def _cmd_lift(args) -> int:
    t = root_system(args.family, args.rank)
    cycles = _parse_cycles(args.cycles)
    if t.family == "A":
        size = t.rank + 1
        images = list(range(size))
        for cyc in cycles:
            zero_based = [v - 1 for v in cyc]
            for a, b in zip(zero_based, zero_based[1:] + zero_based[:1]):
                images[a] = b
        w = tuple(images)
        if args.signs:
            raise ValueError("type A takes no sign vector")
    else:
        if not args.signs:
            raise ValueError("families B, C, D need --signs")
        w = SignedPermutation.from_cycles(t.rank, cycles, args.signs)
    mono = lift_to_normalizer(t, w)
    verified = monomial_order(mono)
    rule = lift_order_rule(t, w)
    if verified != rule:
        raise PerikitError("closed-form order disagrees with the matrix order")
    out = {
        "type": t.label,
        "group": t.matrix_group_name,
        "matrix": mono.to_json(),
        "order": verified,
        "closed_form_order": rule,
    }
    if args.json:
        _emit_json(out)
    else:
        print(f"type:   {out['type']} ({out['group']})")
        print(f"matrix: {json.dumps(out['matrix'], sort_keys=True)}")
        print(f"order:  {out['order']} (closed form {out['closed_form_order']})")
    return 0


def _cmd_resolve(args) -> int:
    t = _parse_type(args)
    outcome = resolve_order_constraints(t.coxeter_number, t.exponents)
    resolved = not isinstance(outcome, Unresolved)
    out = {
        "type": t.label,
        "coxeter_number": t.coxeter_number,
        "exponents": list(t.exponents),
        "resolved": resolved,
        "orders": list(outcome) if resolved else None,
        "admissible_multipliers": None if resolved else list(outcome.admissible),
    }
    if args.json:
        _emit_json(out)
    else:
        if resolved:
            print(" ".join(map(str, outcome)))
        else:
            mults = " ".join(map(str, outcome.admissible))
            print(f"unresolved: admissible multipliers {mults}")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument(
        "--allow-e7", action="store_true", help="permit the E7 enumeration"
    )

    parser = argparse.ArgumentParser(
        prog="perikit",
        description="periodic components of torus extensions and torus normalizers",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("census", parents=[common], help="census of one type")
    p.add_argument("family", help="A, B, C, D, G2, F4, E6, E7 or E8")
    p.add_argument("rank", nargs="?", type=int, default=None)
    p.add_argument(
        "--closed-form", action="store_true",
        help="serve formula values without enumeration (required for E8)",
    )
    p.set_defaults(func=_cmd_census)

    p = sub.add_parser("table", parents=[common], help="full reference table")
    p.add_argument(
        "--closed-form", action="store_true",
        help="formula values for every row (no enumeration)",
    )
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser(
        "ext-analyze", parents=[common], help="analyze an extension fixture"
    )
    p.add_argument("path", nargs="?", help="extension JSON file")
    p.add_argument(
        "--matrix-inline", metavar="JSON", help="inline extension JSON (scripting)"
    )
    p.set_defaults(func=_cmd_ext_analyze)

    p = sub.add_parser(
        "ext-order", parents=[common], help="order of one periodic component"
    )
    p.add_argument("path", nargs="?", help="extension JSON file")
    p.add_argument("index", type=int, help="component index")
    p.add_argument("--matrix-inline", metavar="JSON")
    p.set_defaults(func=_cmd_ext_order)

    p = sub.add_parser(
        "lift", parents=[common], help="monomial lift of a Weyl element"
    )
    p.add_argument("family", help="A, B, C or D")
    p.add_argument("rank", type=int)
    p.add_argument("--cycles", required=True, help='cycle string, e.g. "(1 2)(3)"')
    p.add_argument("--signs", default=None, help='sign vector, e.g. "+--" (B/C/D)')
    p.set_defaults(func=_cmd_lift)

    p = sub.add_parser(
        "resolve", parents=[common], help="order constraints for Coxeter powers"
    )
    p.add_argument("family")
    p.add_argument("rank", nargs="?", type=int, default=None)
    p.set_defaults(func=_cmd_resolve)

    return parser


def run(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PerikitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
