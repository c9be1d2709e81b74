"""Command line interface.

    refl4 group build G6 [--bound N] [--format txt|json] [--out PATH]
    refl4 invariant compute F6 [--route geometric|lift|listed] [...]
    refl4 verify all [--scope quick|full] [...]
    refl4 molien F4 --max-degree 32 [...]
    refl4 export invariant:F6 [...]

Exit status: 0 all requested checks pass (or output produced), 1 any check
failed, 2 usage error.  REFL4_BUDGET_MINUTES overrides the verification
runtime budget; REFL4_PURE=1 forces the pure-Python kernel.
"""

from __future__ import annotations

import argparse
import sys

from . import driver, forms, geometry, klein
from .groups import (
    ClosureBoundError,
    GROUP_NAMES,
    UnknownGroupError,
    builtin_generators,
    builtin_group,
    group_closure,
    molien_series,
)

INVARIANT_NAMES = ("q", "F6", "F8", "F12", "Gamma12", "Gamma20", "Gamma30")


def _write_out(text: str, path):
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _invariant(ws: driver.Workspace, name: str, route: str):
    if name == "q":
        return forms.quadric()
    if route == "geometric":
        if name.startswith("Gamma"):
            raise ValueError(
                "the geometric route needs eigenvectors outside the field; "
                "use --route lift for the degree 12/20/30 family"
            )
        return ws.geometric(name)
    if route == "lift":
        return ws.lifted(name)
    if route == "listed":
        if name == "F6":
            return forms.f6_explicit()
        if name == "F8":
            return forms.f8_explicit()
        if name == "F12":
            return forms.f12_explicit()
        raise ValueError(f"no published expansion for {name}")
    raise ValueError(f"unknown route {route!r}")


_DEFAULT_ROUTES = {
    "q": "listed",
    "F6": "geometric",
    "F8": "geometric",
    "F12": "geometric",
    "Gamma12": "lift",
    "Gamma20": "lift",
    "Gamma30": "lift",
}


def _cmd_group(args) -> int:
    if args.action != "build":
        raise ValueError(f"unknown group action {args.action!r}")
    gens = builtin_generators(args.name)
    g = group_closure(gens, bound=args.bound, name=args.name)
    text = g.to_json() if args.format == "json" else g.to_text()
    _write_out(text, args.out)
    sys.stderr.write(f"{args.name}: order {g.order}\n")
    return 0


def _cmd_invariant(args) -> int:
    if args.action != "compute":
        raise ValueError(f"unknown invariant action {args.action!r}")
    ws = driver.Workspace()
    route = args.route or _DEFAULT_ROUTES[args.name]
    p = _invariant(ws, args.name, route)
    text = p.to_json() if args.format == "json" else p.to_text()
    _write_out(text, args.out)
    sys.stderr.write(
        f"{args.name} ({route}): degree {p.degree()}, {p.num_terms()} terms\n"
    )
    return 0


def _cmd_verify(args) -> int:
    only = None if args.check == "all" else {args.check}
    if only is not None and args.check not in driver.CHECK_NAMES:
        raise ValueError(
            f"unknown check {args.check!r}; known: {', '.join(driver.CHECK_NAMES)}"
        )
    reports = driver.run_suite(scope=args.scope, only=only)
    if only is not None and not reports:
        raise ValueError(f"check {args.check!r} is not part of scope {args.scope!r}")
    text = (
        driver.reports_to_json(reports)
        if args.format == "json"
        else driver.reports_to_text(reports)
    )
    _write_out(text, args.out)
    return 0 if all(r.passed for r in reports) else 1


def _cmd_molien(args) -> int:
    g = builtin_group(args.group)
    m = molien_series(g, args.max_degree)
    text = m.to_json() if args.format == "json" else m.to_text()
    _write_out(text, args.out)
    return 0


def _cmd_export(args) -> int:
    kind, _, rest = args.object.partition(":")
    ws = driver.Workspace()
    if kind == "group":
        g = builtin_group(rest)
        text = g.to_json() if args.format == "json" else g.to_text()
    elif kind == "invariant":
        name, _, route = rest.partition(":")
        route = route or _DEFAULT_ROUTES[name]
        p = _invariant(ws, name, route)
        text = p.to_json() if args.format == "json" else p.to_text()
    elif kind == "klein":
        name, _, slot = rest.partition(":")
        form = klein.klein_form(name, int(slot or 1))
        text = form.poly.to_json() if args.format == "json" else form.poly.to_text()
    elif kind == "icosa":
        degree, _, slot = rest.partition(":")
        p = geometry.icosahedral_invariant(int(degree), int(slot or 1))
        text = p.to_json() if args.format == "json" else p.to_text()
    elif kind == "molien":
        name, _, deg = rest.partition(":")
        m = molien_series(builtin_group(name), int(deg or 12))
        text = m.to_json() if args.format == "json" else m.to_text()
    else:
        raise ValueError(
            f"unknown export object {args.object!r} "
            "(use group:NAME, invariant:NAME[:ROUTE], klein:FORM[:SLOT], "
            "icosa:DEGREE[:SLOT], molien:GROUP[:MAXDEG])"
        )
    _write_out(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="refl4",
        description="Exact invariants of the 4-dimensional reflection groups "
        "of orders 1152 and 14400.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("txt", "json"), default="txt")
        p.add_argument("--out", default=None, help="write output to a file")

    g = sub.add_parser("group", help="build a group closure")
    g.add_argument("action", choices=("build",))
    g.add_argument("name", choices=GROUP_NAMES)
    g.add_argument("--bound", type=int, default=20000)
    common(g)
    g.set_defaults(fn=_cmd_group)

    inv = sub.add_parser("invariant", help="compute an invariant polynomial")
    inv.add_argument("action", choices=("compute",))
    inv.add_argument("name", choices=INVARIANT_NAMES)
    inv.add_argument("--route", choices=("geometric", "lift", "listed"), default=None)
    common(inv)
    inv.set_defaults(fn=_cmd_invariant)

    v = sub.add_parser("verify", help="run verification checks")
    v.add_argument("check", help="'all' or a check name")
    v.add_argument("--scope", choices=("quick", "full"), default="quick")
    common(v)
    v.set_defaults(fn=_cmd_verify)

    m = sub.add_parser("molien", help="invariant dimension series of a group")
    m.add_argument("group", choices=GROUP_NAMES)
    m.add_argument("--max-degree", type=int, required=True)
    common(m)
    m.set_defaults(fn=_cmd_molien)

    e = sub.add_parser("export", help="export an object in a canonical format")
    e.add_argument("object")
    common(e)
    e.set_defaults(fn=_cmd_export)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except ClosureBoundError as exc:
        sys.stderr.write(f"failed: {exc}\n")
        return 1
    except (ValueError, UnknownGroupError, KeyError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
