"""Command-line driver.

    degexcess excess --family J_pa --p 8 --a 3 --horizon 5 --format csv
    degexcess vertices --ideal sample.json
    degexcess verify --suite g2 --pmax 9

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import replace

from .asymptotics import (
    analyze,
    kodiyalam_reduction,
    lead_bound_epsilon,
    lead_bound_r,
    p_of,
    reduction_number,
)
from .errors import (
    BudgetExceededError,
    CapExceededError,
    DimensionError,
    IdealParseError,
    InfeasibleError,
    InvalidIdealError,
    ParameterError,
)
from .families import FAMILY_TAGS, build_family
from .monomial import DEFAULT_BUDGET, FactoredIdeal, MonomialIdeal, minimalize, monomial_str, power
from .newton import caratheodory_certificate, in_upper_cone, vertices
from .suites import SUITES, SuiteConfig, run_suite

FORMATS = ("table", "csv", "json")


class UsageError(Exception):
    pass


def parse_ideal(source: str) -> MonomialIdeal:
    """Read ``{"vars": s, "generators": [[...], ...]}`` and minimalize."""
    try:
        data = json.loads(source)
    except json.JSONDecodeError as exc:
        raise IdealParseError(f"line {exc.lineno} column {exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise IdealParseError("top level: expected an object with 'vars' and 'generators'")
    for key in ("vars", "generators"):
        if key not in data:
            raise IdealParseError(f"top level: missing key {key!r}")
    s = data["vars"]
    if not isinstance(s, int) or isinstance(s, bool) or s < 1:
        raise IdealParseError(f"vars: expected a positive integer, got {s!r}")
    gens = data["generators"]
    if not isinstance(gens, list) or not gens:
        raise IdealParseError("generators: expected a non-empty list")
    vecs = []
    for k, g in enumerate(gens):
        where = f"generators[{k}]"
        if not isinstance(g, list):
            raise IdealParseError(f"{where}: expected a list of integers")
        if len(g) != s:
            raise IdealParseError(f"{where}: length {len(g)} does not match vars={s}")
        for j, x in enumerate(g):
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise IdealParseError(f"{where}[{j}]: expected a non-negative integer, got {x!r}")
        if not any(g):
            raise IdealParseError(f"{where}: zero vector gives the unit ideal")
        vecs.append(tuple(g))
    return minimalize(vecs, s)


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.replace(" ", "").split(",") if x]


def _steps(text: str) -> list[tuple[int, int]]:
    """``3:1,1:2`` -> [(3, 1), (1, 2)] as (value, start) pairs."""
    out = []
    for part in text.replace(" ", "").split(","):
        value, start = part.split(":")
        out.append((int(value), int(start)))
    return out


_PARAM_PARSERS = {
    "p": int, "a": int, "i": int, "s": int, "delta": int,
    "steps": _steps, "points": _int_list,
}


def _family_params(args) -> tuple[str | None, dict]:
    tag = args.family
    raw = [(k, getattr(args, k, None)) for k in _PARAM_PARSERS]
    raw = [(k, v) for k, v in raw if v is not None]
    for tok in getattr(args, "params", None) or []:
        if "=" not in tok:
            raise UsageError(f"expected key=value, got {tok!r}")
        key, val = tok.split("=", 1)
        if key == "family":
            tag = val
        elif key in _PARAM_PARSERS:
            raw.append((key, val))
        else:
            raise UsageError(f"unknown parameter {key!r}")
    params = {}
    for key, val in raw:
        try:
            params[key] = _PARAM_PARSERS[key](val)
        except ValueError:
            raise UsageError(f"bad value for {key}: {val!r}") from None
    return tag, params


def load_input(args):
    """Return (ideal, FamilySpec or None) from --ideal or a family description."""
    tag, params = _family_params(args)
    if args.ideal and tag:
        raise UsageError("give either --ideal or --family, not both")
    if args.ideal:
        try:
            with open(args.ideal, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.ideal}: {exc.strerror}") from None
        try:
            return parse_ideal(text), None
        except IdealParseError as exc:
            raise IdealParseError(f"{args.ideal}: {exc}") from None
    if tag:
        if tag not in FAMILY_TAGS:
            raise UsageError(f"unknown family {tag!r}; expected one of {', '.join(FAMILY_TAGS)}")
        return build_family(tag, **params)
    raise UsageError("need --ideal FILE or --family TAG")


def _flat(ideal, budget):
    return ideal.expand(budget) if isinstance(ideal, FactoredIdeal) else ideal


def _rows_out(header: list[str], rows: list[list], fmt: str, meta: dict | None = None) -> str:
    if fmt == "json":
        out = dict(meta or {})
        out["rows"] = [dict(zip(header, r)) for r in rows]
        return json.dumps(out, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    lines = [f"# {k}: {v}" for k, v in (meta or {}).items()]
    widths = [max(len(str(x)) for x in [h, *(r[i] for r in rows)]) for i, h in enumerate(header)]
    lines.append("  ".join(h.rjust(w) for h, w in zip(header, widths)))
    for r in rows:
        lines.append("  ".join(str(x).rjust(w) for x, w in zip(r, widths)))
    return "\n".join(lines) + "\n"


def cmd_powers(args) -> tuple[str, int]:
    ideal, _ = load_input(args)
    n = args.n if args.n is not None else 1
    pw = ideal.expanded_power(n, args.budget) if isinstance(ideal, FactoredIdeal) else power(ideal, n, args.budget)
    rows = [[monomial_str(g), "[" + ",".join(map(str, g)) + "]", sum(g)] for g in pw.generators]
    meta = {"n": n, "vars": pw.num_vars, "mu": len(pw.generators)}
    return _rows_out(["monomial", "exponent", "degree"], rows, args.format, meta), 0


def cmd_excess(args) -> tuple[str, int]:
    ideal, spec = load_input(args)
    prof = analyze(ideal, args.horizon, args.cap, args.budget, _closed_form(spec))
    if args.format == "csv":
        return prof.to_csv(), 0
    if args.format == "json":
        return json.dumps(prof.to_json(), indent=2, sort_keys=True) + "\n", 0
    meta = {
        "p": prof.p,
        "reduction_number": prof.reduction_number,
        "observed_gstab": prof.observed_gstab,
        "limit_value": prof.limit_value,
        "certified": prof.certified,
    }
    rows = [[n, *prof.rows[n]] for n in range(1, prof.horizon + 1)]
    return _rows_out(["n", "d", "epsilon"], rows, "table", meta), 0


def _closed_form(spec):
    return spec if spec is not None and spec.predicted_gstab is not None else None


def cmd_vertices(args) -> tuple[str, int]:
    ideal, _ = load_input(args)
    vs = vertices(_flat(ideal, args.budget))
    rows = [[monomial_str(v), "[" + ",".join(map(str, v)) + "]", sum(v)] for v in vs.vertices]
    if args.format == "json":
        return json.dumps({"vertices": [list(v) for v in vs.vertices], "delta": vs.delta},
                          indent=2, sort_keys=True) + "\n", 0
    return _rows_out(["monomial", "exponent", "degree"], rows, args.format, {"delta": vs.delta}), 0


def cmd_reduce(args) -> tuple[str, int]:
    ideal, _ = load_input(args)
    ideal = _flat(ideal, args.budget)
    red = kodiyalam_reduction(ideal)
    r = reduction_number(ideal, args.cap)
    info = {
        "p": p_of(ideal),
        "reduction": [list(g) for g in red.generators],
        "extra": [list(g) for g in ideal.generators if not red.has_generator(g)],
        "reduction_number": r,
        "lead_bound_r": lead_bound_r(ideal),
        "lead_bound_epsilon": lead_bound_epsilon(ideal),
    }
    if args.format == "json":
        return json.dumps(info, indent=2, sort_keys=True) + "\n", 0
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["key", "value"])
        for k, v in info.items():
            w.writerow([k, json.dumps(v, separators=(",", ":"))])
        return buf.getvalue(), 0
    lines = [
        f"p(I) = {info['p']}",
        f"J = ({', '.join(monomial_str(g) for g in red.generators)})",
        f"generators outside J: {len(info['extra'])}",
        f"reduction number r_J(I) = {r}",
        f"bound on r: {info['lead_bound_r']}",
        f"bound on epsilon: {info['lead_bound_epsilon']}",
    ]
    return "\n".join(lines) + "\n", 0


def cmd_certificate(args) -> tuple[str, int]:
    """Certificate for --point, or for every generator of I against the vertices."""
    ideal, _ = load_input(args)
    ideal = _flat(ideal, args.budget)
    vs = vertices(ideal).vertices
    if args.point:
        pts = [tuple(_int_list(args.point))]
        if len(pts[0]) != ideal.num_vars:
            raise UsageError(f"--point has {len(pts[0])} entries, ideal has {ideal.num_vars} variables")
    else:
        pts = list(ideal.generators)
    certs = []
    for v in pts:
        if not in_upper_cone(v, vs):
            raise InfeasibleError(f"{list(v)} is not in the Newton polyhedron")
        certs.append(caratheodory_certificate(v, vs))
    if args.format == "json":
        return json.dumps([c.to_json() for c in certs], indent=2, sort_keys=True) + "\n", 0
    rows = []
    for c in certs:
        combo = " + ".join(f"{a}*{list(u)}" for u, a in c.support)
        rows.append([json.dumps(list(c.point)), c.N, combo, json.dumps(list(c.slack))])
    return _rows_out(["point", "N", "sum alpha*u", "slack"], rows, args.format), 0


def cmd_family(args) -> tuple[str, int]:
    ideal, spec = load_input(args)
    flat = _flat(ideal, args.budget)
    horizon = args.horizon
    info = {
        "vars": flat.num_vars,
        "generators": [list(g) for g in flat.generators],
        "spec": spec.to_json(horizon) if spec else None,
    }
    if isinstance(ideal, FactoredIdeal):
        info["factors"] = [f.to_json() for f in ideal.factors]
    if args.format == "json":
        return json.dumps(info, indent=2, sort_keys=True) + "\n", 0
    rows = [[monomial_str(g), "[" + ",".join(map(str, g)) + "]", sum(g)] for g in flat.generators]
    meta = {}
    if spec:
        meta = {
            "family": spec.tag,
            "params": json.dumps(spec.params, sort_keys=True),
            "predicted_excess": json.dumps(spec.to_json(horizon)["predicted_excess"]),
            "predicted_r": spec.predicted_r,
            "r_bounds": list(spec.r_bounds),
            "predicted_gstab": spec.predicted_gstab,
        }
    return _rows_out(["monomial", "exponent", "degree"], rows, args.format, meta), 0


def cmd_verify(args) -> tuple[str, int]:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    cfg = SuiteConfig(seed=args.seed, pmax=args.pmax, count=args.count, budget=args.budget, cap=args.cap)
    if args.horizon is not None:
        cfg = replace(cfg, horizon=args.horizon)
    reports = [run_suite(n, cfg) for n in names]
    ok = all(r.ok for r in reports)
    if args.format == "json":
        data = [r.to_json(args.timing) for r in reports]
        text = json.dumps(data[0] if len(data) == 1 else data, indent=2, sort_keys=True) + "\n"
    elif args.format == "csv":
        text = "".join(r.to_csv() if k == 0 else r.to_csv().split("\n", 1)[1] for k, r in enumerate(reports))
    else:
        text = "".join(r.to_table(args.timing) for r in reports)
    return text, 0 if ok else 1


def _add_common(sp: argparse.ArgumentParser, ideal_input: bool = True) -> None:
    sp.add_argument("--format", choices=FORMATS, default="table")
    sp.add_argument("--out", metavar="FILE", help="write the report here instead of stdout")
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                    help="largest allowed multiset count C(mu+n-1, n) per power")
    sp.add_argument("--cap", type=int, default=None, help="largest reduction number searched")
    sp.add_argument("--seed", type=int, default=0)
    if ideal_input:
        sp.add_argument("--ideal", metavar="FILE", help='JSON {"vars": s, "generators": [[...], ...]}')
        sp.add_argument("--family", metavar="TAG", help=", ".join(FAMILY_TAGS))
        for key in ("p", "a", "i", "s", "delta"):
            sp.add_argument(f"--{key}")
        sp.add_argument("--steps", help="G6 steps as value:start pairs, e.g. 3:1,1:2")
        sp.add_argument("--points", help="G7 local maxima, e.g. 2,4")
        sp.add_argument("params", nargs="*", help="family parameters as key=value, e.g. family=J_pa p=8 a=3")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="degexcess", description="Exact degree-excess computations for monomial ideals.")
    sub = ap.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("powers", help="minimal generators of I^n")
    _add_common(sp)
    sp.add_argument("--n", type=int, default=1)

    sp = sub.add_parser("excess", help="table n, d(I^n), epsilon(I;n)")
    _add_common(sp)
    sp.add_argument("--horizon", type=int, default=8)

    sp = sub.add_parser("vertices", help="vertices of the Newton polyhedron and delta(I)")
    _add_common(sp)

    sp = sub.add_parser("reduce", help="Kodiyalam reduction, reduction number and bounds")
    _add_common(sp)

    sp = sub.add_parser("certificate", help="integer certificates of Newton polyhedron membership")
    _add_common(sp)
    sp.add_argument("--point", help="comma-separated exponent vector; default: every generator")

    sp = sub.add_parser("family", help="build a named family member and show its predictions")
    _add_common(sp)
    sp.add_argument("--horizon", type=int, default=10)

    sp = sub.add_parser("verify", help="run a verification suite")
    _add_common(sp, ideal_input=False)
    sp.add_argument("--suite", choices=[*SUITES, "all"], required=True)
    sp.add_argument("--pmax", type=int, default=9)
    sp.add_argument("--count", type=int, default=None, help="number of random cases")
    sp.add_argument("--horizon", type=int, default=None)
    sp.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identical output)")
    return ap


COMMANDS = {
    "powers": cmd_powers,
    "excess": cmd_excess,
    "vertices": cmd_vertices,
    "reduce": cmd_reduce,
    "certificate": cmd_certificate,
    "family": cmd_family,
    "verify": cmd_verify,
}

_USER_ERRORS = (
    UsageError, IdealParseError, InvalidIdealError, ParameterError, DimensionError,
    BudgetExceededError, CapExceededError, InfeasibleError,
)


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, code = COMMANDS[args.command](args)
    except _USER_ERRORS as exc:
        print(f"degexcess {args.command}: {exc}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
