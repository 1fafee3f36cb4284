"""Command-line front end.  Every subcommand prints one canonical JSON report.

Exit codes: 0 ok, 1 invalid input, 2 resource limit, 3 internal consistency failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import config
from .braiding import BraidingMatrix, NonGeneric, classification_report, classify, detect_cartan, NotCartan
from .config import ConsistencyError, ResourceLimitError

EXIT_OK, EXIT_INPUT, EXIT_LIMIT, EXIT_CONSISTENCY = 0, 1, 2, 3


class InputError(ValueError):
    pass


def _load(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_braiding(obj):
    """``{"braiding": [[...]], "params": [...]}`` or a bare matrix."""
    names = None
    if isinstance(obj, dict):
        names = obj.get("params")
        rows = obj.get("braiding", obj.get("q"))
        if rows is None:
            raise InputError("braiding file needs a 'braiding' matrix")
    else:
        rows = obj
    try:
        return BraidingMatrix.parse(rows, names), names
    except (TypeError, ValueError) as exc:
        raise InputError(f"bad braiding matrix: {exc}") from exc


def load_datum(obj):
    from .uqd.datum import GenericDatum

    if not isinstance(obj, dict) or "s" not in obj:
        raise InputError("datum file needs the keys s, cartan, components, g, chi")
    try:
        return GenericDatum.from_json(obj)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def dumps(report) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _human(report, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(report, dict):
        for k in sorted(report):
            v = report[k]
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v, ensure_ascii=False)}")
    elif isinstance(report, list):
        for v in report:
            if isinstance(v, (dict, list)):
                lines.append(f"{pad}-")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{report}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# subcommands


def cmd_analyze(args):
    q, names = load_braiding(_load(args.file))
    try:
        c = classify(q)
    except NonGeneric as exc:
        return {"verdict": "NonGeneric", "reason": str(exc)}, EXIT_OK
    return classification_report(c, names), EXIT_OK


def _cartan_of(obj):
    if isinstance(obj, dict) and "cartan" in obj:
        return [list(map(int, r)) for r in obj["cartan"]]
    q, _ = load_braiding(obj)
    try:
        return [list(r) for r in detect_cartan(q).a]
    except NotCartan as exc:
        raise InputError(str(exc)) from exc


def cmd_roots(args):
    from .rootsys import root_data

    a = _cartan_of(_load(args.file))
    try:
        rd = root_data(a)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    out = rd.to_json()
    out["cartan"] = [list(r) for r in rd.cartan]
    out["P"] = rd.P
    return out, EXIT_OK


def cmd_nichols(args):
    from . import freealg

    obj = _load(args.file)
    q, names = load_braiding(obj)
    B = None
    if args.B:
        from .scalars import parse_scalar

        B = [parse_scalar(x, names) for x in args.B.split(",")]
        if len(B) != q.theta:
            raise InputError("--B needs one scalar per vertex")
    if args.degree < 0 or args.degree > config.LIMITS.nichols_degree and not args.force:
        raise InputError(f"--degree must lie in [0, {config.LIMITS.nichols_degree}] (use --force to exceed)")
    dims = freealg.nichols_dims(q, args.degree, B, jobs=args.jobs)
    checks = []
    for i in range(q.theta):
        for j in range(q.theta):
            if i == j:
                continue
            try:
                aij = freealg.cartan_exponent(i, j, q)
            except ValueError:
                checks.append({"i": i + 1, "j": j + 1, "cartan": False})
                continue
            r = 1 - aij
            checks.append(
                {
                    "i": i + 1,
                    "j": j + 1,
                    "cartan": True,
                    "r": r,
                    "serre_in_radical": freealg.serre_in_radical(i, j, q),
                    "serre_vanishing": freealg.serre_vanishing(r, i, j, q),
                    "element": freealg.format_free(freealg.serre_element(i, j, q, aij), names),
                }
            )
    return {"dims": dims, "serre_checks": checks, "symmetric": q.is_symmetric()}, EXIT_OK


def cmd_validate(args):
    from .uqd.datum import validate_datum

    d = load_datum(_load(args.file))
    rep = validate_datum(d)
    return rep.to_json(), EXIT_OK if rep.valid else EXIT_INPUT


def _system(d):
    from .uqd.pbw import build_rewrite_system

    return build_rewrite_system(d)


def _expr(args, d):
    from .uqd.expr import parse_expression, to_awords

    return to_awords(parse_expression(args.expr, d.theta, d.s, d.names), d)


def cmd_nf(args):
    from .uqd.pbw import format_pbw

    d = load_datum(_load(args.file))
    system = _system(d)
    x = system.nf_awords(_expr(args, d), args.strategy)
    return {
        "expr": args.expr,
        "normal_form": format_pbw(x, system),
        "filtration_degree": system.filtration_degree(x),
        "strategy": args.strategy,
    }, EXIT_OK


def cmd_delta(args):
    from .uqd.pbw import format_pbw, format_tensor

    d = load_datum(_load(args.file))
    system = _system(d)
    aw = _expr(args, d)
    return {
        "expr": args.expr,
        "normal_form": format_pbw(system.nf_awords(aw), system),
        "coproduct": format_tensor(system.coproduct_awords(aw), system),
    }, EXIT_OK


def cmd_pbw(args):
    from .freealg import exponent_vectors, format_free
    from .uqd.pbw import format_key

    d = load_datum(_load(args.file))
    system = _system(d)
    names = system.param_names
    vectors = []
    for j, b in enumerate(system.beta):
        entry = {
            "index": j + 1,
            "name": system.root_name(j),
            "root": list(b),
            "height": system.heights[j],
            "expansion": format_free(system.vectors[j], names, letter="a"),
        }
        if j in system.brackets:
            k, l = system.brackets[j]
            entry["bracket"] = [system.root_name(k), system.root_name(l)]
        vectors.append(entry)
    zero = (0,) * system.s
    monomials = []
    for n in range(args.degree + 1):
        cs = exponent_vectors(system.heights, n)
        monomials.append({"degree": n, "count": len(cs), "monomials": [format_key((c, zero), system) or "1" for c in cs]})
    return {
        "w0_word": [i + 1 for i in system.roots.w0_word],
        "root_vectors": vectors,
        "rules": system.rules_json(),
        "order": system.order_descriptor(),
        "monomials": monomials,
        "note": "each monomial is multiplied by an arbitrary group element y^gamma",
    }, EXIT_OK


def cmd_isom(args):
    from .uqd.isom import datum_isomorphisms

    d1 = load_datum(_load(args.file1))
    d2 = load_datum(_load(args.file2))
    res = datum_isomorphisms(d1, d2, args.bound)
    return res.to_json(list(d1.names) if d1.names else None), EXIT_OK


def cmd_gk(args):
    obj = _load(args.file)
    if isinstance(obj, dict) and "s" in obj:
        from .uqd.hopf import gk_dimension

        return gk_dimension(load_datum(obj)), EXIT_OK
    q, _ = load_braiding(obj)
    try:
        c = classify(q)
    except NonGeneric as exc:
        raise InputError(str(exc)) from exc
    return {"nichols": c.gk, "verdict": c.verdict}, EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="pointedq", description="Diagonal braidings, Nichols algebras and U(D).")
    p.add_argument("--human", action="store_true", help="print an indented rendering instead of JSON")
    p.add_argument("--term-limit", type=int, default=None, help="term-count guard (default from POINTEDQ_TERM_LIMIT)")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="classify a braiding matrix")
    s.add_argument("file")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("roots", help="positive roots and the beta numeration")
    s.add_argument("file")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("nichols", help="graded dimensions of the Nichols algebra")
    s.add_argument("file")
    s.add_argument("--degree", type=int, default=4)
    s.add_argument("--B", default=None, help="comma-separated scalars B_i")
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--force", action="store_true")
    s.set_defaults(func=cmd_nichols)

    s = sub.add_parser("validate", help="check a generic datum")
    s.add_argument("file")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("nf", help="PBW normal form of an expression")
    s.add_argument("file")
    s.add_argument("--expr", required=True)
    s.add_argument("--strategy", choices=["leftmost", "rightmost", "phase"], default="leftmost")
    s.set_defaults(func=cmd_nf)

    s = sub.add_parser("delta", help="coproduct of an expression")
    s.add_argument("file")
    s.add_argument("--expr", required=True)
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("pbw", help="root vectors, straightening rules and PBW monomials")
    s.add_argument("file")
    s.add_argument("--degree", type=int, default=3)
    s.set_defaults(func=cmd_pbw)

    s = sub.add_parser("isom", help="isomorphisms between two data")
    s.add_argument("file1")
    s.add_argument("file2")
    s.add_argument("--bound", type=int, default=None)
    s.set_defaults(func=cmd_isom)

    s = sub.add_parser("gk", help="Gelfand-Kirillov dimensions")
    s.add_argument("file")
    s.set_defaults(func=cmd_gk)
    return p


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = config.LIMITS
    try:
        if args.term_limit is not None:
            if args.term_limit <= 0:
                raise InputError("--term-limit must be positive")
            config.set_limits(saved.with_(term_limit=args.term_limit))
        report, code = args.func(args)
    except ResourceLimitError as exc:
        report, code = {"error": "resource-limit", "message": str(exc)}, EXIT_LIMIT
    except ConsistencyError as exc:
        report, code = {"error": "consistency", "message": str(exc)}, EXIT_CONSISTENCY
    except ValueError as exc:
        report, code = {"error": "invalid-input", "message": str(exc)}, EXIT_INPUT
    finally:
        config.set_limits(saved)
    if "violations" in report and code == EXIT_INPUT:
        report = dict(report, error="invalid-input")
    out.write((_human(report) if args.human else dumps(report)) + "\n")
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
