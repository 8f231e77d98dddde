"""Command-line front end.  Every verb is a thin wrapper over the library.

Exit codes: 0 success, 1 domain error or failed verification, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import algebra as alg
from . import dims
from . import repmodules as rm
from . import schurweyl as sw
from .diagram import AlgebraContext, Diagram, InvalidDiagram, compose
from .exactnum import LaurentPoly, lp_eval
from .tableaux import partition, straighten, apply_perm

KIND_ALIASES = {"qp": "whole", "whole": "whole", "half": "half", "qp-half": "half", "tilde": "tilde"}


class UsageError(Exception):
    pass


def _kind(s):
    try:
        return KIND_ALIASES[s]
    except KeyError:
        raise argparse.ArgumentTypeError(f"unknown kind {s!r}")


def _json_arg(s):
    try:
        return json.loads(s)
    except json.JSONDecodeError as e:
        raise UsageError(f"invalid JSON: {e}")


def _diagram_arg(s, k=None):
    obj = _json_arg(s)
    if isinstance(obj, list):
        if k is None:
            k = max((abs(v) for b in obj for v in b), default=0)
        obj = {"k": k, "blocks": obj}
    d = Diagram.from_json(obj)
    if k is not None and d.k != k:
        raise InvalidDiagram(f"diagram has size {d.k}, expected {k}")
    return d


def _frac(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def _coeff_out(c: LaurentPoly, n):
    return _frac(lp_eval(c, n)) if n is not None else c.to_json()


def _check_max(value, what):
    cap = sw.max_dim()
    if value > cap:
        raise ValueError(f"{what} = {value} exceeds QPART_MAX_DIM = {cap}")


def _warn_eval(args, k):
    if args.eval_at is not None:
        alg.check_eval_point(args.eval_at, k)


def _ctx(args):
    return AlgebraContext(args.kind, args.k)


# verbs


def cmd_multiply(args):
    if args.kind:
        ctx = _ctx(args)
        a = alg.QPElement(ctx, {_diagram_arg(args.left, ctx.size): 1})
        b = alg.QPElement(ctx, {_diagram_arg(args.right, ctx.size): 1})
        _warn_eval(args, ctx.k)
        p = alg.qp_mul(a, b)
        return {"context": ctx.label(),
                "terms": [{"leader": d.to_json(), "coeff": _coeff_out(c, args.eval_at)}
                          for d, c in sorted(p.coeffs.items())]}
    d1 = _diagram_arg(args.left, args.k)
    d2 = _diagram_arg(args.right, d1.k)
    m, d3 = compose(d1, d2)
    return {"power": m, "diagram": d3.to_json()}


def cmd_conjugate(args):
    ctx = _ctx(args)
    d = _diagram_arg(args.diagram, ctx.size)
    e = alg.bar_closed_form(d, ctx) if args.closed_form else alg.bar(d, ctx)
    _warn_eval(args, ctx.k)
    return {"context": ctx.label(), "leader": d.to_json(),
            "terms": [{"diagram": dp.to_json(), "coeff": _coeff_out(c, args.eval_at)}
                      for dp, c in sorted(e.terms.items())]}


def cmd_basis(args):
    ctx = _ctx(args)
    _check_max(dims.algebra_dim_formula(ctx.kind, ctx.k), "basis size")
    ls = ctx.leaders()
    return {"context": ctx.label(), "dim": len(ls), "leaders": [d.to_json() for d in ls]}


def cmd_dim(args):
    v = dims.algebra_dim_formula(args.kind, args.k)
    if args.enumerate:
        _check_max(v, "basis size")
        e = alg.algebra_dim(_ctx(args))
        return {"context": _ctx(args).label(), "formula": v, "enumeration": e, "agree": v == e}
    return v


def cmd_simple_dims(args):
    rows = []
    for lam in dims.labels(args.kind, args.k):
        if args.method == "all":
            vals = dims.dim_simple_all(args.kind, args.k, lam)
            v = next(iter(vals.values()))
        else:
            v = dims.dim_simple(args.kind, args.k, lam, args.method)
        rows.append({"label": list(lam), "dim": v})
    return {"context": AlgebraContext(args.kind, args.k).label(), "dims": rows,
            "sum_of_squares": sum(r["dim"] ** 2 for r in rows)}


def _nu_arg(s):
    obj = _json_arg(s)
    if not isinstance(obj, list):
        raise UsageError("--nu must be a JSON array")
    return partition(obj)


def cmd_delta(args):
    nu = _nu_arg(args.nu)
    basis = rm.delta_basis(args.k, nu, args.half)
    formula = (dims.dim_half_delta if args.half else dims.dim_delta)(args.k, nu)
    out = {"k": args.k, "nu": list(nu), "half": args.half, "dim": len(basis), "formula": formula}
    if args.list:
        out["basis"] = [{"diagram": d.to_json(), "tableau": [list(r) for r in T]} for d, T in basis]
    return out


def cmd_module_matrix(args):
    nu = _nu_arg(args.nu)
    if args.module == "qp":
        ctx = AlgebraContext("whole", args.k)
        d = _diagram_arg(args.diagram, args.k)
        sb = rm.qp_simple_basis(args.k, nu)
        M = rm.simple_action_matrix(alg.QPElement(ctx, {d: 1}), sb)
        labels = sb.leaders
    else:
        half = args.module == "half-delta"
        mctx = rm.ModuleContext(args.k, nu, half)
        d = _diagram_arg(args.diagram, mctx.size)
        labels = rm.delta_basis(args.k, nu, half)
        M = rm.action_matrix(d, mctx, labels)
    _warn_eval(args, args.k)
    return {"module": args.module, "k": args.k, "nu": list(nu), "dim": len(labels),
            "basis": [{"diagram": dd.to_json(), "tableau": [list(r) for r in T]} for dd, T in labels],
            "matrix": [[_coeff_out(c, args.eval_at) for c in row] for row in M]}


def _verify_case(case):
    kind, k, n = case
    return sw.verify_centralizer(kind, k, n).to_json()


def cmd_verify(args):
    if args.sweep:
        k_max = args.k if args.k is not None else 2
        kinds = [args.kind] if args.kind else list(dims.KINDS)
        cases = []
        for kind in kinds:
            for k in range(1, k_max + 1):
                lo = sw.theorem_bound(kind, k)
                hi = args.n if args.n is not None else lo + 1
                for n in range(lo, hi + 1):
                    size = n ** (k + (1 if kind == "tilde" else 0))
                    if size <= min(sw.COMMUTANT_CAP, sw.max_dim()):
                        cases.append((kind, k, n))
        if args.jobs > 1:
            with ProcessPoolExecutor(max_workers=args.jobs) as ex:
                reports = list(ex.map(_verify_case, cases))
        else:
            reports = [_verify_case(c) for c in cases]
        return reports
    if args.kind is None or args.k is None or args.n is None:
        raise UsageError("verify-centralizer needs --kind, --k and --n (or --sweep)")
    return _verify_case((args.kind, args.k, args.n))


def cmd_bratteli(args):
    G = dims.bratteli(args.k_max)
    if args.format == "dot":
        return G.to_dot()
    out = G.to_json()
    out["consistent"] = dims.check_bratteli(G)
    return out


def cmd_straighten(args):
    T = _json_arg(args.tableau)
    if not isinstance(T, list) or not all(isinstance(r, list) for r in T):
        raise UsageError("--tableau must be a list of rows")
    T = tuple(tuple(r) for r in T)
    if args.perm:
        T = apply_perm(_json_arg(args.perm), T)
    res = straighten(T)
    return {"terms": [{"tableau": [list(r) for r in u], "coeff": c} for u, c in sorted(res.items())]}


# output


def _text(obj) -> str:
    if isinstance(obj, str):
        return obj
    if isinstance(obj, list) and obj and all(isinstance(r, dict) for r in obj):
        cols = sorted({c for r in obj for c in r})
        cells = [[json.dumps(r.get(c), sort_keys=True) if not isinstance(r.get(c), str) else r.get(c)
                  for c in cols] for r in obj]
        widths = [max(len(c), *(len(row[i]) for row in cells)) for i, c in enumerate(cols)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths))]
        lines += ["  ".join(v.ljust(w) for v, w in zip(row, widths)) for row in cells]
        return "\n".join(lines) + "\n"
    if isinstance(obj, dict):
        out = []
        w = max((len(k) for k in obj), default=0)
        for key in sorted(obj):
            v = obj[key]
            if isinstance(v, list) and v and all(isinstance(r, dict) for r in v):
                out.append(f"{key}:")
                out.append(_text(v).rstrip("\n"))
            else:
                out.append(f"{key.ljust(w)}  {v if isinstance(v, str) else json.dumps(v, sort_keys=True)}")
        return "\n".join(out) + "\n"
    return json.dumps(obj, sort_keys=True) + "\n"


def _passed(verb, result) -> bool:
    if verb == "verify-centralizer":
        rs = result if isinstance(result, list) else [result]
        return all(r["pass"] for r in rs)
    if verb == "bratteli" and isinstance(result, dict):
        return result["consistent"]
    if verb == "dim" and isinstance(result, dict):
        return result["agree"]
    return True


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qpart", description="Partition and quasi-partition algebra toolkit.")
    p.add_argument("--format", choices=["json", "text", "dot"], default="json")
    sub = p.add_subparsers(dest="verb", required=True)

    def common(sp, kind_required=True, k_required=True):
        sp.add_argument("--kind", type=_kind, required=kind_required)
        sp.add_argument("--k", type=int, required=k_required)
        sp.add_argument("--format", choices=["json", "text", "dot"], default=argparse.SUPPRESS)

    def eval_opt(sp):
        sp.add_argument("--eval-at", type=int, default=None)

    s = sub.add_parser("multiply", help="product of two diagrams, or of two bar-basis elements")
    common(s, kind_required=False, k_required=False)
    s.add_argument("--left", required=True)
    s.add_argument("--right", required=True)
    eval_opt(s)
    s.set_defaults(func=cmd_multiply)

    s = sub.add_parser("conjugate", help="expansion of pi d pi")
    common(s)
    s.add_argument("--diagram", required=True)
    s.add_argument("--closed-form", action="store_true")
    eval_opt(s)
    s.set_defaults(func=cmd_conjugate)

    s = sub.add_parser("basis", help="leaders of the projected basis")
    common(s)
    s.set_defaults(func=cmd_basis)

    s = sub.add_parser("dim", help="algebra dimension")
    common(s)
    s.add_argument("--enumerate", action="store_true")
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("simple-dims", help="dimensions of the irreducibles")
    common(s)
    s.add_argument("--method", choices=["formula", "tableaux", "recursion", "module", "all"], default="formula")
    s.set_defaults(func=cmd_simple_dims)

    s = sub.add_parser("delta", help="standard module basis and dimension")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--nu", required=True)
    s.add_argument("--half", action="store_true")
    s.add_argument("--list", action="store_true")
    s.add_argument("--format", choices=["json", "text", "dot"], default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_delta)

    s = sub.add_parser("module-matrix", help="action matrix of a diagram on a module")
    s.add_argument("--k", type=int, required=True)
    s.add_argument("--nu", required=True)
    s.add_argument("--diagram", required=True)
    s.add_argument("--module", choices=["delta", "half-delta", "qp"], default="delta")
    s.add_argument("--format", choices=["json", "text", "dot"], default=argparse.SUPPRESS)
    eval_opt(s)
    s.set_defaults(func=cmd_module_matrix)

    s = sub.add_parser("verify-centralizer", help="brute-force centralizer check")
    common(s, kind_required=False, k_required=False)
    s.add_argument("--n", type=int)
    s.add_argument("--sweep", action="store_true")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("bratteli", help="Bratteli-like graph of irreducibles")
    s.add_argument("--k-max", type=int, default=2)
    s.add_argument("--format", choices=["json", "text", "dot"], default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_bratteli)

    s = sub.add_parser("straighten", help="Garnir straightening of a tableau")
    s.add_argument("--tableau", required=True)
    s.add_argument("--perm")
    s.add_argument("--format", choices=["json", "text", "dot"], default=argparse.SUPPRESS)
    s.set_defaults(func=cmd_straighten)
    return p


def _showwarning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if args.format == "dot" and args.verb != "bratteli":
        print("error: --format dot is only available for bratteli", file=sys.stderr)
        return 2
    old = warnings.showwarning
    warnings.showwarning = _showwarning
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always", alg.SemisimplicityWarning)
            warnings.showwarning = _showwarning
            result = args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    finally:
        warnings.showwarning = old
    if args.format == "text" or (isinstance(result, str) and args.format == "dot"):
        out.write(_text(result))
    else:
        out.write(json.dumps(result, sort_keys=True) + "\n")
    return 0 if _passed(args.verb, result) else 1


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
