"""Command-line interface.

    schatunowsky pgood check|enumerate|largest|bounds
    schatunowsky ineq scan|check
    schatunowsky model zx|qz <op> POLY...
    schatunowsky formula parse|eval|check-structure
    schatunowsky cache build|info

Exit status: 0 on success, 1 when a check finds a failure or counterexample,
2 on usage errors (bad flags, malformed input, out-of-range arguments).
JSON output is deterministic: keys sorted, no timestamps.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
from typing import Optional

from . import arith, inequalities, pgood
from . import polymodels as pm
from .errors import CertificationFailed, SchatunowskyError
from .factor import DEFAULT_DEGREE_BOUND
from .polys import IntPoly, QZPoly

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
FORMATS = ("plain", "json", "csv")


class UsageError(Exception):
    pass


# -- output -------------------------------------------------------------------------


class Output:
    """Collects one command's result and renders it in the chosen format."""

    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def emit(self, data: dict, plain: list[str], rows: Optional[list[list]] = None):
        if self.fmt == "json":
            text = json.dumps(data, indent=2, sort_keys=True) + "\n"
        elif self.fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if rows is None:
                rows = [["key", "value"]] + [[k, _scalar(v)] for k, v in sorted(data.items())]
            w.writerows(rows)
            text = buf.getvalue()
        else:
            text = "".join(line + "\n" for line in plain)
        self.stream.write(text)


def _scalar(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, tuple)):
        return " ".join(map(_scalar, v))
    return str(v)


def _positive(name):
    def conv(text):
        try:
            v = int(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer, got {text!r}") from None
        if v <= 0:
            raise argparse.ArgumentTypeError(f"{name} must be positive, got {v}")
        return v

    return conv


# -- pgood --------------------------------------------------------------------------


def _pgood_check(args, out):
    if args.n is None:
        raise UsageError("pgood check: missing N")
    rep = pgood.all_totatives_prime(args.n) if args.p is None else pgood.is_p_good(args.n, args.p)
    out.emit(rep.to_dict(), [rep.to_record()],
             [["n", "p", "good", "witness"], [rep.n, _scalar(rep.p), _scalar(rep.good), _scalar(rep.witness)]])
    return EXIT_OK


def _pgood_enumerate(args, out):
    limit = args.limit or 1000
    ns = pgood.enumerate_p_good(args.p, limit)
    out.emit({"p": args.p, "limit": limit, "numbers": ns}, [str(n) for n in ns],
             [["n"]] + [[n] for n in ns])
    return EXIT_OK


def _pgood_largest(args, out):
    if args.p is None:
        # classic case: scan to the limit, nothing above 30 turns up
        limit = args.limit or 10**4
        n = max(pgood.enumerate_p_good(None, limit))
    else:
        n = pgood.largest_p_good(args.p)
    out.emit({"p": args.p, "largest": n}, [str(n)], [["p", "largest"], [_scalar(args.p), n]])
    return EXIT_OK


def _pgood_bounds(args, out):
    if args.p is None:
        raise UsageError("pgood bounds: --p is required")
    p = args.p
    data = {"p": p, "weak_bound": pgood.weak_bound(p), "strong_bound": None, "k_p": None}
    if p > 7:
        data["strong_bound"] = pgood.strong_bound(p)
        data["k_p"] = arith.kp_floor(p)
    plain = [f"{k}={_scalar(data[k]) or '-'}" for k in ("p", "weak_bound", "strong_bound", "k_p")]
    out.emit(data, plain)
    return EXIT_OK


# -- ineq ---------------------------------------------------------------------------


def _ineq_scan(args, out):
    if args.which is None:
        raise UsageError("ineq scan: --which is required")
    limit = args.limit or (1000 if args.which == "bonse" else 10**6)
    rep = inequalities.scan_parallel(args.which, limit, args.jobs)
    summary = f"{rep.which} range={rep.range[0]}..{rep.range[1]} checked={rep.checked} failures={len(rep.failures)}"
    plain = [f"failure {' '.join(map(str, f.inputs))} lhs={f.lhs} rhs={f.rhs}" for f in rep.failures]
    if out.fmt == "csv":
        out.stream.write(rep.to_csv())
    else:
        out.emit(rep.to_dict(), plain + [summary])
    return EXIT_OK if rep.ok else EXIT_FAIL


_CHECK_ARITY = {"a19": 3, "eq4": 1, "chebyshev": 1, "bonse": 1}


def _ineq_check(args, out):
    which = args.which
    if which is None:
        raise UsageError("ineq check: --which is required")
    vals = args.values
    if len(vals) != _CHECK_ARITY[which]:
        raise UsageError(f"ineq check --which {which} takes {_CHECK_ARITY[which]} integer(s), got {len(vals)}")
    if which == "a19":
        r, p, q = vals
        if not (arith.is_prime(r) and arith.successor_prime(r) == p and arith.successor_prime(p) == q):
            raise UsageError(f"{r}, {p}, {q} are not consecutive primes")
        ok = inequalities.check_a19(inequalities.Triple(r, p, q))
    elif which == "eq4":
        ok = inequalities.check_eq4(vals[0])
    elif which == "chebyshev":
        ok = inequalities.check_chebyshev(vals[0])
    else:
        ok = inequalities.check_bonse(vals[0])
    out.emit({"which": which, "inputs": vals, "holds": ok},
             [f"{which} {' '.join(map(str, vals))} {'holds' if ok else 'fails'}"])
    return EXIT_OK if ok else EXIT_FAIL


# -- model --------------------------------------------------------------------------


def _zx_ops(db):
    return {
        "show": (1, lambda f: f),
        "irreducible": (1, lambda f: pm.is_irreducible_int(f, db)),
        "successor": (1, lambda f: pm.successor_prime_int(f, db)),
        "predecessor": (1, lambda f: pm.predecessor_prime_int(f, db)),
        "add": (2, pm.ring_add),
        "mul": (2, pm.ring_mul),
        "monus": (2, pm.monus),
        "compare": (2, pm.compare),
        "divides": (2, pm.divides_int),
        "gcd": (2, pm.gcd_int),
        "floor-div": (2, pm.floor_div_int),
        "a18": (2, lambda n, p: pm.a18_bigger_prime(n, p, db)),
        "a19": (1, lambda q: pm.a19_check_int(q, db)),
        "kp": (1, lambda p: pm.kp_floor_int(p, db)),
        "strong-bound": (1, lambda p: pm.strong_bound_int(p, db)),
    }


def _qz_ops(db):
    return {
        "show": (1, lambda f: f),
        "irreducible": (1, lambda f: pm.is_irreducible_qz(f, db)),
        "prime-divisor": (1, lambda f: pm.prime_divisor_qz(f, db)),
        "add": (2, pm.ring_add),
        "mul": (2, pm.ring_mul),
        "monus": (2, pm.monus),
        "compare": (2, pm.compare),
        "divides": (2, pm.divides_qz),
        "between": (2, pm.between_prime_qz),
        "refute-successor": (2, pm.successor_candidate_refuted),
    }


MODEL_OPS = {"zx": sorted(_zx_ops(0)), "qz": sorted(_qz_ops(0))}


def _model(args, out):
    cls = IntPoly if args.ring == "zx" else QZPoly
    ops = (_zx_ops if args.ring == "zx" else _qz_ops)(args.degree_bound)
    if args.op not in ops:
        raise UsageError(f"model {args.ring}: unknown op {args.op!r}; expected one of {sorted(ops)}")
    arity, fn = ops[args.op]
    if len(args.polys) != arity:
        raise UsageError(f"model {args.ring} {args.op} takes {arity} polynomial(s), got {len(args.polys)}")
    try:
        polys = [cls.parse(t) for t in args.polys]
    except (ValueError, SchatunowskyError) as e:
        raise UsageError(f"bad polynomial: {e}") from None
    result = fn(*polys)
    data = {"ring": args.ring, "op": args.op, "args": [str(f) for f in polys]}
    if isinstance(result, pm.QZVerdict):
        data["irreducible"] = result.irreducible
        data["witness"] = None if result.witness is None else [str(g) for g in result.witness]
        plain = str(result)
    elif isinstance(result, bool):
        data["result"] = result
        plain = "true" if result else "false"
    else:
        data["result"] = str(result)
        plain = str(result)
    out.emit(data, [plain])
    return EXIT_OK


# -- formula ------------------------------------------------------------------------


def _load_formula(text: str):
    from .folio import catalog, parse

    try:
        return catalog.lookup(text)
    except KeyError:
        return parse(text)


def _structure(name: str):
    from .folio import finite_naturals, get_structure

    if name.startswith("N<="):
        return finite_naturals(int(name[3:]))
    return get_structure(name)


def _formula_parse(args, out):
    from .folio import pretty
    from .folio.syntax import free_vars

    f = _load_formula(args.text)
    text = pretty(f, unicode=args.unicode)
    out.emit({"formula": text, "free": sorted(free_vars(f))}, [text])
    return EXIT_OK


def _formula_eval(args, out):
    from .folio import certify, eval_bounded, parse_element
    from .folio.syntax import free_vars

    f = _load_formula(args.text)
    s = _structure(args.structure)
    env = {}
    for item in args.assign:
        var, sep, val = item.partition("=")
        if not sep:
            raise UsageError(f"--assign expects var=value, got {item!r}")
        env[var.strip()] = parse_element(s, val.strip())
    missing = free_vars(f) - set(env)
    if missing:
        raise UsageError(f"unassigned free variables: {', '.join(sorted(missing))}")
    v = eval_bounded(f, s, env, args.budget, args.seed)
    certified = certify(f, s, env, v, args.budget, args.seed)
    bindings = {str(k): s.fmt(x) for k, x in v.bindings}
    data = {
        "structure": s.name,
        "formula": args.text,
        "verdict": v.value.value,
        "bindings": bindings,
        "certified": certified,
        "seed": args.seed,
        "budget": args.budget,
    }
    plain = [v.value.value] + [f"{k} = {x}" for k, x in bindings.items()]
    out.emit(data, plain)
    if not certified:
        return EXIT_FAIL
    return EXIT_FAIL if v.value.value == "false" else EXIT_OK


def _formula_check(args, out):
    from .folio import PA_MINUS, axiom_catalog, check_structure

    s = _structure(args.structure)
    if args.axioms == "all":
        names = list(axiom_catalog())
    elif args.axioms == "pa":
        names = list(PA_MINUS)
    else:
        names = [n.strip() for n in args.axioms.split(",") if n.strip()]
    rep = check_structure(s, names, seed=args.seed, budget=args.budget, samples=args.samples)
    if out.fmt == "json":
        out.stream.write(rep.to_json() + "\n")
    else:
        rows = [["axiom", "verdict", "instances", "true", "unknown", "false"]]
        plain = []
        for a in rep.to_dict()["axioms"]:
            rows.append([a[k] for k in ("axiom", "verdict", "instances", "true", "unknown", "false")])
            plain.append(f"{a['axiom']} {a['verdict']} instances={a['instances']} "
                         f"true={a['true']} unknown={a['unknown']} false={a['false']}")
            for ce in a["counterexamples"]:
                plain.append("  counterexample " + " ".join(f"{k}={v}" for k, v in ce.items()))
        out.emit({}, plain, rows)
    return EXIT_FAIL if rep.counterexample_count else EXIT_OK


# -- cache --------------------------------------------------------------------------


def _cache_path(args) -> str:
    path = args.cache or os.environ.get(arith.CACHE_ENV_VAR)
    if not path:
        raise UsageError(f"no cache path: pass --cache or set {arith.CACHE_ENV_VAR}")
    return path


def _cache_build(args, out):
    path = _cache_path(args)
    ctx = arith.PrimeCtx(args.limit or 1 << 20)
    ctx.save(path)
    data = {"path": path, "limit": ctx.limit, "count": len(ctx.primes), "largest": ctx.primes[-1]}
    out.emit(data, [f"wrote {path} limit={ctx.limit} count={len(ctx.primes)}"])
    return EXIT_OK


def _cache_info(args, out):
    path = _cache_path(args)
    try:
        ctx = arith.PrimeCtx.load(path)
    except OSError as e:
        raise UsageError(f"cannot read cache {path}: {e.strerror}") from None
    data = {
        "path": path,
        "version": arith.CACHE_FORMAT_VERSION,
        "limit": ctx.limit,
        "count": len(ctx.primes),
        "largest": ctx.primes[-1] if ctx.primes else None,
    }
    out.emit(data, [f"{k}={_scalar(data[k])}" for k in ("path", "version", "limit", "count", "largest")])
    return EXIT_OK


# -- parser -------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="plain", help="output format")
    common.add_argument("--cache", help=f"prime cache file (overrides ${arith.CACHE_ENV_VAR})")
    common.add_argument("--seed", type=int, default=0, help="sampler seed")
    common.add_argument("--budget", type=_positive("--budget"), default=16,
                        help="candidates per quantifier in bounded evaluation")
    common.add_argument("--degree-bound", type=_positive("--degree-bound"), default=DEFAULT_DEGREE_BOUND,
                        help="largest degree the polynomial factor search accepts")
    common.add_argument("--jobs", type=_positive("--jobs"), default=1, help="worker processes for scans")
    common.add_argument("--limit", type=_positive("--limit"), help="scan or enumeration limit")

    parser = argparse.ArgumentParser(prog="schatunowsky", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="group", required=True)

    g = sub.add_parser("pgood", help="p-good numbers and their bounds").add_subparsers(dest="cmd", required=True)
    for name, fn, helptext in (
        ("check", _pgood_check, "decide whether N is p-good"),
        ("enumerate", _pgood_enumerate, "list p-good numbers up to --limit"),
        ("largest", _pgood_largest, "largest p-good number, certified"),
        ("bounds", _pgood_bounds, "weak bound, closed form and k_p"),
    ):
        sp = g.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--p", type=_prime_arg, help="the prime p (omit for the classic case)")
        if name == "check":
            sp.add_argument("n", type=_nonneg_int, nargs="?", metavar="N")
        sp.set_defaults(fn=fn)

    g = sub.add_parser("ineq", help="prime inequality scans").add_subparsers(dest="cmd", required=True)
    sp = g.add_parser("scan", parents=[common], help="scan an inequality up to --limit")
    sp.add_argument("--which", choices=inequalities.WHICH)
    sp.set_defaults(fn=_ineq_scan)
    sp = g.add_parser("check", parents=[common], help="check a single instance")
    sp.add_argument("--which", choices=inequalities.WHICH)
    sp.add_argument("values", type=_nonneg_int, nargs="*", metavar="INT")
    sp.set_defaults(fn=_ineq_check)

    g = sub.add_parser("model", help="polynomial cone models").add_subparsers(dest="ring", required=True)
    for ring in ("zx", "qz"):
        sp = g.add_parser(ring, parents=[common], help=f"operations in the {ring} cone")
        sp.add_argument("op", choices=MODEL_OPS[ring])
        sp.add_argument("polys", nargs="+", metavar="POLY")
        sp.set_defaults(fn=_model)

    g = sub.add_parser("formula", help="first-order formulas").add_subparsers(dest="cmd", required=True)
    sp = g.add_parser("parse", parents=[common], help="parse and pretty-print (catalog names accepted)")
    sp.add_argument("text")
    sp.add_argument("--unicode", action="store_true")
    sp.set_defaults(fn=_formula_parse)
    sp = g.add_parser("eval", parents=[common], help="bounded three-valued evaluation")
    sp.add_argument("text")
    sp.add_argument("--structure", default="N", help="N, ZX, QZ or N<=k")
    sp.add_argument("--assign", action="append", default=[], metavar="VAR=VALUE")
    sp.set_defaults(fn=_formula_eval)
    sp = g.add_parser("check-structure", parents=[common], help="sample catalog axioms in a structure")
    sp.add_argument("--structure", default="N", help="N, ZX, QZ or N<=k")
    sp.add_argument("--axioms", default="pa", help="comma-separated names, 'pa' or 'all'")
    sp.add_argument("--samples", type=_positive("--samples"), default=200)
    sp.set_defaults(fn=_formula_check)

    g = sub.add_parser("cache", help="prime sieve cache file").add_subparsers(dest="cmd", required=True)
    sp = g.add_parser("build", parents=[common], help="sieve to --limit and write the cache")
    sp.set_defaults(fn=_cache_build)
    sp = g.add_parser("info", parents=[common], help="describe a cache file")
    sp.set_defaults(fn=_cache_info)
    return parser


def _nonneg_int(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {v}")
    return v


def _prime_arg(text):
    v = _nonneg_int(text)
    if not arith.is_prime(v):
        raise argparse.ArgumentTypeError(f"{v} is not prime")
    return v


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    if args.cache:
        # the flag wins over the environment variable
        try:
            arith.set_default_ctx(arith.PrimeCtx.load(args.cache))
        except FileNotFoundError:
            if (args.group, getattr(args, "cmd", None)) != ("cache", "build"):
                stderr.write(f"error: --cache: no such file {args.cache}\n")
                return EXIT_USAGE
        except SchatunowskyError as e:
            stderr.write(f"error: --cache: {e}\n")
            return EXIT_USAGE
    out = Output(args.format, stdout)
    try:
        return args.fn(args, out)
    except UsageError as e:
        stderr.write(f"error: {e}\n")
        return EXIT_USAGE
    except CertificationFailed as e:
        stderr.write(f"certification failed: {e}\n")
        return EXIT_FAIL
    except (SchatunowskyError, ValueError, KeyError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        stderr.write(f"error: {msg}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
