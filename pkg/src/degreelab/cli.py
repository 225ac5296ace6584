"""Command line entry point: ``python3 -m degreelab <command> [options]``.

Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
parse or domain errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time

import numpy as np

from . import corpus as corpus_mod
from .degree import (
    BoundViolation,
    bdeg,
    bound_evaluators,
    bound_for_report,
    extremal_ideal,
    homog_bound,
    macaulay_rep,
    e_shift,
    reduction_number_of_m,
    report_for_borel,
)
from .field import DomainError
from .gin import GenericityError, gin, gin_invariant_suite
from .groebner import (
    buchberger,
    check_buchberger_criterion,
    hilbert_function_direct,
    is_reduced,
    nilpotency_index,
    saturate_wrt_last,
)
from .io import ParseError, parse_ideal
from .monomial_ideal import MonomialIdeal, betti_hilbert_consistency, ek_betti, hilbert, is_borel_fixed, standard_monomials
from .monomials import format_monomial
from .pencil import (
    FiniteModule,
    OracleBudgetError,
    PencilModule,
    build_square_zero,
    dil_bruteforce,
    finlen_bound,
    length_mod_hyperplane,
    matlis_dual,
    module_type,
    nu,
    pencil_pieces,
    pencil_to_module,
    socle_and_type,
)

SEED_ENV = "DEGREE_LAB_SEED"


class UsageError(Exception):
    pass


# ---------- helpers ----------

def _mons(j: MonomialIdeal):
    return [format_monomial(m, j.ring.names) for m in j.gens]


def _polys(gens):
    return [g.to_string() for g in gens]


def _read_input(args) -> bytes:
    if not args.input:
        raise UsageError("this command needs --input FILE")
    if args.input == "-":
        return sys.stdin.buffer.read()
    try:
        with open(args.input, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError("cannot read %s: %s" % (args.input, exc.strerror)) from None


def _ideal(args, ctx):
    data = _read_input(args)
    ctx["input_sha256"] = hashlib.sha256(data).hexdigest()
    return parse_ideal(data.decode("utf-8"))


def _named(j: MonomialIdeal, ring) -> MonomialIdeal:
    """Attach the input's variable names to a monomial ideal."""
    return MonomialIdeal(ring, j.gens)


def _gin_of(ideal, args):
    res = gin(ideal, args.seed, max_trials=args.trials)
    return res, _named(res.gin, ideal.ring)


def _borel_target(ideal, args):
    """The ideal itself when it is a Borel-fixed monomial ideal, otherwise its gin."""
    if ideal.is_monomial() and ideal.gens:
        j = MonomialIdeal(ideal.ring, [next(iter(g.terms)) for g in ideal.gens])
        if is_borel_fixed(j)[0]:
            return j, "input"
    return _gin_of(ideal, args)[1], "gin"


# ---------- commands ----------

def cmd_gb(args, ctx):
    ideal = _ideal(args, ctx)
    gb = buchberger(ideal, max_degree=args.degree_cap)
    ctx["checks"]["buchberger_criterion"] = check_buchberger_criterion(gb) if args.degree_cap is None else True
    ctx["checks"]["reduced"] = is_reduced(gb)
    return {"basis": _polys(gb.elements), "initial": _mons(gb.initial), "degree_cap": args.degree_cap}


def cmd_initial(args, ctx):
    ideal = _ideal(args, ctx)
    return {"initial": _mons(buchberger(ideal).initial)}


def cmd_sat(args, ctx):
    ideal = _ideal(args, ctx)
    sat = saturate_wrt_last(ideal, seed=args.seed)
    return {"saturation": _polys(sat.gens)}


def cmd_nilpotency(args, ctx):
    ideal = _ideal(args, ctx)
    s = nilpotency_index(ideal)
    return {"nilpotency_index": None if s == float("inf") else s, "finite": s != float("inf")}


def cmd_gin(args, ctx):
    ideal = _ideal(args, ctx)
    if not ideal.gens:
        raise DomainError("gin needs a nonzero ideal")
    res, j = _gin_of(ideal, args)
    ctx["checks"]["borel_certified"] = res.borel_certified
    out = {"gin": _mons(j), "trials_used": res.trials_used, "borel_certified": res.borel_certified}
    if args.suite:
        suite = gin_invariant_suite(ideal, args.seed)
        for key in ("sat", "idempotent", "hyperplane"):
            if key in suite:
                ctx["checks"]["gin_" + key] = bool(suite[key])
    return out


def cmd_hilbert(args, ctx):
    ideal = _ideal(args, ctx)
    init = buchberger(ideal).initial
    top = args.degree_cap
    if top is None:
        top = max((g.degree() for g in ideal.gens), default=0) + ideal.ring.n
    hd = hilbert(init, top)
    ctx["checks"]["direct_linear_algebra"] = hilbert_function_direct(ideal, top) == list(hd.values)
    return {
        "values": list(hd.values),
        "numerator": list(hd.numerator),
        "dim": hd.dim,
        "degree": hd.degree,
    }


def _betti_target(args, ctx):
    ideal = _ideal(args, ctx)
    j, source = _borel_target(ideal, args)
    return ideal, j, source


def cmd_betti(args, ctx):
    _, j, source = _betti_target(args, ctx)
    table = ek_betti(j)
    ctx["checks"]["hilbert_numerator"] = betti_hilbert_consistency(j)
    rows = {}
    for (i, deg), v in sorted(table.beta.items()):
        rows.setdefault(str(i), {})[str(deg)] = v
    return {"betti": rows, "pd": table.pd, "reg": table.reg, "source": source}


def cmd_reg(args, ctx):
    _, j, source = _betti_target(args, ctx)
    return {"reg": ek_betti(j).reg, "source": source}


def cmd_depth(args, ctx):
    _, j, source = _betti_target(args, ctx)
    t = ek_betti(j)
    return {"depth": t.depth, "pd": t.pd, "source": source}


def cmd_standard(args, ctx):
    _, j, source = _betti_target(args, ctx)
    std = standard_monomials(j)
    return {"standard": [format_monomial(m, j.ring.names) for m in std], "count": len(std), "source": source}


def cmd_bdeg(args, ctx):
    ideal = _ideal(args, ctx)
    rep = bdeg(ideal, args.seed, trials=args.trials)
    out = rep.as_dict()
    out["gin"] = _mons(_named(rep.gin, ideal.ring))
    bound = bound_for_report(rep)
    out["homog_bound"] = bound
    ctx["checks"]["routes_agree"] = rep.route_standard == rep.route_axiom
    ctx["checks"]["deg_le_bdeg"] = rep.deg <= rep.bdeg
    ctx["checks"]["reg_lt_bdeg"] = rep.reg < rep.bdeg
    ctx["checks"]["homog_bound"] = rep.bdeg == rep.deg if bound is None else rep.bdeg <= bound
    return out


def cmd_macaulay(args, ctx):
    e, r = _need(args, "e", "r")
    rep = macaulay_rep(e, r)
    out = {"e": e, "r": r, "terms": [list(t) for t in rep.terms]}
    if args.d is not None:
        out["shift"] = {"d": args.d, "value": e_shift(rep, args.d)}
    return out


def _need(args, *names):
    vals = []
    for name in names:
        v = getattr(args, name, None)
        if v is None:
            raise UsageError("missing --%s" % name.replace("_", "-"))
        vals.append(v)
    return vals


def cmd_bound(args, ctx):
    kind = args.kind
    if kind == "homog":
        if args.input:
            ideal = _ideal(args, ctx)
            rep = bdeg(ideal, args.seed, trials=args.trials)
            bound = bound_for_report(rep)
            ctx["checks"]["holds"] = rep.bdeg == rep.deg if bound is None else rep.bdeg <= bound
            return {"kind": kind, "value": bound, "bdeg": rep.bdeg,
                    "params": {"n": rep.embdim, "e": rep.deg, "r": rep.reg, "d": rep.dim, "g": rep.depth}}
        n, e, r, d, g = _need(args, "n", "e", "r", "d", "g")
        return {"kind": kind, "value": homog_bound(n, e, r, d, g)}
    if kind == "gen-a":
        deg_r, g, deg_ri, big, d, r = _need(args, "deg_r", "g", "deg_ri", "Deg", "d", "r")
        value = bound_evaluators("gen-a", deg_r=deg_r, g=g, deg_ri=deg_ri, Deg_ri=big, d=d, r=r)
    elif kind == "gen-b":
        big, s, d = _need(args, "Deg", "s", "d")
        value = bound_evaluators("gen-b", Deg=big, s=s, d=d)
    else:
        if args.input:
            ideal = _ideal(args, ctx)
            rep = bdeg(ideal, args.seed, trials=args.trials)
            if rep.dim < 1:
                raise DomainError("gen-c needs dim S/I >= 1")
            value = bound_evaluators("gen-c", Deg=rep.bdeg, d=rep.dim)
            return {"kind": kind, "value": value, "Deg": rep.bdeg, "d": rep.dim}
        big, d = _need(args, "Deg", "d")
        value = bound_evaluators("gen-c", Deg=big, d=d)
    return {"kind": kind, "value": value}


def cmd_extremal(args, ctx):
    n, c, r, e = _need(args, "n", "c", "r", "e")
    j = extremal_ideal(n, c, r, e)
    rep = report_for_borel(j)
    bound = homog_bound(n, e, r, n - c, rep.depth)
    ctx["checks"]["attains_bound"] = rep.bdeg == bound
    return {"ideal": _mons(j), "bdeg": rep.bdeg, "bound": bound, "depth": rep.depth}


def cmd_rednum(args, ctx):
    ideal = _ideal(args, ctx)
    rep = bdeg(ideal, args.seed, trials=args.trials)
    if rep.dim < 1:
        raise DomainError("red(m) needs dim S/I >= 1")
    red = reduction_number_of_m(ideal, args.seed, rep.bdeg, rep.dim, enforce=False)
    bound = bound_evaluators("gen-c", Deg=rep.bdeg, d=rep.dim)
    ctx["checks"]["gen_c"] = red <= bound
    return {"red": red, "bound": bound, "bdeg": rep.bdeg, "dim": rep.dim}


# ---------- pencils ----------

def _load_pencil(args, ctx):
    """JSON: {"char": p, "mats": [A_1, ..., A_n], "construction": "cokernel" | "square-zero"}."""
    data = _read_input(args)
    ctx["input_sha256"] = hashlib.sha256(data).hexdigest()
    try:
        doc = json.loads(data.decode("utf-8"))
        p = int(doc.get("char", 32003))
        mats = doc["mats"]
        kind = doc.get("construction", "cokernel")
    except (ValueError, KeyError, TypeError, AttributeError) as exc:
        raise UsageError("bad pencil file: %s" % exc) from None
    if kind == "cokernel":
        return PencilModule(len(mats), tuple(mats), p), kind
    if kind == "square-zero":
        return build_square_zero(mats, p), kind
    raise UsageError("construction must be 'cokernel' or 'square-zero'")


def _as_module(obj, args) -> FiniteModule:
    if isinstance(obj, PencilModule):
        return pencil_to_module(obj, args.degree_cap or 50)
    return obj


def _hyperplane(mod: FiniteModule, seed: int):
    rng = np.random.default_rng(seed)
    while True:
        c = [int(v) for v in rng.integers(0, mod.p, size=mod.n)]
        if any(c):
            return c


def cmd_pencil(args, ctx):
    obj, kind = _load_pencil(args, ctx)
    action = args.action
    if action == "finlen":
        if not isinstance(obj, PencilModule):
            raise UsageError("finlen applies to cokernel pencils")
        pieces = pencil_pieces(obj, args.degree_cap or 50)
        bound = finlen_bound(obj.n, obj.d)
        ctx["checks"]["finite"] = pieces.finite
        ctx["checks"]["finlen"] = pieces.finite and pieces.length <= bound
        return {"dims": list(pieces.dims), "length": pieces.length, "bound": bound}
    if action == "length" and isinstance(obj, PencilModule):
        pieces = pencil_pieces(obj, args.degree_cap or 50)
        out = {"dims": list(pieces.dims), "finite": pieces.finite, "length": pieces.length}
        if not pieces.finite:
            return out
        mod = pencil_to_module(obj, args.degree_cap or 50)
    else:
        mod = _as_module(obj, args)
        out = {}
    if action == "length":
        c = _hyperplane(mod, args.seed)
        out.update({"length": mod.length, "nu": nu(mod), "hyperplane": c,
                    "length_mod_x": length_mod_hyperplane(mod, c)})
        return out
    if action == "socle":
        basis, t = socle_and_type(mod)
        return {"type": t, "socle_basis": [[int(v) for v in row] for row in basis]}
    if action == "dual":
        dual = matlis_dual(mod)
        out = {"length": dual.length, "nu": nu(dual), "type": module_type(dual),
               "ops": [[[int(v) for v in row] for row in x] for x in dual.ops]}
        ctx["checks"]["nu_type_swap"] = nu(dual) == module_type(mod) and module_type(dual) == nu(mod)
        return out
    if action == "dil":
        res = dil_bruteforce(mod)
        dual = dil_bruteforce(matlis_dual(mod))
        ctx["checks"]["nu_le_dil_le_length"] = nu(mod) <= res.dil <= mod.length
        ctx["checks"]["quotient_route"] = res.dil == res.quotient_dil
        ctx["checks"]["dual"] = res.dil == dual.dil
        return {"dil": res.dil, "nu": nu(mod), "length": mod.length, "submodules": res.submodule_count,
                "witness": [list(row) for row in res.witness], "field": mod.p}
    raise UsageError("unknown pencil action %r" % action)


# ---------- corpus ----------

def cmd_corpus(args, ctx):
    if args.action != "run":
        raise UsageError("only 'corpus run' is available")
    if args.item is not None and args.item < 0:
        raise UsageError("--item must be non-negative")
    if args.items is not None and args.items < 0:
        raise UsageError("--items must be non-negative")
    report = corpus_mod.run_corpus(args.seed, args.profile, jobs=args.jobs, items=args.items, only=args.item)
    ctx["checks"]["all_items"] = not report["failed"]
    for f in report["failed"]:
        print(
            "item %d (seed %d) failed %s; replay: python3 -m degreelab corpus run --profile %s --seed %d --item %d"
            % (f["index"], f["seed"], ",".join(f["failed_checks"]) or f["error"], report["profile"], args.seed,
               f["index"]),
            file=sys.stderr,
        )
    if not args.verbose:
        report = dict(report)
        report.pop("results")
    return report


COMMANDS = {
    "gb": cmd_gb,
    "initial": cmd_initial,
    "sat": cmd_sat,
    "nilpotency": cmd_nilpotency,
    "gin": cmd_gin,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "reg": cmd_reg,
    "depth": cmd_depth,
    "standard": cmd_standard,
    "bdeg": cmd_bdeg,
    "macaulay": cmd_macaulay,
    "bound": cmd_bound,
    "extremal": cmd_extremal,
    "rednum": cmd_rednum,
    "pencil": cmd_pencil,
    "corpus": cmd_corpus,
}


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _common(parser, suppress: bool):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--input", default=d(None), help="input file ('-' for stdin)")
    parser.add_argument("--seed", type=_seed, default=d(None), help="random seed (default $%s or 0)" % SEED_ENV)
    parser.add_argument("--json", action="store_true", default=d(False), help="print a JSON report")
    parser.add_argument("--trials", type=int, default=d(12), help="gin trial budget")
    parser.add_argument("--degree-cap", type=int, default=d(None), help="degree cap for gb, hilbert, pencils")
    parser.add_argument("--jobs", type=int, default=d(1), help="worker processes for corpus runs")
    parser.add_argument("--timing", action="store_true", default=d(False), help="include wall time in the report")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="degreelab", description="Degrees, gins and Dilworth numbers over F_p.", allow_abbrev=False)
    _common(parser, suppress=False)
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, allow_abbrev=False)
        _common(p, suppress=True)
        if name == "gin":
            p.add_argument("--suite", action="store_true", help="also run the gin invariant checks")
        if name == "bound":
            p.add_argument("kind", choices=["homog", "gen-a", "gen-b", "gen-c"])
        if name == "pencil":
            p.add_argument("action", choices=["length", "dil", "dual", "socle", "finlen"])
        if name == "corpus":
            p.add_argument("action", choices=["run"])
            p.add_argument("--profile", choices=sorted(corpus_mod.PROFILES), default="small")
            p.add_argument("--items", type=int, default=None, help="override the profile's item count")
            p.add_argument("--item", type=int, default=None, help="run only this item index (replay)")
            p.add_argument("--verbose", action="store_true", help="include per-item results")
        if name in ("bound", "macaulay", "extremal"):
            for opt in ("n", "e", "r", "d", "g", "c", "s"):
                p.add_argument("--" + opt, type=int, default=None)
            p.add_argument("--Deg", type=int, default=None, help="value for the Deg slot (bdeg, hdeg, ...)")
            p.add_argument("--deg-r", type=int, default=None)
            p.add_argument("--deg-ri", type=int, default=None)
    return parser


def run_command(argv) -> tuple[dict, int]:
    """Parse argv, run the command, return (report, exit status)."""
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.seed is None:
        env = os.environ.get(SEED_ENV)
        try:
            args.seed = _seed(env) if env else 0
        except (ValueError, argparse.ArgumentTypeError):
            raise UsageError("%s must be an unsigned 64-bit integer" % SEED_ENV) from None
    for name in ("suite", "verbose"):
        if not hasattr(args, name):
            setattr(args, name, False)
    ctx = {"checks": {}}
    start = time.perf_counter()
    outputs = COMMANDS[args.command](args, ctx)
    report = {"command": args.command, "seed": args.seed}
    if "input_sha256" in ctx:
        report["input_sha256"] = ctx["input_sha256"]
    report.update(outputs)
    report["checks"] = ctx["checks"]
    report["ok"] = all(ctx["checks"].values())
    if args.timing:
        report["wall_time_s"] = round(time.perf_counter() - start, 6)
    return report, (0 if report["ok"] else 1)


def _print_human(report: dict):
    for key, value in report.items():
        if key == "checks":
            for name, ok in value.items():
                print("check %s: %s" % (name, "pass" if ok else "FAIL"))
        elif isinstance(value, list) and value and all(isinstance(v, str) for v in value):
            print("%s: %s" % (key, ", ".join(value)))
        else:
            print("%s: %s" % (key, json.dumps(value, sort_keys=True) if isinstance(value, (dict, list)) else value))


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        report, status = run_command(argv)
    except SystemExit as exc:  # argparse usage errors
        return int(exc.code or 0)
    except (UsageError, ParseError, DomainError, OracleBudgetError) as exc:
        print("degreelab: error: %s" % exc, file=sys.stderr)
        return 2
    except (GenericityError, BoundViolation) as exc:
        print("degreelab: check failed: %s" % exc, file=sys.stderr)
        return 1
    if "--json" in argv:
        print(json.dumps(report, sort_keys=True))
    else:
        _print_human(report)
    return status
