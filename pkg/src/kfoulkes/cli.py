"""Command-line front end: ``kfoulkes <command> ...`` or ``python -m kfoulkes``.

Exit codes: 0 success, 1 usage or bound error, 2 a requested check failed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import affine_weyl, hecke, kostka as kmod, symfunc, tableaux
from .affine_weyl import CutoffExceeded
from .root_data import RootSystem, TooLarge, UnsupportedRootSystem, build_root_system, gl

DEFAULTS = {"height_bound": 16, "cutoff": 14, "rank_guard": 6}


class UsageError(Exception):
    pass


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"environment variable {name} must be an integer, got {raw!r}") from None


def parse_weight(text: str, what: str = "weight") -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise UsageError(f"malformed {what} {text!r}: expected comma-separated integers") from None


def _root_system(args) -> RootSystem:
    if args.gl is not None:
        # "--type A --gl N" is accepted as a spelled-out GL_N
        if (args.type is not None and args.type.upper() != "A") or args.rank is not None:
            raise UsageError("--gl N combines only with --type A (no --rank)")
        if args.gl < 1:
            raise UsageError("--gl needs n >= 1")
        return gl(args.gl)
    if args.type is None:
        raise UsageError("select a root system with --type T --rank N (or --gl N)")
    t = args.type.upper()
    if t == "G2":
        t, rank = "G", 2 if args.rank is None else args.rank
    else:
        rank = args.rank
    if rank is None:
        raise UsageError("--rank is required with --type")
    return build_root_system(t, rank)


def _weight_for(rs: RootSystem, text: str, what: str, dominant: bool = True) -> tuple[int, ...]:
    w = parse_weight(text, what)
    if rs.is_gl:
        if any(x < 0 for x in w) or list(w) != sorted(w, reverse=True):
            raise UsageError(f"malformed {what} {text!r}: expected a partition (weakly decreasing, nonnegative)")
        if len(w) > rs.dim:
            raise UsageError(f"{what} {text!r} has more than {rs.dim} parts")
        return w + (0,) * (rs.dim - len(w))
    if len(w) != rs.dim:
        raise UsageError(f"malformed {what} {text!r}: {rs.name} weights have {rs.dim} coordinates")
    if dominant and not rs.is_dominant(w):
        raise UsageError(f"{what} {list(w)} is not dominant in {rs.name}")
    return w


def _emit(args, payload: dict, text_lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print("\n".join(text_lines))


# commands

def cmd_roots(args) -> int:
    rs = _root_system(args)
    data = rs.to_json()
    lines = [f"root system {rs.name}  rank {rs.rank}",
             f"cartan matrix {[list(r) for r in rs.cartan_matrix]}",
             f"rho {list(rs.rho)}",
             f"{len(rs.positive_roots)} positive roots:"]
    for k, (a, c) in enumerate(zip(rs.positive_roots, rs.positive_root_coords)):
        mark = "  (highest coroot)" if k == rs.highest_root and not rs.is_gl else ""
        lines.append(f"  {list(a)}  simple-root coords {list(c)}{mark}")
    if data.get("weyl_order") is not None:
        lines.append(f"|W| = {data['weyl_order']}   W_0(t) = {rs.poincare_polynomial()}")
    _emit(args, data, lines)
    return 0


def cmd_kostka(args) -> int:
    rs = _root_system(args)
    lam = _weight_for(rs, args.lam, "lambda")
    if args.mu:
        mus = [_weight_for(rs, m, "mu") for m in args.mu]
    elif rs.is_gl:
        mus = [p + (0,) * (rs.dim - len(p)) for p in tableaux.partitions(sum(lam), max_parts=rs.dim)]
    else:
        mus = sorted(rs.dominant_weights_below(lam), reverse=True)
    if rs.is_gl:
        for mu in mus:
            if sum(mu) != sum(lam):
                raise UsageError(f"size mismatch: |lambda| = {sum(lam)} but |mu| = {sum(mu)}")
    methods = args.methods.split(",") if args.methods else list(kmod.applicable_methods(rs))
    allowed = kmod.applicable_methods(rs)
    for m in methods:
        if m not in kmod.METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {', '.join(kmod.METHODS)}")
        if m not in allowed:
            raise UsageError(f"method {m!r} does not apply to {rs.name}; applicable: {', '.join(allowed)}")
    check = args.check or len(methods) > 1
    jobs, lines, failed = [], [], False
    for mu in mus:
        results = {}
        for m in methods:
            results[m] = kmod.kostka(rs, lam, mu, m, height_bound=args.height_bound, cutoff=args.cutoff)
        verdict = None
        if check:
            verdict = "AGREE" if len(set(results.values())) == 1 else "DISAGREE"
            failed |= verdict == "DISAGREE"
        jobs.append({"lambda": list(lam), "mu": list(mu),
                     "results": {m: p.to_json() for m, p in results.items()}, "verdict": verdict})
        lines.append(f"K[{','.join(map(str, lam))}; {','.join(map(str, mu))}]"
                     + (f"  {verdict}" if verdict else ""))
        for m, p in results.items():
            lines.append(f"  {m:8s} {p}")
    _emit(args, {"command": "kostka", "root_system": rs.name, "jobs": jobs}, lines)
    return 2 if failed else 0


def cmd_hl_expand(args) -> int:
    rs = _root_system(args)
    lam = _weight_for(rs, args.lam, "lambda")
    p = symfunc.hall_littlewood(rs, lam)
    exp = symfunc.expand_in(rs, args.basis, p)
    lines = [f"P_{list(lam)}(x;t) in the {args.basis} basis of {rs.name}:"]
    for mu, c in sorted(exp.terms.items(), key=lambda kv: symfunc.order_key(rs, kv[0]), reverse=True):
        lines.append(f"  {list(mu)}: {c}")
    failed = False
    if args.check:
        back = exp.to_group_algebra(rs)
        failed = back != p
        lines.append("reconstruction " + ("FAILED" if failed else "OK"))
    payload = {"command": "hl-expand", "root_system": rs.name, "lambda": list(lam), "expansion": exp.to_json()}
    if args.check:
        payload["reconstruction_ok"] = not failed
    _emit(args, payload, lines)
    return 2 if failed else 0


def cmd_kl(args) -> int:
    rs = _root_system(args)
    if rs.is_gl:
        raise UsageError("the kl command needs a Cartan type (--type/--rank)")
    lam = _weight_for(rs, args.lam, "lambda")
    n = affine_weyl.n_element(rs, lam)
    cutoff = args.cutoff
    if n.length > cutoff:
        raise CutoffExceeded(f"l(n_lambda) = {n.length} exceeds the length cutoff {cutoff}")
    polys = hecke.kl_polynomials_below(n, cutoff)
    lines = [f"P_(x, n_lambda)(t) for x <= n_lambda, l(n_lambda) = {n.length}, {rs.name}:"]
    for x, p in sorted(polys.items(), key=lambda kv: (kv[0].length, kv[0].reduced_word()[0])):
        lines.append(f"  {x!r:40s} l={x.length:2d}  {p}")
    failed = False
    if args.check:
        c = hecke.kl_element(n, cutoff)
        ok_bar = hecke.bar_involution(c, cutoff) == c
        ok_deg = all(p.degree() < 0 for x, p in c.terms.items() if x != n)
        failed = not (ok_bar and ok_deg)
        lines.append(f"bar-invariant {ok_bar}; off-diagonal degrees negative {ok_deg}")
    payload = {"command": "kl", "root_system": rs.name, "lambda": list(lam), "n_lambda": n.to_json(),
               "convention": "P_{x,y}(t) with t = q^2", "polynomials": hecke.kl_to_json(n, polys)}
    if args.check:
        payload["checks_ok"] = not failed
    _emit(args, payload, lines)
    return 2 if failed else 0


def cmd_tableaux(args) -> int:
    lam = tableaux.partition(parse_weight(args.lam, "lambda"))
    if args.mu is None:
        mu = tableaux.partition([1] * sum(lam))
    else:
        mu = parse_weight(args.mu, "mu")
        if any(x < 0 for x in mu):
            raise UsageError(f"malformed mu {args.mu!r}: entries must be nonnegative")
    if sum(lam) != sum(mu):
        raise UsageError(f"size mismatch: |lambda| = {sum(lam)} but |mu| = {sum(mu)}")
    is_part = list(mu) == sorted(mu, reverse=True)
    items, lines = [], [f"column-strict tableaux of shape {list(lam)} and weight {list(mu)}:"]
    for T in tableaux.enumerate_tableaux(lam, mu):
        ch = tableaux.charge(T) if is_part else None
        items.append({"rows": T.to_json(), "charge": ch})
        lines.append(f"  {T.to_json()}" + (f"  charge {ch}" if ch is not None else ""))
    lines.append(f"{len(items)} tableaux")
    if is_part:
        lines.append(f"K(t) = {kmod.kostka_via_charge(lam, mu)}")
    _emit(args, {"command": "tableaux", "lambda": list(lam), "mu": list(mu), "tableaux": items}, lines)
    return 0


def cmd_hecke_verify(args) -> int:
    rs = _root_system(args)
    if rs.is_gl:
        raise UsageError("hecke-verify needs a Cartan type (--type/--rank)")
    lam = _weight_for(rs, args.lam, "lambda")
    checks = args.checks.split(",") if args.checks else ["satake", "coset-sum", "center"]
    known = {"satake", "coset-sum", "center", "kl-schur"}
    for c in checks:
        if c not in known:
            raise UsageError(f"unknown check {c!r}; choose from {', '.join(sorted(known))}")
    out = {}
    for c in checks:
        if c == "satake":
            out[c] = hecke.satake_check(rs, lam)
        elif c == "coset-sum":
            out[c] = hecke.coset_sum_check(rs, lam, args.cutoff)
        elif c == "center":
            out[c] = hecke.center_check(rs, symfunc.monomial(rs, lam))
        else:
            out[c] = hecke.kl_schur_check(rs, lam, args.cutoff)
    lines = [f"{rs.name} lambda={list(lam)}"] + [f"  {c:14s} {'PASS' if ok else 'FAIL'}" for c, ok in out.items()]
    _emit(args, {"command": "hecke-verify", "root_system": rs.name, "lambda": list(lam), "checks": out}, lines)
    return 0 if all(out.values()) else 2


# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--height-bound", type=int, default=None,
                        help="t-degree truncation for inner products (env KOSTKA_HEIGHT_BOUND, default 16)")
    common.add_argument("--cutoff", type=int, default=None,
                        help="affine length cutoff (env KOSTKA_LENGTH_CUTOFF, default 14)")
    common.add_argument("--rank-guard", type=int, default=None,
                        help="largest rank whose Weyl group is enumerated (env KOSTKA_RANK_GUARD, default 6)")

    rsopt = argparse.ArgumentParser(add_help=False)
    rsopt.add_argument("--type", help="Cartan type A, B, C, D or G2")
    rsopt.add_argument("--rank", type=int)
    rsopt.add_argument("--gl", type=int, metavar="N", help="GL_N mode: weights are partitions with at most N parts")

    p = argparse.ArgumentParser(prog="kfoulkes", description="Kostka-Foulkes polynomials and friends")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("roots", parents=[common, rsopt], help="root system report")
    s.set_defaults(func=cmd_roots)

    s = sub.add_parser("kostka", parents=[common, rsopt], help="K_{lambda mu}(t) by several routes")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu", action="append", help="repeatable; default: every mu below lambda")
    s.add_argument("--methods", help=f"comma-separated subset of {','.join(kmod.METHODS)}")
    s.add_argument("--check", action="store_true", help="report an agreement verdict (implied by several methods)")
    s.set_defaults(func=cmd_kostka)

    s = sub.add_parser("hl-expand", parents=[common, rsopt], help="P_lambda(x;t) in a chosen basis")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--basis", choices=("schur", "monomial"), default="schur")
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_hl_expand)

    s = sub.add_parser("kl", parents=[common, rsopt], help="Kazhdan-Lusztig polynomials below n_lambda")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--check", action="store_true")
    s.set_defaults(func=cmd_kl)

    s = sub.add_parser("tableaux", parents=[common], help="column-strict tableaux with charges")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mu")
    s.set_defaults(func=cmd_tableaux)

    s = sub.add_parser("hecke-verify", parents=[common, rsopt], help="Satake, double-coset sum, center and KL checks")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--checks", help="comma-separated subset of satake,coset-sum,center,kl-schur")
    s.set_defaults(func=cmd_hecke_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code == 0 else 1
    try:
        if args.rank_guard is not None:
            os.environ["KOSTKA_RANK_GUARD"] = str(args.rank_guard)
        if args.height_bound is None:
            args.height_bound = _env_int("KOSTKA_HEIGHT_BOUND", DEFAULTS["height_bound"])
        if args.cutoff is None:
            args.cutoff = _env_int("KOSTKA_LENGTH_CUTOFF", DEFAULTS["cutoff"])
        _env_int("KOSTKA_RANK_GUARD", DEFAULTS["rank_guard"])
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except UnsupportedRootSystem as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except TooLarge as e:
        print(f"error: rank guard: {e}", file=sys.stderr)
        return 1
    except CutoffExceeded as e:
        print(f"error: length cutoff (KOSTKA_LENGTH_CUTOFF / --cutoff): {e}", file=sys.stderr)
        return 1
    except ArithmeticError as e:
        print(f"error: height bound (KOSTKA_HEIGHT_BOUND / --height-bound): {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
