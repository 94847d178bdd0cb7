"""Command line interface.

Subcommands: field, pauli, mub, bell, king, wigner, verify.  Matrices are
serialized as nested [re, im] pair lists; every JSON report carries the
tool version, and galois reports carry the irreducible polynomial in use.
Exit codes: 0 success, 1 invariant/protocol failure (first failing
property named on stderr), 2 usage errors such as an inadmissible
dimension.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

import numpy as np

from . import __version__
from .arithmetic import build_context, build_extension, factor_prime_power
from .bell import bell_transform
from .linalg import from_reim, to_reim
from .meanking import mean_king_basis, run_protocol
from .mub import mub_family, unbiasedness_report
from .pauli import build_phase_system, composition_law_residual, displacement_u, displacement_v, per_bit_product_crosscheck
from .verify import run_suite
from .wigner import marginal, weyl_grid, wigner_grid, wigner_operator_set

GALOIS_DIMS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16)
MODULAR_DIMS = (3, 5, 7, 9, 11, 13, 15, 17, 19, 21)
SUITES = ("galois", "pauli", "mub", "bell", "king", "wigner")


def _default_tol() -> float:
    return float(os.environ.get("MUBLAB_TOL", "1e-9"))


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True, separators=(",", ":")))


def _context_for(dim: int, mode: str, parser: argparse.ArgumentParser):
    if mode == "galois":
        if dim not in GALOIS_DIMS:
            parser.error(f"dimension {dim} not admissible in galois mode; pick one of {GALOIS_DIMS}")
        p, m = factor_prime_power(dim)
        return build_context("galois", p, m)
    if dim not in MODULAR_DIMS:
        parser.error(f"dimension {dim} not admissible in modular mode; pick one of {MODULAR_DIMS}")
    return build_context("modular", dim)


def _meta(ctx) -> dict:
    meta = {"version": __version__, "dim": ctx.n, "mode": ctx.mode}
    if ctx.irreducible is not None:
        meta["irreducible"] = list(ctx.irreducible)
    return meta


def _cmd_field(args, parser) -> int:
    if args.mode == "galois":
        if args.p is None or args.m is None:
            parser.error("galois mode needs --p and --m")
        try:
            ctx = build_context("galois", args.p, args.m)
        except ValueError as exc:
            parser.error(str(exc))
        if ctx.n > 16:
            parser.error(f"galois dimensions are limited to 16, got {ctx.n}")
    else:
        if args.dim is None:
            parser.error("modular mode needs --dim")
        ctx = _context_for(args.dim, "modular", parser)
    payload = _meta(ctx)
    payload.update(
        {
            "p": ctx.p,
            "m": ctx.m,
            "add": ctx.add.tolist(),
            "mul": ctx.mul.tolist(),
            "neg": ctx.neg.tolist(),
            "inv": ctx.inv.tolist(),
        }
    )
    if ctx.mode == "galois":
        ext = build_extension(ctx)
        payload["extension"] = {"quadratic": [ext.quad_a, ext.quad_b], "residue": ext.r}
    if args.json:
        _emit_json(payload)
        return 0
    print(f"# mublab {__version__} field info: N={ctx.n} mode={ctx.mode}")
    if ctx.irreducible is not None:
        print(f"# irreducible (low->high): {','.join(map(str, ctx.irreducible))}")
    if "extension" in payload:
        q = payload["extension"]
        print(f"# extension: t^2 = {q['quadratic'][0]} + {q['quadratic'][1]} t, R = {q['residue']}")
    for name in ("add", "mul"):
        print(f"table,{name}")
        for row in payload[name]:
            print(",".join(map(str, row)))
    return 0


def _cmd_pauli(args, parser) -> int:
    ctx = _context_for(args.dim, args.mode, parser)
    phases = build_phase_system(ctx)
    classes = range(ctx.n + 1) if args.cls is None else [args.cls]
    if args.cls is not None and not 0 <= args.cls <= ctx.n:
        parser.error(f"class must be in 0..{ctx.n}")
    resid = composition_law_residual(ctx)
    tol = args.tol
    payload = _meta(ctx)
    payload["composition_law_residual"] = resid
    payload["composition_law_ok"] = resid <= tol
    ops = {}
    for i in classes:
        ops[str(i)] = {
            "u": [to_reim(displacement_u(ctx, phases, i, l)) for l in range(ctx.n)],
            "v": [
                to_reim(displacement_v(ctx, 0 if i == 0 else l, l if i == 0 else int(ctx.mul[i - 1, l])))
                for l in range(ctx.n)
            ],
        }
    payload["classes"] = ops
    if ctx.mode == "galois" and ctx.p == 2:
        payload["per_bit_product_crosscheck"] = per_bit_product_crosscheck(ctx, phases)
    if args.json:
        _emit_json(payload)
    else:
        print(f"# mublab pauli dump N={ctx.n} classes={list(classes)}")
        print(f"composition law residual: {resid:.3e} ({'ok' if resid <= tol else 'FAIL'})")
        for i in classes:
            for l in range(ctx.n):
                print(f"U[class={i}][l={l}]")
                print(np.array_str(displacement_u(ctx, phases, i, l), precision=6, suppress_small=True))
    return 0 if resid <= tol else 1


def _cmd_mub(args, parser) -> int:
    ctx = _context_for(args.dim, args.mode, parser)
    phases = build_phase_system(ctx)
    family = mub_family(ctx, phases)
    rep = unbiasedness_report(family, args.tol)
    payload = _meta(ctx)
    payload["bases"] = [to_reim(b) for b in family.bases]
    payload["unbiasedness"] = rep.as_dict()
    if args.json:
        _emit_json(payload)
        return 0
    print(f"# mublab mub N={ctx.n} mode={ctx.mode}: {rep.n_unbiased_pairs}/{len(rep.pairs)} pairs unbiased")
    for i, basis in enumerate(family.bases):
        print(f"basis,{i}")
        for row in basis:
            print(",".join(f"{z.real:+.9f}{z.imag:+.9f}j" for z in row))
    return 0


def _cmd_bell(args, parser) -> int:
    ctx = _context_for(args.dim, args.mode, parser)
    if not 1 <= args.k <= ctx.n:
        parser.error(f"--k must be in 1..{ctx.n}")
    phases = build_phase_system(ctx)
    rows = []
    for m in range(ctx.n):
        for n in range(ctx.n):
            m2, n2, phase = bell_transform(ctx, phases, args.k, m, n)
            rows.append({"m": m, "n": n, "m2": m2, "n2": n2, "phase": [phase.real, phase.imag]})
    payload = _meta(ctx)
    payload["k"] = args.k
    payload["map"] = rows
    if args.json:
        _emit_json(payload)
        return 0
    print(f"# bell map for basis k={args.k}, N={ctx.n}: B(m,n,k) = phase * B(m',n',0)")
    print("m,n,m',n',phase_re,phase_im")
    for r in rows:
        print(f"{r['m']},{r['n']},{r['m2']},{r['n2']},{r['phase'][0]:+.9f},{r['phase'][1]:+.9f}")
    return 0


def _cmd_king(args, parser) -> int:
    ctx = _context_for(args.dim, args.mode, parser)
    phases = build_phase_system(ctx)
    family = mub_family(ctx, phases)
    ext = build_extension(ctx) if ctx.mode == "galois" else None
    basis = mean_king_basis(family, phases, ext, args.tol)
    mode = "exhaustive" if args.exhaustive else "monte_carlo"
    report = run_protocol(basis, family, mode=mode, trials=args.trials, seed=args.seed, tol=args.tol)
    payload = _meta(ctx)
    payload["report"] = report.as_dict()
    if args.json:
        _emit_json(payload)
    else:
        print(
            f"mean king protocol N={ctx.n} mode={ctx.mode} {report.mode}: "
            f"{report.successes}/{report.trials} correct inferences"
            + (f" (seed={report.seed})" if report.seed is not None else "")
        )
    return 0 if report.successes == report.trials and report.trials > 0 else 1


def _cmd_wigner(args, parser) -> int:
    ctx = _context_for(args.dim, args.mode, parser)
    phases = build_phase_system(ctx)
    try:
        with open(args.state, encoding="utf-8") as fh:
            op = from_reim(json.load(fh))
    except (OSError, ValueError) as exc:
        parser.error(f"cannot read state file: {exc}")
    if op.shape != (ctx.n, ctx.n):
        parser.error(f"state must be a {ctx.n}x{ctx.n} density matrix, got {op.shape}")
    wset = wigner_operator_set(ctx, phases)
    try:
        grid = wigner_grid(wset, op, args.tol)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    family = mub_family(ctx, phases)
    marg_dev = 0.0
    for line in range(ctx.n):
        proj = ctx.n * np.outer(family.bases[0][:, line], family.bases[0][:, line].conj())
        marg_dev = max(marg_dev, float(np.max(np.abs(marginal(wset, family, 0, line) - proj))))
    payload = _meta(ctx)
    payload["wigner"] = grid.tolist()
    payload["marginal_check"] = {"computational_striation_residual": marg_dev, "ok": marg_dev <= 1e-7}
    if args.weyl:
        payload["weyl"] = to_reim(weyl_grid(ctx, phases, op))
    if args.json:
        _emit_json(payload)
    else:
        print(f"# wigner grid N={ctx.n} (rows i1, cols i2); marginal residual {marg_dev:.2e}")
        for row in grid:
            print(",".join(f"{x:+.9f}" for x in row))
        if args.weyl:
            print("# weyl grid (rows m, cols n), re/im pairs")
            wg = weyl_grid(ctx, phases, op)
            for row in wg:
                print(",".join(f"{z.real:+.9f}{z.imag:+.9f}j" for z in row))
    return 0


def _cmd_verify(args, parser) -> int:
    ctx = _context_for(args.dim, args.mode, parser)
    suites = SUITES if args.suite == "all" else (args.suite,)
    if args.suite != "all" and args.suite not in SUITES:
        parser.error(f"unknown suite {args.suite!r}; pick one of {('all',) + SUITES}")
    results = run_suite(ctx, suites=suites, tol=args.tol, seed=args.seed)
    payload = _meta(ctx)
    payload["results"] = [r.as_dict() for r in results]
    payload["passed"] = all(r.passed for r in results)
    if args.json:
        _emit_json(payload)
    else:
        width = max(len(f"{r.suite}/{r.name}") for r in results)
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            print(f"{r.suite + '/' + r.name:<{width}}  {status}  {r.detail}")
    failing = [r for r in results if not r.passed]
    if failing:
        print(f"first failing property: {failing[0].suite}/{failing[0].name}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mublab", description=__doc__)
    parser.add_argument("--version", action="version", version=f"mublab {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, mode_default="galois"):
        p.add_argument("--dim", type=int, required=True, help="Hilbert-space dimension N")
        p.add_argument("--mode", choices=("galois", "modular"), default=mode_default)
        p.add_argument("--tol", type=float, default=_default_tol())
        p.add_argument("--json", action="store_true")
        p.add_argument("--out", default=None, help="write the report to a file instead of stdout")

    field = sub.add_parser("field", help="arithmetic tables and the quadratic extension")
    field_sub = field.add_subparsers(dest="subcommand", required=True)
    info = field_sub.add_parser("info")
    info.add_argument("--mode", choices=("galois", "modular"), default="galois")
    info.add_argument("--p", type=int, help="prime characteristic (galois)")
    info.add_argument("--m", type=int, help="extension degree (galois)")
    info.add_argument("--dim", type=int, help="dimension N (modular)")
    info.add_argument("--json", action="store_true")
    info.set_defaults(func=_cmd_field)

    pauli = sub.add_parser("pauli", help="displacement operators")
    pauli_sub = pauli.add_subparsers(dest="subcommand", required=True)
    dump = pauli_sub.add_parser("dump")
    common(dump)
    dump.add_argument("--class", dest="cls", type=int, default=None, help="restrict to one class 0..N")
    dump.set_defaults(func=_cmd_pauli)

    mub = sub.add_parser("mub", help="the N+1 bases and their unbiasedness report")
    common(mub)
    mub.add_argument("--csv", action="store_true", help="CSV output (the default)")
    mub.set_defaults(func=_cmd_mub)

    bell = sub.add_parser("bell", help="Bell-state index maps")
    bell_sub = bell.add_subparsers(dest="subcommand", required=True)
    bmap = bell_sub.add_parser("map")
    common(bmap)
    bmap.add_argument("--k", type=int, required=True, help="basis index 1..N")
    bmap.set_defaults(func=_cmd_bell)

    king = sub.add_parser("king", help="Mean King protocol simulator")
    king_sub = king.add_subparsers(dest="subcommand", required=True)
    krun = king_sub.add_parser("run")
    common(krun)
    krun.add_argument("--trials", type=int, default=10000)
    krun.add_argument("--seed", type=int, default=0)
    krun.add_argument("--exhaustive", action="store_true")
    krun.set_defaults(func=_cmd_king)

    wig = sub.add_parser("wigner", help="Wigner grid of a density matrix")
    common(wig)
    wig.add_argument("--state", required=True, help="JSON file, nested [re, im] pairs")
    wig.add_argument("--weyl", action="store_true", help="also emit the Weyl grid")
    wig.set_defaults(func=_cmd_wigner)

    ver = sub.add_parser("verify", help="run the property suites")
    ver.add_argument("suite", nargs="?", default=None, help="suite name or 'all'")
    ver.add_argument("--suite", dest="suite_flag", default=None)
    common(ver)
    ver.add_argument("--seed", type=int, default=1234)
    ver.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        args.suite = args.suite or args.suite_flag or "all"
    if getattr(args, "out", None):
        import contextlib

        with open(args.out, "w", encoding="utf-8") as fh, contextlib.redirect_stdout(fh):
            return args.func(args, parser)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
