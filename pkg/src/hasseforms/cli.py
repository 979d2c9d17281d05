"""Command line front end.

Subcommands:

    hasse       invariants of one curve: A_p, A_q, count, trace, class
    realizable  which classes the trace interval formula allows
    search      first witness curve for one class (or a proof of absence)
    verify      exhaustive identity suites over whole fields
    ptorsion    the p-torsion group scheme of one curve

Exit codes: 0 for a computed answer (including "not realizable"), 1 when
a verification suite reports failures or a cross-check breaks, 2 for bad
usage.  With --json the output is a single stable envelope object whose
keys are sorted; only timing-ms varies between identical runs.

Note: the search subcommand spells its target class -h, so its help
lives on --help only.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .curve import WeierstrassCurve, hasse_invariant, point_count
from .errors import InconsistencyError
from .forms import phi, ptorsion_description, realizable_set, unit_class_of
from .gf import FieldCtx, _is_prime, make_field
from .search import describe_witness, find_curve_with_class, resolve_workers
from .verify import SUITE_NAMES, run_suite


def _parse_coeffs(text: str) -> list[int]:
    parts = [s.strip() for s in text.split(",")]
    if not parts or any(not s for s in parts):
        raise ValueError(f"bad coefficient list {text!r}; expected like 0,1")
    try:
        return [int(s) for s in parts]
    except ValueError:
        raise ValueError(f"bad coefficient list {text!r}; entries must be integers")


def _parse_prime_range(text: str) -> list[int]:
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ValueError(f"bad range {text!r}; expected like 3..23")
        if lo > hi:
            raise ValueError(f"empty range {text!r}")
        primes = [m for m in range(max(lo, 3), hi + 1) if m % 2 and _is_prime(m)]
        if not primes:
            raise ValueError(f"no odd primes in {text!r}")
        return primes
    out = []
    for s in text.split(","):
        try:
            v = int(s)
        except ValueError:
            raise ValueError(f"bad prime list {text!r}")
        if v == 2 or not _is_prime(v):
            raise ValueError(f"{v} is not an odd prime")
        out.append(v)
    return out


def _parse_int_range(text: str) -> list[int]:
    if ".." in text:
        lo_s, _, hi_s = text.partition("..")
        try:
            lo, hi = int(lo_s), int(hi_s)
        except ValueError:
            raise ValueError(f"bad range {text!r}; expected like 1..3")
        if lo > hi or lo < 1:
            raise ValueError(f"bad degree range {text!r}")
        return list(range(lo, hi + 1))
    out = []
    for s in text.split(","):
        try:
            v = int(s)
        except ValueError:
            raise ValueError(f"bad degree list {text!r}")
        if v < 1:
            raise ValueError(f"degree must be >= 1, got {v}")
        out.append(v)
    return out


def _elt_json(x) -> list[int] | None:
    return None if x is None else list(x.coeffs)


def _field_header(ctx: FieldCtx) -> dict:
    return {
        "p": ctx.p,
        "n": ctx.n,
        "q": ctx.q,
        "modulus": list(ctx.modulus) if ctx.modulus else None,
    }


def _field_lines(ctx: FieldCtx) -> list[str]:
    lines = [f"field: F_{ctx.q} (p = {ctx.p}, n = {ctx.n})"]
    if ctx.modulus:
        lines.append(f"modulus: {ctx.modulus_str()}")
    return lines


def _curve_from_args(ctx: FieldCtx, args) -> WeierstrassCurve:
    a2 = _parse_coeffs(args.a2) if args.a2 is not None else [0]
    a4 = _parse_coeffs(args.a4)
    a6 = _parse_coeffs(args.a6)
    return WeierstrassCurve(ctx, ctx.element(a4), ctx.element(a6),
                            a2=ctx.element(a2))


# -- subcommand handlers -------------------------------------------------
# each returns (params, result, human_lines, exit_code)

def _cmd_hasse(args):
    ctx = make_field(args.p, args.n)
    curve = _curve_from_args(ctx, args)
    ap = hasse_invariant(curve, "p")
    aq = hasse_invariant(curve, "q")
    fd = point_count(curve)
    ordinary = bool(ap)
    cls = unit_class_of(ap) if ordinary else None
    result = {
        **_field_header(ctx),
        "a2": _elt_json(curve.a2),
        "a4": _elt_json(curve.a4),
        "a6": _elt_json(curve.a6),
        "discriminant": _elt_json(curve.discriminant),
        "j": _elt_json(curve.j_invariant),
        "hasse_p": _elt_json(ap),
        "hasse_q": _elt_json(aq),
        "count": fd.count,
        "beta": fd.beta,
        "ordinary": ordinary,
        "class_exp": cls.exp if cls else None,
        "phi": int(phi(cls)) if cls else None,
    }
    lines = _field_lines(ctx) + [
        f"curve: {curve!r}",
        f"discriminant: {curve.discriminant}   j: {curve.j_invariant}",
        f"A_p: {ap}   A_q: {aq}",
        f"points: {fd.count}   trace beta: {fd.beta}",
    ]
    if ordinary:
        lines.append(f"ordinary; kernel class exp {cls.exp}, phi residue {int(phi(cls))}")
    else:
        lines.append("supersingular; kernel is the self-dual infinitesimal form")
    params = {"p": args.p, "n": args.n, "a2": args.a2, "a4": args.a4, "a6": args.a6}
    return params, result, lines, 0


def _cmd_realizable(args):
    if args.p == 2 or not _is_prime(args.p):
        raise ValueError(f"p must be an odd prime, got {args.p}")
    q = args.p**args.n
    hit = realizable_set(args.p, q)
    missing = sorted(set(range(1, args.p)) - hit)
    verdict = "complete" if not missing else "proper-subset"
    result = {
        "p": args.p,
        "n": args.n,
        "q": q,
        "realizable": sorted(hit),
        "missing": missing,
        "verdict": verdict,
    }
    lines = [
        f"classes over F_{q} allowed by the trace interval: {sorted(hit)}",
        f"missing: {missing}" if missing else "missing: none",
        f"verdict: {verdict}",
    ]
    return {"p": args.p, "n": args.n}, result, lines, 0


def _cmd_search(args):
    ctx = make_field(args.p, args.n)
    h = args.target
    if h is None:
        raise ValueError("search needs a target class, e.g. -h 9")
    curve = find_curve_with_class(ctx, h,
                                  use_trace_shortcut=not args.no_shortcut)
    params = {"p": args.p, "n": args.n, "h": h, "no_shortcut": args.no_shortcut}
    if curve is None:
        result = {**_field_header(ctx), "h": h, "realizable": False, "witness": None}
        lines = _field_lines(ctx) + [
            f"class {h}: not realizable over F_{ctx.q}",
            "no admissible trace exists in the open interval (-2*sqrt(q), 2*sqrt(q))"
            if not args.no_shortcut else
            "exhausted every curve without a hit",
        ]
        return params, result, lines, 0
    witness = describe_witness(curve, h)
    result = {**_field_header(ctx), "h": h, "realizable": True,
              "witness": witness.to_dict()}
    lines = _field_lines(ctx) + [
        f"class {h}: realizable over F_{ctx.q}",
        f"witness: {curve!r}",
        f"points: {witness.count}   beta: {witness.beta}   "
        f"class exp: {witness.class_exp}   phi: {witness.phi}",
    ]
    return params, result, lines, 0


def _cmd_verify(args):
    ps = _parse_prime_range(args.p)
    ns = _parse_int_range(args.n)
    workers = resolve_workers()
    results = []
    for p in ps:
        for n in ns:
            results.append(run_suite(args.suite, p, n, workers=workers))
    ok = all(r.ok for r in results)
    result = {"suites": [r.to_dict() for r in results], "ok": ok}
    lines = [r.summary_line() for r in results]
    for r in results:
        for failure in r.failures:
            lines.append(f"  FAIL {failure}")
    params = {"suite": args.suite, "p": args.p, "n": args.n, "workers": workers}
    return params, result, lines, 0 if ok else 1


def _cmd_ptorsion(args):
    ctx = make_field(args.p, args.n)
    curve = _curve_from_args(ctx, args)
    desc = ptorsion_description(curve)
    params = {"p": args.p, "n": args.n, "a2": args.a2, "a4": args.a4, "a6": args.a6}
    if desc.supersingular:
        result = {**_field_header(ctx), "supersingular": True, "label": "M2",
                  "class_exp": None, "hasse": None, "j": None,
                  "etale_degrees": None, "j_p_root": None}
        lines = _field_lines(ctx) + [
            f"curve: {curve!r}",
            "supersingular: E[p] is the non-split self-dual thickening M2",
        ]
        return params, result, lines, 0
    result = {
        **_field_header(ctx),
        "supersingular": False,
        "label": desc.label,
        "class_exp": desc.hasse_class.exp,
        "hasse": _elt_json(hasse_invariant(curve)),
        "j": _elt_json(desc.j),
        "etale_degrees": list(desc.etale_degrees),
        "j_p_root": _elt_json(desc.j_p_root),
    }
    lines = _field_lines(ctx) + [
        f"curve: {curve!r}",
        f"ordinary: multiplicative part twisted by class exp {desc.hasse_class.exp}",
        f"etale part: field factors of degrees {list(desc.etale_degrees)}",
        f"j: {desc.j}   p-th root of j: {desc.j_p_root}",
    ]
    return params, result, lines, 0


HANDLERS = {
    "hasse": _cmd_hasse,
    "realizable": _cmd_realizable,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "ptorsion": _cmd_ptorsion,
}


def _add_field_args(sp, degree_default: int = 1):
    sp.add_argument("-p", type=int, required=True, help="odd prime characteristic")
    sp.add_argument("-n", type=int, default=degree_default,
                    help="extension degree (default %(default)s)")


def _add_curve_args(sp):
    sp.add_argument("-a2", default=None, metavar="C",
                    help="a2 coefficients c0,c1,... (characteristic 3 only)")
    sp.add_argument("-a4", required=True, metavar="C",
                    help="a4 coefficients c0,c1,...")
    sp.add_argument("-a6", required=True, metavar="C",
                    help="a6 coefficients c0,c1,...")


def _add_output_args(sp):
    sp.add_argument("--json", action="store_true",
                    help="emit one stable machine-readable envelope")
    sp.add_argument("--out", metavar="FILE", default=None,
                    help="write the report to FILE instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hasseforms",
        description="Twisted forms of p-th roots of unity on elliptic curves "
                    "over small finite fields, by exhaustive enumeration.")
    parser.add_argument("--version", action="version", version=__version__)
    subs = parser.add_subparsers(dest="command")

    sp = subs.add_parser("hasse", help="invariants of one curve")
    _add_field_args(sp)
    _add_curve_args(sp)
    _add_output_args(sp)

    sp = subs.add_parser("realizable", help="classes the trace interval allows")
    _add_field_args(sp)
    _add_output_args(sp)

    sp = subs.add_parser("search", add_help=False,
                         help="first witness curve for one class")
    sp.add_argument("--help", action="help", help="show this help and exit")
    _add_field_args(sp)
    sp.add_argument("-h", dest="target", type=int, required=True,
                    help="target class residue in 1..p-1")
    sp.add_argument("--no-shortcut", action="store_true",
                    help="sweep every curve instead of pruning by traces")
    _add_output_args(sp)

    sp = subs.add_parser("verify", help="run an exhaustive identity suite")
    sp.add_argument("--suite", required=True, choices=SUITE_NAMES)
    sp.add_argument("-p", required=True,
                    help="prime, list 5,7,11 or range 3..23 (primes only)")
    sp.add_argument("-n", default="1",
                    help="degree, list or range (default %(default)s)")
    _add_output_args(sp)

    sp = subs.add_parser("ptorsion", help="describe the p-torsion scheme")
    _add_field_args(sp)
    _add_curve_args(sp)
    _add_output_args(sp)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    if args.command is None:
        parser.print_help()
        return 2
    started = time.monotonic()
    try:
        params, result, lines, code = HANDLERS[args.command](args)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except InconsistencyError as exc:
        print(f"verification failure: {exc}", file=sys.stderr)
        return 1
    if args.json:
        envelope = {
            "tool-version": __version__,
            "command": args.command,
            "params": params,
            "result": result,
            "timing-ms": int((time.monotonic() - started) * 1000),
        }
        text = json.dumps(envelope, sort_keys=True, separators=(",", ":")) + "\n"
    else:
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


def run() -> None:
    sys.exit(main())
