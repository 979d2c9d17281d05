"""Exhaustive searches: which unit classes actually occur over a field.

Curves are enumerated in a single fixed order (a2 only moves in
characteristic 3, then a4, then a6, each by lex rank), singular models
skipped.  A class h is "hit" by a curve when the norm-style residue of
its Hasse invariant equals h; the first hit in enumeration order is the
witness recorded for h.

The census partitions the enumeration index space into fixed-size chunks
and consumes per-chunk results strictly in chunk order, so the report is
identical whether chunks are scanned inline or by a pool of worker
threads.  The HASSE_FORMS_THREADS environment variable caps how many
workers are used.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import isqrt
from typing import Iterator

from .curve import WeierstrassCurve, hasse_invariant, point_count
from .errors import FieldTooLargeError, InconsistencyError, SingularModelError
from .forms import phi, realizable_set, unit_class_of
from .gf import SWEEP_MAX, FieldCtx, norm_to_prime, smallest_prime_factor

__all__ = [
    "admissible_traces",
    "iter_curves",
    "find_curve_with_class",
    "describe_witness",
    "WitnessRecord",
    "ClassEntry",
    "RealizabilityReport",
    "census",
    "resolve_workers",
]

CHUNK = 256
ENV_THREADS = "HASSE_FORMS_THREADS"


def admissible_traces(q: int, h: int, p: int | None = None) -> frozenset[int]:
    """Signed traces beta with beta^2 < 4q, p not dividing beta, beta = h mod p.

    When p is omitted it is taken to be the smallest prime factor of q.
    An empty set proves no curve over F_q can land in class h.
    """
    if p is None:
        p = smallest_prime_factor(q)
    if h % p == 0:
        raise ValueError(f"h = {h} is divisible by p = {p}, not a unit residue")
    bound = isqrt(4 * q - 1)
    target = h % p
    return frozenset(b for b in range(-bound, bound + 1) if b and b % p == target)


def resolve_workers(requested: int | None = None) -> int:
    """Worker count after applying the HASSE_FORMS_THREADS cap."""
    cap_raw = os.environ.get(ENV_THREADS)
    cap = None
    if cap_raw is not None:
        try:
            cap = int(cap_raw)
        except ValueError:
            raise ValueError(
                f"{ENV_THREADS} must be a positive integer, got {cap_raw!r}")
        if cap < 1:
            raise ValueError(
                f"{ENV_THREADS} must be a positive integer, got {cap_raw!r}")
    if requested is not None and requested < 1:
        raise ValueError(f"worker count must be >= 1, got {requested}")
    if requested is None:
        return cap if cap is not None else 1
    return min(requested, cap) if cap is not None else requested


def _index_space(ctx: FieldCtx) -> int:
    q = ctx.q
    return q * q * q if ctx.p == 3 else q * q


def _curve_at(ctx: FieldCtx, idx: int) -> WeierstrassCurve | None:
    q = ctx.q
    try:
        if ctx.p == 3:
            a2r, rest = divmod(idx, q * q)
            a4r, a6r = divmod(rest, q)
            return WeierstrassCurve(ctx, ctx.from_rank(a4r), ctx.from_rank(a6r),
                                    a2=ctx.from_rank(a2r))
        a4r, a6r = divmod(idx, q)
        return WeierstrassCurve(ctx, ctx.from_rank(a4r), ctx.from_rank(a6r))
    except SingularModelError:
        return None


def iter_curves(ctx: FieldCtx) -> Iterator[WeierstrassCurve]:
    """Every nonsingular model over ctx, in enumeration order."""
    for idx in range(_index_space(ctx)):
        curve = _curve_at(ctx, idx)
        if curve is not None:
            yield curve


def _hasse_residue(curve: WeierstrassCurve) -> int:
    # 0 when supersingular, else the residue phi gives to [A_p]
    a = hasse_invariant(curve)
    return int(norm_to_prime(a)) if a else 0


def find_curve_with_class(ctx: FieldCtx, h: int, *,
                          use_trace_shortcut: bool = True) -> WeierstrassCurve | None:
    """First curve in enumeration order whose kernel class maps to h.

    With the shortcut on, an empty admissible trace set answers None
    without touching a single curve; the exhaustive route gives the same
    answer and exists precisely so the shortcut can be audited.
    """
    p = ctx.p
    if ctx.q > SWEEP_MAX:
        raise FieldTooLargeError(
            f"curve sweep over F_{ctx.q} exceeds the {SWEEP_MAX} guard")
    if not isinstance(h, int) or not 1 <= h <= p - 1:
        raise ValueError(f"h must be an integer in 1..{p - 1}, got {h}")
    if use_trace_shortcut and not admissible_traces(ctx.q, h, p):
        return None
    for curve in iter_curves(ctx):
        if _hasse_residue(curve) == h:
            return curve
    return None


@dataclass(frozen=True)
class WitnessRecord:
    """One validated curve hitting a class, with its checked statistics."""

    a2: tuple[int, ...]
    a4: tuple[int, ...]
    a6: tuple[int, ...]
    count: int
    beta: int
    class_exp: int
    phi: int

    def to_dict(self) -> dict:
        return {
            "a2": list(self.a2),
            "a4": list(self.a4),
            "a6": list(self.a6),
            "count": self.count,
            "beta": self.beta,
            "class_exp": self.class_exp,
            "phi": self.phi,
        }


@dataclass(frozen=True)
class ClassEntry:
    residue: int
    witness: WitnessRecord | None

    @property
    def realizable(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class RealizabilityReport:
    """Outcome of a full census over one field.

    entries has one slot per residue 1..p-1 in order; missing lists the
    residues with no witness; verdict is "complete" when every class is
    hit and "proper-subset" otherwise.
    """

    p: int
    n: int
    q: int
    modulus: tuple[int, ...] | None
    entries: tuple[ClassEntry, ...]
    missing: tuple[int, ...]
    verdict: str

    @property
    def realizable(self) -> tuple[int, ...]:
        return tuple(e.residue for e in self.entries if e.realizable)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "n": self.n,
            "q": self.q,
            "modulus": list(self.modulus) if self.modulus else None,
            "classes": [
                {"residue": e.residue,
                 "realizable": e.realizable,
                 "witness": e.witness.to_dict() if e.witness else None}
                for e in self.entries
            ],
            "missing": list(self.missing),
            "verdict": self.verdict,
        }


def _scan_chunk(ctx: FieldCtx, lo: int, hi: int, wanted: frozenset[int]) -> dict[int, int]:
    """First curve index per wanted residue within [lo, hi)."""
    out: dict[int, int] = {}
    for idx in range(lo, hi):
        curve = _curve_at(ctx, idx)
        if curve is None:
            continue
        r = _hasse_residue(curve)
        if r in wanted and r not in out:
            out[r] = idx
            if len(out) == len(wanted):
                break
    return out


def describe_witness(curve: WeierstrassCurve, h: int) -> WitnessRecord:
    """Recompute everything about a candidate curve and cross-check it.

    Raises InconsistencyError when the curve does not actually land in
    class h or its trace disagrees with the phi residue.
    """
    ctx = curve.ctx
    a = hasse_invariant(curve)
    if not a:
        raise InconsistencyError(f"witness for class {h} is supersingular: {curve!r}")
    cls = unit_class_of(a)
    residue = int(phi(cls))
    fd = point_count(curve)
    if residue != h:
        raise InconsistencyError(
            f"witness residue mismatch for class {h}: got {residue} from {curve!r}")
    if fd.beta % ctx.p != residue:
        raise InconsistencyError(
            f"trace residue disagrees with phi for {curve!r}: "
            f"beta = {fd.beta}, phi = {residue}")
    return WitnessRecord(
        a2=curve.a2.coeffs, a4=curve.a4.coeffs, a6=curve.a6.coeffs,
        count=fd.count, beta=fd.beta, class_exp=cls.exp, phi=residue)


def _validate_witness(ctx: FieldCtx, idx: int, h: int) -> WitnessRecord:
    curve = _curve_at(ctx, idx)
    if curve is None:
        raise InconsistencyError(f"witness index {idx} decodes to a singular model")
    return describe_witness(curve, h)


def census(ctx: FieldCtx, workers: int | None = None) -> RealizabilityReport:
    """Find a first witness for every realizable class over ctx.

    Classes whose admissible trace set is empty are declared missing up
    front; the rest are searched by a chunked sweep of the curve
    enumeration.  Each recorded witness is revalidated from scratch, and
    the final realizable set must agree with the interval formula or an
    InconsistencyError is raised.
    """
    p, q = ctx.p, ctx.q
    if q > SWEEP_MAX:
        raise FieldTooLargeError(
            f"census over F_{q} exceeds the {SWEEP_MAX} guard")
    residues = range(1, p)
    shortcut_missing = frozenset(
        h for h in residues if not admissible_traces(q, h, p))
    wanted = frozenset(h for h in residues if h not in shortcut_missing)
    total = _index_space(ctx)
    nworkers = resolve_workers(workers)

    found: dict[int, int] = {}

    def consume(chunk_result: dict[int, int]) -> None:
        for h, idx in chunk_result.items():
            if h not in found:
                found[h] = idx

    starts = range(0, total, CHUNK)
    if nworkers <= 1:
        for lo in starts:
            if len(found) == len(wanted):
                break
            consume(_scan_chunk(ctx, lo, min(lo + CHUNK, total), wanted))
    else:
        window = nworkers + 1
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            pending = []
            it = iter(starts)
            done = False
            while pending or not done:
                while not done and len(pending) < window:
                    lo = next(it, None)
                    if lo is None:
                        done = True
                        break
                    pending.append(pool.submit(
                        _scan_chunk, ctx, lo, min(lo + CHUNK, total), wanted))
                if not pending:
                    break
                consume(pending.pop(0).result())
                if len(found) == len(wanted):
                    break

    entries = []
    for h in residues:
        if h in found:
            entries.append(ClassEntry(h, _validate_witness(ctx, found[h], h)))
        else:
            entries.append(ClassEntry(h, None))
    missing = tuple(h for h in residues if h not in found)

    formula = realizable_set(p, q)
    swept = frozenset(h for h in residues if h in found)
    if swept != formula:
        raise InconsistencyError(
            f"census over {ctx} found classes {sorted(swept)} but the trace "
            f"interval formula gives {sorted(formula)}")

    return RealizabilityReport(
        p=p, n=ctx.n, q=q, modulus=ctx.modulus,
        entries=tuple(entries), missing=missing,
        verdict="complete" if not missing else "proper-subset")
