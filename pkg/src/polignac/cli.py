"""``polignac`` command line: one subcommand per constructive object.

Exit status: 0 success, 1 reported failure (no narrow tuple, empty candidate
set, inadmissible tuple), 2 usage or precondition error.
"""
from __future__ import annotations

import argparse
import io
import json
import sys
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, TextIO

from . import admissibility as adm
from . import census as cen
from . import progressions as prog
from .primes import DEFAULT_SEGMENT_SIZE, CapacityError, count_primes, prime_list, primorial

FORMATS = ("table", "csv", "json")


@dataclass
class RunConfig:
    command: str
    params: dict[str, Any]
    workers: int = 1
    segment_size: int = DEFAULT_SEGMENT_SIZE
    output_path: str | None = None
    format: str = "table"


@dataclass
class Output:
    """What a subcommand produced, in all three renderings."""

    data: dict[str, Any]
    rows: list[list[Any]]
    table: list[str]
    status: int = 0
    note: str = ""  # goes to stderr

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.data, indent=2) + "\n"
        if fmt == "csv":
            return "".join(",".join(str(v) for v in row) + "\n" for row in self.rows)
        return "".join(line + "\n" for line in self.table)


class UsageError(Exception):
    pass


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be a positive integer, got {text}")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be a nonnegative integer, got {text}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text}") from None


def _decimal(value: Fraction, digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return format(Decimal(value.numerator) / Decimal(value.denominator), "f")


# -- subcommand handlers ------------------------------------------------------

def _census_from(cfg: RunConfig) -> cen.GapCensus:
    p = cfg.params
    if p.get("census"):
        return cen.read_census(p["census"])
    if p.get("x") is None:
        raise UsageError("one of --census or --x is required")
    return cen.gap_census(p["x"], cfg.segment_size, cfg.workers)


def _candidates_from(cfg: RunConfig) -> cen.CandidateSet:
    p = cfg.params
    return cen.candidate_set(_census_from(cfg), p["min_count"], even_only=not p["keep_one"])


def cmd_sieve(cfg: RunConfig) -> Output:
    lo, hi = cfg.params["lo"], cfg.params["hi"]
    if lo > hi:
        raise UsageError("--lo must be <= --hi")
    if cfg.params["count_only"]:
        n = count_primes(lo, hi, cfg.segment_size, cfg.workers)
        return Output({"lo": lo, "hi": hi, "count": n}, [[n]], [f"primes in [{lo}, {hi}): {n}"])
    primes = prime_list(lo, hi, cfg.segment_size, cfg.workers)
    table = [f"primes in [{lo}, {hi}): {len(primes)}"]
    table += [" ".join(map(str, primes[i : i + 10])) for i in range(0, len(primes), 10)]
    return Output({"lo": lo, "hi": hi, "count": len(primes), "primes": primes}, [[v] for v in primes], table)


def cmd_census(cfg: RunConfig) -> Output:
    c = cen.gap_census(cfg.params["x"], cfg.segment_size, cfg.workers)
    if cfg.params["census_out"]:
        cen.write_census(c, cfg.params["census_out"])
    items = list(c.counts.items())
    width = max((len(str(g)) for g, _ in items), default=3)
    table = [f"x={c.x} primes={c.prime_count}", f"{'gap':>{width}}  count"]
    table += [f"{g:>{width}}  {n}" for g, n in items]
    data = {
        "x": c.x,
        "primes": c.prime_count,
        "counts": [{"gap": g, "count": n} for g, n in items],
    }
    return Output(data, [[g, n] for g, n in items], table)


def cmd_candidates(cfg: RunConfig) -> Output:
    S = _candidates_from(cfg)
    data = {"x": S.source_x, "threshold": S.threshold, "even_only": not cfg.params["keep_one"], "gaps": list(S.gaps)}
    table = [f"x={S.source_x} T={S.threshold} size={len(S.gaps)}", " ".join(map(str, S.gaps))]
    out = Output(data, [[g] for g in S.gaps], table)
    if not S.gaps:
        out.status, out.note = 1, "empty candidate set"
    return out


def cmd_cover(cfg: RunConfig) -> Output:
    S = _candidates_from(cfg)
    r = cen.interval_cover_constant(S, cfg.params["m_max"])
    verified = cen.verify_cover(r, S) if r.ok else False
    data = {"C_emp": r.C_emp, "m_max": r.m_max, "worst_m": r.worst_m, "verified": verified, "ok": r.ok}
    if not r.ok:
        return Output(data | {"message": r.message}, [], [f"failure: {r.message}"], 1, r.message)
    worst = "-" if r.worst_m is None else r.worst_m
    table = [f"C_emp={r.C_emp} m_max={r.m_max} worst_m={worst} verified={verified}"]
    return Output(data, [[r.C_emp, r.m_max, "" if r.worst_m is None else r.worst_m]], table)


def cmd_density(cfg: RunConfig) -> Output:
    p = cfg.params
    if p["analytic"] == p["empirical"]:
        raise UsageError("exactly one of --analytic or --empirical is required")
    if p["analytic"]:
        if p["c"] is None:
            raise UsageError("--analytic needs --c")
        value = cen.density_lower_bound(p["c"])
        data = {"mode": "analytic", "C": str(p["c"])}
    else:
        if p["n"] is None:
            raise UsageError("--empirical needs --n")
        S = _candidates_from(cfg)
        value = cen.empirical_density(S, p["n"])
        data = {"mode": "empirical", "n": p["n"], "x": S.source_x, "threshold": S.threshold}
    data |= {"value": str(value), "decimal": _decimal(value)}
    return Output(data, [[str(value), _decimal(value)]], [str(value)])


def _certificate_output(H: adm.AdmissibleTuple, res, extra: dict[str, Any]) -> Output:
    text = adm.format_tuple(H)
    data = {**extra, "tuple": list(H.elements), "k": H.k, "admissible": res.admissible}
    if res.admissible:
        data["certificate"] = [{"p": p, "missed": r} for p, r in res.missed]
        rows = [[p, r] for p, r in res.missed]
        detail = "; ".join(f"p={p} misses {r}" for p, r in res.missed) or "no primes <= k"
        table = [text, f"admissible: {detail}"]
        return Output(data, rows, table)
    data["violation"] = {"p": res.p, "evidence": list(res.evidence)}
    rows = [[res.p, r, h] for r, h in enumerate(res.evidence)]
    detail = ", ".join(f"{h}={r} (mod {res.p})" for r, h in enumerate(res.evidence))
    return Output(data, rows, [text, f"NOT admissible at p={res.p}: {detail}"], 1, f"not admissible at p={res.p}")


def cmd_admissible(cfg: RunConfig) -> Output:
    H = adm.parse_tuple(cfg.params["tuple"])
    return _certificate_output(H, adm.is_admissible(H), {})


def cmd_lemma1(cfg: RunConfig) -> Output:
    k, N = cfg.params["k"], cfg.params["n"]
    H = adm.lemma1_tuple(k, N)
    res = adm.is_admissible(H)
    return _certificate_output(H, res, {"N": N, "d": primorial(k)})


def cmd_narrow(cfg: RunConfig) -> Output:
    k, D = cfg.params["k"], cfg.params["max_diameter"]
    r = adm.narrow_tuple(k, D)
    data = {"k": k, "max_diameter": D, "ok": r.ok, "strategy": r.strategy}
    if not r.ok:
        data |= {"tuple": None, "diameter": None, "message": r.message}
        return Output(data, [], [f"failure: {r.message}"], 1, r.message)
    data |= {"tuple": list(r.found.elements), "diameter": r.found.diameter}
    table = [adm.format_tuple(r.found), f"k={k} diameter={r.found.diameter} strategy={r.strategy}"]
    return Output(data, [list(r.found.elements)], table)


def cmd_window(cfg: RunConfig) -> Output:
    k, N = cfg.params["k"], cfg.params["n"]
    w = adm.lemma1_polignac_window(k, N)
    data = {"k": k, "N": N, "d": primorial(k), "window": w}
    return Output(data, [[v] for v in w], [",".join(map(str, w))])


def _blocks_output(b: prog.BlockSequence) -> Output:
    data = {"q": b.q, "k": b.k, "d": b.d, "blocks": [list(bl) for bl in b.blocks]}
    table = [f"q={b.q} k={b.k} d={b.d}"]
    table += [f"block {j}: " + ", ".join(map(str, bl)) for j, bl in enumerate(b.blocks, 1)]
    return Output(data, [list(bl) for bl in b.blocks], table)


def cmd_blocks(cfg: RunConfig) -> Output:
    p = cfg.params
    return _blocks_output(prog.ap_blocks(p["q"], p["k"], p["block_count"]))


def cmd_dirichlet(cfg: RunConfig) -> Output:
    p = cfg.params
    res = prog.dirichlet_subsequence(p["a"], p["q"], p["k"], p["i_max"])
    if isinstance(res, prog.BlockSequence):
        return _blocks_output(res)
    rows = [[i, N, t] for i, (N, t) in enumerate(zip(res.N_values, res.terms), 1)]
    data = {
        "a": res.a, "q": res.q, "k": res.k, "d": res.d,
        "rows": [{"i": i, "N": N, "term": t} for i, N, t in rows],
    }
    table = [f"a={res.a} q={res.q} k={res.k} d={res.d}"]
    table += [f"i={i} N={N} a+N*q={t}" for i, N, t in rows]
    return Output(data, rows, table)


def cmd_ap(cfg: RunConfig) -> Output:
    p = cfg.params
    values = prog.read_int_set(p["file"]) if p["file"] else list(_candidates_from(cfg).gaps)
    if not values:
        return Output({"ok": False}, [], ["empty set"], 1, "empty set")
    run = prog.longest_ap_in_set(values)
    data = {"ok": True, "start": run.start, "step": run.step, "length": run.length, "terms": run.terms()}
    table = [f"start={run.start} step={run.step} length={run.length}", " ".join(map(str, run.terms()))]
    return Output(data, [[run.start, run.step, run.length]], table)


HANDLERS = {
    "sieve": cmd_sieve,
    "census": cmd_census,
    "candidates": cmd_candidates,
    "cover": cmd_cover,
    "density": cmd_density,
    "admissible": cmd_admissible,
    "narrow": cmd_narrow,
    "lemma1": cmd_lemma1,
    "window": cmd_window,
    "blocks": cmd_blocks,
    "dirichlet": cmd_dirichlet,
    "ap": cmd_ap,
}


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="table")
    common.add_argument("--workers", type=_positive, default=1)
    common.add_argument("--segment-size", type=_positive, default=DEFAULT_SEGMENT_SIZE)

    rendered = argparse.ArgumentParser(add_help=False)
    rendered.add_argument("--out", dest="output_path", help="write rendered output here instead of stdout")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--census", help="census file written by `census --out`")
    source.add_argument("--x", type=_nonneg, help="compute the census up to x instead")
    source.add_argument("--min-count", type=_positive, default=1, help="threshold T")
    source.add_argument("--keep-one", action="store_true", help="keep the odd gap 1")

    parser = argparse.ArgumentParser(prog="polignac", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    def add(name, help, parents=(common, rendered)):
        return sub.add_parser(name, help=help, parents=list(parents))

    sp = add("sieve", "list primes in [lo, hi)")
    sp.add_argument("--lo", type=_nonneg, default=0)
    sp.add_argument("--hi", type=_nonneg, required=True)
    sp.add_argument("--count-only", action="store_true")

    sp = add("census", "gap census up to x", parents=(common,))
    sp.add_argument("--x", type=_nonneg, required=True)
    sp.add_argument("--out", dest="census_out", help="write the census file here")

    add("candidates", "gap values occurring at least T times", (common, rendered, source))

    sp = add("cover", "empirical interval-cover constant", (common, rendered, source))
    sp.add_argument("--m-max", type=_nonneg, required=True)

    sp = add("density", "analytic 1/(2C) bound or empirical density", (common, rendered, source))
    sp.add_argument("--analytic", action="store_true")
    sp.add_argument("--empirical", action="store_true")
    sp.add_argument("--c", type=_rational)
    sp.add_argument("--n", type=_positive)

    sp = add("admissible", "test a tuple for admissibility")
    sp.add_argument("--tuple", required=True, help='comma-separated ascending integers, e.g. "0,2,6"')

    sp = add("narrow", "search for a narrow admissible k-tuple")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--max-diameter", type=_nonneg, required=True)

    sp = add("lemma1", "the tuple {0, dN, ..., (k-1)dN} and its certificate")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--n", type=_positive, required=True)

    sp = add("window", "candidate differences {dN, ..., (k-1)dN}")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=_positive, required=True)

    sp = add("blocks", "block decomposition on the progression q, 2q, ...")
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--block-count", type=_positive, default=2)

    sp = add("dirichlet", "multiples of the primorial on a, a+q, a+2q, ...")
    sp.add_argument("--a", type=_nonneg, required=True)
    sp.add_argument("--q", type=_positive, required=True)
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--i-max", type=_positive, default=3)

    sp = add("ap", "longest arithmetic progression in a set", (common, rendered, source))
    sp.add_argument("--file", help="integer-set file: one ascending integer per line")
    return parser


def _config(ns: argparse.Namespace) -> RunConfig:
    params = {
        k: v for k, v in vars(ns).items()
        if k not in ("command", "workers", "segment_size", "output_path", "format")
    }
    return RunConfig(
        command=ns.command,
        params=params,
        workers=ns.workers,
        segment_size=ns.segment_size,
        output_path=getattr(ns, "output_path", None),
        format=ns.format,
    )


def run(argv: list[str], stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        # argparse prints usage to sys.stderr itself
        saved = sys.stderr, sys.stdout
        sys.stderr, sys.stdout = stderr, stdout
        try:
            ns = parser.parse_args(argv)
        finally:
            sys.stderr, sys.stdout = saved
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = _config(ns)
    try:
        out = HANDLERS[cfg.command](cfg)
    except (UsageError, CapacityError, ValueError, OSError) as exc:
        stderr.write(f"polignac {cfg.command}: error: {exc}\n")
        return 2
    text = out.render(cfg.format)
    if cfg.output_path:
        with open(cfg.output_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if out.note:
        stderr.write(f"polignac {cfg.command}: {out.note}\n")
    return out.status


def run_capture(argv: list[str]) -> tuple[int, str, str]:
    """Run and return (status, stdout, stderr); handy in tests and scripts."""
    out, err = io.StringIO(), io.StringIO()
    status = run(argv, out, err)
    return status, out.getvalue(), err.getvalue()


def main() -> None:
    sys.exit(run(sys.argv[1:]))
