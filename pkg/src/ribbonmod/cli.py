"""Command line front end.

Every subcommand answers one question about sheaves on a ribbon and
prints a Report in one of three formats.  Output is deterministic: the
same argv (and RIBBONMOD_SEED environment, for the lemma verifier)
produces byte-identical bytes, so the outputs can be frozen as golden
files.  Exit codes: 0 success, 1 usage error or failed verification,
2 for inputs outside a predicate's domain, 3 for parity obstructions
(no sheaf carries the requested invariants).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field

from .core import (
    CompleteType,
    DomainError,
    IntegralityError,
    Invariants,
    RibbonParams,
    euler_characteristic,
    gvb_complete_type,
    hilbert_polynomial,
    invariants_of,
    ribbon_genus,
    slope,
)
from .moduli import (
    blowup,
    dim_gvb_locus,
    dim_l_locus,
    dim_l_stratum,
    dim_qlf_locus,
    dim_rigid_locus,
    dim_vb_locus,
    enumerate_components,
    partitions,
)
from .stability import (
    Rank3Verdict,
    gvb_ss_exists,
    l_locus_cross_check,
    l_locus_nonempty,
    rank3_rational_classify,
    rigid_locus_nonempty,
    ss_qlf_exists,
    verify_slope_lemma,
    verify_weight_lemma,
)

__all__ = ["Report", "format_report", "run", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_INTEGRALITY = 3

DEFAULT_SAMPLES = 100000
DEFAULT_SEED = 0

SEED_ENV_VAR = "RIBBONMOD_SEED"

COMPONENT_COLUMNS = ("kind", "r0", "r1", "d0", "d1", "index", "dimension")


class UsageError(Exception):
    """Bad argv; distinct from domain errors raised by the library."""


@dataclass
class Report:
    """Everything a subcommand wants printed.

    Exactly one of ``components``, ``rows`` or ``results`` is set.
    ``components`` uses the fixed seven-column schema; ``rows`` is a
    table with its own ``columns``; ``results`` is a flat mapping.
    """

    query: dict
    status: str  # "proved" or "conjectural"
    components: list[dict] | None = None
    rows: list[dict] | None = None
    columns: tuple[str, ...] | None = None
    results: dict | None = None
    exit_code: int = field(default=EXIT_OK, compare=False)


def _scalar_str(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _aligned_table(columns, rows) -> list[str]:
    # numeric-looking cells are right-aligned, everything else left
    cells = [[_scalar_str(r.get(c)) for c in columns] for r in rows]
    widths = [max(len(c), *(len(row[i]) for row in cells)) if cells else len(c)
              for i, c in enumerate(columns)]

    def is_num(s):
        return s.lstrip("-").replace("/", "").isdigit() and s not in ("", "-")

    lines = ["  ".join(c.ljust(w) for c, w in zip(columns, widths)).rstrip()]
    for row in cells:
        out = []
        for s, w in zip(row, widths):
            out.append(s.rjust(w) if is_num(s) else s.ljust(w))
        lines.append("  ".join(out).rstrip())
    return lines


def format_report(r: Report, fmt: str) -> str:
    """Render a report as text, json or csv; byte-stable for equal input."""
    if fmt == "json":
        obj: dict = {"query": r.query, "status": r.status}
        if r.components is not None:
            obj["components"] = [
                {c: row.get(c) for c in COMPONENT_COLUMNS} for row in r.components
            ]
        if r.rows is not None:
            obj["rows"] = r.rows
        if r.results is not None:
            obj["results"] = r.results
        return json.dumps(obj, indent=2) + "\n"

    if fmt == "csv":
        lines = []
        if r.components is not None:
            lines.append(",".join(COMPONENT_COLUMNS))
            for row in r.components:
                lines.append(",".join(_csv_cell(row.get(c)) for c in COMPONENT_COLUMNS))
        elif r.rows is not None:
            cols = r.columns or ()
            lines.append(",".join(cols))
            for row in r.rows:
                lines.append(",".join(_csv_cell(row.get(c)) for c in cols))
        else:
            lines.append("key,value")
            for k, v in _flat_results(r.results).items():
                lines.append(f"{k},{_csv_cell(v)}")
        return "\n".join(lines) + "\n"

    if fmt != "text":
        raise UsageError(f"unknown format {fmt!r}")

    head = " ".join(f"{k}={_scalar_str(v)}" for k, v in r.query.items() if k != "command")
    lines = [f"query: {r.query.get('command', '?')} {head}".rstrip(),
             f"status: {r.status}", ""]
    if r.components is not None:
        lines += _aligned_table(COMPONENT_COLUMNS, r.components)
    elif r.rows is not None:
        lines += _aligned_table(r.columns or (), r.rows)
    else:
        for k, v in _flat_results(r.results).items():
            lines.append(f"{k}: {_scalar_str(v)}")
    return "\n".join(lines) + "\n"


def _flat_results(results: dict | None) -> dict:
    flat = {}
    for k, v in (results or {}).items():
        if isinstance(v, dict):
            for kk, vv in v.items():
                flat[f"{k}.{kk}"] = vv
        elif isinstance(v, (list, tuple)):
            flat[k] = ";".join(str(x) for x in v)
        else:
            flat[k] = v
    return flat


# --- argv plumbing ----------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); keep codes ours
        raise UsageError(message)


def _add_format(sp):
    sp.add_argument("--format", choices=("text", "json", "csv"), default="text")


def _add_ribbon(sp, with_gbar=True):
    if with_gbar:
        sp.add_argument("--gbar", type=int, required=True,
                        help="genus of the reduced curve")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--delta", type=int, help="minus the nilradical degree")
    grp.add_argument("--deg-n", type=int, dest="deg_n",
                     help="nilradical degree itself; stored negated as delta")


def _ribbon(ns, gbar=None) -> RibbonParams:
    delta = ns.delta if ns.delta is not None else -ns.deg_n
    return RibbonParams(ns.gbar if gbar is None else gbar, delta)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ribbonmod",
                 description="exact invariants, existence tests and conjectural "
                             "component lists for sheaf moduli on ribbon curves")
    sub = ap.add_subparsers(dest="command", required=True, metavar="command")

    sp = sub.add_parser("invariants", help="rank, degree, slope, Euler characteristic")
    sp.add_argument("--gbar", type=int, required=True)
    for f in ("--r0", "--r1", "--d0", "--d1"):
        sp.add_argument(f, type=int, required=True)
    sp.add_argument("--polarization-degree", type=int, default=1, dest="pol")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_invariants)

    sp = sub.add_parser("exists", help="existence of semistable and stable sheaves")
    sp.add_argument("--kind", choices=("qlf", "rigid", "gvb", "l-locus"), required=True)
    _add_ribbon(sp)
    for f in ("--r0", "--r1", "--d0", "--d1", "--a", "--r", "--index", "--n", "--degree"):
        sp.add_argument(f, type=int)
    sp.add_argument("--cross-check", action="store_true", dest="cross_check",
                    help="for l-locus: also report the blow-up rederivation")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_exists)

    sp = sub.add_parser("dim", help="dimension of a moduli locus")
    sp.add_argument("--kind", choices=("qlf", "rigid", "gvb", "vb", "l-locus"), required=True)
    _add_ribbon(sp)
    for f in ("--r0", "--r1", "--a", "--r", "--n", "--index", "--degree"):
        sp.add_argument(f, type=int)
    _add_format(sp)
    sp.set_defaults(handler=_cmd_dim)

    sp = sub.add_parser("components", help="conjectural irreducible component list")
    _add_ribbon(sp)
    sp.add_argument("--rank", type=int, required=True, help="generalized rank R")
    sp.add_argument("--degree", type=int, required=True, help="generalized degree D")
    sp.add_argument("--include-vb-locus", action="store_true", dest="include_vb",
                    help="also emit the open-question index-0 bundle locus")
    sp.add_argument("--jobs", type=int, default=1)
    _add_format(sp)
    sp.set_defaults(handler=_cmd_components)

    sp = sub.add_parser("rank3", help="hand-tabulated rank-3 verdicts on the rational ribbon")
    grp = sp.add_mutually_exclusive_group(required=True)
    grp.add_argument("--delta", type=int)
    grp.add_argument("--deg-n", type=int, dest="deg_n")
    sp.add_argument("--d0", type=int, required=True)
    sp.add_argument("--d0-max", type=int, dest="d0_max",
                    help="sweep d0 up to this value inclusive")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_rank3)

    sp = sub.add_parser("blowup", help="ribbon parameters after blowing up points")
    _add_ribbon(sp)
    sp.add_argument("--length", type=int, required=True, help="number of blown-up points")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_blowup)

    sp = sub.add_parser("strata", help="per-partition stratum dimensions of a torsion locus")
    _add_ribbon(sp)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--index", type=int, required=True, help="total torsion length b")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_strata)

    sp = sub.add_parser("verify-lemmas", help="re-verify both comparison lemmas by sampling")
    sp.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED,
                    help=f"sampler seed; the {SEED_ENV_VAR} environment variable wins")
    _add_format(sp)
    sp.set_defaults(handler=_cmd_verify_lemmas)

    return ap


def _need(ns, *names):
    missing = [n for n in names if getattr(ns, n.replace("-", "_")) is None]
    if missing:
        raise UsageError("missing required arguments: " + ", ".join("--" + n for n in missing))


# --- subcommand handlers ----------------------------------------------------

def _cmd_invariants(ns) -> Report:
    p = RibbonParams(ns.gbar, 0)  # chi and P(T) only see gbar
    ct = CompleteType(ns.r0, ns.r1, ns.d0, ns.d1)
    inv = invariants_of(ct)
    const, linear = hilbert_polynomial(inv, p, ns.pol)
    query = {"command": "invariants", "gbar": ns.gbar, "r0": ns.r0, "r1": ns.r1,
             "d0": ns.d0, "d1": ns.d1, "polarization_degree": ns.pol}
    return Report(query=query, status="proved", results={
        "R": inv.R,
        "D": inv.D,
        "mu": str(slope(inv)),
        "chi": euler_characteristic(inv, p),
        "hilbert_constant": const,
        "hilbert_linear": linear,
    })


def _cmd_exists(ns) -> Report:
    p = _ribbon(ns)
    query = {"command": "exists", "kind": ns.kind, "gbar": p.gbar, "delta": p.delta}
    if ns.kind == "qlf":
        _need(ns, "r0", "r1", "d0", "d1")
        query.update(r0=ns.r0, r1=ns.r1, d0=ns.d0, d1=ns.d1)
        v = ss_qlf_exists(CompleteType(ns.r0, ns.r1, ns.d0, ns.d1), p)
        results = {"semistable": v.semistable_exists, "stable": v.stable_exists}
    elif ns.kind == "rigid":
        _need(ns, "a", "d0", "d1")
        query.update(a=ns.a, d0=ns.d0, d1=ns.d1)
        results = {"nonempty": rigid_locus_nonempty(ns.a, ns.d0, ns.d1, p)}
    elif ns.kind == "gvb":
        _need(ns, "r", "index")
        query.update(r=ns.r, index=ns.index)
        if ns.degree is not None:
            # a concrete degree makes the parity obstruction checkable
            query.update(degree=ns.degree)
            gvb_complete_type(ns.r, ns.degree, ns.index, p)
        v = gvb_ss_exists(ns.r, ns.index, p)
        results = {"semistable": v.semistable_exists, "stable": v.stable_exists}
    else:  # l-locus
        _need(ns, "n", "index", "d0", "d1")
        query.update(n=ns.n, index=ns.index, d0=ns.d0, d1=ns.d1)
        results = {"nonempty": l_locus_nonempty(ns.n, ns.index, ns.d0, ns.d1, p)}
        if ns.cross_check:
            cc = l_locus_cross_check(ns.n, ns.index, ns.d0, ns.d1, p)
            results["cross_check"] = {
                "verbatim": cc.verbatim,
                "via_blowup": cc.via_blowup,
                "agree": cc.agree,
            }
    return Report(query=query, status="proved", results=results)


def _cmd_dim(ns) -> Report:
    p = _ribbon(ns)
    query = {"command": "dim", "kind": ns.kind, "gbar": p.gbar, "delta": p.delta}
    if ns.kind == "qlf":
        _need(ns, "r0", "r1")
        query.update(r0=ns.r0, r1=ns.r1)
        results = {"dimension": dim_qlf_locus(CompleteType(ns.r0, ns.r1, 0, 0), p)}
    elif ns.kind == "rigid":
        _need(ns, "a")
        query.update(a=ns.a)
        results = {"dimension": dim_rigid_locus(ns.a, p)}
    elif ns.kind == "gvb":
        _need(ns, "r")
        query.update(r=ns.r)
        results = {"dimension": dim_gvb_locus(ns.r, p)}
    elif ns.kind == "vb":
        _need(ns, "r", "degree")
        query.update(r=ns.r, degree=ns.degree)
        nonempty, dimension = dim_vb_locus(ns.r, ns.degree, p)
        results = {"nonempty": nonempty, "dimension": dimension}
    else:  # l-locus
        _need(ns, "n", "index")
        query.update(n=ns.n, index=ns.index)
        results = {"dimension": dim_l_locus(ns.n, ns.index, p)}
    return Report(query=query, status="proved", results=results)


def _cmd_components(ns) -> Report:
    p = _ribbon(ns)
    comps = enumerate_components(p, ns.rank, ns.degree,
                                 include_index_zero_bundles=ns.include_vb,
                                 jobs=ns.jobs)
    rows = [{
        "kind": c.kind.value,
        "r0": c.complete_type.r0,
        "r1": c.complete_type.r1,
        "d0": c.complete_type.d0,
        "d1": c.complete_type.d1,
        "index": c.index,
        "dimension": c.dimension,
    } for c in comps]
    query = {"command": "components", "gbar": p.gbar, "delta": p.delta,
             "rank": ns.rank, "degree": ns.degree,
             "include_vb_locus": ns.include_vb, "jobs": ns.jobs}
    return Report(query=query, status="conjectural", components=rows)


def _cmd_rank3(ns) -> Report:
    delta = ns.delta if ns.delta is not None else -ns.deg_n
    p = RibbonParams(0, delta)
    d0_max = ns.d0 if ns.d0_max is None else ns.d0_max
    if d0_max < ns.d0:
        raise UsageError("--d0-max must not be below --d0")
    rows = []
    for d0 in range(ns.d0, d0_max + 1):
        # every verdict row satisfies d0 - 3*delta <= 2*d1 <= d0
        lo = (d0 - 3 * delta) // 2
        hi = -((-d0) // 2)
        for d1 in range(lo, hi + 1):
            verdict = rank3_rational_classify(d0, d1, p)
            if verdict is not Rank3Verdict.NO_SEMISTABLE:
                rows.append({"d0": d0, "d1": d1, "verdict": verdict.value})
    query = {"command": "rank3", "delta": delta, "d0": ns.d0, "d0_max": d0_max}
    return Report(query=query, status="proved", rows=rows,
                  columns=("d0", "d1", "verdict"))


def _cmd_blowup(ns) -> Report:
    p = _ribbon(ns)
    if ns.length < 0:
        raise UsageError("--length must be nonnegative")
    q = blowup(p, ns.length)
    query = {"command": "blowup", "gbar": p.gbar, "delta": p.delta, "length": ns.length}
    return Report(query=query, status="proved", results={
        "gbar": q.gbar, "delta": q.delta, "genus": ribbon_genus(q),
    })


def _cmd_strata(ns) -> Report:
    p = _ribbon(ns)
    if ns.index < 0:
        raise UsageError("--index must be nonnegative")
    rows = []
    for part in partitions(ns.index):
        rows.append({
            "partition": str(part),
            "length": part.length,
            "dimension": dim_l_stratum(ns.n, part, p),
        })
    query = {"command": "strata", "gbar": p.gbar, "delta": p.delta,
             "n": ns.n, "index": ns.index}
    return Report(query=query, status="proved", rows=rows,
                  columns=("partition", "length", "dimension"))


def _cmd_verify_lemmas(ns) -> Report:
    seed = ns.seed
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            seed = int(env)
        except ValueError:
            raise UsageError(f"{SEED_ENV_VAR} must be an integer, got {env!r}")
    if ns.samples < 1:
        raise UsageError("--samples must be positive")
    slope_v = verify_slope_lemma(ns.samples, seed)
    weight_v = verify_weight_lemma(ns.samples, seed + 1)
    ok = slope_v.ok and weight_v.ok
    results = {
        "seed": seed,
        "slope_checked": slope_v.checked,
        "slope_strict_cases": slope_v.strict_checked,
        "slope_counterexamples": len(slope_v.counterexamples),
        "weight_checked": weight_v.checked,
        "weight_strict_cases": weight_v.strict_checked,
        "weight_counterexamples": len(weight_v.counterexamples),
        "verdict": "ok" if ok else "FAILED",
    }
    if not ok:
        results["failures"] = list(slope_v.counterexamples + weight_v.counterexamples)
    query = {"command": "verify-lemmas", "samples": ns.samples, "seed": ns.seed}
    return Report(query=query, status="proved", results=results,
                  exit_code=EXIT_OK if ok else EXIT_USAGE)


def run(argv=None) -> int:
    """Parse argv, execute, print; returns the process exit code."""
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
        report = ns.handler(ns)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except IntegralityError as e:
        print(f"no such sheaf: {e}", file=sys.stderr)
        return EXIT_INTEGRALITY
    except DomainError as e:
        print(f"out of domain: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    sys.stdout.write(format_report(report, ns.format))
    return report.exit_code


def main() -> None:
    sys.exit(run())
