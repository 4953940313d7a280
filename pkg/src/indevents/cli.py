"""Command-line front end.

Every verb prints CSV (default) or JSON on stdout.  Exit status is 0 on
success, 1 on a domain error or failed verification, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction
from typing import List, Optional, Sequence

from . import bounds, inclexcl, montecarlo, realizer, transform
from .errors import IndEventsError
from .families import SeriesFamily
from .numbers import DisjointWeights, ProbSeq, format_rational, parse_number

DEFAULT_GRIDS = {"U": ("0", "5", "0.05"), "S": ("0", "0.99", "0.01")}
DEFAULT_NS = "1,2,5,inf"


class InputError(ValueError):
    """Malformed command-line input (exit status 2)."""


def fmt(v) -> str:
    if isinstance(v, str):
        return v
    if isinstance(v, Fraction):
        return format_rational(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, int):
        return str(v)
    v = float(v)
    if math.isinf(v):
        return "inf" if v > 0 else "-inf"
    return f"{v:.12g}"


def jsonable(v):
    if isinstance(v, (list, tuple)):
        return [jsonable(a) for a in v]
    if isinstance(v, dict):
        return {k: jsonable(a) for k, a in v.items()}
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    if isinstance(v, Fraction):
        return format_rational(v)
    v = float(v)
    return "inf" if math.isinf(v) else v


def _seq(text: str, exact: bool, cls=ProbSeq):
    try:
        return cls.parse(text, exact=exact)
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, IndEventsError):
            raise
        raise InputError(str(exc)) from exc


def _num(text: str, exact: bool):
    try:
        return parse_number(text, exact=exact)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc


def _family(text: str) -> SeriesFamily:
    try:
        return SeriesFamily.parse(text)
    except IndEventsError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(str(exc)) from exc


def _ns(text: str) -> list:
    out = []
    for tok in text.split(","):
        tok = tok.strip().lower()
        if tok in ("inf", "infinity"):
            out.append(math.inf)
            continue
        try:
            out.append(int(tok))
        except ValueError as exc:
            raise InputError(f"bad N value {tok!r}") from exc
    return out


def _table(header: Sequence[str], rows: Sequence[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for r in rows:
        w.writerow([fmt(v) for v in r])
    return buf.getvalue()


def _emit(args, header: Sequence[str], rows: Sequence[Sequence]) -> str:
    if args.format == "json":
        return json.dumps([dict(zip(header, jsonable(list(r)))) for r in rows], indent=1) + "\n"
    return _table(header, rows)


def _sampling(args) -> montecarlo.SampleConfig:
    return montecarlo.SampleConfig(
        seed=args.seed, n_samples=args.samples, streams=args.streams, workers=args.workers
    )


# verbs


def cmd_transform(args) -> str:
    t = transform.forward(_seq(args.x, args.exact))
    if args.format == "json":
        return json.dumps({"T": t.to_json()}) + "\n"
    return ",".join(fmt(v) for v in t) + "\n"


def cmd_invert(args) -> str:
    x = transform.inverse(_seq(args.t, args.exact, DisjointWeights))
    if args.format == "json":
        return json.dumps({"x": x.to_json()}) + "\n"
    return ",".join(fmt(v) for v in x) + "\n"


def cmd_union(args) -> str:
    if (args.x is None) == (args.family is None):
        raise InputError("give exactly one of --x or --family")
    if args.family is not None:
        res = transform.limit_sum_T(_family(args.family), args.eps)
        return _emit(args, ["value", "status", "terms", "error_bound"],
                     [(res.value, res.status, res.n_terms, res.error_bound)])
    x = _seq(args.x, args.exact)
    return _emit(args, ["product", "inclusion_exclusion"],
                 [(transform.union_prob(x), inclexcl.inclusion_exclusion(x))])


def _grid(lo: str, hi: str, step: str) -> List[Fraction]:
    a, b, h = (_num(v, True) for v in (lo, hi, step))
    if h <= 0:
        raise InputError("--step must be positive")
    n = int((b - a) / h + Fraction(1, 10**9))
    return [a + i * h for i in range(n + 1)]


def _bound_value(kind: str, n, arg: float):
    finite = not math.isinf(n)
    if kind == "U":
        if finite and arg > n:
            return None
        return bounds.lower_union_bound(n, arg)
    if kind == "S":
        if arg > 1:
            return None
        if not finite and arg == 1:
            return math.inf
        return bounds.upper_sum_bound(n, arg)
    if kind == "best":
        return bounds.best_lower_union(arg).value
    if kind == "supT":
        if finite and arg > n:
            return None
        return bounds.opposite_extremals(n, total=arg)
    if kind == "infX":
        if arg > 1:
            return None
        return bounds.opposite_extremals(n, union=arg)
    raise InputError(f"unknown kind {kind!r}")


def cmd_bounds_table(args) -> str:
    lo, hi, step = DEFAULT_GRIDS["S" if args.kind in ("S", "infX") else "U"]
    grid = _grid(args.start or lo, args.stop or hi, args.step or step)
    rows = []
    for n in _ns(args.N):
        for g in grid:
            value = _bound_value(args.kind, n, float(g))
            if value is not None:
                rows.append((args.kind, n, float(g), value))
    return _emit(args, ["kind", "N", "arg", "value"], rows)


def cmd_best_bound(args) -> str:
    b = bounds.best_lower_union(_num(args.s, args.exact))
    return _emit(args, ["value", "witness_N"], [(b.value, b.witness_n)])


def cmd_sym_sums(args) -> str:
    x = _seq(args.x, args.exact)
    if args.format == "json":
        s = inclexcl.elementary_sums(x)
        rows = [(k, v, p) for k, (v, p) in enumerate(zip(s.values, s.partial_sums()), start=1)]
        return _emit(args, ["k", "S_k", "partial"], rows)
    return inclexcl.sums_table_csv(x)


def cmd_bonferroni(args) -> str:
    b = inclexcl.bonferroni(_seq(args.x, args.exact), args.r)
    return _emit(args, ["r", "lower", "upper", "lower_clamped", "upper_clamped"],
                 [(b.r, b.lower, b.upper, b.lower_clamped, b.upper_clamped)])


def cmd_tail_cert(args) -> str:
    c = inclexcl.tail_certificate(_family(args.family), args.K)
    conv = (lambda v: v) if args.exact else float
    return _emit(args, ["K", "S_K_upper", "S_next_upper", "remainder_bound", "decay_ratio"],
                 [(c.k, conv(c.s_k), conv(c.s_upper), conv(c.remainder_bound), conv(c.decay_ratio))])


def cmd_realize(args) -> str:
    c = realizer.realize(_seq(args.x, True), max_n=args.max_n)
    doc = realizer.export_construction(c) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(doc)
        return ""
    return doc


def _load(path: str) -> realizer.Construction:
    try:
        with open(path) as fh:
            return realizer.import_construction(fh.read())
    except (OSError, ValueError, KeyError, TypeError) as exc:
        if isinstance(exc, IndEventsError):
            raise
        raise InputError(f"cannot read construction {path!r}: {exc}") from exc


class VerificationFailed(Exception):
    def __init__(self, text: str):
        super().__init__(text)
        self.text = text


def cmd_verify(args) -> str:
    rep = realizer.verify_independence(_load(args.input))
    if args.format == "json":
        text = json.dumps({
            "ok": rep.ok,
            "failures": [list(f) for f in rep.failures],
            "atoms_consistent": rep.atoms_consistent,
            "overlapping_events": list(rep.overlapping_events),
        }) + "\n"
    else:
        lines = ["ok" if rep.ok else "fail"]
        lines += ["subset," + " ".join(str(i) for i in f) for f in rep.failures]
        if not rep.atoms_consistent:
            lines.append("atoms,inconsistent")
        lines += [f"overlap,{i}" for i in rep.overlapping_events]
        text = "\n".join(lines) + "\n"
    if not rep.ok:
        raise VerificationFailed(text)
    return text


def cmd_sample(args) -> str:
    if (args.x is None) == (args.input is None):
        raise InputError("give exactly one of --x or --in")
    cfg = _sampling(args)
    if args.input is not None:
        est, method = montecarlo.estimate_union_geometric(_load(args.input), cfg), "geometric"
    else:
        est, method = montecarlo.estimate_union_bernoulli(_seq(args.x, args.exact), cfg), "bernoulli"
    return _emit(args, ["method", "estimate", "stderr", "hits", "samples"],
                 [(method, est.estimate, est.stderr, est.hits, est.n_samples)])


def cmd_bc_scan(args) -> str:
    rows = montecarlo.borel_cantelli_scan(_family(args.family), args.N_max, _sampling(args))
    if args.format == "json":
        return _emit(args, ["N", "exact", "empirical", "stderr"],
                     [(r.n, r.exact if args.exact else float(r.exact), r.empirical, r.stderr) for r in rows])
    return montecarlo.scan_csv(rows, exact=args.exact)


def cmd_counterexample(args) -> str:
    c = bounds.dependent_counterexample(_num(args.x, args.exact), args.N)
    return _emit(args, ["union", "bound_rhs", "violated", "sum_lhs", "sum_rhs"],
                 [(c.union, c.bound_rhs, c.violated, c.sum_lhs, c.sum_rhs)])


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("csv", "json"), default="csv")
    common.add_argument("--exact", action="store_true", help="exact rational arithmetic")

    sampling = argparse.ArgumentParser(add_help=False)
    sampling.add_argument("--seed", type=int, default=0)
    sampling.add_argument("--samples", type=int, default=100_000)
    sampling.add_argument("--streams", type=int, default=1)
    sampling.add_argument("--workers", type=int, default=None)

    p = argparse.ArgumentParser(prog="indevents", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="verb", required=True)

    def verb(name, fn, help, parents=(common,)):
        sp = sub.add_parser(name, help=help, parents=list(parents))
        sp.set_defaults(func=fn)
        return sp

    sp = verb("transform", cmd_transform, "probabilities -> disjoint weights T")
    sp.add_argument("--x", required=True)
    sp = verb("invert", cmd_invert, "disjoint weights T -> probabilities")
    sp.add_argument("--t", required=True)
    sp = verb("union", cmd_union, "union probability of a finite sequence or an infinite family")
    sp.add_argument("--x")
    sp.add_argument("--family")
    sp.add_argument("--eps", type=float, default=1e-12)
    sp = verb("bounds-table", cmd_bounds_table, "tables of U_N(s) and S_N(u) for plotting")
    sp.add_argument("--kind", choices=("U", "S", "best", "supT", "infX"), default="U")
    sp.add_argument("--N", default=DEFAULT_NS)
    sp.add_argument("--from", dest="start")
    sp.add_argument("--to", dest="stop")
    sp.add_argument("--step")
    sp = verb("best-bound", cmd_best_bound, "max over N of U_N(s)")
    sp.add_argument("--s", required=True)
    sp = verb("sym-sums", cmd_sym_sums, "elementary symmetric sums with partial alternating sums")
    sp.add_argument("--x", required=True)
    sp = verb("bonferroni", cmd_bonferroni, "Bonferroni truncations")
    sp.add_argument("--x", required=True)
    sp.add_argument("--r", type=int, required=True)
    sp = verb("tail-cert", cmd_tail_cert, "remainder bound for the infinite inclusion-exclusion series")
    sp.add_argument("--family", required=True)
    sp.add_argument("--K", type=int, required=True)
    sp = verb("realize", cmd_realize, "build independent events in the unit square (JSON)")
    sp.add_argument("--x", required=True)
    sp.add_argument("--max-n", type=int, default=realizer.DEFAULT_MAX_N)
    sp.add_argument("--out")
    sp = verb("verify", cmd_verify, "check a construction for mutual independence")
    sp.add_argument("--in", dest="input", required=True)
    sp = verb("sample", cmd_sample, "Monte Carlo union estimate", (common, sampling))
    sp.add_argument("--x")
    sp.add_argument("--in", dest="input")
    sp = verb("bc-scan", cmd_bc_scan, "exact vs simulated partial unions", (common, sampling))
    sp.add_argument("--family", required=True)
    sp.add_argument("--N-max", dest="N_max", type=int, default=100)
    sp = verb("counterexample", cmd_counterexample, "identical events break the bounds")
    sp.add_argument("--x", required=True)
    sp.add_argument("--N", type=int, required=True)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except InputError as exc:
        print(f"indevents {args.verb}: {exc}", file=sys.stderr)
        return 2
    except VerificationFailed as exc:
        sys.stdout.write(exc.text)
        return 1
    except (IndEventsError, ZeroDivisionError) as exc:
        print(f"indevents {args.verb}: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
