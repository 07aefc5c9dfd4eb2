"""Command-line driver: ``ipx {identities,verify,search,list}``.

Reports are JSON (default) or CSV. Exit status: 0 if every record passes,
1 on any violation, 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import csv
import fnmatch
import io
import json
import math
import os
import sys

import numpy as np

from . import __version__, identities
from .catalog import feasible_dims, fuzz, list_entries
from .errors import InfeasibleConstraints
from .scalars import TolerancePolicy
from .search import tightness_search

DEFAULT_SEED = 42
DEFAULT_SAMPLES = {"verify": 10000, "identities": 1000, "search": 200, "list": 0}
FIELDS = ("id", "quote", "samples", "max_excess", "max_tightness", "pass")


class ConfigError(Exception):
    pass


def parse_dims(text):
    """``"a..b"`` (inclusive) or a comma list such as ``"1,3,5"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            dims = list(range(int(lo), int(hi) + 1))
        else:
            dims = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dims {text!r}; use a..b or a comma list") from None
    if not dims or min(dims) < 1:
        raise argparse.ArgumentTypeError("dims must be a nonempty list of positive integers")
    return dims


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="ipx", description="Inner-product inequality verification toolkit.")
    p.add_argument("--version", action="version", version=f"ipx {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    for name, help_ in (
        ("identities", "exact and float checks of the polynomial identities"),
        ("verify", "fuzz catalog entries with constrained random inputs"),
        ("search", "extremal tightness search per entry"),
        ("list", "print the registry"),
    ):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--entries", default="*", help="glob over entry ids (default: all)")
        s.add_argument("--samples", type=_positive, default=None, help="samples per dimension")
        s.add_argument("--dims", type=parse_dims, default=None, help="a..b or comma list (default 1..8)")
        s.add_argument("--seed", type=int, default=None, help="seed (default: $IPX_SEED or 42)")
        s.add_argument("--eps-rel", type=float, default=1e-9)
        s.add_argument("--eps-abs", type=float, default=1e-12)
        s.add_argument("--format", choices=("json", "csv"), default="json")
        s.add_argument("--out", default=None, help="write the report here instead of stdout")
        s.add_argument("--include-debug", action="store_true", help=argparse.SUPPRESS)
        if name == "search":
            s.add_argument("--budget", type=_positive, default=200, help="random starts per search")
            s.add_argument("--link", type=int, default=0, help="chain link to maximise")
    return p


def _num(x):
    if x is None:
        return None
    x = float(x)
    if math.isfinite(x):
        return x
    return "inf" if x > 0 else "-inf"


def _select(pattern, include_debug):
    pool = list_entries(include_debug)
    chosen = [e for e in pool if fnmatch.fnmatchcase(e.id, pattern)]
    if not chosen:
        raise ConfigError(f"no entry matches {pattern!r}")
    return chosen


def run_identities(cfg, policy):
    ids = [i for i in identities.IDENTITY_IDS if fnmatch.fnmatchcase(i, cfg["entries"])]
    if not ids:
        raise ConfigError(f"no identity matches {cfg['entries']!r}")
    dims = [d for d in cfg["dims"] if d <= 5] or cfg["dims"]
    records = []
    for k, ident in enumerate(ids):
        rng = np.random.default_rng([cfg["seed"], k])
        worst, ok, count = -math.inf, True, 0
        for j in range(cfg["samples"]):
            dim = dims[j % len(dims)]
            inp = identities.random_inputs(ident, rng, dim, zero_beta=(j % 10 == 9))
            exact = identities.check_identity(ident, inp, policy)
            flt = identities.check_identity(ident, identities.to_float(inp), policy)
            ok &= exact.exact_pass and flt.passed
            # same convention as catalog fuzzing: overshoot beyond the tolerance
            over = flt.residual if ident == "SCALAR_MAX" else abs(flt.residual)
            excess = (over - policy.tolerance(flt.scale)) / max(1.0, flt.scale)
            worst = max(worst, excess)
            count += 1
        records.append(
            {
                "id": ident,
                "quote": identities.DESCRIPTIONS[ident],
                "samples": count,
                "max_excess": _num(worst),
                "max_tightness": None,
                "pass": bool(ok),
            }
        )
    return records


def run_verify(cfg, policy):
    records = []
    for e in _select(cfg["entries"], cfg["include_debug"]):
        dims = feasible_dims(e.id, cfg["dims"])
        if not dims:
            print(f"ipx: {e.id} skipped, no feasible dimension in {cfg['dims']}", file=sys.stderr)
            continue
        s = fuzz(e.id, cfg["samples"], dims, cfg["seed"], policy)
        records.append(
            {
                "id": e.id,
                "quote": e.quote,
                "samples": s.samples,
                "max_excess": _num(s.max_excess),
                "max_tightness": _num(s.max_tightness),
                "pass": bool(s.passed),
            }
        )
    return records


def run_search(cfg, policy):
    records = []
    for e in _select(cfg["entries"], cfg["include_debug"]):
        dims = feasible_dims(e.id, cfg["dims"])
        if not dims:
            print(f"ipx: {e.id} skipped, no feasible dimension in {cfg['dims']}", file=sys.stderr)
            continue
        if not 0 <= cfg["link"] < len(e.links):
            raise ConfigError(f"{e.id} has no link {cfg['link']}")
        best = -math.inf
        for d in dims:
            try:
                r = tightness_search(e.id, cfg["link"], d, cfg["budget"], cfg["seed"], policy=policy)
            except InfeasibleConstraints as exc:
                print(f"ipx: {exc}", file=sys.stderr)
                continue
            best = max(best, r.best_tightness)
        records.append(
            {
                "id": e.id,
                "quote": e.quote,
                "samples": cfg["budget"] * len(dims),
                "max_excess": None,
                "max_tightness": _num(best),
                # a ratio above 1 + tolerance would be a counterexample
                "pass": bool(best <= 1.0 + policy.tolerance(1.0)),
            }
        )
    return records


def run_list(cfg, policy):
    return [
        {"id": e.id, "quote": e.quote, "samples": 0, "max_excess": None, "max_tightness": None, "pass": True}
        for e in _select(cfg["entries"], cfg["include_debug"])
    ]


RUNNERS = {"identities": run_identities, "verify": run_verify, "search": run_search, "list": run_list}


def render(report, fmt):
    if fmt == "json":
        return json.dumps(report, indent=2) + "\n"
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=FIELDS, lineterminator="\n")
    w.writeheader()
    for rec in report["entries"]:
        w.writerow({k: "" if rec[k] is None else rec[k] for k in FIELDS})
    return buf.getvalue()


def make_config(args):
    seed = args.seed
    if seed is None:
        env = os.environ.get("IPX_SEED")
        try:
            seed = int(env) if env else DEFAULT_SEED
        except ValueError:
            raise ConfigError(f"IPX_SEED must be an integer, got {env!r}") from None
    cfg = {
        "command": args.command,
        "entries": args.entries,
        "samples": args.samples or DEFAULT_SAMPLES[args.command],
        "dims": args.dims or list(range(1, 9)),
        "seed": seed,
        "eps_rel": args.eps_rel,
        "eps_abs": args.eps_abs,
        "format": args.format,
        "include_debug": args.include_debug,
    }
    if args.command == "search":
        cfg["budget"] = args.budget
        cfg["link"] = args.link
    return cfg


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        cfg = make_config(args)
        try:
            policy = TolerancePolicy(cfg["eps_rel"], cfg["eps_abs"])
        except ValueError as exc:
            raise ConfigError(str(exc)) from None
        records = RUNNERS[cfg["command"]](cfg, policy)
        report = {
            "version": __version__,
            "config": cfg,
            "entries": records,
            "pass": all(r["pass"] for r in records),
        }
        text = render(report, cfg["format"])
        if args.out:
            try:
                with open(args.out, "w") as fh:
                    fh.write(text)
            except OSError as exc:
                raise ConfigError(f"cannot write {args.out}: {exc.strerror}") from None
        else:
            sys.stdout.write(text)
    except (ConfigError, KeyError) as exc:
        print(f"ipx: error: {exc}", file=sys.stderr)
        return 2
    return 0 if report["pass"] else 1


if __name__ == "__main__":
    sys.exit(main())
