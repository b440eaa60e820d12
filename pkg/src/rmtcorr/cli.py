"""Command line front end: ensemble configs in, correlation tables and
verification reports out.

Exit codes: 0 success, 1 numeric failure or failed verification
criterion, 2 configuration/usage errors.
"""

import argparse
import csv
import hashlib
import json
import os
import sys

import numpy as np

from . import __version__, CONVENTIONS
from .ensembles import EnsembleSpec
from .engine import (METHODS, VARIANTS, CorrelationRequest, evaluate)
from .kernels import (IncrementedPoint, fundamental_kernel, kernel_series,
                      hciz_exact, gaussian_pairing)
from .grassmann import verify_duality
from .mc import sample_batch, estimate_r1, hciz_mc


class ConfigError(Exception):
    pass


def _parse_grid(text):
    parts = text.split(":")
    if len(parts) != 3:
        raise ConfigError(f"grid must be lo:hi:count, got {text!r}")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as e:
        raise ConfigError(str(e))
    if count < 1 or hi <= lo:
        raise ConfigError("grid needs hi > lo and count >= 1")
    return np.linspace(lo, hi, count)


def _parse_metric(text, k):
    if text is None:
        return [1] * k
    signs = []
    for ch in text:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise ConfigError(f"metric characters must be + or -, got {ch!r}")
    if len(signs) != k:
        raise ConfigError(f"metric needs exactly k = {k} signs")
    return signs


def _load_spec(path):
    try:
        with open(path) as fh:
            return EnsembleSpec.from_json(fh.read())
    except FileNotFoundError:
        raise ConfigError(f"ensemble file not found: {path}")
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        raise ConfigError(f"bad ensemble config: {e}")


def _config_hash(args_dict):
    text = json.dumps(args_dict, sort_keys=True, default=str)
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _header(args_dict, seed):
    return {
        "version": __version__,
        "config_hash": _config_hash(args_dict),
        "seed": seed,
        "conventions": CONVENTIONS,
    }


def _out_path(path):
    outdir = os.environ.get("RMTCORR_OUTDIR")
    if outdir and path not in (None, "-"):
        return os.path.join(outdir, os.path.basename(path))
    return path


def _fmt(x):
    return format(float(x), ".17g")


def cmd_corr(args):
    spec = _load_spec(args.ensemble)
    if args.method not in METHODS:
        raise ConfigError(f"unknown method {args.method!r}; valid: {', '.join(METHODS)}")
    if args.variant not in VARIANTS:
        raise ConfigError(f"unknown variant {args.variant!r}; valid: {', '.join(VARIANTS)}")
    k = args.k
    metric = _parse_metric(args.metric, k)
    if k == 1:
        grids = [_parse_grid(args.grid)]
        probe = [(x,) for x in grids[0]]
    else:
        g = _parse_grid(args.grid)
        if k != 2:
            raise ConfigError("corr supports k = 1 or 2")
        probe = [(x, y) for x in g for y in g]

    header = _header(vars(args), args.seed)
    rows = []
    failed = False
    for pt in probe:
        points = [IncrementedPoint(x, side=metric[i]) for i, x in enumerate(pt)]
        req = CorrelationRequest(spec, k, points, args.variant, args.method)
        try:
            res = evaluate(req)
        except Exception as e:
            print(f"numeric failure at {pt}: {e}", file=sys.stderr)
            failed = True
            continue
        rows.append((args.method, args.variant, k) + pt
                    + (np.real(res.value), np.imag(res.value), res.error_estimate))

    footer = None
    if k == 1 and len(rows) > 1:
        xs = np.array([r[3] for r in rows])
        vals = np.array([r[4] for r in rows])
        footer = {"integral_r1": float(np.trapezoid(vals, xs))}

    path = _out_path(args.output)
    _emit(path, args.format, header, rows, k, footer)
    return 1 if failed else 0


def _emit(path, fmt, header, rows, k, footer):
    cols = (["method", "variant", "k"] + [f"x{i + 1}" for i in range(k)]
            + ["value_re", "value_im", "error"])
    if fmt == "json":
        doc = {"header": header,
               "columns": cols,
               "rows": [[r[0], r[1], r[2]] + [_fmt(v) for v in r[3:]] for r in rows]}
        if footer:
            doc["footer"] = {key: _fmt(v) for key, v in footer.items()}
        text = json.dumps(doc, indent=1)
        _write(path, text)
        return
    if fmt != "csv":
        raise ConfigError(f"unknown format {fmt!r}; valid: csv, json")
    lines = []
    for key, v in header.items():
        lines.append(f"# {key}: {v}")
    out = [",".join(cols)]
    for r in rows:
        out.append(",".join([str(r[0]), str(r[1]), str(r[2])]
                            + [_fmt(v) for v in r[3:]]))
    if footer:
        for key, v in footer.items():
            out.append(f"# {key}: {_fmt(v)}")
    _write(path, "\n".join(lines + out) + "\n")


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


SUITES = ("duality", "kernel-identity", "pairing", "hciz", "mc", "all")


def cmd_verify(args):
    if args.suite not in SUITES:
        raise ConfigError(f"unknown suite {args.suite!r}; valid: {', '.join(SUITES)}")
    run = [args.suite] if args.suite != "all" else list(SUITES[:-1])
    header = _header(vars(args), args.seed)
    for key, v in header.items():
        print(f"# {key}: {v}")
    ok = True
    for suite in run:
        name, passed, dev = _run_suite(suite, args)
        ok = ok and passed
        print(f"{name}: {'PASS' if passed else 'FAIL'} max_deviation={dev:.3e}")
    return 0 if ok else 1


def _run_suite(suite, args):
    if suite == "duality":
        k = args.k or 1
        N = args.N or 2
        rep = verify_duality(k, N, 4, args.seed)
        dev = max(rep.values())
        return f"duality(k={k},N={N})", dev < 1e-10, dev
    if suite == "kernel-identity":
        N = args.N or 20
        rng = np.random.default_rng(args.seed)
        dev = 0.0
        for _ in range(200):
            x = rng.uniform(-3, 3)
            s2 = rng.uniform(-3, 3)
            p = IncrementedPoint(x, side=1, epsilon=1e-9)
            a = fundamental_kernel(N, p, s2)
            b = kernel_series(N, p.shifted(), 1j * s2)
            dev = max(dev, abs(a - b) / max(abs(b), 1e-300))
        return f"kernel-identity(N={N})", dev < 1e-12, dev
    if suite == "pairing":
        dev = 0.0
        for N in range(2, 7):
            dev = max(dev, abs(gaussian_pairing(N) - 1.0))
        return "pairing(N=2..6)", dev < 1e-8, dev
    if suite == "hciz":
        rng = np.random.default_rng(args.seed)
        N = args.N or 2
        dev = 0.0
        for _ in range(3):
            E = np.sort(rng.uniform(-2, 2, N))
            R = np.sort(rng.uniform(-2, 2, N))
            exact = hciz_exact(E, R)
            est, err = hciz_mc(E, R, 200000, args.seed)
            dev = max(dev, abs(est - exact) / max(3 * err, 1e-300))
        return f"hciz(N={N})", dev < 1.0, dev
    if suite == "mc":
        spec = EnsembleSpec.gaussian(args.N or 4)
        batch = sample_batch(spec, 200000, args.seed)
        hist = estimate_r1(batch, (-3.5, 3.5, 40))
        xs = hist.centers()
        bad = 0
        for i, x in enumerate(xs):
            req = CorrelationRequest(spec, 1, [x], "R", "closed_form_gue")
            ref = float(np.real(evaluate(req).value))
            if abs(hist.density[i] - ref) > 3 * max(hist.errors[i], 1e-12):
                bad += 1
        frac = bad / len(xs)
        return f"mc(N={spec.N})", frac <= 0.05, frac
    raise ConfigError(f"unknown suite {suite!r}")


def build_parser():
    p = argparse.ArgumentParser(prog="rmtcorr",
                                description="finite-N spectral correlations")
    p.add_argument("--threads", type=int, default=0,
                   help="0 = serial deterministic mode")
    sub = p.add_subparsers(dest="command")

    pc = sub.add_parser("corr", help="correlation table on a grid")
    pc.add_argument("--ensemble", required=True)
    pc.add_argument("--k", type=int, default=1)
    pc.add_argument("--grid", required=True, help="lo:hi:count")
    pc.add_argument("--method", default="convolution")
    pc.add_argument("--variant", default="R")
    pc.add_argument("--metric", default=None, help="k signs, e.g. +- for k=2")
    pc.add_argument("--output", default="-")
    pc.add_argument("--format", default="csv")
    pc.add_argument("--seed", type=int, default=0)

    pv = sub.add_parser("verify", help="verification suites")
    pv.add_argument("--suite", default="all")
    pv.add_argument("--k", type=int, default=None)
    pv.add_argument("--N", type=int, default=None)
    pv.add_argument("--seed", type=int, default=7)
    return p


def _join_leading_dash(argv):
    """Let values like -4:4:401 follow --grid/--metric without being
    mistaken for flags, by joining them as --flag=value."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in ("--grid", "--metric") and i + 1 < len(argv) \
                and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv=None):
    parser = build_parser()
    if argv is None:
        argv = sys.argv[1:]
    argv = _join_leading_dash(list(argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    if args.command == "corr":
        try:
            return cmd_corr(args)
        except ConfigError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    if args.command == "verify":
        try:
            return cmd_verify(args)
        except ConfigError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    parser.print_usage(sys.stderr)
    return 2


if __name__ == "__main__":
    sys.exit(main())
