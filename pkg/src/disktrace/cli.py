"""Command-line front end: every subcommand writes CSV to stdout or --output.

    disktrace zeros --m-range 1:5 --n-range 0:3
    disktrace spectrum --t-max 6.2 --k-cap 100
    disktrace trace --t-range 6.3:6.4:0.01 --epsilon 0.05
    disktrace poisson --k 4 --l 1 --t-range 6.333 --epsilon 0.05
    disktrace verify --suite all

Floats are printed with 17 significant digits so reruns are byte-identical.
"""

from __future__ import annotations

import argparse
import csv
import math
import sys

import numpy as np

from . import bessel_zeros as bz
from . import length_spectrum as ls
from . import verify
from . import wave_trace as wt
from .errors import BudgetError, ConvergenceError, DomainError, GridError


def fmt(x):
    if isinstance(x, str):
        return x
    if isinstance(x, (bool, np.bool_)):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return f"{float(x):.17g}"


def _range(text, integer=False):
    """'a:b' (unit step), 'a:b:step' or a single value; endpoints inclusive."""
    parts = text.split(":")
    try:
        vals = [float(p) for p in parts]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    if len(vals) == 1:
        out = np.array(vals)
    elif len(vals) in (2, 3):
        lo, hi = vals[:2]
        step = vals[2] if len(vals) == 3 else 1.0
        if step <= 0 or hi < lo:
            raise argparse.ArgumentTypeError(f"bad range {text!r}")
        count = int(math.floor((hi - lo) / step + 1e-9)) + 1
        out = lo + step * np.arange(count)
    else:
        raise argparse.ArgumentTypeError(f"bad range {text!r}")
    if integer:
        if np.any(out != np.round(out)):
            raise argparse.ArgumentTypeError(f"integer range expected, got {text!r}")
        return out.astype(int)
    return out


def _int_range(text):
    return _range(text, integer=True)


def _positive(text):
    v = float(text)
    if not v > 0:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser():
    p = argparse.ArgumentParser(prog="disktrace", description=__doc__.split("\n")[0])
    p.add_argument("--output", "-o", help="CSV path (default: stdout)")
    sub = p.add_subparsers(dest="command", required=True)

    z = sub.add_parser("zeros", help="rho(m, n), beta, alpha and gradients")
    z.add_argument("--m-range", type=_range, required=True)
    z.add_argument("--n-range", type=_range, required=True)

    s = sub.add_parser("spectrum", help="periodic orbit lengths L_{k,l} <= t_max")
    s.add_argument("--t-max", type=_positive, required=True)
    s.add_argument("--k-cap", type=int, default=ls.DEFAULT_K_CAP)

    t = sub.add_parser("trace", help="Gaussian-mollified wave trace")
    t.add_argument("--t-range", type=_range, required=True)
    t.add_argument("--epsilon", type=_positive, default=0.05)
    t.add_argument("--lambda-cut", type=_positive, default=None)

    q = sub.add_parser("poisson", help="Poisson terms h_{k,l}(t)")
    q.add_argument("--k", type=_int_range, required=True)
    q.add_argument("--l", type=_int_range, required=True)
    q.add_argument("--t-range", type=_range, required=True)
    q.add_argument("--epsilon", type=_positive, default=0.05)
    q.add_argument("--nodes-per-unit", type=int, default=32)

    v = sub.add_parser("verify", help="run an acceptance suite")
    v.add_argument("--suite", choices=verify.SUITES + ("all",), required=True)
    return p


def _zeros(args):
    yield ("m", "n", "rho", "beta", "alpha", "dm", "dn")
    for n in args.n_range:
        for m in args.m_range:
            zp = bz.zero_point(m, n)
            g = bz.rho_grad(m, n)
            yield (m, n, zp.rho, zp.beta, zp.alpha, g.d_m, g.d_n)


def _spectrum(args):
    yield ("k", "l", "length", "is_near_cluster")
    for e in ls.enumerate_lengths(args.t_max, args.k_cap):
        yield (e.k, e.l, e.length, e.is_near_cluster)


def _trace(args):
    yield ("t", "epsilon", "re", "im", "terms")
    vals, terms, _ = wt.trace_values(args.t_range, args.epsilon, args.lambda_cut)
    for t, v in zip(args.t_range, vals):
        yield (t, args.epsilon, v.real, v.imag, terms)


def _poisson(args):
    yield ("k", "l", "t", "re", "im", "est_error")
    spec = wt.QuadSpec(nodes_per_unit=args.nodes_per_unit, epsilon=args.epsilon)
    vals, errs, _ = wt.poisson_table(args.k, args.l, args.t_range, spec)
    for a, k in enumerate(args.k):
        for b, l in enumerate(args.l):
            for i, t in enumerate(args.t_range):
                v = vals[i, a, b]
                yield (k, l, t, v.real, v.imag, errs[i, a, b])


def _write(rows, out):
    w = csv.writer(out, lineterminator="\n")
    header = next(rows)
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(x) for x in row])


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)  # exits with status 2 on bad arguments
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        if args.command == "verify":
            checks = verify.run_suite(args.suite)
            rows = iter([("suite", "check_id", "measured", "threshold", "pass")]
                        + [(c.suite, c.check_id, c.measured, c.threshold, c.passed)
                           for c in checks])
            _write(rows, out)
            failed = [c for c in checks if not c.passed]
            for c in failed:
                print(f"FAIL,{c.suite},{c.check_id},{fmt(c.measured)},{fmt(c.threshold)}",
                      file=sys.stderr)
            return 1 if failed else 0
        handler = {"zeros": _zeros, "spectrum": _spectrum, "trace": _trace,
                   "poisson": _poisson}[args.command]
        _write(handler(args), out)
        return 0
    except (DomainError, GridError, BudgetError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConvergenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        if out is not sys.stdout:
            out.close()


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
