"""Command line front end.

::

    gpgcd gcd F.json G.json --d 2 [--epsilon 1e-8] [--max-iter 50] [--format json|text]
    gpgcd bench --m 10 --n 10 --d 5 --trials 100 --noise 0.1 --seed 1 [--format csv|json]

Polynomial files are JSON documents ``{"degree": k, "coeffs": [[re, im], ...]}``
with coefficients in ascending degree order.  Results go to stdout,
diagnostics to stderr.  Exit codes: 0 success, 2 bad input, 3 no
convergence, 4 rank deficiency or GCD recovery failure.
"""
import argparse
import json
import logging
import math
import sys

from .experiments import InstanceParams, run_batch
from .linalg import RankDeficiencyError
from .optimizer import NonConvergenceError, OptimizerConfig
from .poly import Poly
from .recovery import RecoveryError, approx_gcd

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NONCONVERGENCE = 3
EXIT_RANK = 4

_COEFFS_SCHEMA = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "array", "minItems": 2, "maxItems": 2,
        "items": {"type": "number"},
    },
}

POLY_SCHEMA = {
    "type": "object",
    "required": ["degree", "coeffs"],
    "properties": {
        "degree": {"type": "integer", "minimum": 0},
        "coeffs": _COEFFS_SCHEMA,
    },
}

RESULT_SCHEMA = {
    "type": "object",
    "required": ["H", "F_tilde", "G_tilde", "A", "B", "perturbation",
                 "iterations", "residual_chosen", "candidate_used"],
    "properties": {
        "H": POLY_SCHEMA,
        "F_tilde": POLY_SCHEMA,
        "G_tilde": POLY_SCHEMA,
        "A": POLY_SCHEMA,
        "B": POLY_SCHEMA,
        "perturbation": {"type": "number", "minimum": 0},
        "iterations": {"type": "integer", "minimum": 1},
        "residual_chosen": {"type": "number", "minimum": 0},
        "candidate_used": {"enum": ["from_A", "from_B"]},
        "degenerate_leading_coefficient": {"type": "boolean"},
    },
}


class InputError(ValueError):
    pass


def poly_to_doc(p):
    return {"degree": p.degree, "coeffs": [[float(c.real), float(c.imag)] for c in p.coeffs]}


def poly_from_doc(doc):
    """Parse a polynomial document; raises :class:`InputError` when malformed."""
    if not isinstance(doc, dict) or "degree" not in doc or "coeffs" not in doc:
        raise InputError("polynomial document needs 'degree' and 'coeffs'")
    deg, coeffs = doc["degree"], doc["coeffs"]
    if not isinstance(deg, int) or isinstance(deg, bool) or deg < 0:
        raise InputError("'degree' must be a non-negative integer")
    if not isinstance(coeffs, list) or len(coeffs) != deg + 1:
        raise InputError(f"'coeffs' must be a list of degree+1 = {deg + 1} pairs")
    out = []
    for c in coeffs:
        if (not isinstance(c, list) or len(c) != 2
                or not all(isinstance(v, (int, float)) and not isinstance(v, bool) for v in c)
                or not all(math.isfinite(v) for v in c)):
            raise InputError(f"malformed coefficient {c!r}: expected [re, im] finite numbers")
        out.append(complex(c[0], c[1]))
    return Poly(out)


def read_poly(path):
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as err:
        raise InputError(f"cannot read {path}: {err.strerror}") from None
    except json.JSONDecodeError as err:
        raise InputError(f"{path} is not valid JSON: {err.msg}") from None
    return poly_from_doc(doc)


def result_to_doc(res):
    return {
        "H": poly_to_doc(res.H),
        "F_tilde": poly_to_doc(res.F_tilde),
        "G_tilde": poly_to_doc(res.G_tilde),
        "A": poly_to_doc(res.A),
        "B": poly_to_doc(res.B),
        "perturbation": res.perturbation,
        "iterations": res.iterations,
        "residual_chosen": res.residual_chosen,
        "candidate_used": res.candidate_used,
        "degenerate_leading_coefficient": res.degenerate_leading_coefficient,
    }


def _fail(code, kind, reason):
    print(json.dumps({"error": kind, "reason": reason}), file=sys.stderr)
    return code


def cmd_gcd(args):
    try:
        F = read_poly(args.f_path)
        G = read_poly(args.g_path)
        d = args.d
        if not (0 < d < min(F.degree, G.degree)):
            raise InputError(
                f"degree constraint violated: need 0 < d < min(deg F, deg G), "
                f"got d={d}, deg F={F.degree}, deg G={G.degree}")
        config = OptimizerConfig(epsilon=args.epsilon, max_iterations=args.max_iter)
    except (InputError, ValueError) as err:
        return _fail(EXIT_INPUT, "input", str(err))

    try:
        res = approx_gcd(F, G, d, config)
    except NonConvergenceError as err:
        return _fail(EXIT_NONCONVERGENCE, "nonconvergence", str(err))
    except (RankDeficiencyError, RecoveryError) as err:
        return _fail(EXIT_RANK, "rank" if isinstance(err, RankDeficiencyError) else "recovery",
                     str(err))

    doc = result_to_doc(res)
    if args.format == "json":
        print(json.dumps(doc, indent=2))
    else:
        print(f"H            = {res.H}")
        print(f"perturbation = {res.perturbation:.6e}")
        print(f"iterations   = {res.iterations}")
    return EXIT_OK


def cmd_bench(args):
    try:
        params = InstanceParams(args.m, args.n, args.d, args.noise, args.noise,
                                seed=args.seed, complex_coeffs=not args.real)
        if args.trials < 1:
            raise ValueError("trials must be >= 1")
        config = OptimizerConfig(epsilon=args.epsilon, max_iterations=args.max_iter)
    except ValueError as err:
        return _fail(EXIT_INPUT, "input", str(err))
    rec = run_batch(params, args.trials, config, workers=args.workers)
    for t in rec.details:
        if not t.converged:
            logging.getLogger(__name__).warning("trial %d failed: %s", t.index, t.failure)
    sys.stdout.write(rec.to_csv() if args.format == "csv" else rec.to_json() + "\n")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.exit(_fail(EXIT_INPUT, "input", message))


def build_parser():
    ap = _Parser(prog="gpgcd", description="Approximate GCD of complex polynomials.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("gcd", help="approximate GCD of two polynomials")
    g.add_argument("f_path")
    g.add_argument("g_path")
    g.add_argument("--d", "-d", type=int, required=True, help="GCD degree")
    g.add_argument("--epsilon", type=float, default=1e-8)
    g.add_argument("--max-iter", type=int, default=50)
    g.add_argument("--format", choices=["json", "text"], default="json")
    g.set_defaults(func=cmd_gcd)

    b = sub.add_parser("bench", help="randomized benchmark")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--d", type=int, required=True)
    b.add_argument("--trials", type=int, default=100)
    b.add_argument("--noise", type=float, default=0.1, help="noise 2-norm for both F and G")
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--real", action="store_true", help="real coefficients only")
    b.add_argument("--workers", type=int, default=1)
    b.add_argument("--epsilon", type=float, default=1e-8)
    b.add_argument("--max-iter", type=int, default=50)
    b.add_argument("--format", choices=["csv", "json"], default="csv")
    b.set_defaults(func=cmd_bench)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
