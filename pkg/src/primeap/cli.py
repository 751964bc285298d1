"""Command-line entry point for the experiments.

Subcommands reproduce the experiments end to end: modulus profiles, the
least-prime PDF/CDF tables (with the modified piecewise prediction),
moment comparisons in the Gaussian and Poissonian regimes, and the
fixture/identity verification suite.

Guarantees:
  * identical configuration produces byte-identical output at any
    --threads value (timings go to stderr, never into the payload);
  * every failure exits non-zero with a single machine-parseable
    "error: <category>: ..." line on stderr;
  * exit codes: 0 success, 1 validation, 2 computation, 3 fixture mismatch.

CSV dialect: comma-separated, '.' decimals, LF line endings, metadata in
'#'-prefixed header lines.  Floats are written with repr (shortest
round-trip), so files are reproducible bit for bit.
"""

from __future__ import annotations

import argparse
import io
import json
import math
import sys
import time
from pathlib import Path

import numpy as np

from . import apstats, cache, distributions as dist
from .singular import DEFAULT_TRUNCATION, modulus_profile
from .verify import run_verification

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_COMPUTATION = 2
EXIT_FIXTURE = 3

PI_MOMENT_CAP = 8
PSI_MOMENT_CAP = 8


class ValidationError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1, machine-parseable, not argparse's 2
        raise ValidationError(message)


def _fmt(x) -> str:
    """Deterministic scalar formatting for CSV cells."""
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return repr(float(x))


def _emit(payload: str, out: str | None) -> None:
    if out:
        Path(out).write_bytes(payload.encode("utf-8"))
        print(f"wrote {out}", file=sys.stderr)
    else:
        sys.stdout.write(payload)


def _json_payload(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---------------------------------------------------------------------------
# commands


def cmd_profile(args) -> int:
    prof = modulus_profile(args.q)
    report = {
        "command": "profile",
        "q": prof.q,
        "factorization": [[p, e] for p, e in prof.factorization.pairs],
        "phi": prof.phi,
        "omega": prof.omega,
        "B_q": prof.B_q,
        "A_q": prof.A_q,
        "sigma_q_sq": prof.sigma_q_sq,
        "tau": prof.tau,
        "warnings": (["sigma_q_sq <= 0: Gaussian standardization undefined "
                      "at this modulus"] if prof.sigma_q_sq <= 0 else []),
    }
    _emit(_json_payload(report), args.out)
    return EXIT_OK


def _least_prime_data(args):
    prof = modulus_profile(args.q)
    cache_dir = Path(args.cache_dir) if args.cache_dir else None
    table = cache.get_least_primes(args.q, args.ceiling, cache_dir)
    return prof, table


def _figure_csv(args, modified: bool) -> str:
    w, t_max = args.bin_width, args.t_max
    if w <= 0 or t_max <= 0:
        raise ValidationError("bin width and t-max must be positive")
    if args.ceiling is not None and args.ceiling < 2:
        raise ValidationError("ceiling must be >= 2")
    if args.truncation_prime < 100:
        raise ValidationError("truncation prime must be >= 100")
    prof, table = _least_prime_data(args)
    hist = dist.least_prime_histogram(table, prof, w, t_max)
    values = dist.least_prime_values(table, prof)
    edges = hist.edges[:-1]  # left edges, one row per bin
    density = hist.density()
    cdf_left = hist.cdf_at_edges()[:-1]

    buf = io.StringIO()
    name = "figure8" if modified else "figure7"
    buf.write(f"# primeap {name} v1\n")
    buf.write(f"# q: {prof.q}\n")
    buf.write(f"# phi: {prof.phi}\n")
    buf.write(f"# samples: {hist.total}\n")
    buf.write(f"# bin_width: {_fmt(w)}\n")
    buf.write(f"# t_max: {_fmt(t_max)}\n")
    buf.write(f"# scale_phi_log_q: {_fmt(prof.phi * math.log(prof.q))}\n")
    buf.write(f"# overflow_beyond_t_max: {hist.overflow}\n")
    cols = ["t_bin_left", "empirical_density", "empirical_cdf",
            "exponential_pdf", "exponential_cdf"]
    series = [edges, density, cdf_left, np.exp(-edges), -np.expm1(-edges)]

    if modified:
        pred = dist.ModifiedPrediction(prof, args.truncation_prime,
                                       t_max=t_max)
        series.append(pred(edges))
        cols.append("modified_cdf")
        breaks = pred.breakpoints(t_max)
        grid = dist.comparison_grid(prof, w, t_max)
        emp = dist.empirical_curve(values, grid)
        sup_exp = dist.sup_distance(emp, dist.exponential_curve(grid))
        sup_mod = dist.sup_distance(
            emp, dist.PredictionCurve(grid, pred(grid), "modified"))
        buf.write(f"# tau: {_fmt(prof.tau)}\n")
        buf.write("# breakpoints: "
                  + ",".join(_fmt(b) for b in breaks) + "\n")
        buf.write(f"# sup_distance_exponential: {_fmt(sup_exp)}\n")
        buf.write(f"# sup_distance_modified: {_fmt(sup_mod)}\n")

    buf.write(",".join(cols) + "\n")
    for i in range(len(edges)):
        buf.write(",".join(_fmt(s[i]) for s in series) + "\n")
    return buf.getvalue()


def cmd_figure7(args) -> int:
    _emit(_figure_csv(args, modified=False), args.out)
    return EXIT_OK


def cmd_figure8(args) -> int:
    _emit(_figure_csv(args, modified=True), args.out)
    return EXIT_OK


def cmd_psi_moments(args) -> int:
    if args.K_max > PSI_MOMENT_CAP:
        raise ValidationError(f"K-max capped at {PSI_MOMENT_CAP}")
    if args.q > args.N:
        raise ValidationError("psi-moments requires q <= N")
    prof = modulus_profile(args.q)
    table = apstats.ap_counts(args.N, args.q, B_q=prof.B_q)
    rows = []
    for K in range(args.K_max + 1):
        rep = apstats.psi_moment_report(table, prof, K)
        rows.append({
            "K": K,
            "empirical": rep.empirical,
            "predicted_main_term": rep.predicted_main_term,
            "predicted_closed_form": rep.predicted_closed_form,
            "rel_gap_main": (abs(rep.empirical / rep.predicted_main_term - 1.0)
                             if rep.predicted_main_term != 0 else None),
            "rel_gap_closed": (abs(rep.empirical / rep.predicted_closed_form - 1.0)
                               if rep.predicted_closed_form != 0 else None),
        })
    report = {
        "command": "psi-moments",
        "q": args.q,
        "N": args.N,
        "B_q": prof.B_q,
        "sigma_q_sq": prof.sigma_q_sq,
        "k1_collapse": apstats.psi_moment_k1_collapse(table),
        "moments": rows,
    }
    _emit(_json_payload(report), args.out)
    return EXIT_OK


def _poisson_block(table, lam: float) -> dict:
    kmax = max(int(math.ceil(10 * lam)), int(table.pi.max()))
    emp = np.bincount(table.pi, minlength=kmax + 1)[: kmax + 1] / table.phi
    pois = [dist.poisson_pmf(k, lam) for k in range(kmax + 1)]
    return {
        "support": list(range(kmax + 1)),
        "empirical_pmf": [float(x) for x in emp],
        "poisson_pmf": pois,
        "tv_distance": dist.poisson_total_variation(table.pi, lam),
    }


def _regime_warning(q: int, N: int, phi: int) -> str | None:
    target = N / math.log(N)
    if not (target / 4 <= phi <= target * 4):
        return (f"phi(q)={phi} is outside [N/(4 log N), 4N/log N]="
                f"[{target / 4:.1f}, {target * 4:.1f}]; the Poissonian "
                "regime needs phi(q) comparable to N/log N")
    return None


def cmd_pi_moments(args) -> int:
    if args.k_max > PI_MOMENT_CAP:
        raise ValidationError(f"k-max capped at {PI_MOMENT_CAP}")
    if args.q > args.N:
        raise ValidationError("pi-moments requires q <= N")
    prof = modulus_profile(args.q)
    table = apstats.ap_counts(args.N, args.q, B_q=prof.B_q)
    lam = args.N / (prof.phi * math.log(args.N))
    warning = _regime_warning(args.q, args.N, prof.phi)
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    rows = []
    for k in range(1, args.k_max + 1):
        emp = apstats.empirical_pi_moment(table, k)
        pred = apstats.poisson_moment_prediction(k, lam)
        rows.append({"k": k, "empirical": emp, "stirling_prediction": pred,
                     "rel_gap": abs(emp / pred - 1.0) if pred else None})
    report = {
        "command": "pi-moments",
        "q": args.q,
        "N": args.N,
        "lambda": lam,
        "regime_warning": warning,
        "moments": rows,
        "poisson": _poisson_block(table, lam),
    }
    _emit(_json_payload(report), args.out)
    return EXIT_OK


def solve_poisson_N(q: int, lam: float) -> int:
    """Smallest-iterate solution of N = lam * phi(q) * log N."""
    phi = modulus_profile(q).phi
    N = max(int(lam * phi * 10), 100)
    for _ in range(60):
        N_next = int(round(lam * phi * math.log(N)))
        if N_next == N:
            break
        N = N_next
    return N


def cmd_poisson(args) -> int:
    if args.lam <= 0:
        raise ValidationError("lambda must be positive")
    N = solve_poisson_N(args.q, args.lam)
    prof = modulus_profile(args.q)
    table = apstats.ap_counts(N, args.q, B_q=prof.B_q)
    lam = N / (prof.phi * math.log(N))
    warning = _regime_warning(args.q, N, prof.phi)
    if warning:
        print(f"warning: {warning}", file=sys.stderr)
    rows = []
    for k in (1, 2, 3):
        emp = apstats.empirical_pi_moment(table, k)
        pred = apstats.poisson_moment_prediction(k, lam)
        rows.append({"k": k, "empirical": emp, "stirling_prediction": pred,
                     "rel_gap": abs(emp / pred - 1.0)})
    report = {
        "command": "poisson",
        "q": args.q,
        "lambda_requested": args.lam,
        "N": N,
        "lambda": lam,
        "regime_warning": warning,
        "moments": rows,
        "poisson": _poisson_block(table, lam),
    }
    _emit(_json_payload(report), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    report = run_verification(args.fixtures)
    payload = {
        "command": "verify",
        "sections": report.sections,
        "mismatches": [m.describe() for m in report.mismatches],
        "ok": report.ok,
    }
    _emit(_json_payload(payload), args.out)
    if not report.ok:
        for m in report.mismatches:
            print(m.describe(), file=sys.stderr)
        print(f"error: fixture-mismatch: {len(report.mismatches)} "
              "record(s) failed", file=sys.stderr)
        return EXIT_FIXTURE
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> _Parser:
    parser = _Parser(prog="primeap", description=__doc__,
                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, *, q_required=True):
        if q_required:
            p.add_argument("--q", type=int, required=True, help="modulus")
        p.add_argument("--threads", type=int, default=1,
                       help="worker hint (results are identical at any value)")
        p.add_argument("--out", type=str, default=None, help="output path")

    p = sub.add_parser("profile", help="modulus constants")
    common(p)
    p.set_defaults(func=cmd_profile)

    for name, func in (("figure7", cmd_figure7), ("figure8", cmd_figure8)):
        p = sub.add_parser(name, help="least-prime distribution CSV")
        common(p, q_required=(name == "figure7"))
        if name == "figure8":
            p.add_argument("--q", type=int, default=30030, help="modulus")
        p.add_argument("--bin-width", type=float, default=dist.DEFAULT_BIN_WIDTH)
        p.add_argument("--t-max", type=float, default=dist.DEFAULT_T_MAX)
        p.add_argument("--ceiling", type=int, default=None,
                       help="least-prime scan ceiling")
        p.add_argument("--truncation-prime", type=int,
                       default=DEFAULT_TRUNCATION)
        p.add_argument("--cache-dir", type=str, default=None)
        p.set_defaults(func=func)

    p = sub.add_parser("psi-moments", help="weighted prime count moments")
    common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--K-max", type=int, default=4)
    p.set_defaults(func=cmd_psi_moments)

    p = sub.add_parser("pi-moments", help="prime count moments (Poisson regime)")
    common(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--k-max", type=int, default=3)
    p.set_defaults(func=cmd_pi_moments)

    p = sub.add_parser("poisson", help="count distribution vs Poisson(lambda)")
    common(p)
    p.add_argument("--lambda", dest="lam", type=float, required=True)
    p.set_defaults(func=cmd_poisson)

    p = sub.add_parser("verify", help="fixture and exact-identity suite")
    common(p, q_required=False)
    p.add_argument("--fixtures", type=str, default=None,
                   help="fixture file (defaults to the packaged one)")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    started = time.monotonic()
    try:
        args = parser.parse_args(argv)
        code = args.func(args)
    except ValidationError as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except ValueError as exc:
        print(f"error: validation: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except apstats.IncompleteTableError as exc:
        print(f"error: computation: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    except KeyboardInterrupt:
        print("error: computation: interrupted", file=sys.stderr)
        return EXIT_COMPUTATION
    except Exception as exc:  # noqa: BLE001 - single CLI failure funnel
        print(f"error: computation: {exc}", file=sys.stderr)
        return EXIT_COMPUTATION
    print(f"elapsed: {time.monotonic() - started:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
