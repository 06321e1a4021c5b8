"""Command-line front end: verification tables and CSV/JSON artifacts.

Every subcommand prints a pass/fail or report table and, when it has a
file artifact, writes it under the output directory (flag --output, or
the QSU2_OUTPUT_DIR environment variable, default "."); identical
configuration and seed produce byte-identical files.  The exit status
reflects exact-identity suites only -- ratio reports are informational.

q is accepted as an exact rational ("7/10"); a float is accepted too,
with the caveat that exact comparisons then run at tolerance 1e-10
against the numeric evaluation path.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import random
import sys
from dataclasses import dataclass
from fractions import Fraction

from .qarith import QPoint, QScalar, evaluate
from .algebra import (
    AlgebraElement, haar, star, coproduct, counit, antipode, random_element,
)
from .peterweyl import PWTable
from .fourier import (
    FourierArray, fourier_transform, inverse_fourier, plancherel_sum,
    SU2Grid, inequality_ratio,
)
from .multiplier import apply_symbol, extract_symbol, lp_lq_bound
from .spectral import DiracSpec, summability_classify, boundedness_scan
from .calculus import (
    THREE_D, FOUR_D, calculus, admissibility_check, growth_table,
    geometric_dirac_eigenvalue_report, q_laplacian,
    laplacian_eigenvalue, laplacian_eigenvalue_identity_holds,
)
from .serialize import write_csv, dump_json, fourier_array_to_json

_KIND_ALIASES = {"hy": "hausdorff-young", "paley": "paley",
                 "hy-paley": "hy-paley", "hl": "hardy-littlewood",
                 "cor58": "cor-5.8"}


@dataclass
class RunConfig:
    q: object
    twice_l_max: int
    p: float
    b: float
    beta: float
    seed: int
    output: str
    fmt: str
    trials: int
    exact_q: bool
    grid: int = 64

    @property
    def point(self):
        return QPoint(self.q)


def _parse_fraction_or_float(text):
    try:
        return Fraction(text), True
    except ValueError:
        return float(text), False


def _parse_spin(text):
    val = Fraction(text)
    twice = val * 2
    if twice.denominator != 1 or twice < 0:
        raise argparse.ArgumentTypeError(f"bad spin {text!r}")
    return int(twice)


def build_config(args):
    qval, exact = _parse_fraction_or_float(args.q)
    if not exact:
        print("note: q given as a float; exact suites compare at 1e-10",
              file=sys.stderr)
    output = args.output or os.environ.get("QSU2_OUTPUT_DIR", ".")
    os.makedirs(output, exist_ok=True)
    return RunConfig(q=qval, twice_l_max=args.lmax, p=args.p, b=args.b,
                     beta=args.beta, seed=args.seed, output=output,
                     fmt=args.format, trials=args.trials, exact_q=exact,
                     grid=args.grid)


def _table(cfg):
    return PWTable(max(2 * cfg.twice_l_max, 6))


def _report(lines, failures, fmt="pretty"):
    ok = not failures
    if fmt == "json":
        print(json.dumps({"lines": lines, "passed": ok}, sort_keys=True))
    else:
        for line in lines:
            print(line)
        print("RESULT:", "PASS" if ok else "FAIL")
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_orthogonality(cfg):
    pw = _table(cfg)
    bad = pw.orthogonality_violations(cfg.twice_l_max)
    lines = [f"orthogonality suite at l <= {Fraction(cfg.twice_l_max, 2)}: "
             f"{'no violations' if not bad else bad}"]
    point = cfg.point
    # numeric cross-check at the configured q
    worst = 0.0
    from .peterweyl import quantum_dimension, q_weight
    for tl in range(0, cfg.twice_l_max + 1):
        d = float(evaluate(quantum_dimension(tl), point))
        for (tm, tn), t in pw.entries(tl).items():
            lhs = float(evaluate(haar(t * pw.star_entry(tl, tm, tn)), point))
            lhs *= float(evaluate(pw.gauge_ratio_sq(tl, tm, tn), point))
            rhs = float(evaluate(q_weight(tn), point)) / d
            worst = max(worst, abs(lhs - rhs))
    lines.append(f"numeric residual at q={cfg.q}: {worst:.3e}")
    return _report(lines, bad or worst > 1e-10, cfg.fmt)


def cmd_hopf(cfg):
    rng = random.Random(cfg.seed)
    failures = []
    for _ in range(cfg.trials):
        x = random_element(rng, 4, 2)
        y = random_element(rng, 4, 2)
        z = random_element(rng, 4, 2)
        if (x * y) * z != x * (y * z):
            failures.append("associativity")
            break
    for _ in range(20):
        x = random_element(rng, 3, 3)
        t = coproduct(x)
        total = AlgebraElement({})
        for (ml, mr), coeff in t.pairs.items():
            total = total + (antipode(AlgebraElement({ml: 1}))
                             * AlgebraElement({mr: 1})).scale(coeff)
        if total != AlgebraElement.scalar(counit(x)):
            failures.append("antipode axiom")
            break
    lines = [f"confluence on {cfg.trials} random triples + Hopf axioms: "
             f"{'ok' if not failures else failures}"]
    return _report(lines, failures, cfg.fmt)


def cmd_fourier(cfg):
    pw = _table(cfg)
    rng = random.Random(cfg.seed)
    failures = []
    for _ in range(cfg.trials):
        f = random_element(rng, 3, 4)
        if inverse_fourier(fourier_transform(f, pw), pw) != f:
            failures.append("round trip")
            break
        if haar(f * star(f)) != plancherel_sum(fourier_transform(f, pw)):
            failures.append("plancherel")
            break
    lines = [f"round trip + Plancherel on {cfg.trials} random polynomials: "
             f"{'ok' if not failures else failures}"]
    return _report(lines, failures, cfg.fmt)


def cmd_inequality(cfg, kind_alias):
    kind = _KIND_ALIASES[kind_alias]
    pw = _table(cfg)
    point = cfg.point
    grid = SU2Grid(cfg.grid, cfg.grid, cfg.grid) if point.is_one else None
    rng = random.Random(cfg.seed)
    phi = {tl: 1.0 / (tl + 1) for tl in range(0, cfg.twice_l_max + 1)}
    lam = {tl: tl + 1 for tl in range(0, cfg.twice_l_max + 1)}
    params = {"p": cfg.p, "b": cfg.b, "beta": cfg.beta,
              "phi": phi, "lambda_weights": lam}
    rows = []
    for trial in range(cfg.trials):
        f = random_element(rng, min(cfg.twice_l_max, 3), 4)
        r = inequality_ratio(kind, f, params, pw, point, grid)
        rows.append({"kind": kind_alias, "q": cfg.q, "p": cfg.p, "b": cfg.b,
                     "beta": cfg.beta,
                     "l_max": Fraction(cfg.twice_l_max, 2),
                     "seed": cfg.seed + trial, "lhs": r["lhs"],
                     "rhs": r["rhs_without_constant"], "ratio": r["ratio"]})
    path = os.path.join(cfg.output, f"inequality_{kind_alias}.csv")
    write_csv(path, ["kind", "q", "p", "b", "beta", "l_max", "seed",
                     "lhs", "rhs", "ratio"], rows)
    worst = max(r["ratio"] for r in rows)
    lines = [f"{kind}: {len(rows)} trials, max ratio {worst:.6f}",
             f"wrote {path}"]
    failures = kind == "hausdorff-young" and worst > 1 + 1e-5
    return _report(lines, failures, cfg.fmt)


def cmd_multiplier(cfg, mode):
    pw = _table(cfg)
    rng = random.Random(cfg.seed)
    cap = min(cfg.twice_l_max, 4)
    sigma = {}
    for tl in range(0, cap + 1):
        mat = {}
        for tm in range(-tl, tl + 1, 2):
            for tn in range(-tl, tl + 1, 2):
                if rng.random() < 0.5:
                    mat[(tm, tn)] = QScalar.promote(
                        Fraction(rng.randint(-3, 3)))
        sigma[tl] = mat
    sigma = FourierArray(sigma)
    failures = []
    lines = []
    if mode == "extract":
        rec = extract_symbol(lambda x: apply_symbol(sigma, x, pw), cap, pw)
        ok = rec == sigma
        lines.append(f"extract(apply(sigma)) == sigma: {ok}")
        if not ok:
            failures.append("extract")
        path = os.path.join(cfg.output, "multiplier_symbol.json")
        dump_json(fourier_array_to_json(rec), path)
        lines.append(f"wrote {path}")
    else:
        ident = FourierArray.identity(range(0, cap + 1))
        bound = lp_lq_bound(ident, 2.0, 2.0, cap, cfg.point)
        lines.append(f"identity-symbol bound at p=q=2: {bound}")
        if abs(bound - 1.0) > 1e-12:
            failures.append("identity bound")
        b2 = lp_lq_bound(sigma, cfg.p, max(cfg.b, 2.0), cap, cfg.point)
        lines.append(
            f"random symbol bound (p={cfg.p}, q={max(cfg.b, 2.0)}): {b2:.6f}")
    return _report(lines, failures, cfg.fmt)


def cmd_spectrum(cfg, family):
    spec = DiracSpec("classical" if family == "classical" else "q-deformed")
    rep = summability_classify(spec, cfg.point)
    lines = [
        f"family {spec.family} at q={cfg.q}:",
        f"  spectral dimension (d_l n_l weights): {rep.spectral_dimension}",
        f"  plain-multiplicity dimension (n_l^2): "
        f"{rep.plain_multiplicity_dimension}",
        f"  {rep.reasoning}",
        "  partial sums (beta, l, sum):",
    ]
    for beta, l, total in rep.evidence:
        lines.append(f"    {beta:4.1f}  {str(l):>5}  {total:.6e}")
    return _report(lines, [], cfg.fmt)


def cmd_commutator(cfg, family):
    pw = _table(cfg)
    spec = DiracSpec("classical" if family == "classical" else "q-deformed")
    rows = boundedness_scan(cfg.twice_l_max, spec, pw, cfg.point)
    path = os.path.join(cfg.output, "commutator_ratios.csv")
    write_csv(path, ["k", "s", "i", "j", "p", "r", "lambda_family", "q",
                     "ratio"], rows)
    sup = max(r["ratio"] for r in rows)
    lines = [f"scan k,s <= {Fraction(cfg.twice_l_max,2)} "
             f"({len(rows)} rows), sup ratio {sup:.6f}", f"wrote {path}"]
    return _report(lines, [], cfg.fmt)


def cmd_calculus(cfg, kind_name, check):
    kind = THREE_D if kind_name == "3d" else FOUR_D
    pw = _table(cfg)
    calc = calculus(kind, pw)
    failures = []
    lines = []
    if check == "leibniz":
        rng = random.Random(cfg.seed)
        bad = 0
        for _ in range(cfg.trials):
            f = random_element(rng, 3, 2)
            g = random_element(rng, 3, 2)
            dfg = calc.exterior_d_generators(f * g)
            leib = (calc.right_multiply(calc.exterior_d_generators(f), g)
                    + calc.exterior_d_generators(g).left_multiply(f))
            if dfg != leib:
                bad += 1
        lines.append(f"Leibniz on {cfg.trials} random pairs: "
                     f"{'exact' if not bad else f'{bad} failures'}")
        if bad:
            failures.append("leibniz")
    else:
        if cfg.point.is_one:
            lines.append("growth fits need q != 1; nothing to do")
            return _report(lines, ["q=1"], cfg.fmt)
        rep = admissibility_check(kind, cfg.point,
                                  twice_l_max=2 * cfg.twice_l_max)
        for (family, name), row in sorted(rep.items(), key=lambda t: str(t)):
            lines.append(
                f"  {family:12s} {str(name):14s} slope {row['gamma_fit']:6.3f}"
                f"  claim {row['claimed']}  passed {row['passed']}")
        table = growth_table(kind, cfg.point,
                             twice_l_max=2 * cfg.twice_l_max)
        rows = []
        for r in table:
            key = (r["family"], r["name"])
            fit = rep.get(key, {}).get("gamma_fit")
            orient = rep.get(key, {}).get("orientation", 1)
            rows.append({"symbol": f"{r['family']}:{r['name']}",
                         "l": Fraction(r["twice_l"], 2),
                         "hs_norm_sq_float":
                             r["hs_std"] if orient == 1 else r["hs_rev"],
                         "q_int_pow_fit": fit})
        path = os.path.join(cfg.output, f"growth_{kind_name}.csv")
        write_csv(path, ["symbol", "l", "hs_norm_sq_float", "q_int_pow_fit"],
                  rows)
        lines.append(f"wrote {path}")
        if check == "admissible":
            finite = all(math.isfinite(r["gamma_fit"]) for r in rep.values())
            lines.append(f"admissibility (finite growth exponents): {finite}")
            if not finite:
                failures.append("admissible")
    return _report(lines, failures, cfg.fmt)


def cmd_dirac_geometric(cfg):
    lines = []
    failures = []
    for tl in range(1, cfg.twice_l_max + 1):
        rep = geometric_dirac_eigenvalue_report(tl, cfg.point)
        vals = ", ".join(f"{v:.6f} (x{m})"
                         for v, m in rep["eigenvalues"].items())
        lines.append(f"l={Fraction(tl,2)}: {vals}  max err {rep['max_error']:.2e}")
        if not rep["passed"]:
            failures.append(tl)
    return _report(lines, failures, cfg.fmt)


def cmd_laplacian(cfg):
    pw = _table(cfg)
    lines = []
    failures = []
    for tl in range(0, cfg.twice_l_max + 1):
        lam = laplacian_eigenvalue(tl)
        ok_identity = laplacian_eigenvalue_identity_holds(tl)
        t = pw.entry(tl, -tl, -tl)
        ok_action = q_laplacian(t, pw) == t.scale(lam)
        lines.append(f"l={Fraction(tl,2)}: [l][l+1] = "
                     f"{float(evaluate(lam, cfg.point)):.6f}  "
                     f"identity {ok_identity}  action {ok_action}")
        if not (ok_identity and ok_action):
            failures.append(tl)
    return _report(lines, failures, cfg.fmt)


# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="qsu2",
        description="verification tables for harmonic analysis on the "
                    "quantum SU(2)")
    parser.add_argument("--q", default="7/10",
                        help="deformation parameter, rational like 7/10")
    parser.add_argument("--lmax", type=_parse_spin, default=3,
                        help="spin cap, e.g. 3/2")
    parser.add_argument("--p", type=float, default=1.5)
    parser.add_argument("--b", type=float, default=2.0)
    parser.add_argument("--beta", type=float, default=3.0)
    parser.add_argument("--seed", type=int, default=42)
    parser.add_argument("--trials", type=int, default=20)
    parser.add_argument("--grid", type=int, default=64,
                        help="quadrature resolution per angle")
    parser.add_argument("--output", default=None)
    parser.add_argument("--format", choices=["csv", "json", "pretty"],
                        default="pretty")
    parser.add_argument("--config", default=None,
                        help="JSON file overriding the flags above")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("orthogonality")
    sub.add_parser("hopf")
    sub.add_parser("fourier")
    p = sub.add_parser("inequality")
    p.add_argument("--kind", choices=sorted(_KIND_ALIASES), required=True)
    p = sub.add_parser("multiplier")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--bound", action="store_true")
    g.add_argument("--extract", action="store_true")
    p = sub.add_parser("spectrum")
    p.add_argument("--dirac", choices=["classical", "q"], default="classical")
    p.add_argument("--classify", action="store_true")
    p = sub.add_parser("commutator")
    p.add_argument("--scan", action="store_true")
    p.add_argument("--dirac", choices=["classical", "q"], default="q")
    p = sub.add_parser("calculus")
    p.add_argument("--kind", choices=["3d", "4d"], required=True)
    p.add_argument("--check", choices=["leibniz", "growth", "admissible"],
                   required=True)
    p = sub.add_parser("dirac-geometric")
    p.add_argument("--eigenvalues", action="store_true")
    p = sub.add_parser("laplacian")
    p.add_argument("--eigenvalues", action="store_true")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.config:
        with open(args.config) as fh:
            overrides = json.load(fh)
        for key, val in overrides.items():
            setattr(args, key, val)
    cfg = build_config(args)
    if args.command == "orthogonality":
        return cmd_orthogonality(cfg)
    if args.command == "hopf":
        return cmd_hopf(cfg)
    if args.command == "fourier":
        return cmd_fourier(cfg)
    if args.command == "inequality":
        return cmd_inequality(cfg, args.kind)
    if args.command == "multiplier":
        return cmd_multiplier(cfg, "extract" if args.extract else "bound")
    if args.command == "spectrum":
        return cmd_spectrum(cfg, "classical" if args.dirac == "classical"
                            else "q")
    if args.command == "commutator":
        return cmd_commutator(cfg, "classical" if args.dirac == "classical"
                              else "q")
    if args.command == "calculus":
        return cmd_calculus(cfg, args.kind, args.check)
    if args.command == "dirac-geometric":
        return cmd_dirac_geometric(cfg)
    if args.command == "laplacian":
        return cmd_laplacian(cfg)
    parser.error("unknown command")


if __name__ == "__main__":
    sys.exit(main())
