"""Command-line interface: correct | table | diagram | verify | oracle.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from mpmath import mp, mpf, nstr

from . import kramers, ladder2d, laguerre_me, oracle, spectrum
from .corrections import epsilon1_general, epsilon1_rewritten, epsilon2_general
from .ladder2d import FockState2D, map_Nm_to_nl, normal_order, p2_expr, p4_expr
from .states import InvalidQuantumNumbers, QuantumNumbers, energy_unperturbed

USAGE_ERROR, VERIFY_ERROR, IO_ERROR = 2, 1, 3


def _parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _dec(x) -> str:
    if isinstance(x, Fraction):
        x = mpf(x.numerator) / x.denominator
    return nstr(x, 12)


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {path}: {exc}", file=sys.stderr)
        sys.exit(IO_ERROR)


def _state_from_args(args) -> QuantumNumbers:
    if args.big_N is not None:
        if args.d == 1:
            return QuantumNumbers.one_dim(args.big_N)
        if args.d == 2:
            m = args.m if args.m is not None else args.big_N % 2
            return map_Nm_to_nl(FockState2D(args.big_N, m))
        raise InvalidQuantumNumbers("--N/--m addressing is only for d=1 or d=2")
    if args.n is None:
        raise InvalidQuantumNumbers("specify --n/--l, or --N (d=1), or --N/--m (d=2)")
    return QuantumNumbers(args.d, Fraction(args.n), args.l)


def cmd_correct(args) -> int:
    try:
        q = _state_from_args(args)
    except InvalidQuantumNumbers as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR

    methods = {}
    wanted = args.method
    if wanted in ("all", "closed"):
        methods["closed_form"] = (epsilon1_general(q), epsilon2_general(q))
    if wanted in ("all", "kramers"):
        methods["kramers"] = (kramers.first_order_method1(q), None)
    if wanted in ("all", "laguerre"):
        methods["laguerre"] = (
            laguerre_me.first_order_method2(q),
            laguerre_me.second_order_method2(q),
        )
    if wanted in ("all", "ladder"):
        if q.d == 2:
            s = FockState2D(q.big_N, args.m if args.m is not None else q.l)
            methods["ladder"] = (ladder2d.first_order_2d(s), ladder2d.second_order_2d(s))
        elif wanted == "ladder":
            print("error: ladder method requires d=2", file=sys.stderr)
            return USAGE_ERROR

    eps1_values = {v[0] for v in methods.values()}
    eps2_values = {v[1] for v in methods.values() if v[1] is not None}
    verdict = "AGREE" if len(eps1_values) == 1 and len(eps2_values) <= 1 else "DISAGREE"
    eps0 = energy_unperturbed(q)
    payload = {
        "state": {"d": q.d, "n": _fmt(q.n), "l": q.l, "N": q.big_N},
        "epsilon0": {"pq": _fmt(eps0), "dec_approx": _dec(eps0)},
        "methods": {
            name: {
                "epsilon1_pq": _fmt(e1),
                "epsilon1_dec_approx": _dec(e1),
                "epsilon2_pq": _fmt(e2) if e2 is not None else None,
                "epsilon2_dec_approx": _dec(e2) if e2 is not None else None,
            }
            for name, (e1, e2) in methods.items()
        },
        "verdict": verdict,
    }
    if args.format == "json":
        _write_output(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [
            f"state: d={q.d} n={_fmt(q.n)} l={q.l} (N={q.big_N})",
            f"epsilon0 = {_fmt(eps0)} (~{_dec(eps0)})  [hbar*omega]",
        ]
        for name, (e1, e2) in methods.items():
            line = f"{name:12s} epsilon1 = {_fmt(e1)} (~{_dec(e1)})"
            if e2 is not None:
                line += f"   epsilon2 = {_fmt(e2)} (~{_dec(e2)})"
            lines.append(line)
        lines.append(f"verdict: {verdict}")
        _write_output("\n".join(lines) + "\n", args.out)
    return 0 if verdict == "AGREE" else VERIFY_ERROR


def cmd_table(args) -> int:
    try:
        table = spectrum.level_table(args.Nmax, args.d, args.lam)
    except (ValueError, InvalidQuantumNumbers) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    text = spectrum.render_json(table) if args.format == "json" else spectrum.render_csv(table)
    _write_output(text, args.out)
    return 0


def cmd_diagram(args) -> int:
    try:
        table = spectrum.level_table(args.Nmax, args.d, args.lam)
        model = spectrum.diagram_data(table, exaggeration=args.exaggeration)
    except (ValueError, InvalidQuantumNumbers) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    _write_output(spectrum.render_svg(model), args.out)
    return 0


def cmd_oracle(args) -> int:
    try:
        q = QuantumNumbers(args.d, Fraction(args.n), args.l)
        exact = kramers.moment_eta(q, args.s)
        approx = oracle.quad_expectation(q, args.s)
    except (InvalidQuantumNumbers, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    rel = abs(approx - mpf(exact.numerator) / exact.denominator) / abs(approx)
    print(f"<eta^{args.s}> exact      = {_fmt(exact)} (~{_dec(exact)})")
    print(f"<eta^{args.s}> quadrature = {nstr(approx, 30)}")
    print(f"relative difference = {nstr(rel, 3)}")
    return 0


# --- verification suite -----------------------------------------------------

GRIDS = {
    "small": {"d_max": 6, "nl_max": 10, "N1_max": 20, "ladder_N": 12},
    "large": {"d_max": 10, "nl_max": 25, "N1_max": 50, "ladder_N": 40},
}


def _radial_grid(d_max: int, nl_max: int, N1_max: int):
    for N in range(N1_max + 1):
        yield QuantumNumbers.one_dim(N)
    for d in range(2, d_max + 1):
        for n in range(nl_max + 1):
            for l in range(nl_max + 1):
                yield QuantumNumbers(d, Fraction(n), l)


def run_verification(grid: str = "small", perturb: bool = False) -> tuple[bool, list[dict]]:
    """Run cross-method and oracle checks; returns (all_passed, records)."""
    sizes = GRIDS[grid]
    records: list[dict] = []

    def record(case, method, value, ok, detail=""):
        records.append(
            {
                "case": case if not detail else f"{case} [{detail}]",
                "method": method,
                "value_pq": _fmt(value) if isinstance(value, Fraction) else str(value),
                "value_dec": _dec(value) if isinstance(value, (Fraction, mpf, float)) else "",
                "status": "pass" if ok else "FAIL",
            }
        )
        return ok

    def eps1_target(q):
        value = epsilon1_general(q)
        if perturb:
            value -= Fraction(q.n * q.n, 8)  # flipped coefficient: 6n^2 -> 7n^2
        return value

    ok_all = True

    # cross-method equalities on the radial grid
    first_fail = None
    for q in _radial_grid(sizes["d_max"], sizes["nl_max"], sizes["N1_max"]):
        target = eps1_target(q)
        if not (
            kramers.first_order_method1(q) == target
            and laguerre_me.first_order_method2(q) == target
            and epsilon1_rewritten(q) == target
        ):
            first_fail = q
            break
    ok_all &= record(
        "first-order cross-method equality (I = II = closed form)",
        "kramers/laguerre/closed",
        Fraction(0) if first_fail is None else eps1_target(first_fail),
        first_fail is None,
        "" if first_fail is None else f"first failure at d={first_fail.d} n={first_fail.n} l={first_fail.l}",
    )

    first_fail = None
    for q in _radial_grid(sizes["d_max"], sizes["nl_max"], sizes["N1_max"]):
        if laguerre_me.second_order_method2(q) != epsilon2_general(q):
            first_fail = q
            break
    ok_all &= record(
        "second-order cross-method equality (part I + II = closed form)",
        "laguerre/closed",
        Fraction(0) if first_fail is None else epsilon2_general(first_fail),
        first_fail is None,
        "" if first_fail is None else f"first failure at d={first_fail.d} n={first_fail.n} l={first_fail.l}",
    )

    # 2D ladder equivalence
    first_fail = None
    for N in range(sizes["ladder_N"] + 1):
        for m in range(-N, N + 1, 2):
            s = FockState2D(N, m)
            q = map_Nm_to_nl(s)
            if ladder2d.first_order_2d(s) != epsilon1_general(q) or ladder2d.second_order_2d(
                s
            ) != epsilon2_general(q):
                first_fail = s
                break
        if first_fail:
            break
    ok_all &= record(
        "2D ladder equivalence under N=2n+l, m^2=l^2",
        "ladder/closed",
        Fraction(0),
        first_fail is None,
        "" if first_fail is None else f"first failure at N={first_fail.N} m={first_fail.m}",
    )

    # paper spot values
    spots = [
        (QuantumNumbers(3, 0, 0), Fraction(-15, 32), Fraction(255, 512)),
        (QuantumNumbers.one_dim(0), Fraction(-3, 32), Fraction(39, 512)),
        (QuantumNumbers(2, 0, 0), Fraction(-1, 4), Fraction(15, 64)),
    ]
    for q, e1, e2 in spots:
        ok = epsilon1_general(q) == e1 and epsilon2_general(q) == e2
        ok_all &= record(
            f"spot value d={q.d} n={_fmt(q.n)} l={q.l}", "closed", e1, ok
        )

    # degeneracy sum rule
    ok = all(
        sum(spectrum.degeneracy_level(l, d) for l in spectrum.allowed_l(N))
        == spectrum.degeneracy_total(N, d)
        and len(spectrum.allowed_l(N)) == spectrum.split_count(N)
        for N in range(31)
        for d in range(2, 11)
    )
    ok_all &= record("degeneracy sum rule and split count, N<=30, d<=10", "spectrum", Fraction(0), ok)

    # sign and ordering properties
    ok = True
    for q in _radial_grid(sizes["d_max"], sizes["nl_max"], sizes["N1_max"]):
        if epsilon1_general(q) >= 0 or epsilon2_general(q) <= 0:
            ok = False
            break
    ok_all &= record("sign invariants eps1<0, eps2>0", "closed", Fraction(0), ok)

    # ladder algebra self-test
    ok = normal_order(p2_expr() * p2_expr()) == normal_order(p4_expr())
    for N in range(5):
        for m in range(-N, N + 1, 2):
            s = FockState2D(N, m)
            mono = ladder2d.LadderExpr.mono
            ok &= ladder2d.expectation(mono("a", "ad") - mono("ad", "a"), s) == 1
            ok &= ladder2d.expectation(mono("b", "bd") - mono("bd", "b"), s) == 1
    ok_all &= record("p^4 expansion self-test and commutators", "ladder", Fraction(0), bool(ok))

    # oracle spot checks (kept small: the full grid lives in the test suite)
    tol12, tol10 = mpf("1e-12"), mpf("1e-10")
    for d, n, l, s in [(2, 0, 0, 2), (3, 1, 1, 4), (5, 2, 0, 2)]:
        q = QuantumNumbers(d, Fraction(n), l)
        exact = kramers.moment_eta(q, s)
        approx = oracle.quad_expectation(q, s)
        rel = abs(approx - mpf(exact.numerator) / exact.denominator) / abs(approx)
        ok_all &= record(
            f"quadrature <eta^{s}> at d={d} n={n} l={l}", "oracle", exact, rel <= tol12
        )
    q = QuantumNumbers(3, 0, 0)
    sos = oracle.sum_over_states_check(q, 6)
    exact = laguerre_me.second_order_part2(q)
    rel = abs(sos - mpf(exact.numerator) / exact.denominator) / abs(sos)
    ok_all &= record("sum-over-states part II at d=3 ground state", "oracle", exact, rel <= tol10)
    residual = oracle.radial_residual(QuantumNumbers(3, 2, 1), [Fraction(1, 2), 1, 2])
    ok_all &= record("radial-equation residual d=3 n=2 l=1", "oracle", residual, residual <= tol10)

    return bool(ok_all), records


def cmd_verify(args) -> int:
    passed, records = run_verification(grid=args.grid, perturb=args.perturb)
    report = {"grid": args.grid, "perturb": args.perturb, "passed": passed, "checks": records}
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    _write_output(text, args.report)
    if args.report not in (None, "-"):
        for rec in records:
            print(f"[{rec['status']}] {rec['case']}")
    return 0 if passed else VERIFY_ERROR


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="salpeter-qho",
        description="Relativistic corrections to the d-dimensional isotropic "
        "quantum harmonic oscillator (exact rationals, three methods, "
        "quadrature oracle).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("correct", help="corrections for one state, all methods")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=str, default=None, help="radial number (rational for d=1)")
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--N", dest="big_N", type=int, default=None, help="principal number (d=1 or d=2)")
    p.add_argument("--m", type=int, default=None, help="angular momentum for d=2 ladder mode")
    p.add_argument(
        "--method", choices=["all", "closed", "kramers", "laguerre", "ladder"], default="all"
    )
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_correct)

    p = sub.add_parser("table", help="level table with corrections and degeneracies")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--Nmax", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_parse_rational, default=Fraction(1, 1000))
    p.add_argument("--format", choices=["csv", "json"], default="csv")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("diagram", help="SVG energy-level splitting diagram")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--Nmax", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_parse_rational, default=Fraction(1, 1000))
    p.add_argument("--exaggeration", type=_parse_rational, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_diagram)

    p = sub.add_parser("verify", help="run the cross-method/oracle verification suite")
    p.add_argument("--grid", choices=["small", "large"], default="small")
    p.add_argument("--perturb", action="store_true", help="inject a fault; must fail")
    p.add_argument("--report", default=None, help="write JSON report to this path")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="quadrature expectation value vs exact")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--l", type=int, default=0)
    p.add_argument("--s", type=int, default=2)
    p.set_defaults(func=cmd_oracle)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    mp.dps = max(mp.dps, oracle.working_precision())
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
