"""Command-line front end.

Exit codes: 0 success, 1 invalid input or infeasible request,
2 post-verification failure.
"""

from __future__ import annotations

import argparse
import csv
import sys

from . import catalog
from .bounds import is_optimal_set, peng_fan_bound
from .core import FhsSet, correlation_profile, occurrence_map
from .extension import (
    cumulative_labeling,
    extend_once,
    extend_recursive,
    plan_recursive_extension,
)
from .numtheory import PrimePower, factor_prime_powers
from .onecoincidence import (
    gen_dilation_set,
    gen_field_set,
    gen_translate_set,
    verify_one_coincidence,
)

_METHOD_TO_KIND = {"c1": "dilation", "c2": "translate", "field": "field"}
_OCS_GENERATORS = {
    "dilation": gen_dilation_set,
    "translate": gen_translate_set,
    "field": gen_field_set,
}


def _load_input(args) -> FhsSet:
    if getattr(args, "builtin", None):
        return catalog.builtin(args.builtin)
    if not args.file:
        raise ValueError("provide an input file or --builtin NAME")
    return catalog.load_set(args.file)


def _analysis(s: FhsSet) -> dict:
    profile = correlation_profile(s)
    report = is_optimal_set(s, profile)
    return {
        "alphabet_size": s.alphabet.size,
        "h_auto": profile.h_auto,
        "h_cross": profile.h_cross,
        "h_max": profile.h_max,
        "label": s.label or "",
        "length": s.length,
        "multiplicity": occurrence_map(s).multiplicity,
        "num_sequences": s.num_sequences,
        "optimal": report.optimal,
        "peng_fan_bound": report.bound,
    }


def _print_analysis(info: dict) -> None:
    print(f"set: {info['label'] or '(unlabeled)'}")
    print(f"parameters: N={info['length']} v={info['alphabet_size']} M={info['num_sequences']}")
    print(f"multiplicity: m={info['multiplicity']}")
    print(f"correlation: h_auto={info['h_auto']} h_cross={info['h_cross']} h_max={info['h_max']}")
    print(f"peng_fan_bound: {info['peng_fan_bound']}")
    print(f"optimal: {'yes' if info['optimal'] else 'no'}")


def cmd_analyze(args) -> int:
    s = _load_input(args)
    info = _analysis(s)
    if args.json:
        sys.stdout.write(catalog.canonical_dumps(info))
    else:
        _print_analysis(info)
    return 0


def cmd_extend(args) -> int:
    s = _load_input(args)
    kind = _METHOD_TO_KIND[args.method]
    plan = plan_recursive_extension(s, [(kind, args.p, args.a)])
    step = plan.steps[0]
    if not step.feasible:
        print(f"infeasible: {step.reason}", file=sys.stderr)
        return 1
    pp = PrimePower(args.p, args.a)
    family = _OCS_GENERATORS[kind](pp)
    labeling = catalog.load_labeling(args.labeling) if args.labeling else cumulative_labeling(s)
    extended = extend_once(s, family, labeling)
    n2, v2, lam, m = plan.final_params
    print(f"method={args.method} ({kind}) p={args.p} a={args.a}: {step.reason}")
    print(f"predicted: ({n2}, {v2}, {lam}; {m})")
    meta = {
        "a": args.a,
        "construction": kind,
        "generator": family.generator,
        "p": args.p,
        "predicted_h_max": lam,
    }
    code = 0
    if args.no_verify:
        print("verification skipped (--no-verify)")
    else:
        profile = correlation_profile(extended)
        report = is_optimal_set(extended, profile)
        base_optimal = is_optimal_set(s).optimal
        print(f"verified:  h_max={profile.h_max} peng_fan_bound={report.bound} "
              f"optimal={'yes' if report.optimal else 'no'}")
        meta.update({"h_max": profile.h_max, "optimal": report.optimal,
                     "peng_fan_bound": report.bound})
        if profile.h_max != lam:
            print(f"verification failed: h_max {profile.h_max} != predicted {lam}",
                  file=sys.stderr)
            code = 2
        elif base_optimal and not report.optimal:
            print("verification failed: base set was optimal, extension is not",
                  file=sys.stderr)
            code = 2
    if args.out:
        catalog.save_set(extended, args.out, meta=meta)
        print(f"wrote: {args.out}")
    return code


def cmd_gen_ocs(args) -> int:
    pp = PrimePower(args.p, args.a)
    family = _OCS_GENERATORS[args.kind](pp)
    h_auto, h_cross = verify_one_coincidence(family)
    print(f"kind={args.kind} p={args.p} a={args.a} g={family.generator}: "
          f"{family.size} sequences of length {family.length} over Z_{family.modulus}")
    print(f"verified: h_auto={h_auto} h_cross={h_cross}")
    if args.out:
        catalog.save_ocs(family, args.out, extra_meta={"h_auto": h_auto, "h_cross": h_cross})
        print(f"wrote: {args.out}")
    return 0


def _parse_steps(args) -> list[tuple[str, int, int]]:
    steps: list[tuple[str, int, int]] = []
    for spec in args.step or []:
        try:
            method, val = spec.split(":", 1)
        except ValueError:
            raise ValueError(f"bad --step {spec!r}; expected METHOD:P[^A]") from None
        if method not in _METHOD_TO_KIND:
            raise ValueError(f"bad --step method {method!r}; expected c1, c2, or field")
        if "^" in val:
            p_str, a_str = val.split("^", 1)
            p, a = int(p_str), int(a_str)
        else:
            num = int(val)
            parts = factor_prime_powers(num)
            if len(parts) != 1:
                raise ValueError(f"--step value {num} is not a prime power")
            p, a = parts[0].p, parts[0].a
        steps.append((_METHOD_TO_KIND[method], p, a))
    if args.factors:
        for chunk in args.factors.split(","):
            num = int(chunk.strip())
            parts = factor_prime_powers(num)
            if len(parts) != 1:
                raise ValueError(f"--factors entry {num} is not a prime power")
            steps.append(("dilation", parts[0].p, parts[0].a))
    if not steps:
        raise ValueError("no extension steps given (use --step and/or --factors)")
    return steps


def cmd_plan(args) -> int:
    s = _load_input(args)
    steps = _parse_steps(args)
    plan = plan_recursive_extension(s, steps)
    if args.json:
        payload = {
            "base": list(plan.base_params),
            "feasible": plan.feasible,
            "final": list(plan.final_params),
            "final_peng_fan_bound": plan.final_bound,
            "steps": [
                {
                    "a": st.a,
                    "bound_preserved_predicted": st.bound_preserved_predicted,
                    "feasible": st.feasible,
                    "kind": st.kind,
                    "p": st.p,
                    "predicted": list(st.predicted),
                    "reason": st.reason,
                }
                for st in plan.steps
            ],
            "warnings": list(plan.warnings),
        }
        sys.stdout.write(catalog.canonical_dumps(payload))
        return 0 if plan.feasible else 1
    n0, v0, lam, m = plan.base_params
    print(f"base: ({n0}, {v0}, {lam}; {m})")
    for k, st in enumerate(plan.steps, 1):
        verdict = "ok" if st.feasible else "REJECTED"
        n2, v2, _, _ = st.predicted
        extra = "" if not st.feasible else (
            f"  -> ({n2}, {v2}, {lam}; {m})"
            f"  bound_preserved_predicted={'yes' if st.bound_preserved_predicted else 'no'}"
        )
        print(f"step {k}: {st.kind} p={st.p} a={st.a}  {verdict} ({st.reason}){extra}")
    for w in plan.warnings:
        print(f"warning: {w}")
    nf, vf, _, _ = plan.final_params
    print(f"final: ({nf}, {vf}, {lam}; {m})  peng_fan_bound={plan.final_bound} "
          f"{'(= h_max, optimality preserved)' if plan.final_bound == lam else '(!= h_max)'}")
    if not plan.feasible:
        bad = next(st for st in plan.steps if not st.feasible)
        print(f"infeasible: {bad.reason}", file=sys.stderr)
        return 1
    return 0


def cmd_run_plan(args) -> int:
    s = _load_input(args)
    steps = _parse_steps(args)
    plan = plan_recursive_extension(s, steps)
    if not plan.feasible:
        bad = next(st for st in plan.steps if not st.feasible)
        print(f"infeasible: {bad.reason}", file=sys.stderr)
        return 1
    extended = extend_recursive(s, plan)
    profile = correlation_profile(extended)
    lam = plan.final_params[2]
    report = is_optimal_set(extended, profile)
    print(f"built: ({extended.length}, {extended.alphabet.size}, {profile.h_max}; "
          f"{extended.num_sequences})  peng_fan_bound={report.bound} "
          f"optimal={'yes' if report.optimal else 'no'}")
    code = 0
    if profile.h_max != lam:
        print(f"verification failed: h_max {profile.h_max} != predicted {lam}", file=sys.stderr)
        code = 2
    if args.out:
        catalog.save_set(extended, args.out, meta={
            "h_max": profile.h_max,
            "optimal": report.optimal,
            "peng_fan_bound": report.bound,
            "predicted_h_max": lam,
        })
        print(f"wrote: {args.out}")
    return code


def cmd_verify(args) -> int:
    f = catalog.read_file(args.file)
    s = f.to_fhs_set()
    info = _analysis(s)
    if args.json:
        sys.stdout.write(catalog.canonical_dumps(info))
    else:
        _print_analysis(info)
    code = 0
    for key, recomputed in (("h_max", info["h_max"]), ("optimal", info["optimal"]),
                            ("predicted_h_max", info["h_max"])):
        if key in f.meta and f.meta[key] != recomputed:
            print(f"verification failed: recorded {key}={f.meta[key]!r} but recomputed "
                  f"{recomputed!r}", file=sys.stderr)
            code = 2
    return code


def cmd_corrdump(args) -> int:
    s = _load_input(args)
    profile = correlation_profile(s)
    m = s.num_sequences
    rows = []
    for tau in range(s.length):
        autos = [profile.table[(i, i)][tau] for i in range(m)] if tau > 0 else []
        crosses = [profile.table[(i, j)][tau] for i in range(m) for j in range(i + 1, m)]
        rows.append((tau,
                     max(autos) if autos else "",
                     max(crosses) if crosses else ""))
    out = open(args.out, "w", newline="", encoding="utf-8") if args.out else sys.stdout
    try:
        writer = csv.writer(out)
        writer.writerow(["shift", "max_auto", "max_cross"])
        writer.writerows(rows)
    finally:
        if args.out:
            out.close()
            print(f"wrote: {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopset",
        description="Construct, extend, and verify frequency-hopping sequence sets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p):
        p.add_argument("file", nargs="?", help="sequence-set file")
        p.add_argument("--builtin", help=f"bundled set ({', '.join(catalog.BUILTIN_NAMES)})")

    p = sub.add_parser("analyze", help="parameters, multiplicity, correlation maxima, bound")
    add_input(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("extend", help="one extension step, verified by default")
    add_input(p)
    p.add_argument("--method", required=True, choices=sorted(_METHOD_TO_KIND))
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--labeling", help="labeling file (default: cumulative)")
    p.add_argument("--out", help="output file for the extended set")
    p.add_argument("--no-verify", action="store_true",
                   help="skip the exhaustive post-verification")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("gen-ocs", help="generate a one-coincidence family")
    p.add_argument("--kind", required=True, choices=sorted(_OCS_GENERATORS))
    p.add_argument("--p", required=True, type=int)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--out", help="output file")
    p.set_defaults(func=cmd_gen_ocs)

    def add_steps(p):
        p.add_argument("--step", action="append",
                       help="extension step METHOD:P[^A], repeatable (c1:13, c2:11^2)")
        p.add_argument("--factors", help="comma-separated prime powers, each a c1 step")

    p = sub.add_parser("plan", help="feasibility-check a chain of extension steps")
    add_input(p)
    add_steps(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_plan)

    p = sub.add_parser("run-plan", help="plan, build, and verify a chain of steps")
    add_input(p)
    add_steps(p)
    p.add_argument("--out", help="output file for the extended set")
    p.set_defaults(func=cmd_run_plan)

    p = sub.add_parser("verify", help="recompute the profile and check recorded claims")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("corrdump", help="per-shift maximum correlations as CSV")
    add_input(p)
    p.add_argument("--out", help="CSV output path (default stdout)")
    p.set_defaults(func=cmd_corrdump)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
