"""Command-line interface: state generation, reports, comparison, verification.

Exit codes: compare returns 2 for ProvablyInequivalent (0 otherwise);
verify returns 1 when the measured error exceeds the gate; any handled
error returns 1.  All outputs are deterministic for fixed inputs and
seeds.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import classify, criteria, invariant, oracle, signtab, slocc, statevec
from .errors import BadArgs, SloccInvError

DEFAULT_MAX_N = 26      # 2**26 complex amplitudes ~= 1 GiB; override with --max-n
VERIFY_GATE = 1e-8
_REPORT_CRITERIA_MAX_N = 6


def _check_n(n: int, max_n: int, floor: int = 1) -> int:
    if n < floor:
        raise BadArgs(f"need n >= {floor}, got {n}")
    if n > max_n:
        raise BadArgs(f"n={n} exceeds the cap {max_n} (raise it with --max-n)")
    return n


def _load(path: str, max_n: int) -> statevec.StateVector:
    s = statevec.load_state(path)
    _check_n(s.n, max_n)
    return s


def cmd_make(args) -> int:
    kind = args.kind
    if kind in ("ghz", "w", "random"):
        if args.n is None:
            raise BadArgs(f"make {kind} requires --n")
        _check_n(args.n, args.max_n)
    if kind == "ghz":
        s = statevec.ghz(args.n)
        default = f"ghz{args.n}.json"
    elif kind == "w":
        s = statevec.w_state(args.n)
        default = f"w{args.n}.json"
    elif kind == "cluster-c":
        s = statevec.cluster_c()
        default = "cluster_c.json"
    elif kind == "random":
        s = statevec.random_state(args.n, args.seed)
        default = f"random_n{args.n}_s{args.seed}.json"
    elif kind == "product":
        if len(args.inputs) != 2:
            raise BadArgs("make product requires exactly two input state files")
        s1 = _load(args.inputs[0], args.max_n)
        s2 = _load(args.inputs[1], args.max_n)
        _check_n(s1.n + s2.n, args.max_n)
        s = statevec.tensor(s1, s2)
        default = f"product_n{s.n}.json"
    elif kind == "complement":
        if len(args.inputs) != 1:
            raise BadArgs("make complement requires exactly one input state file")
        s = statevec.complement(_load(args.inputs[0], args.max_n))
        default = f"complement_n{s.n}.json"
    else:  # pragma: no cover - argparse restricts choices
        raise BadArgs(f"unknown kind {kind}")
    path = args.output or default
    statevec.save_state(s, path)
    print(f"n={s.n} norm={s.norm():.17g} -> {path}")
    return 0


def cmd_invariant(args) -> int:
    s = _load(args.input, args.max_n)
    report = invariant.invariant_report(s, args.tol)
    doc = {
        "invariants": invariant.report_json_dict(report),
        "criteria": None,
        "tau": report.tau,
        "vanishing": dict(report.vanishing),
    }
    if 3 <= s.n <= _REPORT_CRITERIA_MAX_N:
        doc["criteria"] = criteria.signature_json_dict(
            criteria.criteria_signature(s, args.tol))
    else:
        doc["criteria_note"] = (f"criteria are included for 3 <= n <= "
                                f"{_REPORT_CRITERIA_MAX_N}; use the criteria command")
    if args.oracle:
        values = {label: oracle.evaluate(label, s) for label in oracle.labels_for(s.n)}
        if values:
            doc["oracle"] = {label: [v.real, v.imag] for label, v in values.items()}
    print(json.dumps(doc, indent=2))
    return 0


def cmd_criteria(args) -> int:
    if args.action == "enumerate":
        if args.n is None:
            raise BadArgs("criteria enumerate requires --n")
        _check_n(args.n, args.max_n, floor=3)
        if args.n > 7 and not args.force_f:
            raise BadArgs(f"F enumeration at n={args.n} is combinatorially large; "
                          "pass --force-f to insist")
        tuples = criteria.f_enumerate(args.n)
        doc = {
            "n": args.n,
            "count": len(tuples),
            "sums": criteria.achieved_pair_sums(args.n),
            "tuples": [list(t) for t in tuples],
            "note": ("tuples whose shifted subscripts (j-1/l+1/q-1/s+1 for odd i+j, "
                     "j-2/l+2/q-2/s+2 for even i+j) fall outside [0, 2^n - 1] "
                     "are excluded"),
        }
        print(json.dumps(doc, indent=2))
        return 0
    if args.input is None:
        raise BadArgs("criteria requires --input (or the enumerate action)")
    s = _load(args.input, args.max_n)
    include_f = args.set in ("f", "all")
    if include_f and s.n > criteria._F_SIGNATURE_MAX_N and not args.force_f:
        raise BadArgs(f"F evaluation at n={s.n} is combinatorially large; "
                      "pass --force-f to insist")
    sig = criteria.criteria_signature(s, args.tol, include_f=include_f)
    doc = criteria.signature_json_dict(sig)
    if args.set == "f":
        doc["d_criteria"] = []
    print(json.dumps(doc, indent=2))
    return 0


def cmd_compare(args) -> int:
    s1 = _load(args.state_a, args.max_n)
    s2 = _load(args.state_b, args.max_n)
    verdict = classify.compare(s1, s2, args.tol)
    print(json.dumps(classify.verdict_json_dict(verdict), indent=2))
    return 2 if verdict.outcome == classify.PROVABLY_INEQUIVALENT else 0


def cmd_apply(args) -> int:
    s = _load(args.input, args.max_n)
    with open(args.ops, "r", encoding="utf-8") as fh:
        doc = json.load(fh, parse_constant=statevec._reject_constant)
    chain = slocc.ops_from_json_dict(doc)
    result = slocc.apply_chain(chain, s)
    statevec.save_state(result, args.output)
    if args.print_dets:
        for idx, op in enumerate(chain.ops, start=1):
            d = op.det
            print(f"det[{idx}] = {d.real:.17g}{d.imag:+.17g}j")
        prod = slocc.det_product(chain)
        print(f"det_product = {prod.real:.17g}{prod.imag:+.17g}j")
    print(f"n={result.n} norm={result.norm():.17g} -> {args.output}")
    return 0


def cmd_verify(args) -> int:
    _check_n(args.n, args.max_n, floor=2)
    if args.theorem == 1:
        err = slocc.verify_theorem1(args.n, args.trials, args.seed)
    else:
        err = slocc.verify_theorem2(args.n, args.trials, args.seed)
    print(f"theorem={args.theorem} n={args.n} trials={args.trials} "
          f"seed={args.seed} max_rel_error={err:.6e}")
    return 0 if err <= VERIFY_GATE else 1


def cmd_signs(args) -> int:
    _check_n(args.n, args.max_n, floor=2)
    table = signtab.sign_star_table(args.n) if args.star else signtab.sign_table(args.n)
    print(json.dumps([int(v) for v in table]))
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=invariant.DEFAULT_TOL,
                        help="vanishing tolerance (default 1e-10)")
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                        help=f"qubit-count cap (default {DEFAULT_MAX_N})")

    parser = argparse.ArgumentParser(prog="sloccinv",
                                     description="SLOCC invariants and residual "
                                                 "entanglement for n-qubit states")
    sub = parser.add_subparsers(dest="command", required=True)

    p_make = sub.add_parser("make", parents=[common], help="write a state file")
    p_make.add_argument("kind", choices=["ghz", "w", "cluster-c", "random",
                                         "product", "complement"])
    p_make.add_argument("inputs", nargs="*", help="input state files (product/complement)")
    p_make.add_argument("--n", type=int, default=None)
    p_make.add_argument("-o", "--output", default=None)
    p_make.set_defaults(func=cmd_make)

    p_inv = sub.add_parser("invariant", parents=[common],
                           help="invariant/criteria report for a state file")
    p_inv.add_argument("--input", required=True)
    p_inv.add_argument("--oracle", action="store_true",
                       help="include the hard-coded small-n oracle values")
    p_inv.set_defaults(func=cmd_invariant)

    p_crit = sub.add_parser("criteria", parents=[common],
                            help="D/F criteria for a state, or enumerate F tuples")
    p_crit.add_argument("action", nargs="?", choices=["enumerate"])
    p_crit.add_argument("--input", default=None)
    p_crit.add_argument("--n", type=int, default=None)
    p_crit.add_argument("--set", choices=["d", "f", "all"], default="all")
    p_crit.add_argument("--force-f", action="store_true",
                        help="allow F enumeration beyond the practical cap")
    p_crit.set_defaults(func=cmd_criteria)

    p_cmp = sub.add_parser("compare", parents=[common],
                           help="compare two state files (exit 2 = provably inequivalent)")
    p_cmp.add_argument("state_a")
    p_cmp.add_argument("state_b")
    p_cmp.set_defaults(func=cmd_compare)

    p_apply = sub.add_parser("apply", parents=[common],
                             help="apply a local-operator chain to a state file")
    p_apply.add_argument("--input", required=True)
    p_apply.add_argument("--ops", required=True)
    p_apply.add_argument("--output", required=True)
    p_apply.add_argument("--print-dets", action="store_true")
    p_apply.set_defaults(func=cmd_apply)

    p_verify = sub.add_parser("verify", parents=[common],
                              help="randomized check of a determinant transform law")
    p_verify.add_argument("--theorem", type=int, choices=[1, 2], required=True)
    p_verify.add_argument("--n", type=int, required=True)
    p_verify.add_argument("--trials", type=int, default=100)
    p_verify.set_defaults(func=cmd_verify)

    p_signs = sub.add_parser("signs", parents=[common], help="dump a sign table")
    p_signs.add_argument("--n", type=int, required=True)
    p_signs.add_argument("--star", action="store_true")
    p_signs.set_defaults(func=cmd_signs)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol <= 0:
        parser.error("--tol must be positive")
    if getattr(args, "trials", 1) < 1:
        parser.error("--trials must be at least 1")
    try:
        return args.func(args)
    except SloccInvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
