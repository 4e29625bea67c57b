"""Command-line interface for the exact syzygy-level toolkit.

Every subcommand prints the same verdict in text and JSON form (``--json``),
always echoing the verdict's justification tag.  Exit codes: 0 on success,
1 on verification or selftest failure (the failing claim is named), 2 on
argument or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import api, fano
from . import selftest as selftest_mod
from .families import (
    FAMILY_IDS,
    FAMILY_SWEEPS,
    CertificateRefused,
    OracleNotApplicable,
    VerificationError,
    verify_example,
)

_MORPHISMS = (
    fano.MORPHISM_UNKNOWN,
    fano.MORPHISM_TWO_TO_ONE_ONTO_PN,
    fano.MORPHISM_ONTO_MINIMAL_DEGREE_NOT_PN,
    fano.MORPHISM_NEITHER,
)


# --- output ----------------------------------------------------------------


def _headline(v) -> str:
    if isinstance(v, dict):
        if "status" in v:
            p = v.get("p")
            head = v["status"] if p is None else f"{v['status']}(p = {p})"
            needed = v.get("needed")
            if needed:
                head += f" pending: {', '.join(needed)}"
            return head
        if "value" in v:
            return "yes" if v["value"] else "no"
        if "n" in v and "case" in v:
            return f"n >= {v['n']}"
        if "bound" in v:
            return f"-K.A >= {v['bound']}"
        if "min_value" in v:
            return (f"minimum {v['min_value']} at {tuple(v['argmin'])} "
                    f"(box {v['box']}, {v['candidates']} candidates)")
        if "valid" in v:
            return "certificate valid" if v["valid"] else "certificate FAILED"
        if "m_min" in v or "m_max" in v:
            if v.get("direction") == "below":
                return f"m <= {v['m_max']}"
            return f"m >= {v['m_min']}"
        if "triple_equivalence" in v:
            return ("ample, very ample, and the syzygy bound are equivalent"
                    if v["triple_equivalence"]
                    else "only the syzygy/ampleness equivalence holds")
        if "passed" in v:
            return "ok" if v["passed"] else f"FAILED: {v['failures'][0]}"
    return json.dumps(v)


def _emit(payload: dict, as_json: bool, stream) -> None:
    if as_json:
        print(json.dumps(payload, indent=2, sort_keys=True), file=stream)
        return
    v = payload.get("verdict")
    print(f"{payload.get('op')}: {_headline(v)}", file=stream)
    tag = payload.get("justification")
    if isinstance(v, dict):
        for key in sorted(v):
            if key == "justification":
                tag = v[key]
                continue
            value = v[key]
            if isinstance(value, (dict, list)):
                value = json.dumps(value, sort_keys=True)
            print(f"  {key}: {value}", file=stream)
    if "query" in payload:
        q = payload["query"]
        word = {True: "holds", False: "fails"}.get(q["holds"], "undetermined")
        print(f"  N_{q['p']}: {word}", file=stream)
    if tag:
        print(f"  tag: {tag}", file=stream)


def _augment_query(payload: dict, p_arg) -> dict:
    """Resolve an explicit ``--p LEVEL`` query against the verdict."""
    if p_arg is None or p_arg == "auto":
        return payload
    p = int(p_arg)
    if p < 0:
        raise api.ApiError("--p must be >= 0 or 'auto'")
    v = payload["verdict"]
    status, level = v.get("status"), v.get("p")
    if status == "ExactMax":
        holds = p <= level
    elif status == "AtLeast":
        holds = True if p <= level else None
    elif status == "NotN0":
        holds = False
    else:
        holds = None
    return {**payload, "query": {"p": p, "holds": holds}}


def _parse_params(pairs: list[str]) -> dict | None:
    out = {}
    for item in pairs:
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise api.ApiError(f"--param expects K=V, got {item!r}")
        out[key] = int(value)
    return out or None


def _load_divisor_file(path: str) -> tuple[dict, dict]:
    """Read a flat divisor JSON file; returns (divisor_json, flags)."""
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise api.ApiError(f"{path}: expected a JSON object")
    flags = data.pop("flags", {}) or {}
    return data, flags


# --- subcommand handlers ---------------------------------------------------


def _cmd_classify(args) -> tuple[int, dict]:
    if args.curve_genus is not None or args.curve_degree is not None:
        if args.curve_genus is None or args.curve_degree is None:
            raise api.ApiError(
                "curve classification needs both --curve-genus and "
                "--curve-degree")
        payload = api.evaluate({"op": "curve_np_reference", "args": {
            "genus": args.curve_genus, "degree": args.curve_degree}})
        return 0, _augment_query(payload, args.p)

    cli_flags = {name: True for name in ("ample", "bpf", "anticanonical",
                                         "nef") if getattr(args, name)}
    if args.surface is not None:
        divisor, flags = _load_divisor_file(args.surface)
        flags = {**flags, **cli_flags}
        if args.check_bpf:
            payload = api.evaluate({"op": "bpf_check", "args": {
                "divisor": divisor,
                "flags": {k: v for k, v in flags.items()
                          if k in ("nef", "anticanonical")}}})
            return 0, payload
        payload = api.evaluate({"op": "np_classify", "args": {
            "divisor": divisor,
            "flags": {k: v for k, v in flags.items()
                      if k in ("ample", "bpf", "anticanonical")}}})
        return 0, _augment_query(payload, args.p)

    if args.t is not None:
        payload = api.evaluate({"op": "np_classify", "args": {
            "t": args.t, "flags": cli_flags}})
        return 0, _augment_query(payload, args.p)

    raise api.ApiError("nothing to classify: give --surface FILE, --t, or "
                       "--curve-genus/--curve-degree")


def _cmd_bounds(args) -> tuple[int, dict]:
    if args.Lsq is not None:
        if args.p is None:
            raise api.ApiError("the quadratic degree bound needs --p")
        return 0, api.evaluate({"op": "lemma_125_bound", "args": {
            "ksq": args.ksq, "Lsq": args.Lsq, "p": args.p,
            "multiple_of_minus_k": args.multiple,
            "adjoint_effective": args.adjoint_effective}})
    if args.summand is not None or args.conic:
        request = {"ksq": args.ksq, "conic_fibration": args.conic}
        if args.summand is not None:
            request["summand"] = args.summand
        if args.e is not None:
            request["e"] = args.e
        return 0, api.evaluate({"op": "min_kA_bound", "args": request})
    if args.p is None:
        raise api.ApiError("give --p for the summand-count table, --L2 for "
                           "the degree bound, or --summand for the "
                           "per-summand bound")
    request = {"ksq": args.ksq, "p": args.p}
    if args.e is not None:
        request["e"] = args.e
    if args.exclude:
        request["exclude"] = args.exclude
    return 0, api.evaluate({"op": "adjoint_np_min_n", "args": request})


def _cmd_adjoint(args) -> tuple[int, dict]:
    if args.equivalence:
        request = {"ksq": args.ksq, "summand": args.summand}
        if args.e is not None:
            request["e"] = args.e
        return 0, api.evaluate({"op": "thm_121_equivalence", "args": request})
    if args.summands is None:
        raise api.ApiError("give --summands TAG[,TAG...] for the "
                           "very-ampleness table or --equivalence")
    tags = [t.strip() for t in args.summands.split(",") if t.strip()]
    return 0, api.evaluate({"op": "adjoint_very_ample", "args": {
        "ksq": args.ksq, "summands": tags}})


def _cmd_reider(args) -> tuple[int, dict]:
    request = {"ksq": args.ksq, "Lsq": args.Lsq, "p": args.p,
               "cond1_attested": args.cond1,
               "adjoint_very_ample": args.adjoint_va,
               "multiple_of_minus_k": args.multiple}
    if args.minus_k_dot_L is not None:
        request["minus_k_dot_L"] = args.minus_k_dot_L
    return 0, api.evaluate({"op": "reider_np", "args": request})


def _cmd_terminate(args) -> tuple[int, dict]:
    request = {"ksq": args.ksq, "p": args.p,
               "multiple_of_minus_k": not args.not_multiple,
               "np_sharp_attested": args.np_sharp}
    if args.e is not None:
        request["e"] = args.e
    return 0, api.evaluate({"op": "ampleness_termination", "args": request})


def _cmd_example(args, as_json: bool, stream) -> tuple[int, dict | None]:
    if args.action == "list":
        table = {fid: [dict(ps) for ps in FAMILY_SWEEPS[fid]]
                 for fid in FAMILY_IDS}
        return 0, {"op": "example_list", "verdict": table,
                   "justification": "family table"}
    params = _parse_params(args.param)
    if args.action == "show":
        request = {"id": args.id}
        if params:
            request["params"] = params
        return 0, api.evaluate({"op": "build_example", "args": request})

    if args.sweep:
        sweep = FAMILY_SWEEPS.get(args.id)
        if sweep is None:
            raise api.ApiError(f"unknown family id {args.id!r}")
        instances = []
        code = 0
        for ps in (sweep if params is None else [params]):
            report = verify_example(args.id, ps, box=args.box, strict=False)
            instances.append(report.to_json())
            if report.failures:
                code = 1
        payload = {"op": "example_sweep", "family": args.id,
                   "verdict": instances,
                   "justification": "family verification"}
        if as_json:
            _emit(payload, True, stream)
        else:
            for inst in instances:
                key = ",".join(f"{k}={v}" for k, v in inst["params"].items())
                name = f"{inst['family']}[{key}]" if key else inst["family"]
                if inst["passed"]:
                    np_v = inst["np_verdict"]
                    print(f"ok   {name}: {_headline(np_v)} "
                          f"[{np_v['justification']}]", file=stream)
                else:
                    print(f"FAIL {name}: {inst['failures'][0]}", file=stream)
            verdict = "all passed" if code == 0 else "FAILURES above"
            print(f"{len(instances)} instance(s): {verdict}", file=stream)
        return code, None

    report = verify_example(args.id, params, box=args.box, strict=False)
    payload = {"op": "verify_example", "verdict": report.to_json(),
               "justification": "family verification"}
    return (0 if report.passed else 1), payload


def _cmd_fano(args) -> tuple[int, dict]:
    if args.action == "surface":
        profile = {"minusK_dot_B": args.minusK_dot_B}
        if args.is_P2_O1:
            profile["is_P2_O1"] = True
        return 0, api.evaluate({"op": "multiples_np_surface", "args": {
            "profile": profile, "l": args.l, "p": args.p}})
    if args.action == "twist":
        verdict = fano.projective_space_twist_max_np(args.dim, args.k)
        return 0, {"op": "projective_space_twist_max_np",
                   "verdict": verdict.to_json(),
                   "justification": verdict.justification}

    base = {"n": args.n, "m": args.m, "Hn": args.Hn}
    if args.h0H is not None:
        base["h0H"] = args.h0H
    if args.morphism != fano.MORPHISM_UNKNOWN:
        base["morphism"] = args.morphism
    if args.k is None and args.p is None:
        return 0, api.evaluate({"op": "primitive_np", "args": base})
    if args.k is None:
        raise api.ApiError("--p without --k: the twist criteria need the "
                           "twist --k")
    if args.m == args.n - 3:
        if args.p is None:
            return 0, api.evaluate({"op": "index_nm3_n0",
                                    "args": {**base, "k": args.k}})
        return 0, api.evaluate({"op": "index_nm3_np",
                                "args": {**base, "k": args.k, "p": args.p}})
    if args.p is None:
        raise api.ApiError("--k without --p only applies at index n-3; give "
                           "--p for the multiples criterion")
    return 0, api.evaluate({"op": "multiples_np_fano",
                            "args": {**base, "l": args.k, "p": args.p}})


def _cmd_oracle(args) -> tuple[int, dict]:
    if (args.family_id is None) == (args.divisor is None):
        raise api.ApiError("give exactly one of --id FAMILY or --divisor FILE")
    if args.family_id is not None:
        request = {"id": args.family_id}
        params = _parse_params(args.param)
        if params:
            request["params"] = params
        if args.box is not None:
            request["box"] = args.box
        return 0, api.evaluate({"op": "brute_force_ample_oracle",
                                "args": request})
    divisor, _ = _load_divisor_file(args.divisor)
    request = {"divisor": divisor}
    if args.box is not None:
        request["box"] = args.box
    return 0, api.evaluate({"op": "ample_oracle", "args": request})


def _cmd_selftest(as_json: bool, stream) -> int:
    results = selftest_mod.run_all()
    if as_json:
        payload = {"op": "selftest",
                   "verdict": [{"name": r.name, "passed": r.passed,
                                "detail": r.detail,
                                "seconds": round(r.seconds, 2)}
                               for r in results],
                   "passed": all(r.passed for r in results),
                   "justification": "hermetic check suite"}
        print(json.dumps(payload, indent=2, sort_keys=True), file=stream)
    else:
        for r in results:
            mark = "ok  " if r.passed else "FAIL"
            print(f"[{mark}] {r.name}: {r.detail} ({r.seconds:.2f}s)",
                  file=stream)
        total = sum(r.seconds for r in results)
        good = sum(1 for r in results if r.passed)
        print(f"{good}/{len(results)} checks passed in {total:.2f}s",
              file=stream)
    return 0 if all(r.passed for r in results) else 1


# --- parser ----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="npsurf",
        description="Exact syzygy-level decisions for polarized rational "
                    "surfaces and Fano manifolds.")
    parser.add_argument("--json", action="store_true",
                        help="emit machine-readable JSON instead of text")
    parser.add_argument("--eval-file", metavar="FILE",
                        help='evaluate one {"op": ..., "args": ...} request '
                             "from FILE ('-' reads stdin) and print JSON")
    sub = parser.add_subparsers(dest="command")

    c = sub.add_parser("classify", help="syzygy level of a polarization")
    c.add_argument("--surface", metavar="FILE",
                   help="flat JSON file: lattice keys, coeffs, optional flags")
    c.add_argument("--t", type=int, help="anticanonical degree -K.L")
    c.add_argument("--p", default="auto",
                   help="level to query, or 'auto' for the criterion's level")
    c.add_argument("--ample", action="store_true")
    c.add_argument("--bpf", action="store_true")
    c.add_argument("--anticanonical", action="store_true")
    c.add_argument("--nef", action="store_true")
    c.add_argument("--check-bpf", action="store_true",
                   help="run the base-point-freeness test instead")
    c.add_argument("--curve-genus", type=int)
    c.add_argument("--curve-degree", type=int)

    b = sub.add_parser("bounds", help="degree and summand-count bounds")
    b.add_argument("--k2", type=int, required=True, dest="ksq")
    b.add_argument("--p", type=int)
    b.add_argument("--L2", type=int, dest="Lsq")
    b.add_argument("--e", type=int)
    b.add_argument("--exclude", action="append", default=[], metavar="TAG")
    b.add_argument("--summand", metavar="TAG")
    b.add_argument("--conic", action="store_true",
                   help="the adjoint maps onto a pencil of conics")
    b.add_argument("--multiple", action="store_true",
                   help="the bundle is a multiple of the anticanonical class")
    b.add_argument("--adjoint-effective", action="store_true")

    a = sub.add_parser("adjoint",
                       help="very-ampleness of canonical-plus-ample bundles")
    a.add_argument("--k2", type=int, required=True, dest="ksq")
    a.add_argument("--summands", metavar="TAG[,TAG...]",
                   help="shape tags of the ample summands")
    a.add_argument("--equivalence", action="store_true",
                   help="report the ampleness/very-ampleness/syzygy "
                        "equivalence for this K^2 instead")
    a.add_argument("--summand", default="other")
    a.add_argument("--e", type=int)

    r = sub.add_parser("reider", help="quadratic and degree gates for N_p")
    r.add_argument("--k2", type=int, required=True, dest="ksq")
    r.add_argument("--L2", type=int, required=True, dest="Lsq")
    r.add_argument("--p", type=int, required=True)
    r.add_argument("--minus-k-dot-L", type=int, dest="minus_k_dot_L")
    r.add_argument("--cond1", action="store_true",
                   help="attest L.C >= 3 on every curve and L^2 >= 10")
    r.add_argument("--adjoint-va", action="store_true",
                   help="attest K + L very ample")
    r.add_argument("--multiple", action="store_true")

    t = sub.add_parser("terminate",
                       help="twist threshold where the adjoint bundle stops "
                            "being ample")
    t.add_argument("--k2", type=int, required=True, dest="ksq")
    t.add_argument("--p", type=int, required=True)
    t.add_argument("--e", type=int)
    t.add_argument("--not-multiple", action="store_true",
                   help="the polarization is not a multiple of -K")
    t.add_argument("--np-sharp", action="store_true",
                   help="attest that p is the exact syzygy level")

    ex = sub.add_parser("example",
                        help="reference families: build, verify, sweep")
    exs = ex.add_subparsers(dest="action", required=True)
    ev = exs.add_parser("verify", help="recompute and cross-check claims")
    ev.add_argument("id")
    ev.add_argument("--param", action="append", default=[], metavar="K=V")
    ev.add_argument("--sweep", action="store_true",
                    help="verify the whole parameter range")
    ev.add_argument("--box", type=int, help="oracle search box override")
    es = exs.add_parser("show", help="print one instance's data")
    es.add_argument("id")
    es.add_argument("--param", action="append", default=[], metavar="K=V")
    exs.add_parser("list", help="list families and parameter ranges")

    f = sub.add_parser("fano", help="Fano n-fold criteria")
    fs = f.add_subparsers(dest="action", required=True)
    fc = fs.add_parser("classify", help="classify (X, H) or a twist of it")
    fc.add_argument("--n", type=int, required=True, help="dimension")
    fc.add_argument("--index", type=int, required=True, dest="m")
    fc.add_argument("--deg", type=int, required=True, dest="Hn",
                    help="top self-intersection H^n")
    fc.add_argument("--h0", type=int, dest="h0H", help="section count of H")
    fc.add_argument("--morphism", choices=_MORPHISMS,
                    default=fano.MORPHISM_UNKNOWN)
    fc.add_argument("--k", type=int, help="twist kH to classify")
    fc.add_argument("--p", type=int, help="syzygy level to test")
    fp = fs.add_parser("surface",
                       help="multiples on an anticanonical surface")
    fp.add_argument("--minus-k-dot-b", type=int, required=True,
                    dest="minusK_dot_B")
    fp.add_argument("--l", type=int, required=True, help="multiple lB")
    fp.add_argument("--p", type=int, required=True)
    fp.add_argument("--p2-o1", action="store_true", dest="is_P2_O1",
                    help="B is the plane with its line bundle")
    ft = fs.add_parser("twist", help="pinned projective-space twists")
    ft.add_argument("--dim", type=int, required=True)
    ft.add_argument("--k", type=int, required=True)

    o = sub.add_parser("oracle", help="exhaustive ampleness search")
    o.add_argument("--id", dest="family_id", help="family id")
    o.add_argument("--param", action="append", default=[], metavar="K=V")
    o.add_argument("--divisor", metavar="FILE",
                   help="flat divisor JSON file to test instead")
    o.add_argument("--box", type=int,
                   help="search box (env NP_ORACLE_BOX sets the default)")

    sub.add_parser("selftest", help="run the hermetic check suite")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = sys.stdout

    try:
        if args.eval_file is not None:
            if args.eval_file == "-":
                request = json.load(sys.stdin)
            else:
                with open(args.eval_file) as fh:
                    request = json.load(fh)
            print(json.dumps(api.evaluate(request), indent=2, sort_keys=True),
                  file=out)
            return 0

        if args.command is None:
            parser.print_usage(sys.stderr)
            print("npsurf: error: a subcommand (or --eval-file) is required",
                  file=sys.stderr)
            return 2

        if args.command == "selftest":
            return _cmd_selftest(args.json, out)
        if args.command == "example":
            code, payload = _cmd_example(args, args.json, out)
            if payload is not None:
                _emit(payload, args.json, out)
            return code

        handler = {
            "classify": _cmd_classify,
            "bounds": _cmd_bounds,
            "adjoint": _cmd_adjoint,
            "reider": _cmd_reider,
            "terminate": _cmd_terminate,
            "fano": _cmd_fano,
            "oracle": _cmd_oracle,
        }[args.command]
        code, payload = handler(args)
        _emit(payload, args.json, out)
        return code
    except VerificationError as exc:
        print(f"npsurf: verification failed: {exc}", file=sys.stderr)
        return 1
    except (OracleNotApplicable, CertificateRefused) as exc:
        print(f"npsurf: not applicable: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"npsurf: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
