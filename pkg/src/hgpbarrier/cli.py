"""Command line front end.

Subcommands parse parity-check matrices (alist or dense 0/1 text), build
product codes, run exact barrier searches, list canonical logical operators,
and stream claim-checker reports. Output is JSON by default with sorted keys
and no timestamps, so identical inputs, flags, and seed give byte-identical
bytes; the text format is for reading, not for scripting against.

Exit codes: 0 success or all claims pass, 1 at least one claim failed,
2 usage or input error, 3 state cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from .barrier import classical_barrier, quantum_barrier, sector_table
from .codes import ClassicalCode, emit_dense, parse_alist, parse_auto, parse_dense
from .errors import CapExceeded, HgpBarrierError, NoLogicals, ParseError
from .hgp import build_hgp, css_check, hgp_parameters
from .logicals import canonical_x_basis, canonical_z_basis
from .verify import CLAIMS, run_all, run_claim
from . import verify

EXIT_OK = 0
EXIT_CLAIM_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3


def _emit_error(kind: str, detail: str) -> None:
    print(json.dumps({"error": kind, "detail": detail}, sort_keys=True), file=sys.stderr)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        _emit_error("usage", message)
        self.exit(EXIT_USAGE)


def _load_code(path: str, fmt: str | None) -> ClassicalCode:
    text = Path(path).read_text()
    if fmt == "alist":
        return parse_alist(text)
    if fmt == "dense":
        return parse_dense(text)
    return parse_auto(text)


def _finite(v):
    return None if v == math.inf else v


def _text_lines(obj, indent: str = "") -> list[str]:
    lines = []
    if isinstance(obj, dict):
        for key in obj:
            val = obj[key]
            if isinstance(val, (dict, list)):
                lines.append(f"{indent}{key}:")
                lines.extend(_text_lines(val, indent + "  "))
            else:
                lines.append(f"{indent}{key}: {val}")
    elif isinstance(obj, list):
        for val in obj:
            if isinstance(val, (dict, list)):
                lines.append(f"{indent}-")
                lines.extend(_text_lines(val, indent + "  "))
            else:
                lines.append(f"{indent}- {val}")
    else:
        lines.append(f"{indent}{obj}")
    return lines


def _print_report(report: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(report, sort_keys=True))
    else:
        print("\n".join(_text_lines(report)))


def _witness_dict(result) -> dict:
    w = result.witness
    endpoint = w.states[-1]
    support = list(endpoint.support())
    return {
        "max_energy": w.max_energy,
        "steps": w.steps(),
        "endpoint_support": support,
        "path": w.steps_json(),
    }


def cmd_info(args) -> int:
    c = _load_code(args.path, args.fmt)
    p = c.parameters(1 << args.max_dim)
    report = {
        "n": c.n,
        "r": c.r,
        "k": p.k,
        "d": _finite(p.d),
        "w_c": c.w_c,
        "w_q": c.w_q,
    }
    _print_report(report, args.format)
    return EXIT_OK


def cmd_hgp(args) -> int:
    c1 = _load_code(args.path1, args.fmt)
    c2 = _load_code(args.path2, args.fmt)
    code = build_hgp(c1, c2)
    try:
        p = hgp_parameters(code, 1 << args.max_dim)
        k, d = p.k, p.d
    except NoLogicals:
        k, d = 0, math.inf
    params = {
        "n": code.n_qubits,
        "k": k,
        "d": _finite(d),
        "w_c": code.w_c,
        "w_q": code.w_q,
        "css": css_check(code),
    }
    files = {
        "hx": f"{args.out}_hx.txt",
        "hz": f"{args.out}_hz.txt",
        "params": f"{args.out}_params.json",
    }
    Path(files["hx"]).write_text(emit_dense(ClassicalCode(code.hx)))
    Path(files["hz"]).write_text(emit_dense(ClassicalCode(code.hz)))
    Path(files["params"]).write_text(json.dumps(params, sort_keys=True) + "\n")
    _print_report({"params": params, "files": files}, args.format)
    return EXIT_OK


def cmd_barrier(args) -> int:
    cap = 1 << args.max_dim
    if args.kind == "classical":
        if len(args.paths) != 1:
            _emit_error("usage", "barrier classical takes exactly one matrix file")
            return EXIT_USAGE
        c = _load_code(args.paths[0], args.fmt)
        result = classical_barrier(c, cap)
        report = {
            "kind": "classical",
            "value": result.value,
            "explored": result.explored,
            "witness": _witness_dict(result),
        }
        _print_report(report, args.format)
        return EXIT_OK
    if len(args.paths) != 2:
        _emit_error("usage", f"barrier {args.kind} takes exactly two matrix files")
        return EXIT_USAGE
    c1 = _load_code(args.paths[0], args.fmt)
    c2 = _load_code(args.paths[1], args.fmt)
    code = build_hgp(c1, c2)
    if args.kind == "quantum":
        result = quantum_barrier(code, args.sector, cap)
        report = {
            "kind": "quantum",
            "sector": args.sector,
            "value": result.value,
            "explored": result.explored,
            "witness": _witness_dict(result),
        }
        _print_report(report, args.format)
        return EXIT_OK
    # canonical: cheapest canonical operator per requested sector
    report = {"kind": "canonical", "sector": args.sector}
    values = []
    if args.sector in ("z", "both"):
        tz = sector_table(code, "z", cap)
        vz = min(tz.value(op.realized.z.bits) for op in canonical_z_basis(code))
        report["z"] = vz
        values.append(vz)
    if args.sector in ("x", "both"):
        tx = sector_table(code, "x", cap)
        vx = min(tx.value(op.realized.x.bits) for op in canonical_x_basis(code))
        report["x"] = vx
        values.append(vx)
    report["value"] = min(values)
    _print_report(report, args.format)
    return EXIT_OK


def cmd_logicals(args) -> int:
    c1 = _load_code(args.path1, args.fmt)
    c2 = _load_code(args.path2, args.fmt)
    code = build_hgp(c1, c2)
    records = []
    if args.sector in ("z", "both"):
        for op in canonical_z_basis(code):
            records.append(_op_record("Z", op))
    if args.sector in ("x", "both"):
        for op in canonical_x_basis(code):
            records.append(_op_record("X", op))
    _print_report({"count": len(records), "operators": records}, args.format)
    return EXIT_OK


def _op_record(kind: str, op) -> dict:
    return {
        "type": kind,
        "lambda": op.lam.to01_rows(),
        "kappa": op.kappa.to01_rows(),
        "support": list(op.realized.support()),
        "weight": op.realized.weight(),
    }


def cmd_verify(args) -> int:
    cap = 1 << args.max_dim
    if args.paths and args.claim in ("all", "lemma4"):
        _emit_error("usage", f"verify {args.claim} runs on built-in instances only")
        return EXIT_USAGE
    if args.paths and len(args.paths) != 2:
        _emit_error("usage", "verify takes zero or two matrix files")
        return EXIT_USAGE
    if args.paths:
        c1 = _load_code(args.paths[0], args.fmt)
        c2 = _load_code(args.paths[1], args.fmt)
        name = f"{args.paths[0]} x {args.paths[1]}"
        if args.claim == "main":
            reports = [verify.check_main_equality(c1, c2, cap, instance=name)]
        else:
            code = build_hgp(c1, c2)
            dispatch = {
                "lemma1": lambda: verify.check_lemma1(code, cap, instance=name),
                "thm1": lambda: verify.check_theorem1(
                    code, samples=100, seed=args.seed, cap=cap, instance=name
                ),
                "lemma2": lambda: verify.check_lemma2(code, cap, instance=name),
                "lemma3": lambda: verify.check_lemma3(code, cap, instance=name),
                "prop1": lambda: verify.check_proposition1(code, cap, instance=name),
                "css-restriction": lambda: verify.check_css_restriction(
                    code, cap, instance=name
                ),
            }
            reports = [dispatch[args.claim]()]
    elif args.claim == "all":
        reports, _ = run_all(seed=args.seed, cap=cap, pauli_cap=cap)
    else:
        reports = run_claim(args.claim, seed=args.seed, cap=cap, pauli_cap=cap)
    summary = {
        "claims": len(reports),
        "passes": sum(r.passed for r in reports),
        "fails": sum(not r.passed for r in reports),
    }
    if args.format == "json":
        for r in reports:
            print(json.dumps(r.to_json_dict(), sort_keys=True))
        print(json.dumps({"summary": summary}, sort_keys=True))
    else:
        for r in reports:
            print(f"{r.claim} {r.instance}: {r.status} (checked {r.checked})")
        print(
            f"claims {summary['claims']} passes {summary['passes']} "
            f"fails {summary['fails']}"
        )
    return EXIT_OK if summary["fails"] == 0 else EXIT_CLAIM_FAIL


def _build_parser() -> _Parser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("json", "text"), default="json", help="output format"
    )
    common.add_argument(
        "--fmt", choices=("alist", "dense"), help="input format (default: sniff)"
    )
    common.add_argument(
        "--max-dim",
        type=int,
        default=24,
        dest="max_dim",
        help="log2 of the search state cap",
    )
    common.add_argument("--seed", type=int, default=0, help="PRNG seed")

    parser = _Parser(prog="hgpbarrier", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", parents=[common], help="classical code parameters")
    p.add_argument("path")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser(
        "hgp", parents=[common], help="build a product code and write its matrices"
    )
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--out", required=True, help="output file prefix")
    p.set_defaults(func=cmd_hgp)

    p = sub.add_parser("barrier", parents=[common], help="exact energy barrier")
    p.add_argument("kind", choices=("classical", "quantum", "canonical"))
    p.add_argument("paths", nargs="+")
    p.add_argument("--sector", choices=("z", "x", "both"), default="both")
    p.set_defaults(func=cmd_barrier)

    p = sub.add_parser(
        "logicals", parents=[common], help="canonical logical operators"
    )
    p.add_argument("path1")
    p.add_argument("path2")
    p.add_argument("--sector", choices=("z", "x", "both"), default="both")
    p.set_defaults(func=cmd_logicals)

    p = sub.add_parser("verify", parents=[common], help="run claim checkers")
    p.add_argument("claim", choices=CLAIMS + ("all",))
    p.add_argument("paths", nargs="*")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.max_dim < 1:
        _emit_error("usage", "--max-dim must be positive")
        return EXIT_USAGE
    try:
        return args.func(args)
    except CapExceeded as e:
        _emit_error("cap-exceeded", str(e))
        return EXIT_CAP
    except ParseError as e:
        _emit_error("parse", str(e))
        return EXIT_USAGE
    except OSError as e:
        _emit_error("io", str(e))
        return EXIT_USAGE
    except HgpBarrierError as e:
        _emit_error(type(e).__name__.lower(), str(e))
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
