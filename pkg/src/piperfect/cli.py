"""Command-line front end.

Exit codes: 0 success, 1 verification failed, 2 usage error,
3 infeasible parameters or instance too large.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Sequence

from . import construct, metric, perfect, spectrum, weightsearch
from .core import (
    BitWord,
    ExplicitCode,
    InconsistentInput,
    InfeasibleParameters,
    InstanceTooLarge,
    LinearCode,
    TwoValuedProfile,
    WeightVector,
    enumerate_codewords,
    str_to_word,
    word_to_str,
)

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_INFEASIBLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Inputs:
    """Collects everything read so the report can carry a digest of it."""

    def __init__(self, argv: Sequence[str]):
        self.h = hashlib.sha256("\0".join(argv).encode())

    def read(self, path: str) -> str:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
        self.h.update(text.encode())
        return text

    def digest(self) -> str:
        return self.h.hexdigest()[:16]


def _pi(source: str, inputs: _Inputs) -> WeightVector:
    text = inputs.read(source) if Path(source).is_file() else source
    try:
        return WeightVector.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad weight vector: {exc}") from None


def _word(s: str, n: int) -> BitWord:
    if len(s) != n:
        raise UsageError(f"word {s!r} has length {len(s)}, expected {n}")
    return BitWord(str_to_word(s), n)


def _int_list(s: str) -> list[int]:
    try:
        return [int(x) for x in s.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {s!r}") from None


def _columns(s: str) -> list[int]:
    """Columns written top row first, e.g. ``100,010``."""
    return [str_to_word(c) for c in s.split(",") if c.strip()]


# ---------- subcommands; each returns (payload, exit code)


def cmd_weight(args, inputs):
    pi = _pi(args.pi, inputs)
    w = _word(args.word, pi.n)
    return {"word": str(w), "support": sorted(w.support()), "weight": metric.pi_weight(w, pi)}, EXIT_OK


def cmd_distance(args, inputs):
    pi = _pi(args.pi, inputs)
    x, y = _word(args.x, pi.n), _word(args.y, pi.n)
    return {"x": str(x), "y": str(y), "distance": metric.pi_distance(x, y, pi)}, EXIT_OK


def cmd_sphere(args, inputs):
    pi = _pi(args.pi, inputs)
    center = _word(args.center, pi.n) if args.center else BitWord(0, pi.n)
    size = metric.sphere_size(pi, args.radius)
    out = {
        "center": str(center),
        "radius": args.radius,
        "size": size.total,
        "compositions": [
            {"parts": {str(i): k for i, k in comp}, "count": c}
            for comp, c in sorted(size.compositions.items())
        ],
    }
    if args.list:
        out["members"] = [word_to_str(y, pi.n) for y in sorted(metric.sphere_enumerate(center, args.radius, pi))]
    return out, EXIT_OK


def cmd_verify(args, inputs):
    pi = _pi(args.pi, inputs)
    if args.matrix:
        code = LinearCode.parse(inputs.read(args.matrix))
    else:
        code = ExplicitCode.parse(inputs.read(args.code))
    if args.method == "structural" and isinstance(code, ExplicitCode) and not code.is_linear():
        raise UsageError("structural verification needs a linear code")
    report = perfect.verify(code, pi, args.radius, method=args.method, jobs=args.jobs)
    return report.to_dict(), EXIT_OK if report.perfect else EXIT_FAILED


def _assignment_payload(a: weightsearch.WeightAssignment, jobs: int):
    report = a.verify(jobs=jobs)
    out = a.to_json(verified=report.perfect)
    out["verification"] = report.to_dict()
    out["notes"] = list(a.notes)
    out["n"] = a.code.n
    return out, EXIT_OK if report.perfect else EXIT_FAILED


def cmd_hamming_pi(args, inputs):
    x1 = args.x1 if args.x1 is not None else weightsearch.max_hamming_x1(args.m)
    seed = _int_list(args.seed) if args.seed else ()
    return _assignment_payload(weightsearch.hamming_2perfect_pi(args.m, x1, seed), args.jobs)


def cmd_ext_hamming_pi(args, inputs):
    if args.radius == 2:
        verdict = weightsearch.ext_hamming_2perfect_feasibility(args.m)
        if not verdict.feasible:
            return {"feasibility": verdict.to_json()}, EXIT_INFEASIBLE
        out, code = _assignment_payload(weightsearch.ext_hamming_2perfect_pi(args.m), args.jobs)
        out["feasibility"] = verdict.to_json()
        return out, code
    x1 = args.x1 if args.x1 is not None else 1
    return _assignment_payload(weightsearch.ext_hamming_3perfect_pi(args.m, x1), args.jobs)


def cmd_nagell(args, inputs):
    sols = weightsearch.nagell_solutions(args.limit)
    return {"limit": args.limit, "solutions": [{"x": x, "n": n} for x, n in sols]}, EXIT_OK


def cmd_construct(args, inputs):
    seed = _columns(args.seed) if args.seed else None
    F = construct.family_build(args.t, args.m, seed)
    H, pi = construct.code_from_family(F)
    check = construct.family_check(F.columns, F.t, F.m)
    code = enumerate_codewords(H)
    report = perfect.verify_exhaustive(code, pi, 2, jobs=args.jobs)
    out = F.to_json()
    out.update(
        {
            "matrix": H.serialize().split(),
            "pi": list(pi.weights),
            "family_check": bool(check),
            "codewords": code.strings(),
            "verified": report.perfect,
            "verification": report.to_dict(),
        }
    )
    return out, EXIT_OK if report.perfect and check else EXIT_FAILED


def cmd_spectrum(args, inputs):
    code = ExplicitCode.parse(inputs.read(args.code))
    try:
        profile = TwoValuedProfile(code.n, args.m)
    except InfeasibleParameters as exc:
        raise InfeasibleParameters(f"n={code.n}, m={args.m}: {exc}") from None
    out: dict = {"n": profile.n, "m": profile.m, "t": profile.t, "size": len(code)}
    status = EXIT_OK
    if args.fourier:
        table = spectrum.fourier(code)
        verdict = spectrum.support_characterization(code, profile)
        out["A0"] = table[0]
        out["classes"] = [
            {"k": k, "members": c, "sum": s}
            for k, (c, s) in enumerate(zip(table.class_counts(profile), table.grouped(profile)))
        ]
        out["support_ok"] = verdict.ok
        if not verdict.ok:
            out["witness"] = {"d": word_to_str(verdict.witness, code.n), "A_d": verdict.coefficient}
            status = EXIT_FAILED
    elif args.recover:
        direct = spectrum.DistributionTable.from_code(code, profile)
        head = _int_list(args.head) if args.head else list(direct.head)
        rec = spectrum.recover_distribution(head, profile, code_size=len(code))
        out["head"] = head
        out["grouped"] = list(rec.grouped)
        out["table"] = rec.table.to_json()["a"]
        out["matches_code"] = rec.table == direct
        if not out["matches_code"]:
            status = EXIT_FAILED
    else:
        out["enumerator"] = spectrum.pi_weight_enumerator(code, profile.weight_vector())
    return out, status


COMMANDS = {
    "weight": cmd_weight,
    "distance": cmd_distance,
    "sphere": cmd_sphere,
    "verify": cmd_verify,
    "hamming-pi": cmd_hamming_pi,
    "ext-hamming-pi": cmd_ext_hamming_pi,
    "nagell": cmd_nagell,
    "construct": cmd_construct,
    "spectrum": cmd_spectrum,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "table"], default="json")
    common.add_argument("--jobs", type=int, default=1, help="workers for exhaustive verification")

    p = argparse.ArgumentParser(prog="piperfect", description="Perfect codes in weighted Hamming metrics")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("weight", parents=[common], help="pi-weight of a word")
    s.add_argument("--pi", required=True, help="weight file or inline list like 1,1,2")
    s.add_argument("--word", required=True)

    s = sub.add_parser("distance", parents=[common], help="pi-distance of two words")
    s.add_argument("--pi", required=True)
    s.add_argument("x")
    s.add_argument("y")

    s = sub.add_parser("sphere", parents=[common], help="pi-sphere size and members")
    s.add_argument("--pi", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--center")
    s.add_argument("--list", action="store_true")

    s = sub.add_parser("verify", parents=[common], help="decide r-perfectness")
    src = s.add_mutually_exclusive_group(required=True)
    src.add_argument("--code", help="codeword file")
    src.add_argument("--matrix", help="parity-check matrix file")
    s.add_argument("--pi", required=True)
    s.add_argument("--radius", type=int, required=True)
    s.add_argument("--method", choices=["exhaustive", "structural"], default="exhaustive")

    s = sub.add_parser("hamming-pi", parents=[common], help="weights making H_m 2-perfect")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--x1", type=int)
    s.add_argument("--seed", help="comma-separated positions for X1")

    s = sub.add_parser("ext-hamming-pi", parents=[common], help="weights for the extended code")
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--radius", type=int, choices=[2, 3], default=2)
    s.add_argument("--x1", type=int)

    s = sub.add_parser("nagell", parents=[common], help="solutions of x^2 + 7 = 2^n")
    s.add_argument("--limit", type=int, required=True)

    s = sub.add_parser("construct", parents=[common], help="build a 2-perfect linear code")
    s.add_argument("--t", type=int, required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--seed", help="head columns, top row first, e.g. 100,010")

    s = sub.add_parser("spectrum", parents=[common], help="Fourier analysis of a 2-perfect code")
    s.add_argument("--code", required=True)
    s.add_argument("--m", type=int, required=True)
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument("--fourier", action="store_true")
    mode.add_argument("--recover", action="store_true")
    mode.add_argument("--enumerator", action="store_true")
    s.add_argument("--head", help="a_{0,0},...,a_{m,0}; defaults to counts from the code")
    return p


def render_table(report: dict) -> str:
    lines = []
    for key in sorted(report):
        value = report[key]
        if isinstance(value, list) and value and all(isinstance(v, str) for v in value):
            lines.append(f"{key}:")
            lines.extend(f"  {v}" for v in value)
        elif isinstance(value, list) and value and all(isinstance(v, list) for v in value):
            lines.append(f"{key}:")
            lines.extend("  " + " ".join(f"{x:>4}" for x in row) for row in value)
        elif isinstance(value, dict) or (isinstance(value, list) and value and isinstance(value[0], dict)):
            lines.append(f"{key}: {json.dumps(value, sort_keys=True)}")
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines)


def run(argv: Sequence[str]) -> tuple[dict, int]:
    """Parse and execute; returns the run report and the exit code."""
    return execute(build_parser().parse_args(argv), argv)


def execute(args: argparse.Namespace, argv: Sequence[str]) -> tuple[dict, int]:
    inputs = _Inputs(argv)
    start = time.perf_counter()
    try:
        payload, code = COMMANDS[args.command](args, inputs)
        error = None
    except UsageError as exc:
        payload, code, error = {}, EXIT_USAGE, str(exc)
    except (InfeasibleParameters, InstanceTooLarge) as exc:
        payload, code, error = {}, EXIT_INFEASIBLE, str(exc)
    except InconsistentInput as exc:
        payload, code, error = {}, EXIT_FAILED, str(exc)
    except ValueError as exc:
        payload, code, error = {}, EXIT_USAGE, str(exc)
    report = {
        "command": args.command,
        "argv": list(argv),
        "inputs_digest": inputs.digest(),
        "exit_code": code,
        "result": payload,
        "wall_time": round(time.perf_counter() - start, 6),
    }
    if error:
        report["error"] = error
    return report, code


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    report, code = execute(args, argv)
    if args.format == "json":
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        body = dict(report["result"])
        body.update({k: v for k, v in report.items() if k not in ("result", "argv")})
        print(render_table(body))
    return code


if __name__ == "__main__":
    sys.exit(main())
