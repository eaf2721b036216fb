"""Command-line entry point.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Any, Sequence

from . import __version__
from .catalog import catalog_list, get_code
from .code import (
    StabilizerCode,
    ground_state_degeneracy,
    validate_logical_pairs,
)
from .codefile import dumps, export_code, import_code
from .dephasing import (
    DEFAULT_GRID,
    DephasingSpec,
    bloch_coordinates,
    compare_closed_form,
    genus5_closed_form,
)
from .distance import cross_validate_distance, kl_distance, symplectic_distance
from .errors import CodeFileError, GenusCodesError, NoViolationFound, PauliParseError
from .pauli import format_pauli
from .states import encode_zero

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
STRICT_TOL = 1e-9


class UsageError(Exception):
    pass


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--code", help="catalog name, e.g. genus2-unit or genus2-chain-3")
    src.add_argument("--file", type=Path, help="code-definition JSON document")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--json", action="store_true", help="emit the machine-readable report")
    p.add_argument("--strict", action="store_true", help="treat closed-form deviations as failures")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genuscodes", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("catalog", help="list built-in codes")
    _add_common(p)

    p = sub.add_parser("verify", help="structural checks of a code")
    _add_source(p)
    _add_common(p)

    p = sub.add_parser("encode", help="dump the support of |0>_L")
    _add_source(p)
    _add_common(p)
    p.add_argument("--max-qubits", type=int, default=None)

    p = sub.add_parser("distance", help="exhaustive code-distance search")
    _add_source(p)
    _add_common(p)
    p.add_argument("--method", choices=("kl", "symplectic", "both"), default="symplectic")
    p.add_argument("--max-weight", type=int, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--max-qubits", type=int, default=None)

    p = sub.add_parser("bloch", help="logical Bloch vector under dephasing")
    _add_source(p)
    _add_common(p)
    p.add_argument("--model", choices=("global", "local"), default="global")
    p.add_argument("--gamma", type=float, default=0.0)
    p.add_argument("--time", type=float, default=0.0)
    p.add_argument("--theta", type=float, default=0.0)
    p.add_argument("--phi", type=float, default=0.0)
    p.add_argument("--pair", type=int, default=0, help="0-based logical pair index")
    p.add_argument("--compare-closed-form", action="store_true")

    p = sub.add_parser("export", help="write a code-definition document")
    _add_source(p)
    _add_common(p)
    p.add_argument("--out", type=Path, default=None)
    return parser


def _load(args: argparse.Namespace) -> StabilizerCode:
    if args.code is not None:
        try:
            return get_code(args.code)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from exc
    try:
        text = args.file.read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {args.file}: {exc}") from exc
    return import_code(text)


def _emit(args: argparse.Namespace, report: dict[str, Any], text: str) -> None:
    sys.stdout.write(dumps(report) if args.json else text + "\n")


def _expected_dict(code: StabilizerCode) -> dict[str, Any] | None:
    e = code.expected
    if e is None:
        return None
    return {"n": e.n, "k": e.k, "d": e.d, "m": e.m}


def cmd_catalog(args: argparse.Namespace) -> int:
    entries = catalog_list()
    report = {
        "version": __version__,
        "codes": [
            {"name": name, "n": p.n, "k": p.k, "d": p.d, "m": p.m} for name, p in entries
        ],
    }
    width = max(len(name) for name, _ in entries)
    lines = [f"{name:<{width}}  [[{p.n},{p.k},{p.d}]]" for name, p in entries]
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    code = _load(args)
    pairs = validate_logical_pairs(code)
    degeneracy = ground_state_degeneracy(code)
    expected = code.expected
    expected_match = expected is None or (expected.n == code.n and expected.k == code.k)
    ok = (
        code.generators_commute
        and pairs.passed
        and expected_match
        and degeneracy == 2**code.k
    )
    report = {
        "code": code.name,
        "n": code.n,
        "rank": code.rank,
        "k": code.k,
        "generators_commute": code.generators_commute,
        "logical_pairs": [
            {"index": c.index, "pass": c.passed, "failures": c.failures} for c in pairs.pairs
        ],
        "degeneracy": degeneracy,
        "expected_match": expected_match,
        "expected": _expected_dict(code),
        "version": __version__,
    }
    lines = [
        f"code: {code.name} (n={code.n}, {len(code.generators)} generators)",
        "generators commute: "
        + ("yes" if code.generators_commute else f"NO ({len(code.anticommuting_pairs)} pairs)"),
        f"rank: {code.rank}",
        f"k: {code.k}",
        f"ground-state degeneracy: {degeneracy}",
    ]
    for i, j in code.anticommuting_pairs:
        lines.append(
            f"  - generators {i} ({format_pauli(code.generators[i - 1])}) and "
            f"{j} ({format_pauli(code.generators[j - 1])}) anticommute"
        )
    for c in pairs.pairs:
        lines.append(f"logical pair {c.index}: {'pass' if c.passed else 'FAIL'}")
        lines.extend(f"  - {f}" for f in c.failures)
    if expected is not None:
        lines.append(
            f"expected [[{expected.n},{expected.k},{expected.d}]]: "
            f"{'n, k match' if expected_match else 'MISMATCH'}"
        )
    lines.append("verify: " + ("PASS" if ok else "FAIL"))
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_encode(args: argparse.Namespace) -> int:
    code = _load(args)
    state = encode_zero(code, args.max_qubits)
    lines = state.dump_lines()
    report = {
        "code": code.name,
        "n": code.n,
        "support": [
            {"basis": bits, "re": float(re), "im": float(im)}
            for bits, re, im in (line.split() for line in lines)
        ],
        "version": __version__,
    }
    _emit(args, report, "\n".join(lines))
    return EXIT_OK


def cmd_distance(args: argparse.Namespace) -> int:
    code = _load(args)
    if args.max_weight is not None and not 1 <= args.max_weight <= code.n:
        raise UsageError(f"--max-weight must be in 1..{code.n}")
    try:
        if args.method == "kl":
            result = kl_distance(code, args.max_weight, args.max_qubits)
        elif args.method == "symplectic":
            result = symplectic_distance(code, args.max_weight, workers=args.workers)
        else:
            result = cross_validate_distance(
                code, args.max_weight, args.max_qubits, workers=args.workers
            )
    except NoViolationFound as exc:
        sys.stderr.write(f"distance: {exc}\n")
        return EXIT_FAIL
    expected_d = code.expected.d if code.expected is not None else None
    agrees = expected_d is None or expected_d == result.d
    report = {
        "code": code.name,
        "method": result.method,
        "d": result.d,
        "witness": format_pauli(result.witness),
        "checked_up_to": result.checked_up_to,
        "errors_examined": result.error_count_examined,
        "agrees_with_expected": agrees,
        "expected_d": expected_d,
        "version": __version__,
    }
    text = (
        f"{code.name}: d={result.d} (method {result.method}), "
        f"witness {format_pauli(result.witness)}, {result.error_count_examined} Paulis examined"
    )
    if expected_d is not None:
        text += f"\nexpected d={expected_d}: " + ("agrees" if agrees else "DISAGREES")
    _emit(args, report, text)
    return EXIT_OK if agrees else EXIT_FAIL


def cmd_bloch(args: argparse.Namespace) -> int:
    code = _load(args)
    try:
        spec = DephasingSpec(args.model, args.gamma, args.time, args.theta, args.phi, args.pair)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if not 0 <= args.pair < len(code.logical_pairs):
        raise UsageError(f"{code.name} has no logical pair {args.pair}")
    vec = bloch_coordinates(code, spec)
    report: dict[str, Any] = {
        "code": code.name,
        "model": spec.model,
        "gamma": spec.gamma,
        "t": spec.t,
        "theta": spec.theta,
        "phi": spec.phi,
        "pair_index": spec.pair_index,
        "bloch": {"r_x": vec.r_x, "r_y": vec.r_y, "r_z": vec.r_z},
        "version": __version__,
    }
    lines = [f"{code.name} {spec.model} dephasing, gamma={spec.gamma:g}, t={spec.t:g}:",
             f"R = ({vec.r_x:.12f}, {vec.r_y:.12f}, {vec.r_z:.12f})"]
    ok = True
    if args.compare_closed_form:
        if code.name != "genus5-unit":
            raise UsageError("--compare-closed-form applies to genus5-unit only")
        closed = genus5_closed_form(spec.theta, spec.phi, spec.gamma, spec.t)
        grid_report = compare_closed_form(code, DEFAULT_GRID, spec.model)
        report["closed_form"] = {"r_x": closed.r_x, "r_y": closed.r_y, "r_z": closed.r_z}
        report["comparison"] = grid_report.to_dict()
        lines.append(f"closed form: ({closed.r_x:.12f}, {closed.r_y:.12f}, {closed.r_z:.12f})")
        lines.append(grid_report.render())
        worst = max(v["value"] for v in grid_report.max_dev_per_component.values())
        point_dev = max(abs(a - b) for a, b in zip(vec.as_tuple(), closed.as_tuple()))
        if args.strict and max(worst, point_dev) > STRICT_TOL:
            lines.append(f"strict: closed form deviates by up to {max(worst, point_dev):.3e}")
            ok = False
    _emit(args, report, "\n".join(lines))
    return EXIT_OK if ok else EXIT_FAIL


def cmd_export(args: argparse.Namespace) -> int:
    code = _load(args)
    text = export_code(code)
    if args.out is None:
        sys.stdout.write(text)
    else:
        args.out.write_text(text, encoding="utf-8")
    return EXIT_OK


COMMANDS = {
    "catalog": cmd_catalog,
    "verify": cmd_verify,
    "encode": cmd_encode,
    "distance": cmd_distance,
    "bloch": cmd_bloch,
    "export": cmd_export,
}


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, CodeFileError, PauliParseError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except GenusCodesError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_FAIL


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
