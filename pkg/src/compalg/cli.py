"""Command-line interface: the only I/O surface of the package.

Commands
--------
check FILE            associativity + compatibility residuals per pair
invariants FILE       solve one linear kind, print the solution space
operators FILE        verify a family file or run the finite-field oracle
verify-catalog        run every catalog entry and emit the diff report

A MISMATCH against the recorded tables is a finding, not a failure: the
exit status is 0 whenever the command completes.  ``--strict-paper`` turns
any MISMATCH into exit status 1 (for CI of the catalog encoding itself).
Bad inputs and enumeration-guard violations exit nonzero with a diagnostic.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import __version__
from .catalog import (
    CatalogFormatError,
    load_builtin_catalog,
    parse_catalog_text,
    verify_entry,
)
from .fforacle import GuardExceededError, exhaustive_solutions_mod_p
from .identities import LINEAR_KINDS
from .linsys import format_solution, param_matrix, solve_for_invariants
from .operators import SINGLE_SLOT_KINDS, verify_family
from .report import build_document, emit_report
from .scalars import scalar_to_str

OPERATOR_CHOICES = sorted(set(SINGLE_SLOT_KINDS))
LINEAR_CHOICES = sorted(LINEAR_KINDS)


def _read_pairs(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise CatalogFormatError(f"cannot read {path}: {err}") from err
    pairs = parse_catalog_text(text)
    if not pairs:
        raise CatalogFormatError(f"{path} contains no pair documents")
    return pairs


def _parse_assignments(items):
    assignment = {}
    for item in items or []:
        name, _, value = item.partition("=")
        if not name or not value:
            raise ValueError(f"bad parameter assignment {item!r}; expected name=value")
        try:
            assignment[name] = Fraction(value)
        except (ValueError, ZeroDivisionError) as err:
            raise ValueError(f"parameter {name}={value!r} is not a rational") from err
    return assignment


def _specialized(pair, assignment):
    if not pair.parameters:
        return pair
    if assignment:
        missing = [p for p in pair.parameters if p not in assignment]
        if missing:
            raise ValueError(f"{pair.name}: missing assignments for {missing}")
        return pair.specialize(assignment)
    return pair


def _emit(document, args):
    # non-report documents share the emission rules: sorted-key JSON or text
    if args.format == "json":
        out = json.dumps(document, sort_keys=True, indent=2) + "\n"
    else:
        out = _plain_text(document)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _plain_text(document, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(document, dict):
        for key in document:
            value = document[key]
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.append(_plain_text(value, indent + 1).rstrip("\n"))
            else:
                lines.append(f"{pad}{key}: {value}")
    elif isinstance(document, list):
        for value in document:
            if isinstance(value, (dict, list)):
                lines.append(_plain_text(value, indent).rstrip("\n"))
                lines.append("")
            else:
                lines.append(f"{pad}- {value}")
        while lines and not lines[-1]:
            lines.pop()
    else:
        lines.append(f"{pad}{document}")
    return "\n".join(lines) + "\n"


def cmd_check(args) -> int:
    from .tensor import associativity_residuals, compatibility_residuals, nonzero_residual_indices

    assignment = _parse_assignments(args.param)
    results = []
    for pair in _read_pairs(args.file):
        pair = _specialized(pair, assignment)
        rec = {"name": pair.name, "dim": pair.dim, "params": list(pair.parameters)}
        for label, tensor in (("bullet", pair.bullet), ("star", pair.star)):
            bad = nonzero_residual_indices(associativity_residuals(tensor))
            rec[f"associative_{label}"] = not bad
            if bad:
                rec[f"associativity_{label}_witnesses"] = bad[:5]
        bad = nonzero_residual_indices(compatibility_residuals(pair))
        rec["compatible"] = not bad
        if bad:
            rec["compatibility_witnesses"] = bad[:5]
        results.append(rec)
    _emit({"pairs": results}, args)
    return 0


def cmd_invariants(args) -> int:
    assignment = _parse_assignments(args.param)
    results = []
    for pair in _read_pairs(args.file):
        pair = _specialized(pair, assignment)
        space = solve_for_invariants(args.kind, pair)
        rendered = format_solution(space)
        rec = {
            "name": pair.name,
            "kind": args.kind,
            "freedim": space.freedim,
            "slots": list(space.slots),
            "exclusions": [scalar_to_str(e) for e in space.exclusions],
            "basis": [
                [[[scalar_to_str(x) for x in row] for row in m] for m in sol]
                for sol in space.basis
            ],
            "solution_matrices": [
                [[scalar_to_str(e) for e in row] for row in matrix.entries]
                for matrix in rendered
            ],
        }
        results.append(rec)
    _emit({"invariants": results}, args)
    return 0


def _load_family(path: str, dim: int):
    with open(path, encoding="utf-8") as fh:
        doc = json.load(fh)
    unknown = set(doc) - {"dim", "params", "entries", "exclusions"}
    if unknown:
        raise CatalogFormatError(f"family file has unknown fields {sorted(unknown)}")
    if doc.get("dim", dim) != dim:
        raise CatalogFormatError("family dimension disagrees with the pair")
    return param_matrix(
        dim, doc.get("params", []), doc["entries"], doc.get("exclusions", [])
    )


def cmd_operators(args) -> int:
    assignment = _parse_assignments(args.param)
    results = []
    for pair in _read_pairs(args.file):
        if args.family:
            matrix = _load_family(args.family, pair.dim)
            verdict = verify_family(args.kind, pair, matrix)
            rec = {
                "name": pair.name,
                "kind": args.kind,
                "mode": "family",
                "verdict": verdict.verdict,
                "constraints": list(verdict.constraints),
            }
            if verdict.witness:
                rec["witness"] = verdict.witness
            if verdict.det is not None:
                rec["det"] = scalar_to_str(verdict.det.det)
                rec["det_is_unit"] = verdict.det.is_unit
        else:
            concrete = _specialized(pair, assignment)
            result = exhaustive_solutions_mod_p(args.kind, concrete, args.oracle)
            rec = {
                "name": concrete.name,
                "kind": args.kind,
                "mode": "oracle",
                "prime": args.oracle,
                "count": result.count,
            }
            if result.count <= 200:
                rec["solutions"] = [
                    [[int(x) for x in row] for row in sol[0]] for sol in result.solutions
                ]
            else:
                rec["solutions_omitted"] = result.count
        results.append(rec)
    _emit({"operators": results}, args)
    return 0


def cmd_verify_catalog(args) -> int:
    entries = load_builtin_catalog(args.catalog_dir)
    if args.only:
        entries = [e for e in entries if e.name == args.only]
        if not entries:
            print(f"error: no catalog entry named {args.only!r}", file=sys.stderr)
            return 1
    reports = [verify_entry(e) for e in entries]
    document = build_document(reports)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for rep in reports:
            path = os.path.join(args.out, f"{rep.entry}.json")
            with open(path, "w", encoding="utf-8") as fh:
                fh.write(json.dumps(rep.to_dict(), sort_keys=True, indent=2) + "\n")
        with open(os.path.join(args.out, "summary.json"), "w", encoding="utf-8") as fh:
            fh.write(json.dumps(document["summary"], sort_keys=True, indent=2) + "\n")
        verdicts = document["summary"]["verdicts"]
        line = " ".join(f"{k}={v}" for k, v in verdicts.items())
        print(f"{len(reports)} entries -> {args.out} | {line}")
    else:
        sys.stdout.write(emit_report(document, args.format))
    if args.strict_paper and document["summary"]["verdicts"].get("MISMATCH"):
        print("error: MISMATCH findings present (--strict-paper)", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="compalg",
        description="Exact verification of paired associative multiplications and their invariants.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--out", help="write the document to this path instead of stdout")
        p.add_argument(
            "--param",
            action="append",
            metavar="NAME=VALUE",
            help="specialize a classification parameter at a rational value",
        )

    p_check = sub.add_parser("check", help="associativity and compatibility residuals")
    p_check.add_argument("file", metavar="FILE")
    common(p_check)
    p_check.set_defaults(func=cmd_check)

    p_inv = sub.add_parser("invariants", help="solve one linear invariant kind")
    p_inv.add_argument("file", metavar="FILE")
    p_inv.add_argument("--kind", required=True, choices=LINEAR_CHOICES)
    common(p_inv)
    p_inv.set_defaults(func=cmd_invariants)

    p_ops = sub.add_parser("operators", help="verify an operator family or run the oracle")
    p_ops.add_argument("file", metavar="FILE")
    p_ops.add_argument("--kind", required=True, choices=OPERATOR_CHOICES)
    group = p_ops.add_mutually_exclusive_group(required=True)
    group.add_argument("--family", help="JSON family file to verify symbolically")
    group.add_argument("--oracle", type=int, help="enumerate all solutions over F_p")
    common(p_ops)
    p_ops.set_defaults(func=cmd_operators)

    p_cat = sub.add_parser("verify-catalog", help="verify every built-in entry")
    p_cat.add_argument("--only", help="restrict to one entry name")
    p_cat.add_argument("--out", help="directory for per-entry reports")
    p_cat.add_argument("--format", choices=("text", "json"), default="text")
    p_cat.add_argument(
        "--catalog-dir",
        default=None,
        help="load the catalog from this directory (default: built-in, or $CPA_CATALOG_DIR)",
    )
    p_cat.add_argument(
        "--strict-paper",
        action="store_true",
        help="exit nonzero when any MISMATCH finding is present",
    )
    p_cat.set_defaults(func=cmd_verify_catalog)
    return parser


def _validate_oracle(args) -> None:
    if getattr(args, "oracle", None) is None:
        return
    q = args.oracle
    if q < 2 or any(q % d == 0 for d in range(2, int(q**0.5) + 1)):
        raise ValueError(f"--oracle {q}: not a prime")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _validate_oracle(args)
        return args.func(args)
    except (CatalogFormatError, GuardExceededError, ValueError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
