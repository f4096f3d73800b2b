"""Catalog: the machine-readable pair collection, its file format, and the
entry-level verification that drives the diff report.

File format (extension ``.cpa.json``): line-oriented JSON, one document per
pair, with fields ``name``, ``dim``, ``params``, ``exclusions`` (scalar
expressions) and ``bullet``/``star`` as arrays of ``{i, j, k, c}`` cells,
``c`` a scalar expression string.  Unknown fields and duplicate cells are
rejected; serialization is canonical (sorted cells, canonical scalar
strings), so ``parse(serialize(p))`` is structurally identical to ``p``.

The recorded expected tables (automorphism families and invariant matrices)
live in a companion ``expected.json``; every distinct printed symbol is one
free parameter.  ``verify_entry`` compares them against what the solvers
actually compute and never raises on disagreement: MATCH / MATCH-TRANSPOSED /
MISMATCH / CONDITIONAL are findings, recorded with the exact witnesses or
constraint polynomials.
"""

from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources

from .identities import LINEAR_KINDS
from .linsys import (
    ParamMatrix,
    family_span,
    membership,
    param_matrix,
    solve_for_invariants,
)
from .operators import CONDITIONAL, NONZERO, ZERO, verify_family
from .scalars import field_for, parse_scalar, scalar_to_str
from .tensor import (
    AlgebraPair,
    associativity_residuals,
    compatibility_residuals,
    make_pair,
    nonzero_residual_indices,
)

PAIR_FIELDS = {"name", "dim", "params", "exclusions", "bullet", "star"}
SPECIALIZATION_POINTS = (Fraction(0), Fraction(2), Fraction(3))

PASS = "PASS"
MATCH = "MATCH"
MATCH_TRANSPOSED = "MATCH-TRANSPOSED"
MISMATCH = "MISMATCH"
SKIPPED_RADICAL = "SKIPPED-RADICAL"
VERDICTS = (PASS, MATCH, MATCH_TRANSPOSED, MISMATCH, CONDITIONAL, SKIPPED_RADICAL)


class CatalogFormatError(ValueError):
    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            msg = f"{msg} (line {line}, column {column})"
        super().__init__(msg)


# ---------------------------------------------------------------------------
# parsing / serialization


def _parse_product(doc, key, dim, fld, name):
    cells = doc.get(key, [])
    if not isinstance(cells, list):
        raise CatalogFormatError(f"{name}: field {key!r} must be an array")
    table = {}
    for cell in cells:
        if not isinstance(cell, dict) or set(cell) != {"i", "j", "k", "c"}:
            raise CatalogFormatError(f"{name}: malformed cell {cell!r} in {key!r}")
        i, j, k = cell["i"], cell["j"], cell["k"]
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 1 <= idx <= dim:
                raise CatalogFormatError(
                    f"{name}: index {idx} out of range 1..{dim} in {key!r}"
                )
        if (i, j, k) in table:
            raise CatalogFormatError(f"{name}: duplicate cell ({i},{j},{k}) in {key!r}")
        try:
            table[(i, j, k)] = fld.coerce(cell["c"])
        except (ValueError, ZeroDivisionError) as err:
            raise CatalogFormatError(
                f"{name}: bad scalar {cell['c']!r} at {key}({i},{j},{k}): {err}"
            ) from err
    return table


def parse_algebra(text: str) -> AlgebraPair:
    """Parse one pair document (a single JSON object)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise CatalogFormatError(f"invalid JSON: {err.msg}", err.lineno, err.colno) from err
    if not isinstance(doc, dict):
        raise CatalogFormatError("pair document must be a JSON object")
    unknown = set(doc) - PAIR_FIELDS
    if unknown:
        raise CatalogFormatError(f"unknown fields {sorted(unknown)}")
    missing = {"name", "dim"} - set(doc)
    if missing:
        raise CatalogFormatError(f"missing fields {sorted(missing)}")
    name = doc["name"]
    dim = doc["dim"]
    if not isinstance(dim, int) or dim < 1:
        raise CatalogFormatError(f"{name}: dim must be a positive integer")
    params = tuple(doc.get("params", []))
    for p in params:
        if not re.fullmatch(r"[a-zA-Z][a-zA-Z0-9_]*", p):
            raise CatalogFormatError(f"{name}: bad parameter name {p!r}")
    fld = field_for(params)
    exclusions = []
    for expr in doc.get("exclusions", []):
        try:
            exclusions.append(fld.coerce(expr))
        except (ValueError, ZeroDivisionError) as err:
            raise CatalogFormatError(f"{name}: bad exclusion {expr!r}: {err}") from err
    if exclusions and not params:
        raise CatalogFormatError(f"{name}: exclusions require parameters")
    bullet = _parse_product(doc, "bullet", dim, fld, name)
    star = _parse_product(doc, "star", dim, fld, name)
    return make_pair(name, dim, bullet, star, params, tuple(doc.get("exclusions", [])))


def parse_catalog_text(text: str) -> list[AlgebraPair]:
    """Parse a line-oriented catalog file (one document per non-blank line)."""
    pairs = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            pairs.append(parse_algebra(line))
        except CatalogFormatError as err:
            raise CatalogFormatError(f"line {lineno}: {err}") from err
    return pairs


def serialize(pair: AlgebraPair) -> str:
    """Canonical single-line document; parse(serialize(p)) == p structurally."""

    def cells(tensor):
        out = []
        for i, j, k, v in tensor.nonzero_entries():
            out.append({"i": i, "j": j, "k": k, "c": scalar_to_str(v)})
        return out

    doc = {
        "name": pair.name,
        "dim": pair.dim,
        "params": list(pair.parameters),
        "exclusions": [scalar_to_str(pair.field.coerce(e)) for e in pair.exclusions],
        "bullet": cells(pair.bullet),
        "star": cells(pair.star),
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def pairs_equal(a: AlgebraPair, b: AlgebraPair) -> bool:
    return (
        a.name == b.name
        and a.dim == b.dim
        and a.parameters == b.parameters
        and [a.field.coerce(e) for e in a.exclusions] == [b.field.coerce(e) for e in b.exclusions]
        and a.bullet.entries == b.bullet.entries
        and a.star.entries == b.star.entries
    )


# ---------------------------------------------------------------------------
# built-in catalog


@dataclass(frozen=True)
class ExpectedFamily:
    label: str
    matrix: ParamMatrix | None
    kinds: tuple[str, ...] = ()
    radical: bool = False
    note: str = ""


@dataclass(frozen=True)
class CatalogEntry:
    pair: AlgebraPair
    expected_aut: tuple[ExpectedFamily, ...]
    expected_linear: dict
    expected_nonlinear: tuple[ExpectedFamily, ...]
    provenance: str
    notes: tuple[str, ...] = ()

    @property
    def name(self) -> str:
        return self.pair.name


_NAME_RE = re.compile(r"[a-zA-Z][a-zA-Z0-9_]*")


def _collect_params(exprs) -> tuple[str, ...]:
    names = set()
    for expr in exprs:
        names.update(_NAME_RE.findall(expr))
    return tuple(sorted(names))


def matrix_from_exprs(dim, rows, exclusions=()) -> ParamMatrix:
    flat = [x for row in rows for x in row] + list(exclusions)
    params = _collect_params(flat)
    return param_matrix(dim, params, rows, exclusions)


def _load_expected(entry_doc, dim):
    aut = []
    for idx, fam in enumerate(entry_doc.get("aut", [])):
        label = "aut" if len(entry_doc.get("aut", [])) == 1 else f"aut-{chr(ord('a') + idx)}"
        if fam.get("radical"):
            aut.append(ExpectedFamily(label=label, matrix=None, radical=True, note=fam.get("note", "")))
            continue
        aut.append(
            ExpectedFamily(
                label=label,
                matrix=matrix_from_exprs(dim, fam["entries"], fam.get("exclusions", [])),
                note=fam.get("note", ""),
            )
        )
    linear = {}
    for kind, value in entry_doc.get("linear", {}).items():
        if kind in ("quasi-derivation", "generalized-derivation"):
            linear[kind] = tuple(matrix_from_exprs(dim, slot) for slot in value)
        else:
            linear[kind] = (matrix_from_exprs(dim, value),)
    nonlinear = tuple(
        ExpectedFamily(
            label=fam["label"],
            matrix=matrix_from_exprs(dim, fam["entries"]),
            kinds=tuple(fam["kinds"]),
        )
        for fam in entry_doc.get("nonlinear", [])
    )
    return tuple(aut), linear, nonlinear


def _data_text(filename: str, directory: str | None) -> str:
    directory = directory or os.environ.get("CPA_CATALOG_DIR")
    if directory:
        with open(os.path.join(directory, filename), encoding="utf-8") as fh:
            return fh.read()
    return resources.files("compalg.data").joinpath(filename).read_text(encoding="utf-8")


def load_builtin_pairs(directory: str | None = None) -> list[AlgebraPair]:
    return parse_catalog_text(_data_text("pairs.cpa.json", directory))


def load_builtin_catalog(directory: str | None = None) -> list[CatalogEntry]:
    pairs = load_builtin_pairs(directory)
    expected = json.loads(_data_text("expected.json", directory))["entries"]
    entries = []
    for pair in pairs:
        doc = expected.get(pair.name, {})
        aut, linear, nonlinear = _load_expected(doc, pair.dim)
        entries.append(
            CatalogEntry(
                pair=pair,
                expected_aut=aut,
                expected_linear=linear,
                expected_nonlinear=nonlinear,
                provenance=doc.get("provenance", f"entry {pair.name}"),
                notes=tuple(doc.get("notes", [])),
            )
        )
    return entries


def catalog_entry(name: str, directory: str | None = None) -> CatalogEntry:
    for entry in load_builtin_catalog(directory):
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog entry named {name!r}")


# ---------------------------------------------------------------------------
# entry verification


@dataclass(frozen=True)
class CheckRecord:
    name: str
    verdict: str
    details: dict = field(default_factory=dict)


@dataclass(frozen=True)
class EntryReport:
    entry: str
    checks: tuple[CheckRecord, ...]

    def verdicts(self) -> dict:
        counts: dict[str, int] = {}
        for check in self.checks:
            counts[check.verdict] = counts.get(check.verdict, 0) + 1
        return counts

    def to_dict(self) -> dict:
        return {
            "entry": self.entry,
            "checks": [
                {"name": c.name, "verdict": c.verdict, "details": c.details}
                for c in self.checks
            ],
        }


def _residual_check(name, residuals) -> CheckRecord:
    bad = nonzero_residual_indices(residuals)
    if not bad:
        return CheckRecord(name=name, verdict=PASS)
    witnesses = [
        {"index": idx, "residual": scalar_to_str(residuals[idx])} for idx in bad[:5]
    ]
    return CheckRecord(
        name=name,
        verdict=MISMATCH,
        details={"nonzero": len(bad), "witnesses": witnesses},
    )


def _family_verdict_record(kind, pair, matrix: ParamMatrix):
    """(verdict, detail) for one family under one kind, trying both
    orientations; transposition is only accepted when it turns a non-ZERO
    as-is verdict into ZERO."""
    as_is = verify_family(kind, pair, matrix)
    detail = {
        "as_is": {
            "verdict": as_is.verdict,
            "constraints": list(as_is.constraints),
        }
    }
    if as_is.witness:
        detail["as_is"]["witness"] = as_is.witness
    if as_is.det is not None:
        detail["as_is"]["det"] = scalar_to_str(as_is.det.det)
        detail["as_is"]["det_is_unit"] = as_is.det.is_unit
    if as_is.verdict == ZERO and (as_is.det is None or as_is.det.is_unit):
        return MATCH, detail
    transposed = verify_family(kind, pair, matrix.transposed())
    detail["transposed"] = {
        "verdict": transposed.verdict,
        "constraints": list(transposed.constraints),
    }
    if transposed.det is not None:
        detail["transposed"]["det_is_unit"] = transposed.det.is_unit
    if transposed.verdict == ZERO and (transposed.det is None or transposed.det.is_unit):
        return MATCH_TRANSPOSED, detail
    if as_is.verdict == ZERO and as_is.det is not None and not as_is.det.is_unit:
        detail["reason"] = "homomorphism equations hold but the determinant is not a unit under the recorded exclusions"
        return CONDITIONAL, detail
    if as_is.verdict == CONDITIONAL or transposed.verdict == CONDITIONAL:
        return CONDITIONAL, detail
    return MISMATCH, detail


def _matrix_strings(matrix) -> list[list[str]]:
    return [[scalar_to_str(x) for x in row] for row in matrix]


def _span_compare(space, matrices: tuple[ParamMatrix, ...]) -> tuple[str, dict]:
    """Slot-wise span comparison of a recorded family against a computed
    space (projections for multi-slot kinds)."""
    verdicts = []
    details = {}
    for slot_idx, matrix in enumerate(matrices):
        proj = space.projection(slot_idx) if len(space.slots) > 1 else space
        expected = family_span(matrix, space.field)
        fwd = all(membership(proj, sol) for sol in expected.basis)
        back = all(membership(expected, sol) for sol in proj.basis)
        slot_detail = {"computed_freedim": proj.freedim}
        if fwd and back:
            verdicts.append(MATCH)
        else:
            expected_t = family_span(matrix.transposed(), space.field)
            fwd_t = all(membership(proj, sol) for sol in expected_t.basis)
            back_t = all(membership(expected_t, sol) for sol in proj.basis)
            if fwd_t and back_t:
                verdicts.append(MATCH_TRANSPOSED)
            else:
                verdicts.append(MISMATCH)
                if not fwd:
                    for sol in expected.basis:
                        if not membership(proj, sol):
                            slot_detail["witness"] = {
                                "direction": "recorded generator outside computed space",
                                "matrix": _matrix_strings(sol[0]),
                            }
                            break
                else:
                    for sol in proj.basis:
                        if not membership(expected, sol):
                            slot_detail["witness"] = {
                                "direction": "computed basis element outside recorded family",
                                "matrix": _matrix_strings(sol[0]),
                            }
                            break
        details[f"slot{slot_idx}"] = slot_detail
    if any(v == MISMATCH for v in verdicts):
        overall = MISMATCH
    elif any(v == MATCH_TRANSPOSED for v in verdicts):
        overall = MATCH_TRANSPOSED
    else:
        overall = MATCH
    details["slot_verdicts"] = verdicts
    return overall, details


def verify_entry(entry: CatalogEntry) -> EntryReport:
    """Run every scheduled check for one catalog entry.

    Check failures are verdicts, never exceptions; two runs produce
    identical reports.
    """
    pair = entry.pair
    checks: list[CheckRecord] = []

    checks.append(_residual_check("associativity-bullet", associativity_residuals(pair.bullet)))
    checks.append(_residual_check("associativity-star", associativity_residuals(pair.star)))
    checks.append(_residual_check("compatibility", compatibility_residuals(pair)))

    for fam in entry.expected_aut:
        if fam.radical:
            checks.append(
                CheckRecord(
                    name=f"{fam.label}", verdict=SKIPPED_RADICAL, details={"note": fam.note}
                )
            )
            continue
        verdict, detail = _family_verdict_record("automorphism", pair, fam.matrix)
        if fam.note:
            detail["note"] = fam.note
        checks.append(CheckRecord(name=fam.label, verdict=verdict, details=detail))

    spaces = {}
    for kind in LINEAR_KINDS:
        space = solve_for_invariants(kind, pair)
        spaces[kind] = space
        checks.append(
            CheckRecord(
                name=f"solve-{kind}",
                verdict=PASS,
                details={
                    "freedim": space.freedim,
                    "exclusions": [scalar_to_str(e) for e in space.exclusions],
                },
            )
        )

    for kind in LINEAR_KINDS:
        if kind not in entry.expected_linear:
            continue
        verdict, detail = _span_compare(spaces[kind], entry.expected_linear[kind])
        checks.append(CheckRecord(name=f"expected-{kind}", verdict=verdict, details=detail))

    for fam in entry.expected_nonlinear:
        for kind in fam.kinds:
            verdict, detail = _family_verdict_record(kind, pair, fam.matrix)
            checks.append(
                CheckRecord(
                    name=f"expected-{fam.label}-as-{kind}", verdict=verdict, details=detail
                )
            )

    if pair.parameters:
        for value in pair.allowed_specializations(SPECIALIZATION_POINTS):
            concrete = pair.specialize({pair.parameters[0]: value})
            sub = [
                _residual_check("associativity-bullet", associativity_residuals(concrete.bullet)),
                _residual_check("associativity-star", associativity_residuals(concrete.star)),
                _residual_check("compatibility", compatibility_residuals(concrete)),
            ]
            bad = [c for c in sub if c.verdict != PASS]
            checks.append(
                CheckRecord(
                    name=f"specialization@{value}",
                    verdict=PASS if not bad else MISMATCH,
                    details={
                        "checks": {c.name: c.verdict for c in sub},
                        **({"failures": [c.details for c in bad]} if bad else {}),
                    },
                )
            )

    return EntryReport(entry=entry.name, checks=tuple(checks))
