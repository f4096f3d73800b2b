"""Symbolic verification of parametrized operator families and semi-automatic
ansatz solving.

A family is a :class:`~compalg.linsys.ParamMatrix`; substituting it into the
defining identity of an operator kind yields residual polynomials in the
family's free parameters (and the pair's classification parameters).  The
verdict is decided exactly:

* ``ZERO``        -- every residual is the zero polynomial; the whole family
                     satisfies the identity for every parameter value;
* ``NONZERO``     -- some residual is a nonzero constant once declared
                     exclusion factors are peeled off, so no member works
                     generically (a witness index is reported);
* ``CONDITIONAL`` -- otherwise; the primitive residual generators describe
                     the variety on which the family works.

Constraint generators are reported raw, without ideal-theoretic
post-processing.
"""

from __future__ import annotations

from dataclasses import dataclass

from .identities import (
    LINEAR_KINDS,
    NONLINEAR_KINDS,
    OPERATOR_KINDS,
    LabeledResidual,
    residual_system,
    slot_letters,
    substitute_matrices,
)
from .linsys import (
    ParamMatrix,
    SolutionSpace,
    matrices_from_vector,
    param_matrix,
    rref_kernel,
)
from .scalars import QQ, FunctionField, Poly, RatFunc
from .tensor import AlgebraPair, matrix_det

ZERO = "ZERO"
NONZERO = "NONZERO"
CONDITIONAL = "CONDITIONAL"


def _peel_exclusions(poly: Poly, exclusions) -> Poly:
    """Drop declared non-vanishing factors from a residual polynomial."""
    current = poly
    changed = True
    while changed and current:
        changed = False
        for excl in exclusions:
            if excl.is_constant():
                continue
            q = current.exact_div(excl)
            while q is not None:
                current = q
                changed = True
                q = current.exact_div(excl)
    return current


def _classify(residuals: list[LabeledResidual], exclusions):
    """Shared verdict logic; ``exclusions`` are Polys over the residual vars."""
    all_zero = True
    witness = None
    generators: list[Poly] = []
    for idx, res in enumerate(residuals):
        num = res.value.num
        if not num:
            continue
        all_zero = False
        peeled = _peel_exclusions(num, exclusions)
        if not peeled:
            # residual is a product of excluded factors: impossible off the
            # exclusion variety, hence a genuine obstruction generically
            peeled = num
        if peeled.is_constant():
            if witness is None:
                witness = idx
            continue
        gen = peeled.primitive()[1]
        if all(gen != g for g in generators):
            generators.append(gen)
    if all_zero:
        return ZERO, None, ()
    if witness is not None:
        return NONZERO, witness, tuple(generators)
    return CONDITIONAL, None, tuple(generators)


@dataclass(frozen=True)
class ResidualSet:
    kind: str
    residuals: tuple[LabeledResidual, ...]
    verdict: str
    witness: int | None
    constraints: tuple[Poly, ...]

    def witness_label(self) -> str | None:
        if self.witness is None:
            return None
        return self.residuals[self.witness].label()


@dataclass(frozen=True)
class DetReport:
    det: RatFunc
    is_unit: bool
    leftover: Poly


@dataclass(frozen=True)
class FamilyVerdict:
    kind: str
    verdict: str
    constraints: tuple[str, ...]
    witness: str | None = None
    det: DetReport | None = None

    def ok(self) -> bool:
        return self.verdict == ZERO and (self.det is None or self.det.is_unit)


def _lift_exclusions(pair: AlgebraPair, matrix: ParamMatrix, variables):
    out = []
    for src in list(pair.exclusions) + list(matrix.exclusions):
        if isinstance(src, RatFunc):
            p = src.num
        elif isinstance(src, Poly):
            p = src
        else:
            continue
        p = p.rename(variables)
        if not p.is_constant():
            out.append(p.primitive()[1])
    return out


def _merged_vars(pair: AlgebraPair, matrix: ParamMatrix):
    extra = tuple(n for n in matrix.params if n not in pair.parameters)
    clash = set(pair.parameters) & set(matrix.params)
    # a family may deliberately reuse a pair parameter; keep one copy
    return tuple(pair.parameters) + extra, extra, clash


SINGLE_SLOT_KINDS = NONLINEAR_KINDS + ("derivation", "centroid", "quasi-centroid", "automorphism")


def operator_residuals(kind: str, pair: AlgebraPair, matrix: ParamMatrix) -> ResidualSet:
    """Residuals of one candidate family under one operator identity."""
    if kind not in SINGLE_SLOT_KINDS:
        raise ValueError(f"unsupported kind {kind!r} (expected one of {SINGLE_SLOT_KINDS})")
    if matrix.dim != pair.dim:
        raise ValueError("family dimension disagrees with the pair")
    variables, extra, _ = _merged_vars(pair, matrix)
    system = residual_system(kind, pair)
    entries = [
        [matrix.entries[r][c].rename(variables) for c in range(matrix.dim)]
        for r in range(matrix.dim)
    ]
    residuals = substitute_matrices(system, [entries], extra_params=extra)
    exclusions = _lift_exclusions(pair, matrix, variables)
    verdict, witness, generators = _classify(residuals, exclusions)
    return ResidualSet(
        kind=kind,
        residuals=tuple(residuals),
        verdict=verdict,
        witness=witness,
        constraints=generators,
    )


def det_report(pair: AlgebraPair, matrix: ParamMatrix) -> DetReport:
    """Determinant of the family and whether it is a unit once the declared
    exclusions are taken into account."""
    variables, _, _ = _merged_vars(pair, matrix)
    if not variables:
        det = matrix_det([[e for e in row] for row in matrix.entries], QQ)
        return DetReport(
            det=det, is_unit=bool(det), leftover=Poly.constant((), det)
        )
    fld = FunctionField(variables)
    entries = [
        [RatFunc.from_poly(matrix.entries[r][c].rename(variables)) for c in range(matrix.dim)]
        for r in range(matrix.dim)
    ]
    det = matrix_det(entries, fld)
    if not det:
        return DetReport(det=det, is_unit=False, leftover=Poly.constant(variables, 0))
    exclusions = _lift_exclusions(pair, matrix, variables)
    leftover = _peel_exclusions(det.num.primitive()[1], exclusions)
    return DetReport(det=det, is_unit=leftover.is_constant() and bool(leftover), leftover=leftover)


def verify_family(kind: str, pair: AlgebraPair, matrix: ParamMatrix) -> FamilyVerdict:
    """Exact verdict for one family under one kind; the automorphism kind
    adds the determinant-is-a-unit requirement."""
    res = operator_residuals(kind, pair, matrix)
    det = det_report(pair, matrix) if kind == "automorphism" else None
    return FamilyVerdict(
        kind=kind,
        verdict=res.verdict,
        constraints=tuple(str(g) for g in res.constraints),
        witness=res.witness_label(),
        det=det,
    )


@dataclass(frozen=True)
class AnsatzResult:
    kind: str
    constraints: tuple[Poly, ...]
    linear: bool
    space: SolutionSpace | None = None
    particular: tuple | None = None


def ansatz_constraints(kind: str, pair: AlgebraPair, pattern: ParamMatrix) -> AnsatzResult:
    """Substitute a sparsity pattern into the kind's identities and collect
    the resulting constraint generators; when every constraint is (affine)
    linear in the pattern's parameters, also solve them exactly.

    The solved space is returned in matrix form: the homogeneous part spans
    pattern evaluations at kernel vectors of the constraint system, and
    ``particular`` (when the system is inhomogeneous) is one explicit
    solution matrix.
    """
    res = operator_residuals(kind, pair, pattern)
    gens = res.constraints
    if res.verdict == ZERO:
        # no constraints at all: the full pattern works
        gens = ()
    n_params = len(pair.parameters)
    pattern_vars = tuple(n for n in pattern.params if n not in pair.parameters)

    def pattern_degree(g: Poly) -> int:
        deg = 0
        for exps in g.terms:
            deg = max(deg, sum(exps[n_params:]))
        return deg

    linear = all(pattern_degree(g) <= 1 for g in gens)
    if not linear or res.verdict == NONZERO:
        return AnsatzResult(kind=kind, constraints=gens, linear=False)

    fld = pair.field
    ncols = len(pattern_vars)
    rows = []
    consts = []
    for g in gens:
        row = [fld.zero] * ncols
        const = fld.zero
        for exps, c in g.terms.items():
            p_part, u_part = exps[:n_params], exps[n_params:]
            coeff = Poly(pair.parameters, {tuple(p_part): c})
            coeff = fld.coerce(coeff) if pair.parameters else coeff.constant_value()
            if sum(u_part) == 0:
                const = const + coeff
            else:
                idx = next(k for k, e in enumerate(u_part) if e)
                row[idx] = row[idx] + coeff
        rows.append(row)
        consts.append(const)

    vectors, exclusions = rref_kernel(rows, ncols, fld)
    assignments = [dict(zip(pattern_vars, vec)) for vec in vectors]

    def eval_pattern(assign):
        values = {name: fld.coerce(Poly.variable(pair.parameters, name)) for name in pair.parameters}
        values.update(assign)
        grid = []
        for r in range(pattern.dim):
            row = []
            for c in range(pattern.dim):
                row.append(pattern.entries[r][c].substitute(values, fld.zero))
            grid.append(tuple(row))
        return (tuple(grid),)

    basis = [eval_pattern(a) for a in assignments]
    particular = None
    if any(c for c in consts):
        from .linsys import solve_linear

        columns = [[rows[r][c] for r in range(len(rows))] for c in range(ncols)]
        target = [-c for c in consts]
        sol = solve_linear(columns, target, fld)
        if sol is None:
            return AnsatzResult(kind=kind, constraints=gens, linear=True, space=None)
        particular = eval_pattern(dict(zip(pattern_vars, sol)))
    space = SolutionSpace(
        kind=f"{kind}-ansatz",
        dim=pattern.dim,
        field=fld,
        slots=slot_letters(kind)[:1],
        basis=tuple(basis),
        exclusions=exclusions,
    )
    return AnsatzResult(
        kind=kind, constraints=gens, linear=True, space=space, particular=particular
    )
