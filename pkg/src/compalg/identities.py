"""Residual polynomials for operator identities on an algebra pair.

For a candidate linear map X (or a chain (d, d'), (d, d', d'') for the
quasi/generalized derivation identities) the defining identity of each
operator kind is expanded on all ordered basis pairs of both products.  The
result is a list of labelled residuals: exact polynomials in the operator's
matrix unknowns, with coefficients in the pair's field.

Unknowns follow the convention u{j}_{r} = coefficient of e_r in X(e_j), so a
slot's unknown block is the column-major vectorization of its matrix.  The
flat unknown order is slot-major; residuals are emitted product-major, then
identity variant, then (i, j, r) ascending.  These orders are fixed so that
row layouts and reported residual indices are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .scalars import Poly, RatFunc, ReductionError
from .tensor import AlgebraPair

LINEAR_KINDS = (
    "derivation",
    "centroid",
    "quasi-centroid",
    "quasi-derivation",
    "generalized-derivation",
)
NONLINEAR_KINDS = ("rota-baxter", "nijenhuis", "averaging", "reynolds")
OPERATOR_KINDS = LINEAR_KINDS + NONLINEAR_KINDS + ("automorphism",)

_SLOT_LETTERS = {
    "derivation": ("u",),
    "centroid": ("u",),
    "quasi-centroid": ("u",),
    "quasi-derivation": ("u", "v"),
    "generalized-derivation": ("u", "v", "w"),
    "rota-baxter": ("u",),
    "nijenhuis": ("u",),
    "averaging": ("u",),
    "reynolds": ("u",),
    "automorphism": ("u",),
}

_VARIANTS = {
    "centroid": ("left=mid", "mid=right"),
    "averaging": ("left=mid", "mid=right"),
}


def slot_letters(kind: str) -> tuple[str, ...]:
    if kind not in _SLOT_LETTERS:
        raise ValueError(f"unknown operator kind {kind!r}")
    return _SLOT_LETTERS[kind]


def unknown_names(kind: str, dim: int) -> list[str]:
    """Stacked unknown list, slot-major, column-major inside each slot."""
    names = []
    for letter in slot_letters(kind):
        for j in range(1, dim + 1):
            for r in range(1, dim + 1):
                names.append(f"{letter}{j}_{r}")
    return names


@dataclass(frozen=True)
class LabeledResidual:
    product: str  # "bullet" | "star"
    variant: str
    i: int
    j: int
    r: int
    value: RatFunc

    def label(self) -> str:
        v = f"[{self.variant}]" if self.variant else ""
        return f"{self.product}{v}({self.i},{self.j})->{self.r}"


@dataclass(frozen=True)
class ResidualSystem:
    kind: str
    pair: AlgebraPair
    variables: tuple[str, ...]  # pair parameters then stacked unknowns
    unknowns: tuple[str, ...]
    residuals: tuple[LabeledResidual, ...]


def _sym_context(kind: str, pair: AlgebraPair):
    unknowns = tuple(unknown_names(kind, pair.dim))
    variables = tuple(pair.parameters) + unknowns
    one = RatFunc.constant(variables, 1)
    zero = RatFunc.constant(variables, 0)

    def var(name: str) -> RatFunc:
        return RatFunc.from_poly(Poly.variable(variables, name))

    # slot matrices: slots[s][r][j] = u{j+1}_{r+1} of slot s
    slots = []
    for letter in slot_letters(kind):
        slots.append(
            [[var(f"{letter}{j}_{r}") for j in range(1, pair.dim + 1)] for r in range(1, pair.dim + 1)]
        )

    def lift(scalar) -> RatFunc:
        if isinstance(scalar, RatFunc):
            return RatFunc(scalar.num.rename(variables), scalar.den.rename(variables))
        if isinstance(scalar, Poly):
            return RatFunc.from_poly(scalar.rename(variables))
        return RatFunc.constant(variables, scalar)

    tensors = {
        "bullet": [
            [[lift(pair.bullet.entries[i][j][k]) for k in range(pair.dim)] for j in range(pair.dim)]
            for i in range(pair.dim)
        ],
        "star": [
            [[lift(pair.star.entries[i][j][k]) for k in range(pair.dim)] for j in range(pair.dim)]
            for i in range(pair.dim)
        ],
    }
    return variables, unknowns, slots, tensors, zero, one


def _apply(matrix, vec, zero):
    n = len(vec)
    return [
        sum((matrix[r][c] * vec[c] for c in range(n) if vec[c]), zero) for r in range(n)
    ]


def _prod(tensor, x, y, zero):
    n = len(x)
    out = [zero] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            coeff = x[i] * y[j]
            row = tensor[i][j]
            for k in range(n):
                if row[k]:
                    out[k] = out[k] + coeff * row[k]
    return out


def _vsub(x, y):
    return [a - b for a, b in zip(x, y)]


def residual_system(kind: str, pair: AlgebraPair) -> ResidualSystem:
    """Expand the defining identity of ``kind`` over both products of ``pair``."""
    variables, unknowns, slots, tensors, zero, _ = _sym_context(kind, pair)
    n = pair.dim

    def basis(i: int):
        return [RatFunc.constant(variables, 1 if k == i - 1 else 0) for k in range(n)]

    residuals: list[LabeledResidual] = []

    def emit(product, variant, i, j, vec):
        for r in range(n):
            residuals.append(LabeledResidual(product, variant, i, j, r + 1, vec[r]))

    for product in ("bullet", "star"):
        tensor = tensors[product]

        def mul(x, y):
            return _prod(tensor, x, y, zero)

        for variant_index, variant in enumerate(_VARIANTS.get(kind, ("",))):
            for i in range(1, n + 1):
                ei = basis(i)
                a_ei = _apply(slots[0], ei, zero)
                for j in range(1, n + 1):
                    ej = basis(j)
                    a_ej = _apply(slots[0], ej, zero)
                    eij = [tensor[i - 1][j - 1][k] for k in range(n)]

                    if kind == "derivation":
                        vec = _vsub(_apply(slots[0], eij, zero), mul(a_ei, ej))
                        vec = _vsub(vec, mul(ei, a_ej))
                    elif kind == "quasi-derivation":
                        vec = _vsub(_apply(slots[1], eij, zero), mul(a_ei, ej))
                        vec = _vsub(vec, mul(ei, a_ej))
                    elif kind == "generalized-derivation":
                        b_ej = _apply(slots[1], ej, zero)
                        vec = _vsub(_apply(slots[2], eij, zero), mul(a_ei, ej))
                        vec = _vsub(vec, mul(ei, b_ej))
                    elif kind == "centroid":
                        if variant_index == 0:
                            vec = _vsub(_apply(slots[0], eij, zero), mul(a_ei, ej))
                        else:
                            vec = _vsub(mul(a_ei, ej), mul(ei, a_ej))
                    elif kind == "quasi-centroid":
                        vec = _vsub(mul(a_ei, ej), mul(ei, a_ej))
                    elif kind == "rota-baxter":
                        inner = [x + y for x, y in zip(mul(a_ei, ej), mul(ei, a_ej))]
                        vec = _vsub(mul(a_ei, a_ej), _apply(slots[0], inner, zero))
                    elif kind == "nijenhuis":
                        inner = [x + y for x, y in zip(mul(a_ei, ej), mul(ei, a_ej))]
                        inner = _vsub(inner, _apply(slots[0], eij, zero))
                        vec = _vsub(mul(a_ei, a_ej), _apply(slots[0], inner, zero))
                    elif kind == "averaging":
                        if variant_index == 0:
                            vec = _vsub(_apply(slots[0], mul(a_ei, ej), zero), mul(a_ei, a_ej))
                        else:
                            vec = _vsub(mul(a_ei, a_ej), _apply(slots[0], mul(ei, a_ej), zero))
                    elif kind == "reynolds":
                        inner = [x + y for x, y in zip(mul(a_ei, ej), mul(ei, a_ej))]
                        inner = _vsub(inner, mul(a_ei, a_ej))
                        vec = _vsub(_apply(slots[0], eij, zero), _apply(slots[0], inner, zero))
                    elif kind == "automorphism":
                        vec = _vsub(_apply(slots[0], eij, zero), mul(a_ei, a_ej))
                    else:
                        raise ValueError(f"unknown operator kind {kind!r}")
                    emit(product, variant, i, j, vec)

    return ResidualSystem(
        kind=kind,
        pair=pair,
        variables=variables,
        unknowns=unknowns,
        residuals=tuple(residuals),
    )


def _split_term(exps, n_params):
    return exps[:n_params], exps[n_params:]


def linear_rows(system: ResidualSystem):
    """Rows of the homogeneous linear system hidden in a linear kind's
    residuals: one row per residual, one column per stacked unknown.

    Coefficients are elements of the pair's field.  Raises if a residual is
    not homogeneous linear in the unknowns (i.e. the kind is not linear).
    """
    pair = system.pair
    field = pair.field
    n_params = len(pair.parameters)
    n_unknowns = len(system.unknowns)
    rows = []
    for res in system.residuals:
        num = res.value.num
        den = res.value.den
        coeffs = [dict() for _ in range(n_unknowns)]
        for exps, c in num.terms.items():
            p_part, u_part = _split_term(exps, n_params)
            weight = sum(u_part)
            if weight == 0:
                raise ValueError(f"residual {res.label()} has a constant term")
            if weight > 1:
                raise ValueError(f"residual {res.label()} is nonlinear; kind {system.kind}")
            idx = next(k for k, e in enumerate(u_part) if e)
            coeffs[idx][p_part] = coeffs[idx].get(p_part, Fraction(0)) + c
        row = []
        for terms in coeffs:
            if not terms:
                row.append(field.zero)
                continue
            poly = Poly(pair.parameters, terms)
            if pair.parameters:
                row.append(RatFunc(poly, den.rename(pair.parameters)))
            else:
                row.append(poly.constant_value() / den.constant_value())
        rows.append(row)
    return rows


def substitute_matrices(system: ResidualSystem, slot_matrices, extra_params=()):
    """Substitute explicit matrices (entries: polynomials in ``extra_params``
    and the pair parameters, or plain rationals) for the unknown slots.

    Returns labelled residuals over pair parameters + extra_params.
    """
    pair = system.pair
    target_vars = tuple(pair.parameters) + tuple(extra_params)
    zero = RatFunc.constant(target_vars, 0)

    def lift(value) -> RatFunc:
        if isinstance(value, RatFunc):
            return RatFunc(value.num.rename(target_vars), value.den.rename(target_vars))
        if isinstance(value, Poly):
            return RatFunc.from_poly(value.rename(target_vars))
        return RatFunc.constant(target_vars, value)

    values: dict[str, RatFunc] = {name: lift(Poly.variable((name,), name)) for name in pair.parameters}
    n = pair.dim
    letters = slot_letters(system.kind)
    if len(slot_matrices) != len(letters):
        raise ValueError(f"kind {system.kind} needs {len(letters)} slot matrices")
    for letter, matrix in zip(letters, slot_matrices):
        for j in range(1, n + 1):
            for r in range(1, n + 1):
                values[f"{letter}{j}_{r}"] = lift(matrix[r - 1][j - 1])

    out = []
    for res in system.residuals:
        value = res.value.substitute(values, zero)
        if not isinstance(value, RatFunc):
            value = lift(value)
        out.append(LabeledResidual(res.product, res.variant, res.i, res.j, res.r, value))
    return out


def monomial_programs(system: ResidualSystem, q: int):
    """Reduce the residuals of a parameter-free pair modulo q.

    Returns (n_unknowns, programs) where each program is a list of
    (coefficient mod q, unknown-index tuple) monomials; a candidate matrix
    satisfies the kind's identities over F_q iff every program evaluates to
    zero on its stacked unknown vector.
    """
    pair = system.pair
    if pair.parameters:
        raise ValueError("specialize the pair before reducing modulo a prime")
    programs = []
    for res in system.residuals:
        den = res.value.den.constant_value()
        num = res.value.num
        monos = []
        for exps, c in num.terms.items():
            value = c / den
            if value.denominator % q == 0:
                raise ReductionError(f"coefficient {value} not reducible mod {q}")
            coeff = value.numerator * pow(value.denominator, q - 2, q) % q
            if not coeff:
                continue
            idxs = []
            for pos, e in enumerate(exps):
                idxs.extend([pos] * e)
            monos.append((coeff, tuple(idxs)))
        programs.append(monos)
    return len(system.unknowns), programs
