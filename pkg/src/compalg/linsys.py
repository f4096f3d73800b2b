"""Exact linear systems for the linear operator kinds and their solution
spaces.

``build_system`` turns a kind's identities into a homogeneous system over
the pair's field; ``nullspace`` performs exact reduced row echelon
elimination.  Over a function field every non-constant pivot numerator is
recorded: the computed basis is valid off the variety where those
polynomials vanish (mirroring side conditions such as ``alpha != 1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from .identities import LINEAR_KINDS, linear_rows, residual_system, slot_letters
from .scalars import Poly, RatFunc, scalar_degree
from .tensor import AlgebraPair


@dataclass(frozen=True)
class LinearSystem:
    kind: str
    dim: int
    field: object
    slots: tuple[str, ...]
    rows: tuple
    labels: tuple[str, ...]

    @property
    def unknown_count(self) -> int:
        return len(self.slots) * self.dim * self.dim


@dataclass(frozen=True)
class SolutionSpace:
    kind: str
    dim: int
    field: object
    slots: tuple[str, ...]
    basis: tuple  # tuple of solutions; each solution is one matrix per slot
    exclusions: tuple = ()

    @property
    def freedim(self) -> int:
        return len(self.basis)

    def slot_matrices(self, index: int):
        return self.basis[index]

    def projection(self, slot: int) -> SolutionSpace:
        """Span of the given slot's components (no de-duplication of the
        basis: the projection may have smaller rank than freedim)."""
        return SolutionSpace(
            kind=f"{self.kind}[slot {self.slots[slot]}]",
            dim=self.dim,
            field=self.field,
            slots=(self.slots[slot],),
            basis=tuple((sol[slot],) for sol in self.basis),
            exclusions=self.exclusions,
        )


def build_system(kind: str, pair: AlgebraPair) -> LinearSystem:
    """Rows encoding the kind's identities for both products and all ordered
    basis pairs.  Row order: product-major, then identity variant, then
    (i, j, r) ascending; columns are slot-major, column-major per slot."""
    if kind not in LINEAR_KINDS:
        raise ValueError(f"{kind!r} is not a linear kind")
    system = residual_system(kind, pair)
    rows = linear_rows(system)
    labels = tuple(res.label() for res in system.residuals)
    return LinearSystem(
        kind=kind,
        dim=pair.dim,
        field=pair.field,
        slots=slot_letters(kind),
        rows=tuple(tuple(r) for r in rows),
        labels=labels,
    )


def _normalize_vector(vec, fld):
    """Scale a solution vector to a small canonical representative: clear
    denominators, divide by the coefficient content, make the first nonzero
    coordinate positive (leading coefficient positive for polynomials)."""
    if all(not x for x in vec):
        return list(vec)
    if isinstance(fld.zero, Fraction):
        den = 1
        for x in vec:
            den = lcm(den, x.denominator)
        num = 0
        for x in vec:
            num = gcd(num, (x * den).numerator)
        scale = Fraction(den, num)
        out = [x * scale for x in vec]
        first = next(x for x in out if x)
        if first < 0:
            out = [-x for x in out]
        return out
    if isinstance(fld.zero, RatFunc):
        den = Poly.constant(fld.names, 1)
        for x in vec:
            if x and not x.den.is_one():
                q = den.exact_div(x.den)
                if q is None:
                    den = den * x.den
        scaled = [x * RatFunc.from_poly(den) for x in vec]
        num_gcd, den_lcm = 0, 1
        for x in scaled:
            if not x:
                continue
            c = x.num.coeff_content()
            num_gcd = gcd(num_gcd, c.numerator)
            den_lcm = lcm(den_lcm, c.denominator)
        content = Fraction(num_gcd, den_lcm)
        if content:
            scaled = [x / content for x in scaled]
        first = next(x for x in scaled if x)
        if first.num.trailing_coefficient() < 0:
            scaled = [-x for x in scaled]
        return scaled
    return list(vec)


def rref_kernel(in_rows, ncols: int, fld):
    """Reduced row echelon elimination of a homogeneous system.

    Returns (kernel_basis_vectors, pivot_exclusions).  Pivots are chosen per
    column with minimal total degree (ties: lowest row index); over a
    function field every non-constant pivot numerator joins the exclusion
    list.
    """
    rows = [list(r) for r in in_rows if any(x for x in r)]
    pivots: list[tuple[int, int]] = []  # (row, col) in reduced order
    exclusions: list[Poly] = []
    pivot_rows: list[list] = []
    for col in range(ncols):
        best = None
        best_deg = None
        for ri, row in enumerate(rows):
            x = row[col]
            if not x:
                continue
            d = scalar_degree(x)
            if best is None or d < best_deg:
                best, best_deg = ri, d
        if best is None:
            continue
        row = rows.pop(best)
        piv = row[col]
        if isinstance(piv, RatFunc) and not piv.num.is_constant():
            cand = piv.num.primitive()[1]
            if all(cand != e for e in exclusions):
                exclusions.append(cand)
        inv = fld.one / piv
        row = [x * inv for x in row]
        for other in pivot_rows:
            f = other[col]
            if f:
                for c in range(col, ncols):
                    if row[c]:
                        other[c] = other[c] - f * row[c]
        remaining = []
        for other in rows:
            f = other[col]
            if f:
                for c in range(col, ncols):
                    if row[c]:
                        other[c] = other[c] - f * row[c]
            if any(x for x in other):
                remaining.append(other)
        rows = remaining
        pivot_rows.append(row)
        pivots.append((len(pivot_rows) - 1, col))

    pivot_cols = {col for _, col in pivots}
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    vectors = []
    for fc in free_cols:
        vec = [fld.zero] * ncols
        vec[fc] = fld.one
        for ri, col in pivots:
            coeff = pivot_rows[ri][fc]
            if coeff:
                vec[col] = -coeff
        vectors.append(_normalize_vector(vec, fld))
    return vectors, tuple(exclusions)


def matrices_from_vector(vec, dim: int, n_slots: int):
    """Reshape a stacked column-major vector into one matrix per slot."""
    per_slot = dim * dim
    slots = []
    for s in range(n_slots):
        block = vec[s * per_slot : (s + 1) * per_slot]
        slots.append(tuple(tuple(block[j * dim + r] for j in range(dim)) for r in range(dim)))
    return tuple(slots)


def nullspace(system: LinearSystem) -> SolutionSpace:
    """Exact reduced row echelon elimination; the basis spans the kernel."""
    fld = system.field
    vectors, exclusions = rref_kernel(system.rows, system.unknown_count, fld)
    basis = [matrices_from_vector(v, system.dim, len(system.slots)) for v in vectors]
    return SolutionSpace(
        kind=system.kind,
        dim=system.dim,
        field=fld,
        slots=system.slots,
        basis=tuple(basis),
        exclusions=exclusions,
    )


def solve_for_invariants(kind: str, pair: AlgebraPair) -> SolutionSpace:
    return nullspace(build_system(kind, pair))


def _vectorize(matrices, dim: int):
    vec = []
    for m in matrices:
        for j in range(dim):
            for r in range(dim):
                vec.append(m[r][j])
    return vec


def solve_linear(columns, target, fld):
    """Solve sum_k x_k columns[k] = target exactly; None if inconsistent."""
    n_rows = len(target)
    n_cols = len(columns)
    aug = [[fld.coerce(col[r]) for col in columns] + [fld.coerce(target[r])] for r in range(n_rows)]
    pivots = []
    row_at = 0
    for col in range(n_cols):
        sel = None
        for r in range(row_at, n_rows):
            if aug[r][col]:
                sel = r
                break
        if sel is None:
            continue
        aug[row_at], aug[sel] = aug[sel], aug[row_at]
        piv = aug[row_at][col]
        inv = fld.one / piv
        aug[row_at] = [x * inv for x in aug[row_at]]
        for r in range(n_rows):
            if r != row_at and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row_at])]
        pivots.append(col)
        row_at += 1
    for r in range(row_at, n_rows):
        if aug[r][n_cols]:
            return None
    solution = [fld.zero] * n_cols
    for r, col in enumerate(pivots):
        solution[col] = aug[r][n_cols]
    return solution


def membership(space: SolutionSpace, candidate) -> bool:
    """Exact test that the candidate (one matrix per slot) lies in the span
    of the basis."""
    if len(candidate) != len(space.slots):
        raise ValueError(f"expected one matrix per slot {space.slots}")
    fld = space.field
    target = [fld.coerce(x) for x in _vectorize(candidate, space.dim)]
    if all(not x for x in target):
        return True
    columns = [_vectorize(sol, space.dim) for sol in space.basis]
    if not columns:
        return False
    return solve_linear(columns, target, fld) is not None


def spans_equal(a: SolutionSpace, b: SolutionSpace) -> bool:
    return all(membership(b, sol) for sol in a.basis) and all(
        membership(a, sol) for sol in b.basis
    )


@dataclass(frozen=True)
class ParamMatrix:
    """An n x n matrix of polynomials in named free parameters, plus the
    polynomials that must not vanish (e.g. determinant factors)."""

    dim: int
    params: tuple[str, ...]
    entries: tuple  # rows of Poly over ``params``
    exclusions: tuple = ()

    def entry(self, r: int, c: int) -> Poly:
        return self.entries[r - 1][c - 1]

    def transposed(self) -> ParamMatrix:
        return ParamMatrix(
            dim=self.dim,
            params=self.params,
            entries=tuple(
                tuple(self.entries[c][r] for c in range(self.dim)) for r in range(self.dim)
            ),
            exclusions=self.exclusions,
        )

    def evaluate(self, assignment) -> tuple:
        return tuple(
            tuple(e.evaluate(assignment) if isinstance(e, (Poly, RatFunc)) else Fraction(e) for e in row)
            for row in self.entries
        )

    def monomial_generators(self):
        """Coefficient matrix of each monomial appearing in some entry; the
        linear span of all specializations equals the span of these, and the
        exponent-zero generator is the family's constant part."""
        monos: dict[tuple[int, ...], list[list[Fraction]]] = {}
        for r in range(self.dim):
            for c in range(self.dim):
                e = self.entries[r][c]
                if not isinstance(e, Poly):
                    e = Poly.constant(self.params, e)
                for exps, coeff in e.terms.items():
                    grid = monos.setdefault(
                        exps, [[Fraction(0)] * self.dim for _ in range(self.dim)]
                    )
                    grid[r][c] = coeff
        constant = monos.pop((0,) * len(self.params), None)
        gens = [tuple(tuple(row) for row in monos[k]) for k in sorted(monos)]
        return constant, gens


def param_matrix(dim, params, rows, exclusions=()) -> ParamMatrix:
    """Build a ParamMatrix from expression strings / numbers."""
    from .scalars import field_for, parse_scalar

    params = tuple(params)
    fld = field_for(params)

    def to_poly(x) -> Poly:
        if isinstance(x, Poly):
            return x.rename(params)
        if isinstance(x, str):
            v = parse_scalar(x, fld)
            if isinstance(v, RatFunc):
                if not v.is_poly():
                    raise ValueError(f"matrix entry {x!r} is not polynomial")
                return v.num
            return Poly.constant(params, v)
        return Poly.constant(params, x)

    entries = tuple(tuple(to_poly(x) for x in row) for row in rows)
    if len(entries) != dim or any(len(r) != dim for r in entries):
        raise ValueError("entry grid does not match the dimension")
    excl = tuple(to_poly(x) for x in exclusions)
    return ParamMatrix(dim=dim, params=params, entries=entries, exclusions=excl)


def family_span(matrix: ParamMatrix, fld) -> SolutionSpace:
    """The linear span of a (homogeneous) parametric family, as a
    SolutionSpace over ``fld``; a nonzero constant part is kept as an extra
    generator so affine families still compare conservatively."""
    constant, gens = matrix.monomial_generators()
    basis = [(tuple(tuple(fld.coerce(x) for x in row) for row in g),) for g in gens]
    if constant is not None and any(any(x for x in row) for row in constant):
        basis.append((tuple(tuple(fld.coerce(x) for x in row) for row in constant),))
    return SolutionSpace(
        kind="family",
        dim=matrix.dim,
        field=fld,
        slots=("u",),
        basis=tuple(basis),
    )


def format_solution(space: SolutionSpace) -> tuple[ParamMatrix, ...]:
    """Render a solution space with one fresh parameter per basis element:
    entry (i, j) of each slot is the matching linear combination.

    Over a function field the pair parameters join the rendered matrix's
    parameter list (basis entries are polynomial once normalized), so
    substituting any parameter assignment yields a member of the space.
    """
    base = tuple(getattr(space.field, "names", ()))
    fresh = tuple(f"t{k + 1}" for k in range(space.freedim))
    names = base + fresh
    n = space.dim
    out = []
    for s in range(len(space.slots)):
        rows = []
        for r in range(n):
            row = []
            for c in range(n):
                terms: dict[tuple[int, ...], Fraction] = {}
                for k, sol in enumerate(space.basis):
                    coeff = sol[s][r][c]
                    marker = tuple(1 if m == k else 0 for m in range(space.freedim))
                    if isinstance(coeff, RatFunc):
                        if not coeff.is_poly():
                            raise ValueError(
                                "basis entries must be polynomial after normalization"
                            )
                        for exps, cf in coeff.num.terms.items():
                            key = tuple(exps) + marker
                            terms[key] = terms.get(key, Fraction(0)) + cf
                    elif coeff:
                        key = (0,) * len(base) + marker
                        terms[key] = terms.get(key, Fraction(0)) + Fraction(coeff)
                row.append(Poly(names, terms))
            rows.append(tuple(row))
        out.append(
            ParamMatrix(dim=n, params=names, entries=tuple(rows), exclusions=())
        )
    return tuple(out)
