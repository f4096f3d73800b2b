"""Structure-constant representation of one or two multiplications on a
common basis, with exact residual checkers.

A multiplication on a basis e_1..e_n is stored as the n^3 scalars c[i][j][k]
with e_i e_j = sum_k c[i][j][k] e_k (0-based indices internally, 1-based in
all reported residual labels).  Linear maps are stored as n x n matrices
whose column j holds the coordinates of the image of e_j.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .scalars import QQ, FieldMismatchError, field_for, poly_eval


class DimensionMismatchError(ValueError):
    pass


class SingularMatrixError(ValueError):
    pass


def flat_index(dim: int, *indices: int) -> int:
    """Flat position of 1-based indices, last index fastest."""
    pos = 0
    for i in indices:
        pos = pos * dim + (i - 1)
    return pos


@dataclass(frozen=True)
class Vector:
    """Coordinates of an element in the basis e_1..e_n."""

    dim: int
    coords: tuple

    def __post_init__(self):
        if len(self.coords) != self.dim:
            raise DimensionMismatchError("coordinate count does not match dimension")

    def is_zero(self) -> bool:
        return all(not c for c in self.coords)


class StructureTensor:
    """The n^3 structure constants of one bilinear multiplication."""

    __slots__ = ("dim", "field", "entries")

    def __init__(self, dim: int, field, entries):
        if dim < 1:
            raise DimensionMismatchError("dimension must be >= 1")
        self.dim = dim
        self.field = field
        grid = [[[field.zero for _ in range(dim)] for _ in range(dim)] for _ in range(dim)]
        if isinstance(entries, Mapping):
            for (i, j, k), value in entries.items():
                if not (1 <= i <= dim and 1 <= j <= dim and 1 <= k <= dim):
                    raise DimensionMismatchError(f"index ({i},{j},{k}) out of range for dim {dim}")
                grid[i - 1][j - 1][k - 1] = field.coerce(value)
        else:
            for i in range(dim):
                for j in range(dim):
                    for k in range(dim):
                        grid[i][j][k] = field.coerce(entries[i][j][k])
        self.entries = tuple(tuple(tuple(row) for row in plane) for plane in grid)

    def c(self, i: int, j: int, k: int):
        """Structure constant with 1-based indices."""
        return self.entries[i - 1][j - 1][k - 1]

    def is_zero(self) -> bool:
        return all(not x for plane in self.entries for row in plane for x in row)

    def nonzero_entries(self) -> list[tuple[int, int, int, object]]:
        out = []
        for i in range(self.dim):
            for j in range(self.dim):
                for k in range(self.dim):
                    v = self.entries[i][j][k]
                    if v:
                        out.append((i + 1, j + 1, k + 1, v))
        return out

    def map_scalars(self, target_field, fn) -> StructureTensor:
        data = [
            [[fn(self.entries[i][j][k]) for k in range(self.dim)] for j in range(self.dim)]
            for i in range(self.dim)
        ]
        return StructureTensor(self.dim, target_field, data)

    def basis_product(self, i: int, j: int) -> tuple:
        """Coordinates of e_i e_j (1-based arguments)."""
        return self.entries[i - 1][j - 1]


@dataclass(frozen=True)
class AlgebraPair:
    """Two multiplications on a shared basis, with shared parameters and the
    polynomials that must not vanish for the parametric family to be valid."""

    name: str
    dim: int
    bullet: StructureTensor
    star: StructureTensor
    parameters: tuple[str, ...] = ()
    exclusions: tuple = ()

    def __post_init__(self):
        if self.bullet.dim != self.dim or self.star.dim != self.dim:
            raise DimensionMismatchError("tensor dimensions disagree with the pair")
        if self.exclusions and not self.parameters:
            raise ValueError("exclusions require parameters")

    @property
    def field(self):
        return field_for(self.parameters)

    def tensors(self) -> tuple[StructureTensor, StructureTensor]:
        return (self.bullet, self.star)

    def swapped(self) -> AlgebraPair:
        return AlgebraPair(
            name=self.name + "~swap",
            dim=self.dim,
            bullet=self.star,
            star=self.bullet,
            parameters=self.parameters,
            exclusions=self.exclusions,
        )

    def allowed_specializations(self, values: Iterable[Fraction]) -> list[Fraction]:
        """Filter parameter values (single-parameter pairs) against exclusions
        and structure-constant denominators."""
        if not self.parameters:
            return []
        name = self.parameters[0]
        good = []
        for v in values:
            point = {name: Fraction(v)}
            if any(not poly_eval(e, point) for e in self.exclusions):
                continue
            try:
                self.specialize(point)
            except ArithmeticError:
                continue
            good.append(Fraction(v))
        return good

    def specialize(self, assignment: Mapping[str, Fraction]) -> AlgebraPair:
        """Substitute rational values for every parameter."""
        if not self.parameters:
            return self

        def ev(x):
            return poly_eval(x, assignment)

        suffix = ",".join(f"{k}={assignment[k]}" for k in self.parameters)
        return AlgebraPair(
            name=f"{self.name}@{suffix}",
            dim=self.dim,
            bullet=self.bullet.map_scalars(QQ, ev),
            star=self.star.map_scalars(QQ, ev),
        )


def make_pair(name, dim, bullet_entries, star_entries, parameters=(), exclusions=()) -> AlgebraPair:
    fld = field_for(parameters)
    return AlgebraPair(
        name=name,
        dim=dim,
        bullet=StructureTensor(dim, fld, bullet_entries),
        star=StructureTensor(dim, fld, star_entries),
        parameters=tuple(parameters),
        exclusions=tuple(fld.coerce(e) for e in exclusions) if parameters else (),
    )


def multiply(t: StructureTensor, x: Vector, y: Vector) -> Vector:
    """Bilinear product of two coordinate vectors."""
    if x.dim != t.dim or y.dim != t.dim:
        raise DimensionMismatchError("vector dimensions disagree with the tensor")
    zero = t.field.zero
    out = [zero for _ in range(t.dim)]
    for i, xi in enumerate(x.coords):
        if not xi:
            continue
        for j, yj in enumerate(y.coords):
            if not yj:
                continue
            coeff = xi * yj
            row = t.entries[i][j]
            for k in range(t.dim):
                if row[k]:
                    out[k] = out[k] + coeff * row[k]
    return Vector(t.dim, tuple(out))


def basis_vector(dim: int, field, i: int) -> Vector:
    return Vector(dim, tuple(field.one if k == i - 1 else field.zero for k in range(dim)))


def associativity_residuals(t: StructureTensor) -> list:
    """Flat list of n^4 scalars; entry for (i,j,k,q) sits at
    ((i-1)n + (j-1))n^2 + (k-1)n + (q-1) and equals
    sum_r c_ij^r c_rk^q - sum_r c_jk^r c_ir^q."""
    n = t.dim
    zero = t.field.zero
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for q in range(1, n + 1):
                    acc = zero
                    for r in range(1, n + 1):
                        left = t.c(i, j, r)
                        if left:
                            acc = acc + left * t.c(r, k, q)
                        right = t.c(j, k, r)
                        if right:
                            acc = acc - right * t.c(i, r, q)
                    out.append(acc)
    return out


def compatibility_residuals(p: AlgebraPair) -> list:
    """Flat list of n^4 scalars for the mixed identity
    (a.b)*c + (a*b).c = a.(b*c) + a*(b.c), indexed like associativity."""
    n = p.dim
    a, b = p.bullet, p.star
    zero = p.field.zero
    out = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                for q in range(1, n + 1):
                    acc = zero
                    for r in range(1, n + 1):
                        ar = a.c(i, j, r)
                        br = b.c(i, j, r)
                        if ar:
                            acc = acc + ar * b.c(r, k, q)
                        if br:
                            acc = acc + br * a.c(r, k, q)
                        arj = a.c(j, k, r)
                        brj = b.c(j, k, r)
                        if brj:
                            acc = acc - brj * a.c(i, r, q)
                        if arj:
                            acc = acc - arj * b.c(i, r, q)
                    out.append(acc)
    return out


def nonzero_residual_indices(residuals: Sequence) -> list[int]:
    return [idx for idx, r in enumerate(residuals) if r]


def matrix_apply(m: Sequence[Sequence], v: Vector) -> Vector:
    n = v.dim
    coords = []
    for r in range(n):
        acc = None
        for c in range(n):
            term = m[r][c] * v.coords[c]
            acc = term if acc is None else acc + term
        coords.append(acc)
    return Vector(n, tuple(coords))


def pair_hom_residuals(m: Sequence[Sequence], src: AlgebraPair, dst: AlgebraPair) -> list:
    """Residuals of M(e_i e_j) - M(e_i) M(e_j) for both products.

    Returns 2 n^3 scalars: the bullet block then the star block, each indexed
    (i-1)n^2 + (j-1)n + (r-1).  All zero iff M is a homomorphism of pairs;
    the automorphism check additionally needs an invertible M.
    """
    n = src.dim
    if dst.dim != n:
        raise DimensionMismatchError("source and destination dimensions differ")
    if len(m) != n or any(len(row) != n for row in m):
        raise DimensionMismatchError("map matrix must be n x n")
    fld = src.field
    m = [[fld.coerce(x) for x in row] for row in m]
    out = []
    for t_src, t_dst in zip(src.tensors(), dst.tensors()):
        for i in range(1, n + 1):
            mi = Vector(n, tuple(m[r][i - 1] for r in range(n)))
            for j in range(1, n + 1):
                mj = Vector(n, tuple(m[r][j - 1] for r in range(n)))
                lhs = matrix_apply(m, Vector(n, t_src.basis_product(i, j)))
                rhs = multiply(t_dst, mi, mj)
                for r in range(n):
                    out.append(lhs.coords[r] - rhs.coords[r])
    return out


def matrix_det(m: Sequence[Sequence], field):
    """Exact determinant by fraction-producing Gaussian elimination."""
    n = len(m)
    a = [[field.coerce(x) for x in row] for row in m]
    det = field.one
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return field.zero
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det = det * a[col][col]
        inv = field.one / a[col][col]
        for r in range(col + 1, n):
            if not a[r][col]:
                continue
            f = a[r][col] * inv
            for c in range(col, n):
                a[r][c] = a[r][c] - f * a[col][c]
    return det


def matrix_inverse(m: Sequence[Sequence], field):
    n = len(m)
    a = [[field.coerce(x) for x in row] for row in m]
    inv = [[field.one if r == c else field.zero for c in range(n)] for r in range(n)]
    for col in range(n):
        piv = None
        for r in range(col, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        scale = field.one / a[col][col]
        a[col] = [x * scale for x in a[col]]
        inv[col] = [x * scale for x in inv[col]]
        for r in range(n):
            if r == col or not a[r][col]:
                continue
            f = a[r][col]
            a[r] = [x - f * y for x, y in zip(a[r], a[col])]
            inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


def change_of_basis(p: AlgebraPair, basis_matrix: Sequence[Sequence]) -> AlgebraPair:
    """Transport both multiplications along the basis f_j = sum_i P[i][j] e_i.

    P must be invertible; the transported pair is compatible iff the original
    is, which makes this useful for isomorphism spot checks.
    """
    fld = p.field
    n = p.dim
    p_inv = matrix_inverse(basis_matrix, fld)

    def transport(t: StructureTensor) -> StructureTensor:
        data = {}
        for i in range(1, n + 1):
            fi = Vector(n, tuple(fld.coerce(basis_matrix[r][i - 1]) for r in range(n)))
            for j in range(1, n + 1):
                fj = Vector(n, tuple(fld.coerce(basis_matrix[r][j - 1]) for r in range(n)))
                prod = multiply(t, fi, fj)
                new_coords = matrix_apply(p_inv, prod)
                for k in range(1, n + 1):
                    v = new_coords.coords[k - 1]
                    if v:
                        data[(i, j, k)] = v
        return StructureTensor(n, fld, data)

    return AlgebraPair(
        name=p.name + "~basis",
        dim=n,
        bullet=transport(p.bullet),
        star=transport(p.star),
        parameters=p.parameters,
        exclusions=p.exclusions,
    )
