"""Finite-field brute-force oracle.

Everything here works on parameter-free pairs: the identities of a kind are
reduced modulo a prime q and all n x n matrices over F_q are enumerated (or
counted).  Results are independent of the exact solvers, which makes them
useful as a cross-check: for linear kinds the solution count must be
q^(kernel dimension of the mod-q system).

Enumeration strategy:

* nonlinear kinds run the generic candidate filter (compiled core when
  available, numpy fallback otherwise) over all q^(n^2) matrices;
* linear kinds use a meet-in-the-middle split of the unknown vector, which
  enumerates both halves exhaustively and combines them -- the same solution
  set as the brute force at ~q^(n^2/2) cost, so the q in {5,7}, dim <= 3
  checks stay well inside the work guard.

Candidate order is lexicographic on the stacked column-major unknown vector;
solution lists are returned in that order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .identities import LINEAR_KINDS, monomial_programs, residual_system, slot_letters
from .linsys import build_system
from .scalars import reduce_mod_p
from .tensor import AlgebraPair

try:  # compiled core, built by setup.py; the numpy path is the fallback
    from . import _ffcore as _core
except ImportError:  # pragma: no cover - depends on the build environment
    from . import _ffcore_py as _core

BACKEND = _core.BACKEND
ENUM_GUARD = 10_000_000
LIST_GUARD = 2_000_000


class GuardExceededError(RuntimeError):
    """The requested enumeration exceeds the configured work/output guard."""


@dataclass(frozen=True)
class OracleResult:
    kind: str
    q: int
    count: int
    solutions: tuple | None  # tuple of matrices (tuples of int rows), or None when count-only


def _require_concrete(pair: AlgebraPair):
    if pair.parameters:
        raise ValueError("specialize the pair's parameters before using the oracle")


def _programs(kind: str, pair: AlgebraPair, q: int):
    system = residual_system(kind, pair)
    nvars, programs = monomial_programs(system, q)
    res_starts = [0]
    mono_coeffs: list[int] = []
    mono_starts: list[int] = []
    mono_vars: list[int] = []
    for prog in programs:
        for coeff, idxs in prog:
            mono_coeffs.append(coeff)
            mono_starts.append(len(mono_vars))
            mono_vars.extend(idxs)
        res_starts.append(len(mono_coeffs))
    mono_starts.append(len(mono_vars))
    as_i32 = lambda xs: np.asarray(xs, dtype=np.int32)
    return nvars, (as_i32(res_starts), as_i32(mono_coeffs), as_i32(mono_starts), as_i32(mono_vars))


def _index_to_matrix(index: int, q: int, dim: int, nvars: int):
    digits = []
    rest = index
    for _ in range(nvars):
        digits.append(rest % q)
        rest //= q
    digits.reverse()
    per_slot = dim * dim
    mats = []
    for s in range(len(digits) // per_slot):
        block = digits[s * per_slot : (s + 1) * per_slot]
        mats.append(tuple(tuple(block[j * dim + r] for j in range(dim)) for r in range(dim)))
    return tuple(mats)


def _matrix_to_index(mats, q: int, dim: int) -> int:
    digits = []
    for m in mats:
        for j in range(dim):
            for r in range(dim):
                digits.append(int(m[r][j]) % q)
    idx = 0
    for d in digits:
        idx = idx * q + d
    return idx


def _mod_rows(kind: str, pair: AlgebraPair, q: int) -> np.ndarray:
    system = build_system(kind, pair)
    rows = []
    for row in system.rows:
        rows.append([reduce_mod_p(x, q).value for x in row])
    return np.asarray(rows, dtype=np.int64) if rows else np.zeros((0, system.unknown_count), dtype=np.int64)


def rank_mod_p(matrix: np.ndarray, q: int) -> int:
    a = matrix % q
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        piv = None
        for r in range(rank, rows):
            if a[r, col] % q:
                piv = r
                break
        if piv is None:
            continue
        a[[rank, piv]] = a[[piv, rank]]
        inv = pow(int(a[rank, col]), q - 2, q)
        a[rank] = a[rank] * inv % q
        for r in range(rows):
            if r != rank and a[r, col]:
                a[r] = (a[r] - a[r, col] * a[rank]) % q
        rank += 1
        if rank == rows:
            break
    return rank


def nullspace_dim_mod_p(kind: str, pair: AlgebraPair, q: int) -> int:
    """Kernel dimension of the kind's linear system reduced modulo q."""
    _require_concrete(pair)
    if kind not in LINEAR_KINDS:
        raise ValueError(f"{kind!r} is not a linear kind")
    rows = _mod_rows(kind, pair, q)
    return rows.shape[1] - rank_mod_p(rows, q)


def _all_vectors(q: int, width: int) -> np.ndarray:
    total = q**width
    idx = np.arange(total, dtype=np.int64)
    out = np.empty((total, width), dtype=np.int64)
    rest = idx.copy()
    for pos in range(width - 1, -1, -1):
        out[:, pos] = rest % q
        rest //= q
    return out


def _mitm_linear(rows: np.ndarray, q: int, count_only: bool):
    """Solutions of rows @ v = 0 over F_q by meet-in-the-middle on v."""
    ncols = rows.shape[1]
    h = (ncols + 1) // 2
    wront = q**h
    wback = q ** (ncols - h)
    if max(wront, wback) > ENUM_GUARD:
        raise GuardExceededError(f"meet-in-the-middle half size exceeds {ENUM_GUARD}")
    m1 = rows[:, :h]
    m2 = rows[:, h:]
    back = _all_vectors(q, ncols - h)
    keys2 = back @ m2.T % q
    buckets: dict[bytes, list[int]] = {}
    for i in range(wback):
        buckets.setdefault(keys2[i].tobytes(), []).append(i)
    front = _all_vectors(q, h)
    keys1 = (-(front @ m1.T)) % q
    count = 0
    solutions: list[tuple[int, ...]] | None = None if count_only else []
    for i in range(wront):
        matches = buckets.get(keys1[i].tobytes())
        if not matches:
            continue
        count += len(matches)
        if solutions is not None:
            if count > LIST_GUARD:
                raise GuardExceededError(f"solution list exceeds {LIST_GUARD}")
            prefix = tuple(int(x) for x in front[i])
            for b in matches:
                solutions.append(prefix + tuple(int(x) for x in back[b]))
    return count, solutions


def exhaustive_solutions_mod_p(
    kind: str, pair: AlgebraPair, q: int, count_only: bool = False
) -> OracleResult:
    """Enumerate every matrix over F_q satisfying the kind's identities.

    The automorphism kind keeps only invertible solutions.  Raises
    :class:`GuardExceededError` when the enumeration workload (q^(n^2) for
    the generic filter, q^ceil(n^2/2) for the linear meet-in-the-middle) or
    the materialized solution list would exceed the guards.
    """
    _require_concrete(pair)
    n = pair.dim
    n_slots = len(slot_letters(kind))
    nvars = n_slots * n * n

    if kind in LINEAR_KINDS:
        rows = _mod_rows(kind, pair, q)
        count, vectors = _mitm_linear(rows, q, count_only)
        if count_only:
            return OracleResult(kind=kind, q=q, count=count, solutions=None)
        mats = []
        for vec in vectors:
            per_slot = n * n
            mats.append(
                tuple(
                    tuple(
                        tuple(vec[s * per_slot + j * n + r] for j in range(n))
                        for r in range(n)
                    )
                    for s in range(n_slots)
                )
            )
        return OracleResult(kind=kind, q=q, count=count, solutions=tuple(mats))

    total = q**nvars
    if total > ENUM_GUARD:
        raise GuardExceededError(
            f"enumeration of {q}^{nvars} = {total} candidates exceeds {ENUM_GUARD}"
        )
    nvars_check, program_arrays = _programs(kind, pair, q)
    assert nvars_check == nvars
    indices = _core.filter_candidates(q, nvars, 0, total, *program_arrays)
    solutions = []
    for idx in indices:
        mats = _index_to_matrix(idx, q, n, nvars)
        if kind == "automorphism" and not _invertible_mod_p(mats[0], q):
            continue
        solutions.append(mats)
    count = len(solutions)
    if count_only:
        return OracleResult(kind=kind, q=q, count=count, solutions=None)
    if count > LIST_GUARD:
        raise GuardExceededError(f"solution list exceeds {LIST_GUARD}")
    return OracleResult(kind=kind, q=q, count=count, solutions=tuple(solutions))


def count_solutions_mod_p(kind: str, pair: AlgebraPair, q: int) -> int:
    return exhaustive_solutions_mod_p(kind, pair, q, count_only=True).count


def _invertible_mod_p(matrix, q: int) -> bool:
    n = len(matrix)
    a = [[int(x) % q for x in row] for row in matrix]
    rank = 0
    for col in range(n):
        piv = None
        for r in range(rank, n):
            if a[r][col]:
                piv = r
                break
        if piv is None:
            return False
        a[rank], a[piv] = a[piv], a[rank]
        inv = pow(a[rank][col], q - 2, q)
        a[rank] = [x * inv % q for x in a[rank]]
        for r in range(n):
            if r != rank and a[r][col]:
                f = a[r][col]
                a[r] = [(x - f * y) % q for x, y in zip(a[r], a[rank])]
        rank += 1
    return True


def is_solution_mod_p(kind: str, pair: AlgebraPair, q: int, matrices) -> bool:
    """Direct membership check: the matrices satisfy the kind's identities
    over F_q (and invertibility, for the automorphism kind).

    Equivalent to membership in the exhaustive solution list, but usable when
    that list is too large to materialize.
    """
    _require_concrete(pair)
    if kind == "automorphism" and not _invertible_mod_p(matrices[0], q):
        return False
    system = residual_system(kind, pair)
    nvars, programs = monomial_programs(system, q)
    n = pair.dim
    digits = []
    for m in matrices:
        for j in range(n):
            for r in range(n):
                digits.append(int(m[r][j]) % q)
    if len(digits) != nvars:
        raise ValueError("matrix count does not match the kind's slots")
    for prog in programs:
        acc = 0
        for coeff, idxs in prog:
            term = coeff
            for v in idxs:
                term = term * digits[v] % q
            acc = (acc + term) % q
        if acc:
            return False
    return True


def solutions_contain(result: OracleResult, matrices, q: int, dim: int) -> bool:
    idx = _matrix_to_index(matrices, q, dim)
    return any(_matrix_to_index(m, q, dim) == idx for m in result.solutions)
