"""Pure-Python (numpy) fallback for the enumeration core.

Same contract as the compiled module: filter candidate indices [start, stop)
whose base-q digit vectors zero every residual program.  Residuals are
applied one at a time to a shrinking survivor set, which keeps the work
proportional to how discriminating the early residuals are.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 18


def _digits_of(indices: np.ndarray, q: int, nvars: int) -> np.ndarray:
    digits = np.empty((indices.shape[0], nvars), dtype=np.int64)
    rest = indices.copy()
    for pos in range(nvars - 1, -1, -1):
        digits[:, pos] = rest % q
        rest //= q
    return digits


def filter_candidates(q, nvars, start, stop, res_starts, mono_coeffs, mono_starts, mono_vars):
    res_starts = np.asarray(res_starts)
    mono_coeffs = np.asarray(mono_coeffs)
    mono_starts = np.asarray(mono_starts)
    mono_vars = np.asarray(mono_vars)
    out: list[int] = []
    n_res = len(res_starts) - 1
    for lo in range(start, stop, _CHUNK):
        hi = min(lo + _CHUNK, stop)
        survivors = np.arange(lo, hi, dtype=np.int64)
        digits = _digits_of(survivors, q, nvars)
        for ri in range(n_res):
            if survivors.size == 0:
                break
            acc = np.zeros(survivors.shape[0], dtype=np.int64)
            for mi in range(res_starts[ri], res_starts[ri + 1]):
                term = np.full(survivors.shape[0], int(mono_coeffs[mi]), dtype=np.int64)
                for vi in range(mono_starts[mi], mono_starts[mi + 1]):
                    term = term * digits[:, mono_vars[vi]] % q
                acc = (acc + term) % q
            keep = acc == 0
            survivors = survivors[keep]
            digits = digits[keep]
        out.extend(survivors.tolist())
    return out


BACKEND = "python"
