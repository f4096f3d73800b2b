# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration core: filter all candidate vectors over F_q against a
set of residual monomial programs.

Candidates are the integers [start, stop) interpreted as base-q digit
vectors, first digit most significant, so ascending index is lexicographic
order on the stacked unknown vector.
"""

from libc.stdlib cimport free, malloc


def filter_candidates(int q, int nvars, long long start, long long stop,
                      int[::1] res_starts, int[::1] mono_coeffs,
                      int[::1] mono_starts, int[::1] mono_vars):
    """Return the list of candidate indices whose digits zero every residual.

    res_starts has one extra trailing entry (total monomial count); likewise
    mono_starts ends with the total variable-slot count.
    """
    cdef long long idx, k
    cdef int n_res = res_starts.shape[0] - 1
    cdef int ri, mi, vi, acc, term, digit
    cdef bint ok
    cdef int* digits = <int*> malloc(nvars * sizeof(int))
    if digits is NULL:
        raise MemoryError()
    out = []
    try:
        # initialize digit odometer at `start`
        k = start
        for vi in range(nvars - 1, -1, -1):
            digits[vi] = <int> (k % q)
            k //= q
        idx = start
        while idx < stop:
            ok = True
            for ri in range(n_res):
                acc = 0
                for mi in range(res_starts[ri], res_starts[ri + 1]):
                    term = mono_coeffs[mi]
                    for vi in range(mono_starts[mi], mono_starts[mi + 1]):
                        digit = digits[mono_vars[vi]]
                        if digit == 0:
                            term = 0
                            break
                        term = (term * digit) % q
                    acc = (acc + term) % q
                if acc != 0:
                    ok = False
                    break
            if ok:
                out.append(idx)
            # advance odometer
            idx += 1
            vi = nvars - 1
            while vi >= 0:
                digits[vi] += 1
                if digits[vi] == q:
                    digits[vi] = 0
                    vi -= 1
                else:
                    break
    finally:
        free(digits)
    return out


BACKEND = "cython"
