import numpy as np
import pytest

from compalg import fforacle
from compalg.fforacle import (
    GuardExceededError,
    count_solutions_mod_p,
    exhaustive_solutions_mod_p,
    is_solution_mod_p,
    nullspace_dim_mod_p,
    solutions_contain,
)
from compalg.identities import monomial_programs, residual_system
from compalg.linsys import solve_for_invariants
from compalg.tensor import make_pair

A2_BULLET = {(1, 1, 2): 1}
A2_STAR = {(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 2): 1}


@pytest.fixture
def pair2():
    return make_pair("pair2", 2, A2_BULLET, A2_STAR)


@pytest.fixture
def pair3():
    return make_pair(
        "pair3b",
        3,
        {(1, 3, 2): 1, (3, 1, 2): 1},
        {(1, 3, 2): 1, (2, 3, 2): 1, (3, 1, 2): 1, (3, 2, 2): 1, (3, 3, 3): 1},
    )


class TestLinearCounts:
    @pytest.mark.parametrize("kind", ["derivation", "centroid", "quasi-centroid"])
    @pytest.mark.parametrize("q", [5, 7])
    def test_count_equals_power_of_nullity(self, pair2, kind, q):
        assert count_solutions_mod_p(kind, pair2, q) == q ** nullspace_dim_mod_p(kind, pair2, q)

    @pytest.mark.parametrize("kind", ["derivation", "centroid", "quasi-centroid"])
    @pytest.mark.parametrize("q", [5, 7])
    def test_dim3_counts(self, pair3, kind, q):
        assert count_solutions_mod_p(kind, pair3, q) == q ** nullspace_dim_mod_p(kind, pair3, q)

    def test_meet_in_the_middle_equals_brute_force(self, pair2):
        # same solution set from the generic candidate filter and the split
        # enumeration, in the same lexicographic order
        q = 5
        system = residual_system("derivation", pair2)
        nvars, programs = monomial_programs(system, q)
        starts = [0]
        coeffs, mstarts, mvars = [], [], []
        for prog in programs:
            for c, idxs in prog:
                coeffs.append(c)
                mstarts.append(len(mvars))
                mvars.extend(idxs)
            starts.append(len(coeffs))
        mstarts.append(len(mvars))
        arrays = [np.asarray(x, dtype=np.int32) for x in (starts, coeffs, mstarts, mvars)]
        brute = fforacle._core.filter_candidates(q, nvars, 0, q**nvars, *arrays)
        mitm = exhaustive_solutions_mod_p("derivation", pair2, q)
        mitm_indices = [fforacle._matrix_to_index(m, q, 2) for m in mitm.solutions]
        assert list(brute) == mitm_indices

    def test_backends_agree(self, pair2):
        from compalg import _ffcore_py

        q = 5
        system = residual_system("rota-baxter", pair2)
        nvars, programs = monomial_programs(system, q)
        starts = [0]
        coeffs, mstarts, mvars = [], [], []
        for prog in programs:
            for c, idxs in prog:
                coeffs.append(c)
                mstarts.append(len(mvars))
                mvars.extend(idxs)
            starts.append(len(coeffs))
        mstarts.append(len(mvars))
        arrays = [np.asarray(x, dtype=np.int32) for x in (starts, coeffs, mstarts, mvars)]
        active = fforacle._core.filter_candidates(q, nvars, 0, q**nvars, *arrays)
        fallback = _ffcore_py.filter_candidates(q, nvars, 0, q**nvars, *arrays)
        assert list(active) == list(fallback)


class TestNonlinear:
    def test_rb_solutions_include_family(self, pair2):
        res = exhaustive_solutions_mod_p("rota-baxter", pair2, 5)
        assert res.count == 5
        for r in range(5):
            assert solutions_contain(res, (((0, 0), (r, 0)),), 5, 2)

    def test_automorphism_contains_identity(self, pair2, pair3):
        for pair in (pair2, pair3):
            res = exhaustive_solutions_mod_p("automorphism", pair, 5)
            assert res.count >= 1
            ident = tuple(
                tuple(1 if r == c else 0 for c in range(pair.dim)) for r in range(pair.dim)
            )
            assert solutions_contain(res, (ident,), 5, pair.dim)

    def test_singular_homs_excluded(self, pair2):
        res = exhaustive_solutions_mod_p("automorphism", pair2, 5)
        zero_mat = tuple(tuple(0 for _ in range(2)) for _ in range(2))
        assert not solutions_contain(res, (zero_mat,), 5, 2)

    def test_is_solution_matches_enumeration(self, pair2):
        q = 5
        res = exhaustive_solutions_mod_p("nijenhuis", pair2, q)
        listed = {fforacle._matrix_to_index(m, q, 2) for m in res.solutions}
        for idx in range(q**4):
            mats = fforacle._index_to_matrix(idx, q, 2, 4)
            assert is_solution_mod_p("nijenhuis", pair2, q, mats) == (idx in listed)


class TestGuards:
    def test_brute_force_guard(self, pair3):
        with pytest.raises(GuardExceededError):
            exhaustive_solutions_mod_p("rota-baxter", pair3, 7)

    def test_parametric_pair_rejected(self):
        parametric = make_pair(
            "p", 2, {(1, 1, 2): "alpha"}, {}, parameters=("alpha",)
        )
        with pytest.raises(ValueError):
            exhaustive_solutions_mod_p("derivation", parametric, 5)

    def test_oracle_matches_generic_freedim_where_unexcluded(self, pair2):
        generic = solve_for_invariants("centroid", pair2)
        for q in (5, 7):
            assert nullspace_dim_mod_p("centroid", pair2, q) == generic.freedim
