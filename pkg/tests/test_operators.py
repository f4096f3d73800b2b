from fractions import Fraction

import pytest

from compalg.linsys import param_matrix, solve_for_invariants, spans_equal
from compalg.operators import (
    CONDITIONAL,
    NONZERO,
    ZERO,
    ansatz_constraints,
    det_report,
    operator_residuals,
    verify_family,
)
from compalg.tensor import make_pair

A2_BULLET = {(1, 1, 2): 1}
A2_STAR = {(1, 1, 1): 1, (1, 2, 2): 1, (2, 1, 2): 1}


@pytest.fixture
def pair2():
    return make_pair("pair2", 2, A2_BULLET, A2_STAR)


@pytest.fixture
def pair3():
    return make_pair(
        "pair3",
        3,
        {(1, 3, 2): 1, (3, 1, 2): 1},
        {(1, 3, 2): 1, (3, 1, 2): "alpha"},
        parameters=("alpha",),
        exclusions=("alpha-1",),
    )


def ident(n):
    return param_matrix(n, [], [["1" if r == c else "0" for c in range(n)] for r in range(n)])


def zero(n):
    return param_matrix(n, [], [["0"] * n for _ in range(n)])


class TestVerifiedFamilies:
    def test_rota_baxter_below_diagonal(self, pair2):
        fam = param_matrix(2, ["r"], [["0", "0"], ["r", "0"]])
        assert verify_family("rota-baxter", pair2, fam).verdict == ZERO

    def test_averaging_below_diagonal(self, pair2):
        fam = param_matrix(2, ["x"], [["0", "0"], ["x", "0"]])
        assert verify_family("averaging", pair2, fam).verdict == ZERO

    def test_scalar_nijenhuis(self, pair2, pair3):
        for pair in (pair2, pair3):
            fam = param_matrix(
                pair.dim,
                ["lam"],
                [["lam" if r == c else "0" for c in range(pair.dim)] for r in range(pair.dim)],
            )
            assert verify_family("nijenhuis", pair, fam).verdict == ZERO

    def test_identity_everywhere(self, pair2, pair3):
        for pair in (pair2, pair3):
            for kind in ("averaging", "reynolds", "centroid", "automorphism"):
                v = verify_family(kind, pair, ident(pair.dim))
                assert v.verdict == ZERO
                if kind == "automorphism":
                    assert v.det.is_unit

    def test_zero_map_everywhere(self, pair2, pair3):
        for pair in (pair2, pair3):
            for kind in (
                "rota-baxter",
                "nijenhuis",
                "averaging",
                "reynolds",
                "derivation",
                "centroid",
                "quasi-centroid",
            ):
                assert verify_family(kind, pair, zero(pair.dim)).verdict == ZERO

    def test_zero_map_rejected_as_automorphism(self, pair2):
        v = verify_family("automorphism", pair2, zero(2))
        assert not v.det.is_unit


class TestConditionalFamilies:
    def test_nijenhuis_diag(self, pair2):
        fam = param_matrix(2, ["n"], [["0", "0"], ["0", "n"]])
        v = verify_family("nijenhuis", pair2, fam)
        assert v.verdict == CONDITIONAL
        assert v.constraints == ("n^2",)

    def test_automorphism_family_constraint_found(self, pair2):
        # the recorded family diag(1, t), t != 0: the bullet equation at
        # (1,1) forces t = 1, so the verdict is conditional, not zero
        fam = param_matrix(2, ["t"], [["1", "0"], ["0", "t"]], exclusions=["t"])
        v = verify_family("automorphism", pair2, fam)
        assert v.verdict == CONDITIONAL
        assert v.constraints == ("1-t",)
        assert v.det.is_unit

    def test_impossible_family_is_nonzero(self, pair2):
        fam = param_matrix(2, [], [["0", "1"], ["0", "0"]])
        v = verify_family("centroid", pair2, fam)
        assert v.verdict == NONZERO
        assert v.witness is not None

    def test_det_not_unit_reported(self, pair2):
        fam = param_matrix(2, ["t"], [["1", "0"], ["0", "t"]])  # no exclusions
        rep = det_report(pair2, fam)
        assert not rep.is_unit
        assert str(rep.leftover) == "t"


class TestResidualSets:
    def test_residual_count_both_products(self, pair2):
        rs = operator_residuals("rota-baxter", pair2, ident(2))
        assert len(rs.residuals) == 2 * 2**3

    def test_averaging_two_chains(self, pair2):
        rs = operator_residuals("averaging", pair2, ident(2))
        assert len(rs.residuals) == 2 * 2 * 2**3

    def test_zero_verdict_iff_all_zero(self, pair2):
        fam = param_matrix(2, ["r"], [["0", "0"], ["r", "0"]])
        rs = operator_residuals("rota-baxter", pair2, fam)
        assert rs.verdict == ZERO
        assert all(not r.value for r in rs.residuals)


class TestAnsatz:
    def test_linear_kind_matches_nullspace(self, pair2):
        full = param_matrix(2, ["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])
        res = ansatz_constraints("derivation", pair2, full)
        assert res.linear
        assert spans_equal(res.space, solve_for_invariants("derivation", pair2))

    def test_quadratic_constraints_reported(self, pair2):
        full = param_matrix(2, ["a", "b", "c", "d"], [["a", "b"], ["c", "d"]])
        res = ansatz_constraints("rota-baxter", pair2, full)
        assert not res.linear
        assert res.constraints
        degrees = {g.total_degree() for g in res.constraints}
        assert max(degrees) == 2

    def test_scalar_nijenhuis_unconstrained(self, pair2):
        pattern = param_matrix(2, ["lam"], [["lam", "0"], ["0", "lam"]])
        res = ansatz_constraints("nijenhuis", pair2, pattern)
        assert res.constraints == ()
        assert res.linear and res.space.freedim == 1

    def test_sparse_rb_pattern(self, pair2):
        pattern = param_matrix(2, ["r", "s"], [["0", "0"], ["r", "s"]])
        res = ansatz_constraints("rota-baxter", pair2, pattern)
        # s is forced to zero by quadratic constraints
        assert any("s" in str(g) for g in res.constraints)


class TestOracleConsistency:
    def test_zero_families_specialize_into_oracle_lists(self, pair2):
        from compalg.fforacle import exhaustive_solutions_mod_p, solutions_contain

        fam = param_matrix(2, ["r"], [["0", "0"], ["r", "0"]])
        assert verify_family("rota-baxter", pair2, fam).verdict == ZERO
        for q in (5, 7):
            res = exhaustive_solutions_mod_p("rota-baxter", pair2, q)
            for r in range(q):
                concrete = fam.evaluate({"r": Fraction(r)})
                assert solutions_contain(res, (concrete,), q, 2)
