import random
from fractions import Fraction

import pytest

from compalg.linsys import (
    build_system,
    format_solution,
    membership,
    nullspace,
    param_matrix,
    solve_for_invariants,
    spans_equal,
)
from compalg.scalars import Poly
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


class TestBuildSystem:
    @pytest.mark.parametrize(
        "kind,rows,unknowns",
        [
            ("derivation", 16, 4),
            ("centroid", 32, 4),
            ("quasi-centroid", 16, 4),
            ("quasi-derivation", 16, 8),
            ("generalized-derivation", 16, 12),
        ],
    )
    def test_dim2_counts(self, pair2, kind, rows, unknowns):
        system = build_system(kind, pair2)
        assert len(system.rows) == rows
        assert system.unknown_count == unknowns

    def test_dim3_generalized_counts(self, pair3):
        system = build_system("generalized-derivation", pair3)
        assert len(system.rows) == 54
        assert system.unknown_count == 27

    def test_rows_annihilate_solutions(self, pair2):
        for kind in ("derivation", "centroid", "quasi-derivation"):
            system = build_system(kind, pair2)
            space = nullspace(system)
            n = system.dim
            for sol in space.basis:
                vec = []
                for m in sol:
                    for j in range(n):
                        for r in range(n):
                            vec.append(m[r][j])
                for row in system.rows:
                    acc = sum((c * v for c, v in zip(row, vec) if c and v), system.field.zero)
                    assert not acc


class TestNullspace:
    def test_single_algebra_derivations(self):
        single = make_pair("b", 2, A2_BULLET, {})
        space = solve_for_invariants("derivation", single)
        assert space.freedim == 2
        got = {sol[0] for sol in space.basis}
        expected = {
            ((Fraction(1), Fraction(0)), (Fraction(0), Fraction(2))),
            ((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))),
        }
        assert got == expected

    def test_pair_derivations_collapse(self, pair2):
        # the star constraints force every bullet derivation to vanish
        assert solve_for_invariants("derivation", pair2).freedim == 0

    def test_identity_in_centroid(self, pair2):
        space = solve_for_invariants("centroid", pair2)
        ident = (((Fraction(1), Fraction(0)), (Fraction(0), Fraction(1))),)
        assert membership(space, ident)

    def test_zero_pair_full_space(self):
        degen = make_pair("zero", 2, {}, {})
        for kind, expected in [
            ("derivation", 4),
            ("centroid", 4),
            ("quasi-centroid", 4),
            ("quasi-derivation", 8),
            ("generalized-derivation", 12),
        ]:
            assert solve_for_invariants(kind, degen).freedim == expected

    def test_parametric_exclusion_free_elimination(self, pair3):
        space = solve_for_invariants("derivation", pair3)
        assert space.freedim == 4

    def test_specializations_match_generic(self, pair3):
        generic = solve_for_invariants("derivation", pair3)
        for a in (0, 2, 5):
            concrete = pair3.specialize({"alpha": Fraction(a)})
            space = solve_for_invariants("derivation", concrete)
            assert space.freedim == generic.freedim
            # every generic basis vector specializes to a solution
            for sol in generic.basis:
                mat = tuple(
                    tuple(x.evaluate({"alpha": Fraction(a)}) for x in row) for row in sol[0]
                )
                assert membership(space, (mat,))


class TestMembership:
    def test_zero_everywhere(self, pair2):
        zero = (((Fraction(0),) * 2,) * 2,)
        for kind in ("derivation", "centroid", "quasi-centroid"):
            assert membership(solve_for_invariants(kind, pair2), zero)

    def test_random_combination_in_span(self, pair2):
        rng = random.Random(11)
        space = solve_for_invariants("centroid", pair2)
        coeffs = [Fraction(rng.randint(-5, 5)) for _ in space.basis]
        combo = tuple(
            tuple(
                sum((c * sol[0][r][col] for c, sol in zip(coeffs, space.basis)), Fraction(0))
                for col in range(2)
            )
            for r in range(2)
        )
        assert membership(space, (combo,))

    def test_outside_span_rejected(self, pair2):
        space = solve_for_invariants("derivation", pair2)
        not_member = (((Fraction(1), Fraction(0)), (Fraction(0), Fraction(0))),)
        assert not membership(space, not_member)


class TestClosure:
    def test_derivations_commutator_closed(self):
        single = make_pair("b", 2, A2_BULLET, {})
        space = solve_for_invariants("derivation", single)

        def matmul(a, b):
            return tuple(
                tuple(sum(a[r][k] * b[k][c] for k in range(2)) for c in range(2))
                for r in range(2)
            )

        for s1 in space.basis:
            for s2 in space.basis:
                ab = matmul(s1[0], s2[0])
                ba = matmul(s2[0], s1[0])
                comm = tuple(
                    tuple(x - y for x, y in zip(r1, r2)) for r1, r2 in zip(ab, ba)
                )
                assert membership(space, (comm,))

    def test_centroid_composition_closed(self, pair2):
        space = solve_for_invariants("centroid", pair2)

        def matmul(a, b):
            return tuple(
                tuple(sum(a[r][k] * b[k][c] for k in range(2)) for c in range(2))
                for r in range(2)
            )

        for s1 in space.basis:
            for s2 in space.basis:
                assert membership(space, (matmul(s1[0], s2[0]),))

    def test_derivation_embeds_in_quasi_derivation(self):
        single = make_pair("b", 2, A2_BULLET, {})
        d_space = solve_for_invariants("derivation", single)
        qd_space = solve_for_invariants("quasi-derivation", single)
        for sol in d_space.basis:
            assert membership(qd_space, (sol[0], sol[0]))

    def test_centroid_embeds_in_quasi_centroid(self, pair2):
        c_space = solve_for_invariants("centroid", pair2)
        qc_space = solve_for_invariants("quasi-centroid", pair2)
        for sol in c_space.basis:
            assert membership(qc_space, sol)


class TestFormatSolution:
    def test_freedim_zero_renders_zero_matrix(self, pair2):
        space = solve_for_invariants("derivation", pair2)
        (rendered,) = format_solution(space)
        assert all(not e for row in rendered.entries for e in row)

    def test_single_algebra_layout(self):
        single = make_pair("b", 2, A2_BULLET, {})
        space = solve_for_invariants("derivation", single)
        (rendered,) = format_solution(space)
        strings = [[str(e) for e in row] for row in rendered.entries]
        assert strings == [["t2", "0"], ["t1", "2*t2"]]

    def test_round_trip_membership(self, pair2):
        rng = random.Random(3)
        space = solve_for_invariants("centroid", pair2)
        (rendered,) = format_solution(space)
        point = {name: Fraction(rng.randint(-4, 4)) for name in rendered.params}
        concrete = rendered.evaluate(point)
        assert membership(space, (concrete,))


class TestSpans:
    def test_family_vs_computed(self, pair2):
        from compalg.linsys import family_span

        space = solve_for_invariants("centroid", pair2)
        fam = param_matrix(2, ["a", "b"], [["a", "0"], ["b", "a"]])
        assert spans_equal(space, family_span(fam, space.field))
        too_big = param_matrix(2, ["a", "b", "c"], [["a", "0"], ["b", "c"]])
        assert not spans_equal(space, family_span(too_big, space.field))

    def test_transposed_span_differs(self):
        single = make_pair("b", 2, A2_BULLET, {})
        from compalg.linsys import family_span

        space = solve_for_invariants("derivation", single)
        fam = param_matrix(2, ["t", "s"], [["t", "0"], ["s", "2*t"]])
        assert spans_equal(space, family_span(fam, space.field))
        assert not spans_equal(space, family_span(fam.transposed(), space.field))
