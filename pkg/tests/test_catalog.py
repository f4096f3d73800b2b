import json
import random
from fractions import Fraction

import pytest

from compalg.catalog import (
    CatalogFormatError,
    load_builtin_catalog,
    load_builtin_pairs,
    parse_algebra,
    parse_catalog_text,
    pairs_equal,
    serialize,
    verify_entry,
)
from compalg.tensor import (
    associativity_residuals,
    compatibility_residuals,
    nonzero_residual_indices,
)


@pytest.fixture(scope="module")
def entries():
    return load_builtin_catalog()


class TestBuiltinCounts:
    def test_total(self, entries):
        assert len(entries) == 43

    def test_per_dimension(self, entries):
        by_dim = {}
        for e in entries:
            by_dim[e.pair.dim] = by_dim.get(e.pair.dim, 0) + 1
        assert by_dim == {2: 1, 3: 3, 4: 39}

    def test_provenance_nonempty(self, entries):
        assert all(e.provenance for e in entries)

    def test_radical_family_flagged(self, entries):
        entry = next(e for e in entries if e.name == "dim4-20-A4_5-A4_28")
        assert any(f.radical for f in entry.expected_aut)

    def test_parametric_entries_declare_alpha(self, entries):
        parametric = [e for e in entries if e.pair.parameters]
        assert all(e.pair.parameters == ("alpha",) for e in parametric)
        dim3 = next(e for e in entries if e.name == "dim3-01-A3_1-A3_2")
        assert [str(x) for x in dim3.pair.exclusions] == ["-1+alpha"] or dim3.pair.exclusions


class TestRoundTrip:
    def test_builtin_round_trip(self, entries):
        for e in entries:
            text = serialize(e.pair)
            again = parse_algebra(text)
            assert pairs_equal(again, e.pair), e.name
            assert serialize(again) == text

    def test_canonical_scalar_strings(self, entries):
        doc = json.loads(serialize(next(e for e in entries if e.name == "dim4-03-A4_1-A4_6").pair))
        constants = {cell["c"] for cell in doc["star"]}
        assert "(1+alpha)/(1-alpha)" in constants

    def test_cells_sorted(self, entries):
        for e in entries:
            doc = json.loads(serialize(e.pair))
            for key in ("bullet", "star"):
                cells = [(c["i"], c["j"], c["k"]) for c in doc[key]]
                assert cells == sorted(cells)

    def test_random_documents(self, seed):
        rng = random.Random(seed)
        names = ["alpha", "beta", "x1"]
        for trial in range(100):
            dim = rng.randint(1, 3)
            params = rng.sample(names, rng.randint(0, 2))
            fld_exprs = ["1", "-2", "1/2", "3", "-1/3"]
            if params:
                fld_exprs += [params[0], f"1+{params[0]}", f"(1+{params[0]})/(2-{params[0]})"]
            def product():
                table = []
                seen = set()
                for _ in range(rng.randint(0, dim**2)):
                    cell = (rng.randint(1, dim), rng.randint(1, dim), rng.randint(1, dim))
                    if cell in seen:
                        continue
                    seen.add(cell)
                    table.append(
                        {"i": cell[0], "j": cell[1], "k": cell[2], "c": rng.choice(fld_exprs)}
                    )
                return table
            doc = {
                "name": f"random-{trial}",
                "dim": dim,
                "params": params,
                "exclusions": [f"{params[0]}-1"] if params else [],
                "bullet": product(),
                "star": product(),
            }
            text = json.dumps(doc)
            pair = parse_algebra(text)
            assert pairs_equal(parse_algebra(serialize(pair)), pair)


class TestParseErrors:
    def test_unknown_field(self):
        with pytest.raises(CatalogFormatError):
            parse_algebra('{"name":"x","dim":2,"weird":1,"bullet":[],"star":[]}')

    def test_duplicate_cell(self):
        doc = '{"name":"x","dim":2,"bullet":[{"i":1,"j":1,"k":2,"c":"1"},{"i":1,"j":1,"k":2,"c":"-1"}],"star":[]}'
        with pytest.raises(CatalogFormatError, match="duplicate"):
            parse_algebra(doc)

    def test_index_out_of_range(self):
        doc = '{"name":"x","dim":2,"bullet":[{"i":1,"j":1,"k":3,"c":"1"}],"star":[]}'
        with pytest.raises(CatalogFormatError, match="out of range"):
            parse_algebra(doc)

    def test_bad_scalar(self):
        doc = '{"name":"x","dim":2,"bullet":[{"i":1,"j":1,"k":2,"c":"1+"}],"star":[]}'
        with pytest.raises(CatalogFormatError, match="bad scalar"):
            parse_algebra(doc)

    def test_unknown_parameter_in_scalar(self):
        doc = '{"name":"x","dim":2,"bullet":[{"i":1,"j":1,"k":2,"c":"gamma"}],"star":[]}'
        with pytest.raises(CatalogFormatError):
            parse_algebra(doc)

    def test_json_error_carries_position(self):
        with pytest.raises(CatalogFormatError, match="line"):
            parse_algebra('{"name": "x", "dim": }')

    def test_exclusions_require_params(self):
        doc = '{"name":"x","dim":2,"params":[],"exclusions":["1"],"bullet":[],"star":[]}'
        with pytest.raises(CatalogFormatError):
            parse_algebra(doc)

    def test_empty_products_valid(self):
        pair = parse_algebra('{"name":"zero","dim":2,"bullet":[],"star":[]}')
        assert pair.bullet.is_zero() and pair.star.is_zero()

    def test_multi_document_error_names_line(self):
        text = '{"name":"ok","dim":1,"bullet":[],"star":[]}\n{"name":"bad","dim":0,"bullet":[],"star":[]}'
        with pytest.raises(CatalogFormatError, match="line 2"):
            parse_catalog_text(text)


class TestCatalogMath:
    def test_every_algebra_associative(self, entries):
        for e in entries:
            for label, tensor in (("bullet", e.pair.bullet), ("star", e.pair.star)):
                assert not nonzero_residual_indices(associativity_residuals(tensor)), (
                    e.name,
                    label,
                )

    def test_incompatible_pairs_are_known(self, entries):
        bad = [
            e.name
            for e in entries
            if nonzero_residual_indices(compatibility_residuals(e.pair))
        ]
        assert bad == [
            "dim4-06-A4_1-A4_24",
            "dim4-08-A4_2-A4_10",
            "dim4-29-A4_25-A4_33",
        ]


class TestVerifyEntry:
    def test_dim2_headline_checks(self, entries):
        rep = verify_entry(next(e for e in entries if e.name == "dim2-01-A2_1-A2_4"))
        by_name = {c.name: c for c in rep.checks}
        assert by_name["associativity-bullet"].verdict == "PASS"
        assert by_name["associativity-star"].verdict == "PASS"
        assert by_name["compatibility"].verdict == "PASS"
        assert by_name["expected-position4-as-rota-baxter"].verdict == "MATCH"
        # the family the catalog records for the automorphisms is constrained
        # to the identity; the computed constraint is reported exactly
        assert by_name["aut"].verdict == "CONDITIONAL"
        assert by_name["aut"].details["as_is"]["constraints"] == ["1-t"]

    def test_parametric_compat_is_polynomially_zero(self, entries):
        rep = verify_entry(next(e for e in entries if e.name == "dim3-01-A3_1-A3_2"))
        by_name = {c.name: c for c in rep.checks}
        assert by_name["compatibility"].verdict == "PASS"
        for value in (0, 2, 3):
            assert by_name[f"specialization@{value}"].verdict == "PASS"

    def test_deterministic_reports(self, entries):
        for name in ("dim2-01-A2_1-A2_4", "dim4-24-A4_11-A4_23"):
            entry = next(e for e in entries if e.name == name)
            first = verify_entry(entry).to_dict()
            second = verify_entry(entry).to_dict()
            assert first == second

    def test_skipped_radical_reported(self, entries):
        rep = verify_entry(next(e for e in entries if e.name == "dim4-20-A4_5-A4_28"))
        assert any(c.verdict == "SKIPPED-RADICAL" for c in rep.checks)


class TestCatalogDirOverride:
    def test_env_override(self, tmp_path, monkeypatch, entries):
        pairs_text = "\n".join(serialize(e.pair) for e in entries[:2]) + "\n"
        (tmp_path / "pairs.cpa.json").write_text(pairs_text)
        (tmp_path / "expected.json").write_text('{"entries": {}}')
        monkeypatch.setenv("CPA_CATALOG_DIR", str(tmp_path))
        loaded = load_builtin_pairs()
        assert [p.name for p in loaded] == [entries[0].name, entries[1].name]
