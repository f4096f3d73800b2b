import json

import pytest

from compalg.catalog import load_builtin_catalog, serialize
from compalg.cli import main


@pytest.fixture(scope="module")
def entries():
    return load_builtin_catalog()


@pytest.fixture
def pair_file(tmp_path, entries):
    path = tmp_path / "pair.cpa.json"
    path.write_text(serialize(entries[0].pair) + "\n")
    return str(path)


@pytest.fixture
def dim3_file(tmp_path, entries):
    entry = next(e for e in entries if e.name == "dim3-02-A3_1-A3_11")
    path = tmp_path / "dim3.cpa.json"
    path.write_text(serialize(entry.pair) + "\n")
    return str(path)


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestCheck:
    def test_builtin_pair_compatible(self, capsys, pair_file):
        code, out, _ = run(capsys, ["check", pair_file])
        assert code == 0
        assert "compatible: true" in out

    def test_json_output(self, capsys, pair_file):
        code, out, _ = run(capsys, ["check", pair_file, "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        assert doc["pairs"][0]["compatible"] is True

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.cpa.json"
        bad.write_text('{"name":"x","dim":2,"bullet":[{"i":1,"j":1,"k":9,"c":"1"}],"star":[]}\n')
        code, _, err = run(capsys, ["check", str(bad)])
        assert code == 1
        assert "out of range" in err

    def test_missing_file(self, capsys):
        code, _, err = run(capsys, ["check", "/no/such/file.cpa.json"])
        assert code == 1
        assert "error" in err

    def test_parametric_specialization(self, capsys, tmp_path, entries):
        entry = next(e for e in entries if e.name == "dim3-01-A3_1-A3_2")
        path = tmp_path / "p.cpa.json"
        path.write_text(serialize(entry.pair) + "\n")
        code, out, _ = run(capsys, ["check", str(path), "--param", "alpha=2"])
        assert code == 0
        assert "compatible: true" in out
        code, _, err = run(capsys, ["check", str(path), "--param", "alpha=x"])
        assert code == 1


class TestInvariants:
    def test_centroid_contains_identity(self, capsys, pair_file):
        code, out, _ = run(capsys, ["invariants", pair_file, "--kind", "centroid", "--format", "json"])
        assert code == 0
        doc = json.loads(out)
        rec = doc["invariants"][0]
        assert rec["freedim"] == 2
        ident = [["1", "0"], ["0", "1"]]
        assert any(sol[0] == ident for sol in rec["basis"])

    def test_output_file(self, capsys, pair_file, tmp_path):
        out_path = tmp_path / "inv.json"
        code, out, _ = run(
            capsys,
            ["invariants", pair_file, "--kind", "derivation", "--format", "json", "--out", str(out_path)],
        )
        assert code == 0 and not out
        doc = json.loads(out_path.read_text())
        assert doc["invariants"][0]["freedim"] == 0


class TestOperators:
    def test_family_zero(self, capsys, pair_file, tmp_path):
        fam = tmp_path / "fam.json"
        fam.write_text(json.dumps({"dim": 2, "params": ["r"], "entries": [["0", "0"], ["r", "0"]]}))
        code, out, _ = run(
            capsys, ["operators", pair_file, "--kind", "rota-baxter", "--family", str(fam)]
        )
        assert code == 0
        assert "verdict: ZERO" in out

    def test_oracle_counts(self, capsys, pair_file):
        code, out, _ = run(
            capsys, ["operators", pair_file, "--kind", "rota-baxter", "--oracle", "5", "--format", "json"]
        )
        assert code == 0
        doc = json.loads(out)
        assert doc["operators"][0]["count"] == 5

    def test_guard_violation(self, capsys, dim3_file):
        code, _, err = run(capsys, ["operators", dim3_file, "--kind", "rota-baxter", "--oracle", "7"])
        assert code == 1
        assert "exceeds" in err

    def test_composite_prime_rejected(self, capsys, pair_file):
        code, _, err = run(capsys, ["operators", pair_file, "--kind", "rota-baxter", "--oracle", "9"])
        assert code == 1
        assert "not a prime" in err


class TestVerifyCatalog:
    def test_only_entry_text(self, capsys):
        code, out, _ = run(capsys, ["verify-catalog", "--only", "dim2-01-A2_1-A2_4"])
        assert code == 0
        assert "expected-position4-as-rota-baxter" in out
        assert "summary:" in out

    def test_unknown_entry(self, capsys):
        code, _, err = run(capsys, ["verify-catalog", "--only", "nope"])
        assert code == 1

    def test_out_dir_and_determinism(self, capsys, tmp_path):
        d1, d2 = tmp_path / "r1", tmp_path / "r2"
        for d in (d1, d2):
            code, _, _ = run(capsys, ["verify-catalog", "--only", "dim3-02-A3_1-A3_11", "--out", str(d)])
            assert code == 0
        name = "dim3-02-A3_1-A3_11.json"
        assert (d1 / name).read_bytes() == (d2 / name).read_bytes()
        assert (d1 / "summary.json").exists()

    def test_strict_paper_fails_on_mismatch(self, capsys):
        code, _, _ = run(capsys, ["verify-catalog", "--only", "dim2-01-A2_1-A2_4"])
        assert code == 0
        code, _, err = run(
            capsys, ["verify-catalog", "--only", "dim2-01-A2_1-A2_4", "--strict-paper"]
        )
        assert code == 1
        assert "strict-paper" in err

    def test_json_and_text_carry_same_information(self, capsys):
        code, text_out, _ = run(capsys, ["verify-catalog", "--only", "dim3-03-A3_10-A3_12"])
        code2, json_out, _ = run(
            capsys, ["verify-catalog", "--only", "dim3-03-A3_10-A3_12", "--format", "json"]
        )
        assert code == 0 and code2 == 0
        doc = json.loads(json_out)
        for check in doc["entries"][0]["checks"]:
            assert check["name"] in text_out
            assert check["verdict"] in text_out
