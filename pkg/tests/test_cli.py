import json

from jsonschema import validate

from sl2green.cli import main

try:
    from importlib.resources import files
except ImportError:  # pragma: no cover
    from importlib_resources import files

SCHEMA = json.loads(
    files("sl2green").joinpath("schema/output_envelope.schema.json").read_text()
)


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    assert code == 0, err
    envelope = json.loads(out)
    validate(envelope, SCHEMA)
    return envelope


class TestCorrespond:
    def test_u_to_walk(self, capsys):
        env = run_json(capsys, "correspond", "--p", "5", "U:0,3")
        corr = env["result"]["correspondent"]
        assert corr["label"]["params"] == {"i": 0, "l": 0, "s": 4, "eps": -1}
        assert corr["dim"] == 8
        assert corr["factors"] == {"1": 2, "3": 2}

    def test_walk_to_u(self, capsys):
        env = run_json(capsys, "correspond", "--p", "5", "M:0,0,1,-1")
        assert env["result"]["correspondent"]["label"]["params"] == {"a": 0, "b": 1}

    def test_canonicalization_notice(self, capsys):
        env = run_json(capsys, "correspond", "--p", "5", "M:0,0,3,-1")
        assert "canonicalized" in env["result"]["notice"]

    def test_projective_rejected(self, capsys):
        code, _, err = run_cli(capsys, "correspond", "--p", "5", "U:0,5")
        assert code == 2
        assert "no Green correspondent" in err

    def test_parse_error_names_bound(self, capsys):
        code, _, err = run_cli(capsys, "correspond", "--p", "5", "U:0,9")
        assert code == 2 and "[1, 5]" in err


class TestIndRes:
    def test_ind_projective(self, capsys):
        env = run_json(capsys, "ind", "--p", "5", "U:0,5")
        assert env["result"]["decomposition"] == [
            {"kind": "projG", "params": {"t": 1}, "mult": 1},
            {"kind": "projG", "params": {"t": 3}, "mult": 1},
            {"kind": "projG", "params": {"t": 5}, "mult": 3},
        ]
        assert env["result"]["dim_decomposition"] == 30

    def test_res_projective(self, capsys):
        env = run_json(capsys, "res", "--p", "5", "P:3")
        assert env["result"]["decomposition"] == [
            {"kind": "U", "params": {"a": 2, "b": 5}, "mult": 2}
        ]

    def test_res_walk(self, capsys):
        env = run_json(capsys, "res", "--p", "5", "M:0,0,4,-1")
        assert env["result"]["decomposition"] == [
            {"kind": "U", "params": {"a": 0, "b": 3}, "mult": 1},
            {"kind": "U", "params": {"a": 2, "b": 5}, "mult": 1},
        ]

    def test_res_simple(self, capsys):
        env = run_json(capsys, "res", "--p", "5", "V:2")
        assert env["result"]["decomposition"] == [
            {"kind": "U", "params": {"a": 3, "b": 2}, "mult": 1}
        ]


class TestLift(object):
    def write(self, tmp_path, name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)

    def test_lift(self, capsys, tmp_path):
        ell = self.write(tmp_path, "ell.json", {"ell": {"1": 4, "3": 3}})
        res = self.write(tmp_path, "res.json", {"res": [{"a": 0, "b": 3, "mult": 1}]})
        env = run_json(capsys, "lift", "--p", "5", ell, res)
        assert env["result"]["decomposition"] == [
            {"kind": "walk", "params": {"i": 0, "l": 0, "s": 4, "eps": -1}, "mult": 1},
            {"kind": "projG", "params": {"t": 1}, "mult": 1},
        ]

    def test_lift_projective_only(self, capsys, tmp_path):
        ell = self.write(tmp_path, "ell.json", {"ell": {"5": 1}})
        res = self.write(tmp_path, "res.json", {"res": []})
        env = run_json(capsys, "lift", "--p", "5", ell, res)
        assert env["result"]["decomposition"] == [
            {"kind": "projG", "params": {"t": 5}, "mult": 1}
        ]

    def test_lift_inconsistent_exits_4(self, capsys, tmp_path):
        ell = self.write(tmp_path, "ell.json", {"ell": {"1": 1}})
        res = self.write(tmp_path, "res.json", {"res": []})
        code, _, err = run_cli(capsys, "lift", "--p", "5", ell, res)
        assert code == 4 and "inconsistent" in err

    def test_lift_malformed_exits_2(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{not json")
        res = self.write(tmp_path, "res.json", {"res": []})
        code, _, _ = run_cli(capsys, "lift", "--p", "5", str(bad), res)
        assert code == 2


class TestTables:
    def test_cartan_g(self, capsys):
        env = run_json(capsys, "tables", "--p", "5", "cartan-G")
        block0 = env["result"]["blocks"][0]
        assert block0["cartan"] == [[2, 1], [1, 3]]
        assert block0["inverse"] == [["3/5", "-1/5"], ["-1/5", "2/5"]]

    def test_brauer_trees_p3(self, capsys):
        env = run_json(capsys, "tables", "--p", "3", "brauer-trees")
        assert env["result"]["blocks"][0]["edges"] == [1]
        assert env["result"]["blocks"][0]["multiplicity"] == 2

    def test_hooks(self, capsys):
        env = run_json(capsys, "tables", "--p", "5", "hooks-G")
        for block in env["result"]["blocks"]:
            assert len(block["hooks"]) == 4

    def test_quiver(self, capsys):
        env = run_json(capsys, "tables", "--p", "5", "quiver-B")
        block0 = env["result"]["blocks"][0]
        assert len(block0["vertices"]) == 8
        assert len(block0["omega2_orbits"]) == 4  # one orbit per b

    def test_csv_projection(self, capsys):
        code, out, _ = run_cli(capsys, "tables", "--p", "3", "cartan-B", "--format", "csv")
        assert code == 0 and "result.blocks[0].gamma[0][0],3" in out


class TestVerifyCLI:
    def test_not_a_prime(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--p", "4")
        assert code == 2 and "odd prime" in err

    def test_small_suite(self, capsys):
        env = run_json(capsys, "verify", "--p", "3")
        assert env["result"]["counts"]["fail"] == 0

    def test_oracle_gate(self, capsys):
        code, _, err = run_cli(capsys, "verify", "--p", "11", "--oracle")
        assert code == 2 and "--allow-large" in err


class TestDeterminism:
    def test_byte_identical_runs(self, capsys):
        _, out1, _ = run_cli(capsys, "correspond", "--p", "7", "U:3,4")
        _, out2, _ = run_cli(capsys, "correspond", "--p", "7", "U:3,4")
        assert out1 == out2

    def test_output_file(self, capsys, tmp_path):
        target = tmp_path / "out.json"
        code, out, _ = run_cli(
            capsys, "tables", "--p", "5", "cartan-B", "--output", str(target)
        )
        assert code == 0 and out == ""
        envelope = json.loads(target.read_text())
        validate(envelope, SCHEMA)
