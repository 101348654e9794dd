"""Tests for the command-line interface."""

import json

from main import cli, run


class TestRoots:
    def test_positive_roots_json(self, runner):
        result = runner.invoke(cli, ["roots", "--type", "E", "--rank", "6", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["type"] == "E6"
        assert data["count"] == 36
        assert [1, 2, 2, 3, 2, 1] in data["positive_roots"]

    def test_marked(self, runner):
        result = runner.invoke(cli, ["roots", "--type", "A", "--rank", "5", "--marked", "3", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["complex_dimension"] == 9

    def test_delete(self, runner):
        result = runner.invoke(cli, ["roots", "--type", "A", "--rank", "5", "--delete", "3", "--json"])
        assert result.exit_code == 0
        components = json.loads(result.stdout)["components"]
        assert components == [{"type": "A", "rank": 2}, {"type": "A", "rank": 2}]

    def test_marked_and_delete(self, runner):
        result = runner.invoke(cli, ["roots", "--type", "A", "--rank", "3", "--marked", "1", "--delete", "2"])
        assert result.exit_code == 2

    def test_bad_type(self, runner):
        result = runner.invoke(cli, ["roots", "--type", "G", "--rank", "2"])
        assert result.exit_code == 2

    def test_table_output(self, runner):
        result = runner.invoke(cli, ["roots", "--type", "A", "--rank", "2"])
        assert result.exit_code == 0
        assert result.output.splitlines()[0].split() == ["height", "root"]


class TestDim:
    def test_standard_module(self, runner):
        result = runner.invoke(cli, ["dim", "--type", "A", "--rank", "5", "--weight", "1,0,0,0,0"])
        assert result.exit_code == 0
        assert result.output.splitlines()[-1].split()[-1] == "6"

    def test_json_with_oracle(self, runner):
        result = runner.invoke(cli, ["dim", "--type", "A", "--rank", "4", "--weight", "1,1,0,0", "--json"])
        data = json.loads(result.stdout)
        assert data["dimension"] == data["tableau_dimension"] == 40

    def test_exceptional_has_no_oracle(self, runner):
        result = runner.invoke(cli, ["dim", "--type", "E7", "--rank", "7", "--weight", "0,0,0,0,0,0,1", "--json"])
        data = json.loads(result.stdout)
        assert data["dimension"] == 56
        assert data["tableau_dimension"] is None

    def test_below(self, runner):
        result = runner.invoke(cli, ["dim", "--type", "A", "--rank", "3", "--below", "8", "--json"])
        assert [r["dimension"] for r in json.loads(result.stdout)["irreps"]] == [1, 4, 4, 6]

    def test_bad_weight_length(self, runner):
        result = runner.invoke(cli, ["dim", "--type", "A", "--rank", "3", "--weight", "1,0"])
        assert result.exit_code == 2

    def test_non_integer_weight(self, runner):
        result = runner.invoke(cli, ["dim", "--type", "A", "--rank", "2", "--weight", "1,a"])
        assert result.exit_code == 2

    def test_needs_weight_or_below(self, runner):
        result = runner.invoke(cli, ["dim", "--type", "A", "--rank", "2"])
        assert result.exit_code == 2


class TestSchubert:
    def test_linear(self, runner):
        result = runner.invoke(cli, ["schubert", "--index", "1,2,3", "--ambient", "2,5", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["k"] == 3
        assert data["degree"] == data["oracle_degree"] == 1

    def test_invalid_index(self, runner):
        result = runner.invoke(cli, ["schubert", "--index", "2,1", "--ambient", "1,3"])
        assert result.exit_code == 2


class TestHSS:
    def test_eiii(self, runner):
        result = runner.invoke(cli, ["hss", "--kind", "EIII", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["projective_rank"] == 5
        assert data["dim_C"] == 16
        assert data["count"] == 2

    def test_aiii(self, runner):
        result = runner.invoke(cli, ["hss", "--kind", "AIII", "--params", "2,3", "--json"])
        data = json.loads(result.stdout)
        assert data["projective_rank"] == 3
        assert data["min_degree"] == [1]

    def test_exceptional_takes_no_params(self, runner):
        result = runner.invoke(cli, ["hss", "--kind", "EIII", "--params", "1"])
        assert result.exit_code == 2

    def test_unknown_kind_shows_usage(self, runner):
        result = runner.invoke(cli, ["hss", "--kind", "XIII"])
        assert result.exit_code == 2
        assert "Usage:" in result.output
        assert "unknown kind" in result.output

    def test_missing_kind(self, runner):
        result = runner.invoke(cli, ["hss"])
        assert result.exit_code == 2

    def test_consistency(self, runner):
        result = runner.invoke(cli, ["hss", "--consistency", "--json"])
        assert result.exit_code == 0
        data = json.loads(result.stdout)
        assert data["violations"] == 0
        assert len(data["flags"]) == 2


class TestPluecker:
    def test_conic(self, runner):
        result = runner.invoke(cli, ["pluecker", "--map", "veronese_conic", "--json"])
        assert result.exit_code == 0
        assert json.loads(result.stdout)["degree"] == 2

    def test_pencil(self, runner):
        result = runner.invoke(cli, ["pluecker", "--map", "diii_pencil", "--n", "4", "--json"])
        data = json.loads(result.stdout)
        assert data["degree"] == 2
        assert all(data["membership_checks"].values())

    def test_unknown_map(self, runner):
        result = runner.invoke(cli, ["pluecker", "--map", "hopf"])
        assert result.exit_code == 2


class TestGeneral:
    def test_help(self, runner):
        result = runner.invoke(cli, ["--help"])
        assert result.exit_code == 0
        for name in ("roots", "dim", "schubert", "hss", "pluecker", "verify"):
            assert name in result.output

    def test_unknown_flag(self, runner):
        result = runner.invoke(cli, ["dim", "--bogus"])
        assert result.exit_code == 2

    def test_json_is_deterministic(self, runner):
        args = ["hss", "--kind", "CI", "--params", "4", "--json"]
        first = runner.invoke(cli, args).stdout
        second = runner.invoke(cli, args).stdout
        assert first == second

    def test_run_success(self):
        assert run(["schubert", "--index", "0,1", "--ambient", "1,3"]) == 0

    def test_run_usage_error(self):
        assert run(["hss", "--kind", "XIII"]) == 2
        assert run(["roots", "--nope"]) == 2
