"""
Tests für die Kommandozeile: Ausgaben, JSON-Schemas und Exit-Codes
"""

import importlib
import json

from telescopia.cli.main import cli

# The package re-exports the `main` function, which shadows the submodule
# attribute on Python 3.10 where mock resolves dotted targets via getattr.
cli_main = importlib.import_module("telescopia.cli.main")

QUIET = ["--log-level", "ERROR"]


def invoke(runner, *args):
    return runner.invoke(cli, [*QUIET, *args])


def json_output(result):
    assert result.exit_code == 0, result.output
    return json.loads(result.output)


class TestGosperCommand:

    def test_certificate(self, runner):
        result = invoke(runner, "gosper", "--var", "k", "k*k!")
        assert result.exit_code == 0
        assert "certificate: 1/k" in result.output

    def test_not_summable(self, runner):
        result = invoke(runner, "gosper", "k!")
        assert result.exit_code == 0
        assert "not summable" in result.output

    def test_json_with_partial_sums(self, runner):
        data = json_output(invoke(runner, "gosper", "k*k!", "--check", "5", "--json"))
        assert data['summable'] is True
        assert data['certificate'] == "1/k"
        assert data['check'] == {'terms': 6, 'partial_sums': ["0", "1", "5", "23", "119", "719"]}

    def test_parse_error(self, runner):
        result = invoke(runner, "gosper", "k +")
        assert result.exit_code == 2
        assert "line 1, column 4" in result.output


class TestZeilbergerCommand:

    def test_binomial(self, runner):
        result = invoke(runner, "zeilberger", "binomial(n, k)")
        assert result.exit_code == 0
        assert "telescoper: Sn - 2" in result.output
        assert "verified: True" in result.output

    def test_json(self, runner):
        data = json_output(invoke(runner, "zeilberger", "binomial(n, k)", "--json"))
        assert data['telescoper'] == "Sn - 2"
        assert data['coefficients'] == ["-2", "1"]
        assert data['verified'] is True

    def test_order_cap(self, runner):
        result = invoke(runner, "zeilberger", "binomial(n, k)^2", "--max-order", "0")
        assert result.exit_code == 1
        assert "no telescoper of order <= 0" in result.output

    def test_config_file_sets_order_cap(self, runner, tmp_path):
        path = tmp_path / "cap.yaml"
        path.write_text("zeilberger:\n  max_order: 0\n", encoding="utf-8")
        result = invoke(runner, "--config", str(path), "zeilberger", "binomial(n, k)")
        assert result.exit_code == 1

    def test_sum_of_terms_is_unsupported(self, runner):
        result = invoke(runner, "zeilberger", "binomial(n, k) + 1")
        assert result.exit_code == 3
        assert "error:" in result.output

    def test_refused_certificate_is_not_printed(self, runner, mocker):
        mocker.patch.object(cli_main, "verify_ct_shift", return_value=False)
        result = invoke(runner, "zeilberger", "binomial(n, k)")
        assert result.exit_code == 1
        assert "does not verify" in result.output
        assert "certificate:" not in result.output


class TestSumrecCommand:

    def test_binomial_sum(self, runner):
        data = json_output(invoke(runner, "sumrec", "binomial(n, k)", "--check", "10", "--json"))
        assert data['homogeneous'] is True
        assert data['check']['sums'] == [str(2 ** m) for m in range(11)]
        assert data['check']['failing'] == []

    def test_text_output(self, runner):
        result = invoke(runner, "sumrec", "binomial(n, k)^2", "--check", "8")
        assert result.exit_code == 0
        assert "recurrence:" in result.output
        assert "70" in result.output


class TestIntegrationCommands:

    def test_hermite(self, runner):
        result = invoke(runner, "hermite", "1/y^2")
        assert result.exit_code == 0
        assert "g: -1/y" in result.output

    def test_hermite_division_by_zero(self, runner):
        result = invoke(runner, "hermite", "1/(x - x)")
        assert result.exit_code == 4

    def test_ct_rational_with_bounds(self, runner):
        data = json_output(invoke(runner, "ct-rational", "1/(x + y^2)", "--bounds", "0", "1", "--json"))
        assert data['telescoper'] == "(2*x)*Dx + 1"
        assert data['method'] == "reduction"
        assert data['metadata'] == {'dimension': 2}
        assert data['integral_rhs'] == {'lower': "0", 'upper': "1", 'value': "-1/(x + 1)"}

    def test_ct_rational_az(self, runner):
        result = invoke(runner, "ct-rational", "1/(x + y^2)", "--method", "az")
        assert result.exit_code == 0
        assert "method: az" in result.output

    def test_ct_rational_refused(self, runner, mocker):
        mocker.patch.object(cli_main, "verify_ct_diff", return_value=False)
        result = invoke(runner, "ct-rational", "1/(x + y^2)")
        assert result.exit_code == 1
        assert "certificate:" not in result.output

    def test_invalid_bound(self, runner):
        result = invoke(runner, "ct-rational", "1/(x + y^2)", "--bounds", "0", "one")
        assert result.exit_code == 2

    def test_od_curve_csv(self, runner):
        result = invoke(runner, "od-curve", "1/(1 + y^2)", "--rmin", "0", "--rmax", "1", "--dcap", "5")
        assert result.exit_code == 0
        assert result.output == "order,degree\n1,0\n"

    def test_od_curve_json(self, runner):
        data = json_output(invoke(runner, "od-curve", "1/(1 + y^2)", "--rmax", "1", "--dcap", "5", "--json"))
        assert data['points'] == [{'order': 1, 'degree': 0}]


class TestDiagonalCommand:

    def test_challenge(self, runner):
        data = json_output(invoke(runner, "diagonal", "--d", "2", "--challenge", "--check", "12"))
        assert data['status'] == "verified"
        assert data['verified_terms'] == 13
        assert data['series'][:5] == ["1", "2", "14", "106", "838"]

    def test_expression(self, runner):
        data = json_output(invoke(runner, "diagonal", "1/(1 - x1 - x2)", "--check", "10"))
        assert data['variables'] == ["x1", "x2"]
        assert data['series'][:5] == ["1", "2", "6", "20", "70"]

    def test_profile(self, runner):
        data = json_output(invoke(runner, "diagonal", "--profile", "challenge_d1", "--check", "8"))
        assert data['d'] == 1
        assert data['series'][:5] == ["1", "1", "2", "4", "8"]

    def test_list_profiles(self, runner):
        data = json_output(invoke(runner, "diagonal", "--list-profiles"))
        profiles = {p['name']: p for p in data['profiles']}
        assert sorted(profiles) == ["central_binomial", "challenge_d1", "challenge_d2", "geometric", "single_variable"]
        assert profiles['challenge_d2']['label'] == "Challenge d=2"
        assert profiles['challenge_d2']['tags'] == ["challenge"]
        assert profiles['challenge_d2']['expected_series'] == [1, 2, 14, 106, 838]
        assert profiles['geometric']['description'] == "a(n) = 1"

    def test_two_sources_are_a_usage_error(self, runner):
        result = invoke(runner, "diagonal", "1/(1 - x1 - x2)", "--challenge")
        assert result.exit_code == 2

    def test_pole_at_origin(self, runner):
        result = invoke(runner, "diagonal", "1/(x1 + x2)")
        assert result.exit_code == 3

    def test_dimension_mismatch(self, runner):
        result = invoke(runner, "diagonal", "--profile", "challenge_d1", "--d", "2")
        assert result.exit_code == 3

    def test_three_variables_unsupported(self, runner):
        result = invoke(runner, "diagonal", "--d", "3", "--challenge", "--check", "4")
        assert result.exit_code == 3


class TestOde2RecCommand:

    def test_central_binomial_operator(self, runner):
        data = json_output(invoke(runner, "ode2rec", "(4*x - 1)*Dx + 2", "--json"))
        assert data['order'] == 1
        assert data['index'] == "n"
        assert "a(n+1)" in data['recurrence']

    def test_custom_index(self, runner):
        result = invoke(runner, "ode2rec", "Dx - 1", "--index", "m")
        assert result.exit_code == 0
        assert "(m + 1)*a(m+1) - a(m) = 0" in result.output


class TestGlobalOptions:

    def test_unknown_log_level(self, runner):
        result = runner.invoke(cli, ["--log-level", "chatty", "zeilberger", "binomial(n, k)"])
        assert result.exit_code == 3

    def test_missing_config_file(self, runner, tmp_path):
        result = invoke(runner, "--config", str(tmp_path / "missing.yaml"), "hermite", "1/y")
        assert result.exit_code == 3

    def test_schema_violation_is_reported(self, runner, mocker):
        mocker.patch("telescopia.cli.output.load_schema",
                     return_value={"type": "object", "required": ["missing"]})
        result = invoke(runner, "hermite", "1/y^2", "--json")
        assert result.exit_code == 1
        assert "violates its schema" in result.output

    def test_validation_can_be_switched_off(self, runner, mocker, tmp_path):
        path = tmp_path / "plain.yaml"
        path.write_text("output:\n  validate_json: false\n", encoding="utf-8")
        schema = mocker.patch("telescopia.cli.output.load_schema")
        data = json_output(invoke(runner, "--config", str(path), "hermite", "1/y^2", "--json"))
        assert data['g'] == "-1/y"
        schema.assert_not_called()
