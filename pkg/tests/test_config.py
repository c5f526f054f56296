"""
Tests für Konfiguration, Logging und Diagonalprofile
"""

import logging

import pytest

from telescopia.config.diagonal_profiles import DIAGONAL_PROFILES, get_profile, list_profiles
from telescopia.config.settings import CONFIG_ENV_VAR, configure_logging, load_config
from telescopia.diagonal.problem import series_diagonal
from telescopia.errors import DomainError


@pytest.fixture(autouse=True)
def no_config_env(monkeypatch):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)


class TestLoadConfig:

    def test_defaults(self):
        cfg = load_config()
        assert cfg['zeilberger']['max_order'] == 5
        assert cfg['rational_ct']['method'] == 'reduction'
        assert cfg['diagonal']['integration_variable'] == 'z'
        assert cfg['output']['validate_json'] is True

    def test_user_file_is_merged(self, tmp_path):
        path = tmp_path / "user.yaml"
        path.write_text("order_degree:\n  d_cap: 7\nlogging:\n  level: DEBUG\n", encoding="utf-8")
        cfg = load_config(path)
        assert cfg['order_degree']['d_cap'] == 7
        assert cfg['order_degree']['r_max'] == 4
        assert cfg['logging']['level'] == 'DEBUG'
        assert 'format' in cfg['logging']

    def test_environment_variable(self, tmp_path, monkeypatch):
        path = tmp_path / "env.yaml"
        path.write_text("summation:\n  check_terms: 3\n", encoding="utf-8")
        monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
        assert load_config()['summation']['check_terms'] == 3

    def test_missing_file(self, tmp_path):
        with pytest.raises(DomainError):
            load_config(tmp_path / "missing.yaml")

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("zeilberger: [1, 2\n", encoding="utf-8")
        with pytest.raises(DomainError):
            load_config(path)

    def test_not_a_mapping(self, tmp_path):
        path = tmp_path / "list.yaml"
        path.write_text("- 1\n- 2\n", encoding="utf-8")
        with pytest.raises(DomainError):
            load_config(path)

    def test_defaults_are_not_shared(self, tmp_path):
        path = tmp_path / "user.yaml"
        path.write_text("zeilberger:\n  max_order: 2\n", encoding="utf-8")
        load_config(path)
        assert load_config()['zeilberger']['max_order'] == 5


class TestConfigureLogging:

    def test_level_from_config(self):
        configure_logging({'logging': {'level': 'info'}})
        assert logging.getLogger().level == logging.INFO

    def test_explicit_level_wins(self):
        configure_logging({'logging': {'level': 'INFO'}}, level='debug')
        assert logging.getLogger().level == logging.DEBUG

    def test_unknown_level(self):
        with pytest.raises(DomainError):
            configure_logging({}, level='chatty')


class TestDiagonalProfiles:

    def test_list(self):
        assert list_profiles() == sorted(DIAGONAL_PROFILES)
        assert 'challenge_d2' in list_profiles()

    def test_unknown_profile(self):
        with pytest.raises(DomainError):
            get_profile('nope')

    def test_profile_is_a_copy(self):
        assert get_profile('geometric') == DIAGONAL_PROFILES['geometric']
        assert get_profile('geometric') is not DIAGONAL_PROFILES['geometric']

    @pytest.mark.parametrize("name", sorted(DIAGONAL_PROFILES))
    def test_expected_series(self, name):
        profile = get_profile(name)
        problem = profile.problem()
        assert problem.d == profile.d
        expected = list(profile.expected_series)
        assert series_diagonal(problem, len(expected) - 1) == expected

    def test_to_dict(self):
        data = get_profile('central_binomial').to_dict()
        assert data['d'] == 2
        assert data['variables'] == ['x1', 'x2']
        assert data['expected_series'][:3] == [1, 2, 6]
