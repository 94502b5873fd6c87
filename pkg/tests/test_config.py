"""Tests for runtime configuration and tagged logging."""


class TestEngineConfig:
    def test_get_config_reads_patched_values(self, isolated_config, monkeypatch):
        from config import EngineConfig
        monkeypatch.setattr('config.BRANCH_LIMIT', 12)
        settings = EngineConfig.get_config()
        assert settings['branch_limit'] == 12
        assert settings['exhaustive_max_n'] == 8
        assert settings['check_mutation'] is False
        assert settings['data_dir'] == isolated_config

    def test_describe(self):
        from config import EngineConfig
        text = EngineConfig.describe()
        assert text.startswith('exhaustive_max_n=8 oracle_max_n=7 ')
        assert 'workers=1' in text

    def test_env_bool(self, monkeypatch):
        from config import _env_bool
        monkeypatch.setenv('QLN_TEST_FLAG', 'Yes')
        assert _env_bool('QLN_TEST_FLAG')
        monkeypatch.setenv('QLN_TEST_FLAG', '0')
        assert not _env_bool('QLN_TEST_FLAG')
        monkeypatch.delenv('QLN_TEST_FLAG')
        assert not _env_bool('QLN_TEST_FLAG')


class TestLog:
    def test_quiet_by_default(self, capsys):
        import config
        config.log('Tilt', 'hidden')
        assert capsys.readouterr().err == ''

    def test_verbose_writes_stderr(self, capsys, monkeypatch):
        import config
        monkeypatch.setattr('config.VERBOSE', True)
        config.log('Verify', '3 algebras')
        captured = capsys.readouterr()
        assert captured.err == '[Verify] 3 algebras\n'
        assert captured.out == ''
