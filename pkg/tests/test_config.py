import json

import config as config_module
from config import get_default_config, load_config, override_with_env_vars


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("HOPFSCOPE_THREADS", "4")
    monkeypatch.setenv("HOPFSCOPE_CONDUCTOR_BOUND", "not a number")
    monkeypatch.setenv("HOPFSCOPE_REPORT_DIR", "elsewhere")
    monkeypatch.setenv("LOG_LEVEL", "debug")
    settings = override_with_env_vars(get_default_config())
    assert settings["compute"]["threads"] == 4
    assert settings["field"]["conductor_bound"] == 10000
    assert settings["report"]["output_dir"] == "elsewhere"
    assert settings["system"]["log_level"] == "DEBUG"


def test_missing_sections_are_filled(tmp_path, monkeypatch):
    (tmp_path / "config.json").write_text(json.dumps({"compute": {"threads": 3}}))
    monkeypatch.setattr(config_module, "__file__", str(tmp_path / "config.py"))
    monkeypatch.delenv("HOPFSCOPE_THREADS", raising=False)
    settings = load_config()
    assert settings["compute"]["threads"] == 3
    assert settings["compute"]["split_attempts"] == 8
    assert settings["cache"]["ttl_seconds"] == 86400
