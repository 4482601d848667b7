import logging
from unittest import mock

import pytest

from rgroup.config import ORACLE_R_MAX_CEILING, Settings, configure_logging, get_settings


@mock.patch.dict("os.environ", {}, clear=True)
def test_defaults():
    assert get_settings() == Settings(log_level="WARNING", oracle_r_max=3, oracle_workers=1)


@mock.patch.dict("os.environ", {
    "RGROUP_LOG_LEVEL": "debug",
    "RGROUP_ORACLE_R_MAX": "5",
    "RGROUP_ORACLE_WORKERS": "4",
})
def test_environment_overrides():
    settings = get_settings()
    assert settings.log_level == "DEBUG"
    assert settings.oracle_r_max == 5
    assert settings.oracle_workers == 4


@mock.patch.dict("os.environ", {"RGROUP_ORACLE_R_MAX": ""})
def test_blank_values_fall_back_to_defaults():
    assert get_settings().oracle_r_max == 3


@pytest.mark.parametrize("name, value, message", [
    ("RGROUP_LOG_LEVEL", "LOUD", "must be one of"),
    ("RGROUP_ORACLE_R_MAX", "three", "is not an integer"),
    ("RGROUP_ORACLE_R_MAX", str(ORACLE_R_MAX_CEILING + 1), "must be in"),
    ("RGROUP_ORACLE_WORKERS", "0", "must be in"),
])
def test_bad_values_raise(name, value, message):
    with mock.patch.dict("os.environ", {name: value}):
        with pytest.raises(RuntimeError, match=message):
            get_settings()


def test_configure_logging_sets_root_level(monkeypatch):
    calls = []
    monkeypatch.setattr(logging, "basicConfig", lambda **kwargs: calls.append(kwargs))
    configure_logging("info")
    assert calls[0]["level"] == logging.INFO
    configure_logging("nonsense")
    assert calls[1]["level"] == logging.WARNING
