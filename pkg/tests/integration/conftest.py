import pytest
from pathlib import Path

from rgroup.cli.main import main

FIXTURE_DIR = Path(__file__).resolve().parents[2] / "include" / "fixtures"


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    """Each CLI run sees default settings unless a test sets RGROUP_* itself."""
    for name in ("RGROUP_LOG_LEVEL", "RGROUP_ORACLE_R_MAX", "RGROUP_ORACLE_WORKERS"):
        monkeypatch.delenv(name, raising=False)


@pytest.fixture
def fixture_path():
    def _path(name):
        return FIXTURE_DIR / f"{name}.json"
    return _path


@pytest.fixture
def run_cli(capsys):
    """
    Call the CLI entry point in-process.

    - Returns (exit_code, stdout, stderr).
    """
    def _run(*argv):
        code = main([str(a) for a in argv])
        out, err = capsys.readouterr()
        return code, out, err
    return _run
