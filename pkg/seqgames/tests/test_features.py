"""Pytest entry point for the behave feature suite (same invocation as tox.ini)."""
import os
import subprocess
import sys

FEATURES = os.path.join(os.path.dirname(__file__), "features")


def test_behave_features() -> None:
    result = subprocess.run(
        [sys.executable, "-m", "behave", "-t", "~skip", FEATURES],
        cwd=os.path.dirname(os.path.dirname(os.path.dirname(__file__))),
        check=False,
    )
    assert result.returncode == 0
