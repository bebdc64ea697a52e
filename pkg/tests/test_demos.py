"""The narrative demo scripts must keep running as the library evolves."""

from __future__ import annotations

import pathlib
import subprocess
import sys

import pytest

DEMO_DIR = pathlib.Path(__file__).parent.parent / "demos"


@pytest.mark.parametrize("script", sorted(p.name for p in DEMO_DIR.glob("*.py")))
def test_demo_runs_clean(script, tmp_path):
    result = subprocess.run(
        [sys.executable, str(DEMO_DIR / script)],
        capture_output=True,
        timeout=120,
        cwd=tmp_path,  # demos may write artifacts; keep them out of the repo
    )
    assert result.returncode == 0, result.stderr.decode()
    assert result.stdout  # every demo narrates something


def test_per_layer_demo_shows_worked_example_totals(tmp_path):
    result = subprocess.run(
        [sys.executable, str(DEMO_DIR / "01_per_layer_costs.py")],
        capture_output=True,
        timeout=60,
        cwd=tmp_path,
    )
    out = result.stdout.decode()
    assert "312532" in out
    assert "10032" in out
