from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

BROKEN_SHAPE = """\
format_version = 1
kind = network

[network]
name = broken

[input_shape]
rows = 2
cols = 2
channels = 1

[layer pool2d]
kernel_rows = 5
kernel_cols = 5
"""


def run_cli(*args: str, expect: int = 0) -> subprocess.CompletedProcess:
    result = subprocess.run(
        [sys.executable, "-m", "nncost", *args],
        capture_output=True,
        timeout=60,
    )
    assert result.returncode == expect, (result.returncode, result.stderr.decode())
    return result


class TestAnalyze:
    def test_table_output(self):
        result = run_cli("analyze", "zoo:worked-example-3layer")
        out = result.stdout.decode()
        assert "312532" in out
        assert "0.312 MFLOPs" in out
        assert "10032 weights" in out

    def test_json_output(self):
        result = run_cli("analyze", "zoo:worked-example-3layer", "--format", "json")
        report = json.loads(result.stdout)
        assert report["cost"]["total_flops"] == 312_532
        assert report["tool"]["name"] == "nncost"

    def test_csv_output(self):
        result = run_cli("analyze", "zoo:worked-example-3layer", "--format", "csv")
        text = result.stdout.decode()
        assert "\r\n" not in text
        rows = list(csv.DictReader(io.StringIO(text)))
        assert rows[-1]["index"] == "total"
        assert rows[-1]["flops"] == "312532"

    def test_output_file(self, tmp_path):
        target = tmp_path / "report.json"
        run_cli(
            "analyze", "zoo:worked-example-3layer", "--format", "json",
            "--output", str(target),
        )
        assert json.loads(target.read_text())["cost"]["total_flops"] == 312_532

    def test_spec_file_argument(self, tmp_path):
        from nncost import serialize_spec, zoo_entry

        spec_path = tmp_path / "net.nnspec"
        spec_path.write_text(serialize_spec(zoo_entry("worked-example-3layer").spec))
        result = run_cli("analyze", str(spec_path), "--format", "json")
        assert json.loads(result.stdout)["cost"]["total_flops"] == 312_532

    def test_custom_hardware_file(self, tmp_path):
        hw_path = tmp_path / "my.hwspec"
        hw_path.write_text(
            "format_version = 1\nkind = hardware\n\n[profile]\n"
            "id = my-gpu\narchitecture = Mine\nefficiency_flops_per_watt = 1e9\n"
        )
        result = run_cli(
            "analyze", "zoo:worked-example-3layer", "--hardware", str(hw_path),
            "--format", "json",
        )
        report = json.loads(result.stdout)
        assert report["inputs"]["hardware"]["id"] == "my-gpu"
        assert report["hardware"]["efficiency_flops_per_watt"] == 1e9


class TestExitCodes:
    def test_parse_error_is_2(self, tmp_path):
        bad = tmp_path / "bad.nnspec"
        bad.write_text("format_version = 1\nkind = network\nwhat even\n")
        result = run_cli("analyze", str(bad), expect=2)
        assert b"parse_error" in result.stderr or b"cannot parse" in result.stderr

    def test_validation_error_is_2(self, tmp_path):
        bad = tmp_path / "bad.nnspec"
        bad.write_text(BROKEN_SHAPE.replace("kernel_rows = 5", "kernel_rows = 0"))
        run_cli("analyze", str(bad), expect=2)

    def test_shape_error_is_3(self, tmp_path):
        bad = tmp_path / "broken.nnspec"
        bad.write_text(BROKEN_SHAPE)
        result = run_cli("analyze", str(bad), expect=3)
        assert b"shape_error" in result.stderr

    def test_unknown_hardware_is_4(self):
        result = run_cli(
            "analyze", "zoo:worked-example-3layer", "--hardware", "quantum-brain",
            expect=4,
        )
        assert b"quantum-brain" in result.stderr

    def test_unknown_zoo_entry_is_4(self):
        run_cli("analyze", "zoo:missing-model", expect=4)

    def test_missing_capability_is_4(self):
        # CPU rows carry no efficiency figure and no TDP: energy math must refuse
        result = run_cli(
            "analyze", "zoo:worked-example-3layer", "--hardware", "intel-skylake",
            expect=4,
        )
        assert b"missing_capability" in result.stderr

    def test_domain_error_is_5(self):
        run_cli("analyze", "zoo:worked-example-3layer", "--epochs", "0", expect=5)

    def test_diagnostics_go_to_stderr(self, tmp_path):
        bad = tmp_path / "broken.nnspec"
        bad.write_text(BROKEN_SHAPE)
        result = run_cli("analyze", str(bad), expect=3)
        assert result.stdout == b""
        assert result.stderr


class TestCompare:
    def test_compare_zoo(self):
        result = run_cli(
            "compare", "zoo:worked-example-3layer", "zoo:pirnateco-stem-besteffort",
            "--format", "json",
        )
        report = json.loads(result.stdout)
        names = {row["name"] for row in report["rows"]}
        assert names == {"worked-example-3layer", "pirnateco-stem-besteffort"}

    def test_compare_requires_two(self):
        run_cli("compare", "zoo:worked-example-3layer", expect=5)

    def test_compare_csv_round_trips(self):
        result = run_cli(
            "compare", "zoo:worked-example-3layer", "zoo:pirnateco-stem-besteffort",
            "--format", "csv",
        )
        rows = list(csv.DictReader(io.StringIO(result.stdout.decode())))
        assert len(rows) == 2
        assert {row["name"] for row in rows} == {
            "worked-example-3layer", "pirnateco-stem-besteffort",
        }


class TestCurve:
    def test_counts_are_linear(self):
        result = run_cli(
            "curve", "zoo:worked-example-3layer", "--counts", "1,10,100",
            "--format", "csv",
        )
        rows = list(csv.DictReader(io.StringIO(result.stdout.decode())))
        grams = [float(row["grams_co2eq"]) for row in rows]
        assert grams[1] == pytest.approx(10 * grams[0], rel=1e-6)
        assert grams[2] == pytest.approx(100 * grams[0], rel=1e-6)

    def test_range_endpoint_and_marker(self):
        result = run_cli(
            "curve", "zoo:worked-example-3layer",
            "--from", "1", "--to", "7400000000", "--points", "7",
            "--format", "csv",
        )
        rows = list(csv.DictReader(io.StringIO(result.stdout.decode())))
        assert rows[-1]["predictions"] == "7400000000"
        assert rows[-1]["marker"] == "mobile-users-2025"

    def test_needs_counts_or_range(self):
        run_cli("curve", "zoo:worked-example-3layer", expect=5)


class TestDatabases:
    def test_hardware_list(self):
        result = run_cli("hardware", "list")
        out = result.stdout.decode()
        for profile_id in (
            "arm-cortex-a72", "intel-skylake", "amd-zen-2-3", "intel-ice-lake",
            "nvidia-pascal-turing", "nvidia-ampere", "nvidia-a100", "nvidia-t4",
        ):
            assert profile_id in out

    def test_zoo_list_json(self):
        result = run_cli("zoo", "list", "--format", "json")
        entries = json.loads(result.stdout)["entries"]
        ids = {entry["id"] for entry in entries}
        assert ids == {"worked-example-3layer", "pirnateco-stem-besteffort"}
        for entry in entries:
            assert entry["document"]["network"]["layers"]

    def test_version_flag(self):
        result = run_cli("--version")
        assert result.stdout.decode().startswith("nncost ")
