import json
import os
import subprocess

import pytest

import koszul_calculus as kc


def test_version_and_names():
    assert kc.__version__ == "1.0.0"
    assert "dims" in kc.commands()
    assert "leibniz" in kc.suites()


def test_truncated_dims():
    report = kc.dims("truncated:4", p_max=5)
    assert report["payload"]["totals"] == [4, 3, 3, 3, 3, 3]
    assert report["payload"]["complete"] is True


def test_koszulity():
    report = kc.run("koszulity", algebra="truncated:3")
    assert report["payload"]["verdict"] == "KOSZUL_UP_TO_BOUNDS"


def test_verify_suite_passes():
    report = kc.verify("fundamental", "as_cubic:1,2,5", trials=20)
    assert report["payload"]["passed"] is True


def test_config_error():
    with pytest.raises(kc.KoszulError) as err:
        kc.dims("truncated:1")
    assert err.value.exit_code == 2
    code, _ = kc._run("dims", "", algebra="truncated:3", field="F_3")
    assert code == 2


def test_matches_cli():
    cli = os.environ.get("KOSZUL_CLI")
    if not cli:
        pytest.skip("KOSZUL_CLI not set")
    out = subprocess.run([cli, "dims", "--algebra", "truncated:3", "--format", "json"],
                         check=True, capture_output=True, text=True).stdout
    assert json.loads(out) == kc.dims("truncated:3")
