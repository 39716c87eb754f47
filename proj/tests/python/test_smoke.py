import json
import os
import subprocess

import pytest

import capdiag


def test_worked_example():
    assert sorted(capdiag.flat([2, 4])) == [[1, 2], [1, 3], [1, 4], [2, 3], [2, 4]]
    assert capdiag.cap_diagram([2, 4]) == [(2, 3), (4, 5)]
    rep = capdiag.flat_report([2, 4])
    assert rep["count"] == 5
    assert {k: v["size"] for k, v in rep["decomposition"].items()} == {"half": 2, "step-1": 2, "step-2": 1}


def test_tally():
    lo, values = capdiag.tally([1, 2, 3, 7, 9], 0, 9)
    assert lo == 0
    assert values == [0, 1, 2, 3, 2, 1, 0, 1, 0, 1]


def test_recursion_matches_oracle():
    for f in ([1], [1, 2], [2, 4, 6], [1, 2, 3, 7, 9], [-3, 0, 1, 4]):
        assert capdiag.flat(f) == capdiag.flat_oracle(f)
        assert capdiag.flat_oracle(f, 5) == capdiag.flat_oracle(f)


def test_catalan():
    assert [capdiag.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert capdiag.arc_system_count(6) == 132
    with pytest.raises(OverflowError):
        capdiag.catalan(capdiag.catalan_max_index() + 1)


def test_errors_surface_as_python_exceptions():
    with pytest.raises(ValueError):
        capdiag.flat([4, 2])
    with pytest.raises(ValueError):
        capdiag.render([2, 4], style="png")


def test_verify():
    rep = capdiag.verify(3, 10)
    assert rep["violations"] == []
    assert rep["max_flat"] == 14
    assert rep["extremal"] == [[2, 4, 6]]


def test_agrees_with_cli():
    cli = os.environ.get("CAPDIAG_CLI")
    if not cli:
        pytest.skip("CAPDIAG_CLI not set")
    out = subprocess.run([cli, "flat", "--f", "1,2,3,7,9", "--format", "json"],
                         check=True, capture_output=True, text=True).stdout
    assert json.loads(out) == capdiag.flat_report([1, 2, 3, 7, 9])
    art = subprocess.run([cli, "render", "--f", "2,4"], check=True, capture_output=True, text=True).stdout
    assert art == capdiag.render([2, 4])
