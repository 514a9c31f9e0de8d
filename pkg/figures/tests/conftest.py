"""Fixtures: every input file is produced by the primary CLI, never by hand."""

import subprocess
import sys

import pytest


def run_cli(*args) -> None:
    proc = subprocess.run(
        [sys.executable, "-m", "smoothchar.cli", *map(str, args)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0, proc.stderr


@pytest.fixture(scope="session")
def fixture_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("cli-reports")
    run_cli("kernel", "--delta", "0.1", "--xi", "0.5", "--grid-out", d / "grid.csv", "--grid-points", "400")
    for delta in ("0.2", "0.4", "0.8"):
        run_cli(
            "exceptional", "--x", "2000", "--y", "10", "--z", "100", "--q-max", "5",
            "--delta", delta, "--c", "1", "--out", d / f"exc_{delta}.json",
        )
    for delta in ("2", "4"):
        # c*delta >= 1: no pair can fire, giving the degenerate E = 0 series
        run_cli(
            "exceptional", "--x", "2000", "--y", "10", "--z", "100", "--q-max", "5",
            "--delta", delta, "--c", "1", "--out", d / f"exc0_{delta}.json",
        )
    for q in ("2", "5", "10"):
        for w in ("ones", "moebius"):
            run_cli(
                "large-sieve", "--x", "2000", "--y", "30", "--q-max", q,
                "--weights", w, "--out", d / f"ls_{q}_{w}.json",
            )
    run_cli(
        "dyadic", "--x", "2000", "--y", "10", "--z", "100", "--q-max", "4",
        "--delta", "0.5", "--format", "csv", "--out", d / "dyadic.csv",
    )
    # degenerate cover: z = x gives zero intervals
    run_cli(
        "dyadic", "--x", "2000", "--y", "10", "--z", "2000", "--q-max", "4",
        "--delta", "0.5", "--format", "csv", "--out", d / "dyadic_empty.csv",
    )
    return d
