"""Render figures from smoothchar report files.

Inputs are the CSV/JSON schemas documented in the main repo's FORMATS.md;
nothing here recomputes any mathematics.  Rendering is headless (Agg) and
deterministic for fixed inputs and library versions.

Figure kinds:
  exceptional_vs_delta  measured E(delta) from several exceptional reports,
                        overlaid with the constant-free curve
                        delta^-2 (log(1/delta))^2 log x
  kernel_profile        f_exact and f_truncated from a kernel grid CSV
  large_sieve_ratios    ratio vs Q series from large-sieve reports
  dyadic_counts         e0/e1/e2 per dyadic interval plus the delta^-2 cap
"""

import argparse
import csv
import json
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be pinned first)
import numpy as np  # noqa: E402

KINDS = ("exceptional_vs_delta", "kernel_profile", "large_sieve_ratios", "dyadic_counts")

_SAVE_OPTS = {"dpi": 120, "metadata": {"Software": None}}  # no version stamp: byte-stable output


class SchemaError(ValueError):
    """An input file does not match the documented schema."""


@dataclass(frozen=True)
class FigureSpec:
    kind: str
    inputs: tuple
    output: Path


def _read_csv_columns(path, required: tuple[str, ...]) -> dict:
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        cols = reader.fieldnames or []
        for name in required:
            if name not in cols:
                raise SchemaError(f"{path}: missing column {name!r}")
        rows = list(reader)
    return {name: [float(row[name]) for row in rows] for name in required}


def _read_json_report(path, required: tuple[str, ...]) -> dict:
    with open(path) as fh:
        data = json.load(fh)
    for name in required:
        node = data
        for part in name.split("."):
            if not isinstance(node, dict) or part not in node:
                raise SchemaError(f"{path}: missing column {name!r}")
            node = node[part]
    return data


def _render_kernel_profile(inputs, ax) -> None:
    data = _read_csv_columns(inputs[0], ("u", "f_exact", "f_truncated"))
    ax.plot(data["u"], data["f_exact"], label="exact", lw=1.8)
    ax.plot(data["u"], data["f_truncated"], label="truncated series", lw=1.0, ls="--")
    ax.set_xlabel("u")
    ax.set_ylabel("f(u)")
    ax.set_ylim(-0.1, 1.1)
    ax.legend()


def _render_exceptional_vs_delta(inputs, ax) -> None:
    points = []
    for path in inputs:
        rep = _read_json_report(path, ("params.delta", "params.x", "E"))
        points.append((float(rep["params"]["delta"]), int(rep["E"]), float(rep["params"]["x"])))
    points.sort()
    deltas = [p[0] for p in points]
    es = [p[1] for p in points]
    x = points[0][2]
    ax.scatter(deltas, es, color="C0", zorder=3, label="measured E")
    dd = np.geomspace(min(deltas), max(deltas), 200)
    bound = dd**-2.0 * np.log(1.0 / dd) ** 2 * math.log(x)
    ax.plot(dd, bound, color="C1", label=r"$\delta^{-2}(\log 1/\delta)^2\log x$")
    ax.set_xscale("log")
    if any(es):
        ax.set_yscale("log")
    else:
        ax.annotate("E = 0", xy=(0.5, 0.3), xycoords="axes fraction", ha="center", fontsize=14)
    ax.set_xlabel(r"$\delta$")
    ax.set_ylabel("E")
    ax.legend()


def _render_large_sieve_ratios(inputs, ax) -> None:
    series: dict[tuple, list] = {}
    for path in inputs:
        rep = _read_json_report(path, ("Q", "y", "weight_kind", "ratio"))
        series.setdefault((rep["y"], rep["weight_kind"]), []).append((rep["Q"], rep["ratio"]))
    for (y, kind), pts in sorted(series.items()):
        pts.sort()
        ax.plot([p[0] for p in pts], [p[1] for p in pts], marker="o", label=f"y={y}, {kind}")
    ax.set_xlabel("Q")
    ax.set_ylabel("ratio")
    ax.set_yscale("log")
    ax.legend(fontsize=8)


def _render_dyadic_counts(inputs, ax) -> None:
    data = _read_csv_columns(inputs[0], ("m", "t_hi", "e0", "e1", "e2", "bound"))
    if not data["m"]:
        ax.annotate("no intervals", xy=(0.5, 0.5), xycoords="axes fraction", ha="center", fontsize=14)
        ax.set_xlabel("m")
        return
    for key in ("e0", "e1", "e2"):
        ax.plot(data["m"], data[key], marker="o", label=key)
    ax.axhline(data["bound"][0], color="k", ls=":", label=r"$\delta^{-2}$")
    ax.set_xscale("log")
    ax.set_xlabel("m")
    ax.set_ylabel("pairs")
    ax.legend()


_RENDERERS = {
    "exceptional_vs_delta": _render_exceptional_vs_delta,
    "kernel_profile": _render_kernel_profile,
    "large_sieve_ratios": _render_large_sieve_ratios,
    "dyadic_counts": _render_dyadic_counts,
}


def render(spec: FigureSpec) -> Path:
    """Render one figure; returns the output path."""
    if spec.kind not in _RENDERERS:
        raise SchemaError(f"unknown figure kind {spec.kind!r} (one of {', '.join(KINDS)})")
    if not spec.inputs:
        raise SchemaError("at least one --in file is required")
    fig, ax = plt.subplots(figsize=(7, 4.5), constrained_layout=True)
    try:
        _RENDERERS[spec.kind](tuple(spec.inputs), ax)
        ax.set_title(spec.kind.replace("_", " "))
        fig.savefig(spec.output, **_SAVE_OPTS)
    finally:
        plt.close(fig)
    return Path(spec.output)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="smoothchar-figures")
    ap.add_argument("--kind", required=True, choices=KINDS)
    ap.add_argument("--in", dest="inputs", action="append", required=True, metavar="PATH")
    ap.add_argument("--out", required=True)
    try:
        ns = ap.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        out = render(FigureSpec(kind=ns.kind, inputs=tuple(ns.inputs), output=Path(ns.out)))
    except (SchemaError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    print(out)
    return 0


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
