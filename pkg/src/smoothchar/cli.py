"""Command-line entry point.

Every command validates its numeric parameters before any computation
starts, writes files atomically, prints a one-line summary to stdout, and
exits 0 on success, 2 on a parameter error, 3 on a range error (1 for an
unknown command).  Numeric flags accept scientific notation (`--x 1e6`)
and are floored where integral semantics apply.  `--threads` (or the
SMOOTHCHAR_THREADS environment variable) controls internal parallelism;
outputs are guaranteed independent of it.
"""

import argparse
import math
import os
import sys
from dataclasses import dataclass, field

from . import charsums, exceptional, kernel, reports, smoothsieve, weights
from .dirichlet import build_group, enumerate_characters
from .errors import ParameterError, RangeError

COMMANDS = ("sieve", "psi", "chars", "sum", "large-sieve", "kernel", "exceptional", "dgs", "dyadic")

USAGE = """usage: smoothchar COMMAND [options]

commands:
  sieve        enumerate y-smooth numbers up to x (CSV export)
  psi          count y-smooth numbers up to x
  chars        character table mod q (JSON export)
  sum          weighted character sum profile at checkpoints (CSV export)
  large-sieve  mean-square ratio over primitive pairs q <= Q (JSON export)
  kernel       smoothing-kernel coefficients and grid values (CSV export)
  exceptional  count pairs exceeding c*delta*psi(t,y) on [z, x]
  dgs          count pairs exceeding psi/((u log u)^4 (log x)^beta) on [x^1/4, x]
  dyadic       per-interval endpoint/aggregate diagnostics over [z, x]

run `smoothchar COMMAND --help` for per-command flags.
"""


def _intflag(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        try:
            return math.floor(float(s))
        except ValueError as exc:
            raise argparse.ArgumentTypeError(f"{s!r} is not a number") from exc


@dataclass
class RunConfig:
    command: str
    x: int | None = None
    y: int | None = None
    z: int | None = None
    q: int | None = None
    chi: int | None = None
    q_max: int | None = None
    delta: float | None = None
    xi: float | None = None
    c: float = 1.0
    beta: float = 0.0
    j_level: int | None = None
    seed: int = 0
    weights: str = "ones"
    vary_u: bool = False
    t: int | None = None
    checkpoints: list = field(default_factory=list)
    threads: int = 1
    out: str | None = None
    grid_out: str | None = None
    grid_points: int = 2001
    format: str = "json"


def _require(cfg: RunConfig, *names: str) -> None:
    for name in names:
        if getattr(cfg, name) is None:
            raise ParameterError(f"--{name.replace('_', '-')} is required for `{cfg.command}`")


def _weightseq(cfg: RunConfig):
    return weights.by_name(cfg.weights, cfg.seed)


def _cmd_sieve(cfg: RunConfig) -> str:
    _require(cfg, "x", "y")
    s = smoothsieve.sieve_smooth(cfg.x, cfg.y)
    if cfg.out:
        smoothsieve.write_members_csv(s, cfg.out)
    return str(s.count)


def _cmd_psi(cfg: RunConfig) -> str:
    _require(cfg, "x", "y")
    return str(smoothsieve.psi(cfg.x, cfg.y))


def _cmd_chars(cfg: RunConfig) -> str:
    _require(cfg, "q")
    chars = enumerate_characters(build_group(cfg.q))
    if cfg.out:
        reports.write_character_table_json(chars, cfg.out)
    n_prim = sum(chi.is_primitive for chi in chars)
    return f"q={cfg.q} characters={len(chars)} primitive={n_prim}"


def _cmd_sum(cfg: RunConfig) -> str:
    _require(cfg, "x", "y", "q")
    cps = cfg.checkpoints or [cfg.t if cfg.t is not None else cfg.x]
    if any(t > cfg.x for t in cps):
        raise RangeError(f"checkpoint {max(cps)} exceeds x={cfg.x}")
    group = build_group(cfg.q)
    chars = enumerate_characters(group)
    idx = cfg.chi or 0
    if not 0 <= idx < len(chars):
        raise ParameterError(f"--chi {idx} out of range [0, {len(chars)}) for q={cfg.q}")
    s = smoothsieve.sieve_smooth(cfg.x, cfg.y)
    profile = charsums.char_sum_profile(chars[idx], _weightseq(cfg), cps, s)
    if cfg.out:
        reports.write_profile_csv(profile, cfg.out)
    last = complex(profile.sums[-1])
    return (
        f"q={cfg.q} chi={idx} t={cps[-1]} S={last.real:.6g}{last.imag:+.6g}i "
        f"|S|={abs(last):.6g} psi={int(profile.psis[-1])}"
    )


def _cmd_large_sieve(cfg: RunConfig) -> str:
    _require(cfg, "x", "y", "q_max")
    if cfg.q_max < 1:
        raise ParameterError(f"--q-max {cfg.q_max} must be >= 1")
    s = smoothsieve.sieve_smooth(cfg.x, cfg.y)
    B = _weightseq(cfg)
    lhs, rhs = charsums.large_sieve_terms(cfg.q_max, s, B, threads=cfg.threads)
    ratio = lhs / rhs if rhs != 0.0 else 0.0
    if cfg.out:
        reports.write_large_sieve_json(cfg.q_max, cfg.x, cfg.y, B.label, lhs, rhs, ratio, cfg.out)
    return f"Q={cfg.q_max} x={cfg.x} y={cfg.y} weights={B.label} ratio={ratio:.6g}"


def _cmd_kernel(cfg: RunConfig) -> str:
    _require(cfg, "delta", "xi")
    k = kernel.build_kernel(cfg.delta, cfg.xi, cfg.j_level)
    if cfg.out:
        reports.write_kernel_coeffs_csv(k, cfg.out)
    if cfg.grid_out:
        reports.write_kernel_grid_csv(k, cfg.grid_out, cfg.grid_points)
    return f"delta={k.delta} xi={k.xi} J={k.J} c0={k.coeff(0).real}"


def _cmd_exceptional(cfg: RunConfig) -> str:
    _require(cfg, "x", "y", "z", "q_max", "delta")
    if cfg.delta <= 0:
        raise ParameterError(f"--delta {cfg.delta} must be positive")
    if cfg.c <= 0:
        raise ParameterError(f"--c {cfg.c} must be positive")
    if not 1 <= cfg.z <= cfg.x:
        raise RangeError(f"--z {cfg.z} outside [1, x={cfg.x}]")
    s = smoothsieve.sieve_smooth(cfg.x, cfg.y)
    rep = exceptional.count_exceptional(s, cfg.q_max, cfg.z, cfg.delta, cfg.c, _weightseq(cfg), threads=cfg.threads)
    _write_report(cfg, rep)
    return f"E={rep.E} pairs={rep.total_pairs} bound={rep.bound_value:.6g}"


def _cmd_dgs(cfg: RunConfig) -> str:
    _require(cfg, "x", "y", "q_max")
    if cfg.y is not None and cfg.y >= 2 and cfg.x >= 2:
        u = math.log(cfg.x) / math.log(cfg.y)
        if u < math.e:
            raise ParameterError(f"u=log x/log y={u:.4f} is below e; threshold ill-defined")
    s = smoothsieve.sieve_smooth(cfg.x, cfg.y)
    rep = exceptional.dgs_exceptional_count(s, cfg.q_max, cfg.beta, _weightseq(cfg), vary_u=cfg.vary_u, threads=cfg.threads)
    _write_report(cfg, rep)
    return f"E={rep.E} pairs={rep.total_pairs} bound={rep.bound_value:.6g}"


def _write_report(cfg: RunConfig, rep) -> None:
    if not cfg.out:
        return
    if cfg.format == "csv":
        reports.write_pairs_csv(rep, cfg.out)
    else:
        reports.write_exceptional_json(rep, cfg.out)


def _cmd_dyadic(cfg: RunConfig) -> str:
    _require(cfg, "x", "y", "z", "q_max", "delta")
    if cfg.delta <= 0:
        raise ParameterError(f"--delta {cfg.delta} must be positive")
    if not 1 <= cfg.z <= cfg.x:
        raise RangeError(f"--z {cfg.z} outside [1, x={cfg.x}]")
    s = smoothsieve.sieve_smooth(cfg.x, cfg.y)
    diag = exceptional.dyadic_diagnostics(s, cfg.q_max, cfg.z, cfg.delta, _weightseq(cfg), threads=cfg.threads)
    if cfg.out:
        if cfg.format == "csv":
            reports.write_dyadic_csv(diag, cfg.out)
        else:
            reports.write_dyadic_json(diag, cfg.out)
    worst_e1 = max((iv.e1 for iv in diag.intervals), default=0)
    return f"intervals={len(diag.intervals)} J={diag.j_level} max_e1={worst_e1} bound={diag.pair_bound:.6g}"


_HANDLERS = {
    "sieve": _cmd_sieve,
    "psi": _cmd_psi,
    "chars": _cmd_chars,
    "sum": _cmd_sum,
    "large-sieve": _cmd_large_sieve,
    "kernel": _cmd_kernel,
    "exceptional": _cmd_exceptional,
    "dgs": _cmd_dgs,
    "dyadic": _cmd_dyadic,
}


def run(config: RunConfig) -> int:
    """Dispatch a validated config; returns the process exit status."""
    try:
        handler = _HANDLERS[config.command]
    except KeyError:
        sys.stderr.write(USAGE)
        return 1
    try:
        print(handler(config))
    except ParameterError as exc:
        sys.stderr.write(f"parameter error: {exc}\n")
        return 2
    except RangeError as exc:
        sys.stderr.write(f"range error: {exc}\n")
        return 3
    return 0


def _build_parser(command: str) -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog=f"smoothchar {command}")
    arg = p.add_argument
    if command in ("sieve", "psi", "sum", "large-sieve", "exceptional", "dgs", "dyadic"):
        arg("--x", type=_intflag, required=True)
        arg("--y", type=_intflag, required=True)
    if command in ("exceptional", "dyadic"):
        arg("--z", type=_intflag, required=True)
    if command in ("chars", "sum"):
        arg("--q", type=_intflag, required=True)
    if command == "sum":
        arg("--chi", type=_intflag, default=0)
        arg("--t", type=_intflag)
        arg("--checkpoints", type=str, default="")
    if command in ("large-sieve", "exceptional", "dgs", "dyadic"):
        arg("--q-max", dest="q_max", type=_intflag, required=True)
    if command in ("kernel", "exceptional", "dyadic"):
        arg("--delta", type=float, required=True)
    if command == "kernel":
        arg("--xi", type=float, required=True)
        arg("--j", dest="j_level", type=_intflag)
        arg("--grid-out", dest="grid_out", type=str)
        arg("--grid-points", dest="grid_points", type=_intflag, default=2001)
    if command == "exceptional":
        arg("--c", type=float, default=1.0)
    if command == "dgs":
        arg("--beta", type=float, default=0.0)
        arg("--vary-u", dest="vary_u", action="store_true")
    if command in ("sum", "large-sieve", "exceptional", "dgs", "dyadic"):
        arg("--weights", type=str, default="ones")
        arg("--seed", type=_intflag, default=0)
    arg("--threads", type=_intflag, default=None)
    arg("--out", type=str)
    arg("--format", type=str, choices=("csv", "json"), default="json")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    if not argv or argv[0] in ("-h", "--help"):
        sys.stdout.write(USAGE)
        return 0
    command, rest = argv[0], argv[1:]
    if command not in COMMANDS:
        sys.stderr.write(f"unknown command: {command}\n\n{USAGE}")
        return 1
    parser = _build_parser(command)
    try:
        ns = parser.parse_args(rest)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    cfg = RunConfig(command=command)
    for key, val in vars(ns).items():
        if key == "checkpoints":
            cfg.checkpoints = [_intflag(tok) for tok in val.split(",") if tok] if val else []
        elif val is not None:
            setattr(cfg, key, val)
    if ns.threads is None:
        cfg.threads = int(os.environ.get("SMOOTHCHAR_THREADS", "1"))
    return run(cfg)


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
