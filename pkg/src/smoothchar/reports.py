"""File outputs: every schema documented in FORMATS.md, written atomically.

Writers render floats with repr() (shortest round-trip form) and fix the
newline convention, so identical inputs produce byte-identical files.
"""

import json
import os
import tempfile

import numpy as np

from .exceptional import DyadicDiagnostics, ExceptionalReport
from .kernel import SmoothingKernel, coefficient_bound, eval_exact, eval_truncated


def atomic_write_text(path, text: str) -> None:
    """Write via a sibling temp file + rename so readers never see partials."""
    path = os.fspath(path)
    d = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=d, prefix=".tmp-", text=False)
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _num(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def _csv(rows) -> str:
    return "\n".join(",".join(str(c) for c in row) for row in rows) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def write_character_table_json(chars, path) -> None:
    atomic_write_text(path, _json([chi.to_dict() for chi in chars]))


def write_profile_csv(profile, path) -> None:
    rows = [["q", "chi_index", "t", "re_S", "im_S", "psi_t"]]
    for t, s, p in zip(profile.checkpoints, profile.sums, profile.psis):
        rows.append([profile.q, profile.chi_index, _num(t), _num(s.real), _num(s.imag), int(p)])
    atomic_write_text(path, _csv(rows))


def write_large_sieve_json(Q, x, y, weight_kind, lhs, rhs, ratio, path) -> None:
    atomic_write_text(
        path,
        _json(
            {
                "Q": int(Q),
                "x": int(x),
                "y": int(y),
                "weight_kind": weight_kind,
                "lhs": float(lhs),
                "rhs": float(rhs),
                "ratio": float(ratio),
            }
        ),
    )


def _pair_dict(r) -> dict:
    return {
        "q": r.q,
        "chi_index": r.chi_index,
        "max_ratio": float(r.max_ratio),
        "argmax_t": r.argmax_t,
        "exceptional": r.exceptional,
    }


def write_exceptional_json(report: ExceptionalReport, path) -> None:
    obj = {
        "params": report.params,
        "E": report.E,
        "total_pairs": report.total_pairs,
        "bound_value": float(report.bound_value),
        **{k: float(v) for k, v in report.extra_bounds.items()},
        "per_pair": [_pair_dict(r) for r in report.per_pair],
    }
    atomic_write_text(path, _json(obj))


def write_pairs_csv(report: ExceptionalReport, path) -> None:
    rows = [["q", "chi_index", "max_ratio", "argmax_t", "exceptional"]]
    for r in report.per_pair:
        rows.append([r.q, r.chi_index, _num(r.max_ratio), _num(r.argmax_t), str(r.exceptional).lower()])
    atomic_write_text(path, _csv(rows))


def write_dyadic_json(diag: DyadicDiagnostics, path) -> None:
    obj = {
        "params": diag.params,
        "j_level": diag.j_level,
        "pair_bound": float(diag.pair_bound),
        "total_pairs": diag.total_pairs,
        "intervals": [
            {
                "m": iv.m,
                "t_hi": iv.t_hi,
                "e0": iv.e0,
                "e1": iv.e1,
                "e2": iv.e2,
                "e1_within_bound": iv.e1 <= diag.pair_bound,
                "e2_within_bound": iv.e2 <= diag.pair_bound,
            }
            for iv in diag.intervals
        ],
    }
    atomic_write_text(path, _json(obj))


def write_dyadic_csv(diag: DyadicDiagnostics, path) -> None:
    rows = [["m", "t_hi", "e0", "e1", "e2", "bound"]]
    for iv in diag.intervals:
        rows.append([iv.m, iv.t_hi, iv.e0, iv.e1, iv.e2, _num(diag.pair_bound)])
    atomic_write_text(path, _csv(rows))


def write_kernel_coeffs_csv(kernel: SmoothingKernel, path) -> None:
    rows = [["j", "re_c", "im_c", "bound"]]
    for j in range(-kernel.J, kernel.J + 1):
        c = kernel.coeff(j)
        rows.append([j, _num(c.real), _num(c.imag), _num(coefficient_bound(j, kernel.delta))])
    atomic_write_text(path, _csv(rows))


def write_kernel_grid_csv(kernel: SmoothingKernel, path, points: int = 2001) -> None:
    us = np.linspace(0.0, 1.0, points, endpoint=False)
    exact = eval_exact(kernel, us)
    trunc = eval_truncated(kernel, us)
    rows = [["u", "f_exact", "f_truncated"]]
    for u, fe, ft in zip(us, exact, trunc):
        rows.append([_num(u), _num(fe), _num(ft)])
    atomic_write_text(path, _csv(rows))
