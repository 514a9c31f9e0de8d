"""Counting (q, chi) pairs whose normalized character sums get large.

For each modulus q <= Q and each primitive chi mod q, one ascending pass
over the smooth members maintains the running sum S(n).  Both S and
psi(t, y) are step functions jumping only at members, so |S|/psi on every
constancy interval of [z, x] is realized at its left edge: checking the
left endpoint t = z plus every member n in [z, x] reproduces the supremum
over real t exactly (and hence matches a scan over every integer t).

Threshold tests compare |S|^2 against (threshold * psi)^2 so no division or
square root enters the pass/fail decision; the per-pair max of |S|/psi is
reported alongside for inspection.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .charsums import _member_terms, t_sums_batch
from .dirichlet import build_group, primitive_characters
from .errors import ParameterError, RangeError
from .kernel import default_truncation
from .smoothsieve import SmoothSet
from .weights import WeightSequence


@dataclass(frozen=True)
class PairRecord:
    q: int
    chi_index: int
    max_ratio: float
    argmax_t: float  # first t in the checked set attaining the max
    exceptional: bool


@dataclass(frozen=True, eq=False)
class ExceptionalReport:
    params: dict
    per_pair: tuple[PairRecord, ...]
    E: int
    bound_value: float
    total_pairs: int
    extra_bounds: dict = field(default_factory=dict)


@dataclass(frozen=True)
class DyadicInterval:
    m: int
    t_hi: int  # min(2m, x)
    e0: int  # pairs with the weighted twisted aggregate >= delta*psi(m)
    e1: int  # pairs with |S(m)| > delta*psi(m)
    e2: int  # pairs with |S(t_hi)| > delta*psi(t_hi)


@dataclass(frozen=True, eq=False)
class DyadicDiagnostics:
    params: dict
    j_level: int
    pair_bound: float  # delta^-2, the unconditional per-endpoint cap
    intervals: tuple[DyadicInterval, ...]
    total_pairs: int


def theoretical_bound(delta: float, x) -> float:
    """Constant-free bound shape delta^-2 * (log(1/delta))^2 * log x."""
    return float(delta) ** -2 * math.log(1.0 / delta) ** 2 * math.log(x)


def _total_primitive_pairs(Q: int) -> int:
    return sum(len(primitive_characters(build_group(q))) for q in range(1, Q + 1))


def _pair_arrays(smooth: SmoothSet, Q: int, weights: WeightSequence, threads: int):
    """Yield (q, chi, cumulative-sum array) for every primitive pair, q ascending.

    With threads > 1 the per-q work runs on a pool; results are still
    emitted in (q, chi.index) order, so downstream output is identical.
    """

    def per_q(q: int):
        group = build_group(q)
        out = []
        for chi in primitive_characters(group):
            out.append((q, chi, np.cumsum(_member_terms(chi, weights, smooth))))
        return out

    qs = list(range(1, Q + 1))
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(per_q, qs):
                yield from chunk
    else:
        for q in qs:
            yield from per_q(q)


def _scan_pair(cs: np.ndarray, psis: np.ndarray, k_z: int, i0: int, members: np.ndarray, z):
    """Max of |S|/psi over the checked set {z} + members[i0:], with argmax."""
    mag_z = abs(complex(cs[k_z - 1]))
    r_z = mag_z / k_z
    if i0 < members.size:
        ratios = np.abs(cs[i0:]) / psis[i0:]
        j = int(np.argmax(ratios))
        r_m = float(ratios[j])
        if r_z >= r_m:
            return r_z, z
        return r_m, int(members[i0 + j])
    return r_z, z


def count_exceptional(
    smooth: SmoothSet,
    Q: int,
    z: int,
    delta: float,
    c: float,
    weights: WeightSequence,
    threads: int = 1,
) -> ExceptionalReport:
    """Count pairs with |S(t)| > c*delta*psi(t, y) at some t in [z, x]."""
    if Q < 1:
        raise ParameterError(f"Q={Q} must be >= 1")
    if delta <= 0:
        raise ParameterError(f"delta={delta} must be positive")
    if c <= 0:
        raise ParameterError(f"c={c} must be positive")
    if z < 1:
        raise ParameterError(f"z={z} must be >= 1")
    if z > smooth.x:
        raise RangeError(f"z={z} exceeds the sieved bound x={smooth.x}")
    members = smooth.members
    psis = np.arange(1, members.size + 1, dtype=np.float64)
    k_z = smooth.count_upto(z)
    i0 = int(np.searchsorted(members, z, side="left"))
    thr = c * delta

    records = []
    for q, chi, cs in _pair_arrays(smooth, Q, weights, threads):
        mags_sq = cs.real**2 + cs.imag**2
        hit = bool(mags_sq[k_z - 1] > (thr * k_z) ** 2)
        if not hit and i0 < members.size:
            hit = bool(np.any(mags_sq[i0:] > (thr * psis[i0:]) ** 2))
        max_ratio, argmax_t = _scan_pair(cs, psis, k_z, i0, members, z)
        records.append(PairRecord(q, chi.index, max_ratio, argmax_t, hit))
    E = sum(r.exceptional for r in records)
    return ExceptionalReport(
        params={
            "x": smooth.x,
            "y": smooth.y,
            "z": z,
            "Q": Q,
            "delta": delta,
            "c": c,
            "weights": weights.label,
            "criterion": "threshold",
        },
        per_pair=tuple(records),
        E=E,
        bound_value=theoretical_bound(delta, smooth.x) if smooth.x >= 2 else 0.0,
        total_pairs=len(records),
    )


def dgs_exceptional_count(
    smooth: SmoothSet,
    Q: int,
    beta: float,
    weights: WeightSequence,
    vary_u: bool = False,
    threads: int = 1,
) -> ExceptionalReport:
    """Count pairs with |S(t)| >= psi(t, y) / ((u log u)^4 (log x)^beta) at
    some t in [x^(1/4), x].

    By default u is the fixed ratio log x / log y; with vary_u the factor is
    recomputed as u_t = log t / log y at each checked t.
    """
    if Q < 1:
        raise ParameterError(f"Q={Q} must be >= 1")
    if beta < 0:
        raise ParameterError(f"beta={beta} must be nonnegative")
    if smooth.y < 2:
        raise ParameterError(f"y={smooth.y} must be >= 2 (u undefined at y=1)")
    x, y = smooth.x, smooth.y
    logx, logy = math.log(x), math.log(y)
    u = logx / logy
    if u < math.e:
        raise ParameterError(f"u=log x/log y={u:.4f} is below e; threshold ill-defined")
    z = x**0.25
    members = smooth.members
    psis = np.arange(1, members.size + 1, dtype=np.float64)
    k_z = smooth.count_upto(z)
    i0 = int(np.searchsorted(members, z, side="left"))

    def dfactor(ts):
        ut = np.log(ts) / logy
        return (ut * np.log(ut)) ** 4 * logx**beta

    d_fixed = (u * math.log(u)) ** 4 * logx**beta
    d_z = dfactor(np.array([z]))[0] if vary_u else d_fixed
    d_members = dfactor(members[i0:].astype(np.float64)) if vary_u else d_fixed

    records = []
    for q, chi, cs in _pair_arrays(smooth, Q, weights, threads):
        mags_sq = cs.real**2 + cs.imag**2
        hit = bool(mags_sq[k_z - 1] * d_z**2 >= float(k_z) ** 2)
        if not hit and i0 < members.size:
            hit = bool(np.any(mags_sq[i0:] * d_members**2 >= psis[i0:] ** 2))
        max_ratio, argmax_t = _scan_pair(cs, psis, k_z, i0, members, z)
        records.append(PairRecord(q, chi.index, max_ratio, argmax_t, hit))
    E = sum(r.exceptional for r in records)
    return ExceptionalReport(
        params={
            "x": x,
            "y": y,
            "z": z,
            "Q": Q,
            "beta": beta,
            "weights": weights.label,
            "criterion": "dgs-varying-u" if vary_u else "dgs-fixed-u",
        },
        per_pair=tuple(records),
        E=E,
        bound_value=logx ** (3 * beta + 13),
        total_pairs=len(records),
        extra_bounds={"improved_bound": logx ** (2 * beta + 8) * math.log(logx) ** 2},
    )


def dyadic_diagnostics(
    smooth: SmoothSet,
    Q: int,
    z: int,
    delta: float,
    weights: WeightSequence,
    threads: int = 1,
) -> DyadicDiagnostics:
    """Per-interval endpoint and aggregate counts over the dyadic cover of [z, x].

    The cover is m_0 = z, m_{i+1} = 2 m_i, each interval [m, min(2m, x)].
    Per interval: e1 counts pairs with |S(m)| > delta*psi(m, y), e2 the same
    at the interval top, and e0 counts pairs whose weighted twisted aggregate
    (J = ceil(delta^-2)) reaches delta*psi(m, y).  e1 and e2 are expected to
    stay below delta^-2 at desk scale; the caller compares rather than this
    function failing hard, since that cap inherits an unspecified constant.
    """
    if Q < 1:
        raise ParameterError(f"Q={Q} must be >= 1")
    if delta <= 0:
        raise ParameterError(f"delta={delta} must be positive")
    if z < 1:
        raise ParameterError(f"z={z} must be >= 1")
    if z > smooth.x:
        raise RangeError(f"z={z} exceeds the sieved bound x={smooth.x}")
    x = smooth.x
    J = default_truncation(delta)
    bounds_m = []
    m = z
    while m < x:
        bounds_m.append((m, min(2 * m, x)))
        m *= 2

    e0 = [0] * len(bounds_m)
    e1 = [0] * len(bounds_m)
    e2 = [0] * len(bounds_m)
    total = 0
    for q, chi, cs in _pair_arrays(smooth, Q, weights, threads):
        total += 1
        mags_sq = cs.real**2 + cs.imag**2
        for i, (m, t_hi) in enumerate(bounds_m):
            k_m = smooth.count_upto(m)
            k_hi = smooth.count_upto(t_hi)
            if mags_sq[k_m - 1] > (delta * k_m) ** 2:
                e1[i] += 1
            if mags_sq[k_hi - 1] > (delta * k_hi) ** 2:
                e2[i] += 1
            ts = t_sums_batch(chi, weights, m, J, smooth, t_hi=t_hi)
            w = np.ones(J + 1, dtype=np.float64)
            if J >= 1:
                w[1:] = 1.0 / np.arange(1, J + 1, dtype=np.float64)
            agg = float(np.cumsum(w * np.abs(ts))[-1])
            if agg >= delta * k_m:
                e0[i] += 1

    intervals = tuple(
        DyadicInterval(m=m, t_hi=t_hi, e0=e0[i], e1=e1[i], e2=e2[i])
        for i, (m, t_hi) in enumerate(bounds_m)
    )
    return DyadicDiagnostics(
        params={
            "x": x,
            "y": smooth.y,
            "z": z,
            "Q": Q,
            "delta": delta,
            "weights": weights.label,
        },
        j_level=J,
        pair_bound=float(delta) ** -2,
        intervals=intervals,
        total_pairs=total,
    )
