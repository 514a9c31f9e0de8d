"""Weighted character sums over smooth numbers.

Everything here is a single ascending pass over the members of a SmoothSet:
prefix sums are accumulated with np.cumsum on complex128 terms, which fixes
the accumulation order (ascending n) and so makes every result bit-identical
across runs and thread counts.  char_sum is literally a one-checkpoint
profile, so profile entries and standalone sums agree exactly.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .dirichlet import Character, build_group, primitive_characters
from .errors import ParameterError, RangeError
from .smoothsieve import SmoothSet
from .weights import WeightSequence

_TWIST_CHUNK = 2_000_000  # phase-matrix entries per chunk in t_sum batches


@dataclass(frozen=True, eq=False)
class SumProfile:
    """Prefix sums S(t) of one character at a set of checkpoints t."""

    q: int
    chi_index: int
    checkpoints: np.ndarray
    sums: np.ndarray  # complex128
    psis: np.ndarray  # int64, psi(t, y) at each checkpoint

    def validate(self) -> None:
        assert np.all(np.diff(self.checkpoints) > 0)
        assert np.all(np.abs(self.sums) <= self.psis * (1 + 1e-9) + 1e-9)


def _member_terms(chi: Character, weights: WeightSequence, smooth: SmoothSet) -> np.ndarray:
    members = smooth.members
    vals = chi.value_table[np.mod(members, chi.q)] if chi.q > 1 else np.ones(members.size, np.complex128)
    return weights.values(members) * vals


def _prefix(chi: Character, weights: WeightSequence, smooth: SmoothSet) -> np.ndarray:
    return np.cumsum(_member_terms(chi, weights, smooth))


def char_sum_profile(chi: Character, weights: WeightSequence, checkpoints, smooth: SmoothSet) -> SumProfile:
    """All prefix sums S(t) for ascending checkpoints t, in one pass."""
    cps = np.asarray(checkpoints)
    if cps.size == 0:
        raise ParameterError("checkpoints must be nonempty")
    if np.any(np.diff(cps) <= 0):
        raise ParameterError("checkpoints must be strictly increasing")
    if cps[-1] > smooth.x:
        raise RangeError(f"checkpoint {cps[-1]} exceeds the sieved bound x={smooth.x}")
    cs = _prefix(chi, weights, smooth)
    idx = np.searchsorted(smooth.members, cps, side="right") - 1
    sums = np.where(idx >= 0, cs[np.maximum(idx, 0)], 0j)
    return SumProfile(
        q=chi.q,
        chi_index=chi.index,
        checkpoints=cps,
        sums=sums,
        psis=(idx + 1).astype(np.int64),
    )


def char_sum(chi: Character, weights: WeightSequence, t, smooth: SmoothSet) -> complex:
    """S(t) = sum over smooth members n <= t of a_n chi(n)."""
    return complex(char_sum_profile(chi, weights, [t], smooth).sums[0])


def _interval_slice(smooth: SmoothSet, m: int, t_hi: int) -> np.ndarray:
    i0 = np.searchsorted(smooth.members, m, side="right")
    i1 = np.searchsorted(smooth.members, t_hi, side="right")
    return smooth.members[i0:i1]


def t_sums_batch(
    chi: Character,
    weights: WeightSequence,
    m: int,
    J: int,
    smooth: SmoothSet,
    t_hi: int | None = None,
) -> np.ndarray:
    """T_j for j = 0..J over members in (m, t_hi]: sum a_n chi(n) e(j(n-m)/m).

    The twist exponent j(n-m) is reduced mod m in exact integer arithmetic
    before the complex exponential, so large j lose no phase accuracy.
    """
    if m < 1:
        raise ParameterError(f"m={m} must be >= 1")
    if J < 0:
        raise ParameterError(f"J={J} must be nonnegative")
    if t_hi is None:
        t_hi = 2 * m
    if t_hi > smooth.x:
        raise RangeError(f"interval top {t_hi} exceeds the sieved bound x={smooth.x}")
    ns = _interval_slice(smooth, m, t_hi)
    out = np.zeros(J + 1, dtype=np.complex128)
    if ns.size == 0:
        return out
    base = weights.values(ns) * (chi.value_table[np.mod(ns, chi.q)] if chi.q > 1 else 1.0)
    ks = ns - m
    step = max(1, _TWIST_CHUNK // ns.size)
    for j0 in range(0, J + 1, step):
        js = np.arange(j0, min(j0 + step, J + 1), dtype=np.int64)
        phases = np.exp((2j * np.pi / m) * ((js[:, None] * ks[None, :]) % m))
        out[j0 : j0 + js.size] = np.cumsum(base[None, :] * phases, axis=1)[:, -1]
    return out


def t_sum(chi: Character, weights: WeightSequence, j: int, m: int, smooth: SmoothSet) -> complex:
    """The single twisted dyadic sum T_j over members in (m, 2m]."""
    if j < 0:
        raise ParameterError(f"j={j} must be nonnegative")
    if 2 * m > smooth.x:
        raise RangeError(f"2m={2 * m} exceeds the sieved bound x={smooth.x}")
    return complex(t_sums_batch(chi, weights, m, j, smooth)[j])


def frak_s(chi: Character, weights: WeightSequence, m: int, J: int, smooth: SmoothSet) -> float:
    """Weighted aggregate |T_0| + sum_{j=1..J} |T_j|/j of the twisted sums."""
    if 2 * m > smooth.x:
        raise RangeError(f"2m={2 * m} exceeds the sieved bound x={smooth.x}")
    ts = t_sums_batch(chi, weights, m, J, smooth)
    w = np.ones(J + 1, dtype=np.float64)
    if J >= 1:
        w[1:] = 1.0 / np.arange(1, J + 1, dtype=np.float64)
    return float(np.cumsum(w * np.abs(ts))[-1])


def large_sieve_terms(Q: int, smooth: SmoothSet, weights: WeightSequence, threads: int = 1):
    """(lhs, rhs) of the mean-square bound: lhs sums |S(x)|^2 over primitive
    pairs with q <= Q, rhs is psi(x,y) * sum |b_n|^2 over members."""
    if Q < 1:
        raise ParameterError(f"Q={Q} must be >= 1")
    members = smooth.members
    bvals = weights.values(members)
    sq = bvals.real**2 + bvals.imag**2
    rhs = smooth.count * (float(np.cumsum(sq)[-1]) if sq.size else 0.0)

    def q_total(q: int) -> float:
        total = 0.0
        group = build_group(q)
        prim = primitive_characters(group)
        if not prim:
            return total
        residues = np.mod(members, q)
        for chi in prim:
            terms = bvals * (chi.value_table[residues] if q > 1 else 1.0)
            s = np.cumsum(terms)[-1] if terms.size else 0j
            total += s.real**2 + s.imag**2
        return total

    qs = range(1, Q + 1)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            totals = list(pool.map(q_total, qs))
    else:
        totals = [q_total(q) for q in qs]
    return math.fsum(totals), rhs


def large_sieve_ratio(Q: int, smooth: SmoothSet, weights: WeightSequence, threads: int = 1) -> float:
    """lhs/rhs of the mean-square bound; defined as 0 when the weights vanish."""
    lhs, rhs = large_sieve_terms(Q, smooth, weights, threads=threads)
    return lhs / rhs if rhs != 0.0 else 0.0
