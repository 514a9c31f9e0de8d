"""Enumeration and counting of y-smooth integers.

A positive integer n is y-smooth when its largest prime factor P(n) is at
most y, with the convention P(1) = 1, so 1 is y-smooth for every y >= 1.
The sieve walks [1, x] in fixed-size segments; within a segment it divides
the entry at every multiple of every prime power p^k (p <= y) by p, and an
entry is smooth exactly when the remaining cofactor is 1.  Memory stays
O(segment) + O(output) and the result does not depend on the segment size.
"""

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, RangeError

DEFAULT_SEGMENT = 1 << 20

# Hard cap keeps every derived quantity (including 2x for dyadic intervals
# and j*(n-m) twists) comfortably inside int64; memory is the practical limit
# well before this.
MAX_X = 10**9


def primes_upto(limit: int) -> np.ndarray:
    """Primes <= limit, ascending, as int64 (plain Eratosthenes)."""
    if limit < 2:
        return np.empty(0, dtype=np.int64)
    mask = np.ones(limit + 1, dtype=bool)
    mask[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if mask[p]:
            mask[p * p :: p] = False
    return np.nonzero(mask)[0].astype(np.int64)


@dataclass(frozen=True, eq=False)
class SmoothSet:
    """The set of y-smooth integers in [1, x], sorted ascending.

    `members` is a read-only int64 array; psi(t, y) for any t <= x is the
    number of members <= t, answered by binary search (count_upto).
    """

    x: int
    y: int
    members: np.ndarray

    @property
    def count(self) -> int:
        return int(self.members.size)

    def count_upto(self, t) -> int:
        """psi(t, y) for t <= x; t may be fractional."""
        if t > self.x:
            raise RangeError(f"t={t} exceeds the sieved bound x={self.x}")
        return int(np.searchsorted(self.members, t, side="right"))

    def validate(self) -> None:
        """Check the structural invariants (used by the test suite)."""
        m = self.members
        assert m.size == self.count
        assert m.size >= 1 and m[0] == 1
        assert int(m[-1]) <= self.x
        assert np.all(m[1:] > m[:-1])


def _check_range(x: int, y: int) -> None:
    if not 1 <= x <= MAX_X:
        raise RangeError(f"x={x} outside supported range [1, {MAX_X}]")
    if y < 1:
        raise RangeError(f"y={y} below minimum 1")


def _segment_masks(x: int, y: int, segment_size: int):
    """Yield (lo, mask) per segment, mask[i] True iff lo+i is y-smooth."""
    primes = [int(p) for p in primes_upto(min(y, x))]
    for lo in range(1, x + 1, segment_size):
        hi = min(lo + segment_size, x + 1)
        rem = np.arange(lo, hi, dtype=np.int64)
        for p in primes:
            pk = p
            while pk < hi:
                start = ((lo + pk - 1) // pk) * pk
                if start < hi:
                    rem[start - lo :: pk] //= p
                pk *= p
        yield lo, rem == 1


def sieve_smooth(x: int, y: int, segment_size: int = DEFAULT_SEGMENT) -> SmoothSet:
    """Enumerate {n <= x : P(n) <= y} with a segmented factor sieve."""
    _check_range(x, y)
    if segment_size < 1:
        raise ParameterError(f"segment_size={segment_size} must be positive")
    if y >= x:
        # P(n) <= n <= x <= y: every integer in range qualifies.
        members = np.arange(1, x + 1, dtype=np.int64)
    else:
        chunks = [
            (np.nonzero(mask)[0] + lo).astype(np.int64)
            for lo, mask in _segment_masks(x, y, segment_size)
        ]
        members = np.concatenate(chunks) if chunks else np.empty(0, np.int64)
    members.setflags(write=False)
    return SmoothSet(x=int(x), y=int(y), members=members)


def psi(x: int, y: int, segment_size: int = DEFAULT_SEGMENT) -> int:
    """psi(x, y) = #{n <= x : P(n) <= y}; equals sieve_smooth(x, y).count."""
    _check_range(x, y)
    if y >= x:
        return int(x)
    return sum(int(mask.sum()) for _, mask in _segment_masks(x, y, segment_size))


def psi_local_ratio(x: int, y: int, delta: float, kappa: float = 1.0) -> float:
    """Short-interval density ratio (psi(x+floor(dx), y) - psi(x, y)) / (d*psi(x, y)).

    The quantity is well defined for any delta in (0, 1]; outside the range
    delta > min(1/x, y^-kappa) the estimate it probes has no content, so the
    call warns but still computes.  The real upper endpoint x + delta*x is
    floored to an integer: sums over integers cannot see the fractional part.
    """
    if not 0 < delta <= 1:
        raise ParameterError(f"delta={delta} outside (0, 1]")
    if delta <= min(1.0 / x, float(y) ** -kappa):
        warnings.warn(
            f"delta={delta} not above min(1/x, y^-kappa)={min(1.0 / x, float(y) ** -kappa):.3g}; "
            "ratio computed anyway",
            RuntimeWarning,
            stacklevel=2,
        )
    upper = x + math.floor(delta * x)
    s = sieve_smooth(upper, y)
    lo = s.count_upto(x)
    return (s.count - lo) / (delta * lo)


def write_members_csv(smooth: SmoothSet, path) -> None:
    """One member per line under a single `n` header column."""
    from .reports import atomic_write_text

    lines = ["n"]
    lines.extend(str(int(n)) for n in smooth.members)
    atomic_write_text(path, "\n".join(lines) + "\n")
