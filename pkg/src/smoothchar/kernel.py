"""Periodic cut indicator and its trigonometric smoothing.

F_xi is the period-1 indicator equal to 1 on (0, xi] and 0 on (xi, 1].
The smoothed version built here is its convolution with the box kernel of
half-width delta: a trapezoid ramping 0 -> 1 across the wrapped interval
[1-delta, delta], equal to 1 on [delta, xi-delta], ramping 1 -> 0 across
[xi-delta, xi+delta], and 0 on [xi+delta, 1-delta].  Its Fourier
coefficients are

    c_0 = xi,
    c_j = (1 - e(-j xi)) / (2 pi i j) * sin(2 pi j delta) / (2 pi j delta),

with c_{-j} = conj(c_j) (the function is real), and satisfy the closed-form
bound |c_j| <= min(1/(pi j), 1/(2 pi^2 j^2 delta)).  Truncating the series
at J = ceil(delta^-2) leaves a tail of at most 1/(pi^2 delta J) <= delta/pi^2,
i.e. comfortably below delta everywhere.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import ParameterError

_EVAL_CHUNK = 2_000_000  # phase-matrix entries per chunk when summing the series


def default_truncation(delta: float) -> int:
    """ceil(delta^-2), tolerant of float noise in delta^-2 (9-decimal round)."""
    return math.ceil(round(float(delta) ** -2, 9))


def coefficient_bound(j: int, delta: float) -> float:
    """Closed-form cap on |c_j| for j != 0; 1.0 (trivial) at j = 0."""
    j = abs(j)
    if j == 0:
        return 1.0
    return min(1.0 / (math.pi * j), 1.0 / (2 * math.pi**2 * j * j * delta))


def f_indicator(u: float, xi: float) -> int:
    """Period-1 indicator of (0, xi]: u is reduced to (0, 1] first."""
    if not 0 < xi < 1:
        raise ParameterError(f"xi={xi} outside (0, 1)")
    v = u - math.floor(u)
    if v == 0.0:
        v = 1.0
    return 1 if v <= xi else 0


@dataclass(frozen=True, eq=False)
class SmoothingKernel:
    """Trapezoid smoothing of the cut indicator, with truncated Fourier data.

    coeffs holds c_j for j in [-J, J] at offset j + J.
    """

    delta: float
    xi: float
    J: int
    coeffs: np.ndarray

    def coeff(self, j: int) -> complex:
        if abs(j) > self.J:
            raise ParameterError(f"|j|={abs(j)} exceeds truncation J={self.J}")
        return complex(self.coeffs[j + self.J])


def build_kernel(delta: float, xi: float, J: int | None = None) -> SmoothingKernel:
    """Construct the trapezoid kernel; J defaults to ceil(delta^-2)."""
    if not 0 < delta < 0.125:
        raise ParameterError(f"delta={delta} violates 0 < delta < 1/8")
    if not 0 < xi < 1:
        raise ParameterError(f"xi={xi} violates 0 < xi < 1")
    if delta > 0.5 * min(xi, 1 - xi):
        raise ParameterError(
            f"delta={delta} violates delta <= min(xi, 1-xi)/2 = {0.5 * min(xi, 1 - xi)}"
        )
    if J is None:
        J = default_truncation(delta)
    if J < 0:
        raise ParameterError(f"J={J} must be nonnegative")
    if J == 0:
        coeffs = np.array([xi], dtype=np.complex128)
    else:
        js = np.arange(1, J + 1, dtype=np.float64)
        cut = (1 - np.exp(-2j * np.pi * js * xi)) / (2j * np.pi * js)
        box = np.sin(2 * np.pi * js * delta) / (2 * np.pi * js * delta)
        cpos = cut * box
        coeffs = np.concatenate([np.conj(cpos[::-1]), [xi], cpos])
    coeffs.setflags(write=False)
    return SmoothingKernel(delta=float(delta), xi=float(xi), J=int(J), coeffs=coeffs)


def eval_exact(kernel: SmoothingKernel, u):
    """Piecewise-linear trapezoid value at u (scalar or array), no series."""
    d, xi = kernel.delta, kernel.xi
    v = np.asarray(u, dtype=np.float64)
    v = v - np.floor(v)
    out = np.select(
        [v <= d, v >= 1 - d, v <= xi - d, v <= xi + d],
        [(v + d) / (2 * d), (v - (1 - d)) / (2 * d), 1.0, (xi + d - v) / (2 * d)],
        default=0.0,
    )
    return float(out) if np.isscalar(u) or np.ndim(u) == 0 else out


def eval_truncated(kernel: SmoothingKernel, u):
    """Sum of c_j e(ju) over |j| <= J at u (scalar or array).

    The imaginary residue of the two-sided sum is asserted below 1e-9 and
    the real part returned.
    """
    us = np.atleast_1d(np.asarray(u, dtype=np.float64))
    J = kernel.J
    c0 = complex(kernel.coeffs[J])
    out = np.full(us.shape, c0.real, dtype=np.float64)
    if J > 0:
        cpos = kernel.coeffs[J + 1 :]
        cneg = kernel.coeffs[:J][::-1]  # c_{-1}, c_{-2}, ...
        js = np.arange(1, J + 1, dtype=np.float64)
        step = max(1, _EVAL_CHUNK // J)
        for lo in range(0, us.size, step):
            chunk = us.flat[lo : lo + step]
            phases = np.exp(2j * np.pi * np.outer(chunk, js))
            vals = c0 + phases @ cpos + np.conj(phases) @ cneg
            resid = float(np.max(np.abs(vals.imag))) if vals.size else 0.0
            assert resid < 1e-9, f"imaginary residue {resid:g} in truncated series"
            out.flat[lo : lo + step] = vals.real
    return float(out[0]) if np.isscalar(u) or np.ndim(u) == 0 else out.reshape(np.shape(u))
