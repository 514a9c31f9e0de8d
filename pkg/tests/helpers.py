"""Independent oracles for the test suite.

Everything here recomputes from first principles (trial division, direct
divisor sums, python-scalar accumulation) and never calls into the
production sieve/scan paths it is used to check.
"""

import math


def primes_upto_oracle(limit: int) -> list[int]:
    out = []
    for n in range(2, limit + 1):
        if all(n % p for p in out if p * p <= n):
            out.append(n)
    return out


def is_smooth_oracle(n: int, primes: list[int], y: int) -> bool:
    """Trial division by the primes <= y; smooth iff the cofactor reaches 1."""
    for p in primes:
        while n % p == 0:
            n //= p
        if n == 1:
            return True
        if p * p > n:
            # remaining cofactor is prime; primes list covers everything <= y
            return n <= y
    return n == 1


def smooth_members_oracle(x: int, y: int) -> list[int]:
    primes = primes_upto_oracle(y)
    return [n for n in range(1, x + 1) if is_smooth_oracle(n, primes, y)]


def moebius_oracle(n: int) -> int:
    if n == 1:
        return 1
    mu = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            mu = -mu
        d += 1
    if n > 1:
        mu = -mu
    return mu


def euler_phi_oracle(n: int) -> int:
    count = 0
    for k in range(1, n + 1):
        if math.gcd(k, n) == 1:
            count += 1
    return count


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def primitive_count_oracle(q: int) -> int:
    """Number of primitive characters mod q as sum_{d|q} mu(d) phi(q/d)."""
    return sum(moebius_oracle(d) * euler_phi_oracle(q // d) for d in divisors(q))


def brute_force_exceptional(x, y, z, Q, delta, c, chars_by_q, weight_fn):
    """Double loop over (pair, integer t in [z, x]), python-scalar state.

    chars_by_q: {q: list of (chi_index, eval callable)}; weight_fn: n -> complex.
    Returns (E, {(q, chi_index) flagged}).  The threshold compares squared
    magnitudes against (c*delta*psi)^2 exactly like the production scan.
    """
    primes = primes_upto_oracle(y)
    thr = c * delta
    sums = {(q, idx): 0j for q, lst in chars_by_q.items() for idx, _ in lst}
    flagged = set()
    count = 0
    for t in range(1, x + 1):
        if is_smooth_oracle(t, primes, y):
            count += 1
            a = weight_fn(t)
            for q, lst in chars_by_q.items():
                for idx, ev in lst:
                    sums[(q, idx)] += a * ev(t)
        if t >= z:
            cap = (thr * count) ** 2
            for key, s in sums.items():
                if key not in flagged and s.real**2 + s.imag**2 > cap:
                    flagged.add(key)
    return len(flagged), flagged


def brute_force_dgs_fixed(x, y, Q, beta, chars_by_q, weight_fn):
    """Same double loop for the fixed-u inverse-power criterion on [x^1/4, x]."""
    primes = primes_upto_oracle(y)
    u = math.log(x) / math.log(y)
    d = (u * math.log(u)) ** 4 * math.log(x) ** beta
    z = x**0.25
    zfloor = math.floor(z)
    sums = {(q, idx): 0j for q, lst in chars_by_q.items() for idx, _ in lst}
    flagged = set()
    count = 0
    for t in range(1, x + 1):
        if is_smooth_oracle(t, primes, y):
            count += 1
            a = weight_fn(t)
            for q, lst in chars_by_q.items():
                for idx, ev in lst:
                    sums[(q, idx)] += a * ev(t)
        if t >= zfloor:  # state after floor(z) covers the real t in [z, floor(z)+1)
            cap = float(count) ** 2
            for key, s in sums.items():
                if key not in flagged and (s.real**2 + s.imag**2) * d**2 >= cap:
                    flagged.add(key)
    return len(flagged), flagged
