"""Multiplicative character groups modulo q.

Representation: (Z/qZ)* is split into cyclic factors, one per odd prime
power p^e | q (generated by a primitive root), plus, for the 2-part,
nothing (2^1), the order-2 factor <-1> (2^2), or the pair <-1> x <5> of
orders 2 and 2^(e-2) (2^e, e >= 3).  Each factor carries a discrete-log
table over its prime power, so evaluating a character at a unit is one
table lookup per factor.

A character is the vector of its exponents a_i against these factors; its
value at a unit u is e(sum_i a_i * dlog_i(u) / d_i).  The phase is carried
as an exact rational num/L with L = lcm(d_i) and only rendered to a complex
double through a shared table of the L-th roots of unity, so long sums see
one rounding per term instead of accumulated phase error.
"""

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import ParameterError, RangeError

MAX_Q = 10**6


def factorize(n: int) -> list[tuple[int, int]]:
    """(prime, exponent) pairs of n >= 1 by trial division, primes ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1 if d == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


def euler_phi(n: int) -> int:
    phi = 1
    for p, e in factorize(n):
        phi *= p ** (e - 1) * (p - 1)
    return phi


def _primitive_root_mod_pe(p: int, e: int) -> int:
    """Smallest primitive root mod p, lifted to p^e (odd p only)."""
    order = p - 1
    prime_divs = [r for r, _ in factorize(order)]
    g = 2
    while any(pow(g, order // r, p) == 1 for r in prime_divs):
        g += 1
    if e >= 2 and pow(g, p - 1, p * p) == 1:
        g += p
    return g


@dataclass(frozen=True, eq=False)
class CyclicFactor:
    """One cyclic factor of (Z/qZ)* living inside the component mod p^e."""

    prime: int
    prime_exp: int
    modulus: int  # p^e
    generator: int
    order: int
    dlog: np.ndarray  # length modulus; dlog[u] = k with value(gen)^k matching u


def _component_factors(p: int, e: int) -> list[CyclicFactor]:
    pe = p**e
    if p == 2:
        if e == 1:
            return []
        if e == 2:
            dlog = np.full(4, -1, dtype=np.int64)
            dlog[1], dlog[3] = 0, 1
            return [CyclicFactor(2, 2, 4, 3, 2, dlog)]
        # e >= 3: units are (-1)^s * 5^k with s in {0,1}, k in [0, 2^(e-2)).
        half = pe >> 2
        dlog_sign = np.full(pe, -1, dtype=np.int64)
        dlog_five = np.full(pe, -1, dtype=np.int64)
        v = 1
        for k in range(half):
            dlog_sign[v], dlog_five[v] = 0, k
            w = pe - v  # -v mod 2^e
            dlog_sign[w], dlog_five[w] = 1, k
            v = (v * 5) % pe
        return [
            CyclicFactor(2, e, pe, pe - 1, 2, dlog_sign),
            CyclicFactor(2, e, pe, 5, half, dlog_five),
        ]
    g = _primitive_root_mod_pe(p, e)
    order = pe // p * (p - 1)
    dlog = np.full(pe, -1, dtype=np.int64)
    v = 1
    for k in range(order):
        dlog[v] = k
        v = (v * g) % pe
    return [CyclicFactor(p, e, pe, g, order, dlog)]


@dataclass(frozen=True, eq=False)
class CharacterGroup:
    """The group of multiplicative characters mod q with its dlog tables."""

    q: int
    factorization: tuple[tuple[int, int], ...]
    factors: tuple[CyclicFactor, ...]
    order: int  # phi(q)

    @property
    def generators(self) -> tuple[int, ...]:
        return tuple(f.generator for f in self.factors)

    @property
    def index_tables(self) -> tuple[np.ndarray, ...]:
        return tuple(f.dlog for f in self.factors)

    @cached_property
    def exponent(self) -> int:
        """lcm of the factor orders (1 for the trivial group)."""
        return math.lcm(*(f.order for f in self.factors)) if self.factors else 1

    @cached_property
    def _roots(self) -> np.ndarray:
        """e(k/L) for k = 0..L-1; shared by every character of the group.

        Quarter-turn phases are snapped to their exact values so real and
        quartic character values carry no rounding noise.
        """
        L = self.exponent
        roots = np.exp(2j * np.pi * np.arange(L) / L)
        roots[0] = 1.0
        if L % 2 == 0:
            roots[L // 2] = -1.0
        if L % 4 == 0:
            roots[L // 4] = 1j
            roots[3 * L // 4] = -1j
        roots.setflags(write=False)
        return roots

    @cached_property
    def _unit_mask(self) -> np.ndarray:
        return np.gcd(np.arange(self.q, dtype=np.int64), self.q) == 1

    @cached_property
    def _factor_dlogs_full(self) -> tuple[np.ndarray, ...]:
        """Per factor, dlog indexed by residue mod q (junk at non-units)."""
        r = np.arange(self.q, dtype=np.int64)
        return tuple(np.where(f.dlog[r % f.modulus] >= 0, f.dlog[r % f.modulus], 0) for f in self.factors)


def build_group(q: int) -> CharacterGroup:
    """Structure (Z/qZ)* and precompute its per-prime-power dlog tables."""
    if not 1 <= q <= MAX_Q:
        raise RangeError(f"q={q} outside supported range [1, {MAX_Q}]")
    fact = tuple(factorize(q))
    factors = []
    for p, e in fact:
        factors.extend(_component_factors(p, e))
    return CharacterGroup(q=q, factorization=fact, factors=tuple(factors), order=euler_phi(q))


def _value_order(factors, exponents) -> int:
    return math.lcm(*(f.order // math.gcd(f.order, a) for f, a in zip(factors, exponents))) if factors else 1


def _conductor(group: CharacterGroup, exponents: tuple[int, ...]) -> int:
    """Smallest q' | q through which the character factors, component-wise.

    Odd p^e: the restriction has order t | p^(e-1)(p-1); it factors through
    p^f iff t | phi(p^f), so the contribution is p^(v_p(t)+1) (1 if t = 1).
    2^e, e >= 3: a nontrivial 5-part of order 2^v forces 2^(v+2); otherwise a
    nontrivial sign part is the character mod 4.
    """
    cond = 1
    i = 0
    for p, e in group.factorization:
        if p == 2:
            if e == 1:
                continue
            if e == 2:
                if exponents[i] % 2 != 0:
                    cond *= 4
                i += 1
                continue
            a, b = exponents[i], exponents[i + 1]
            order5 = group.factors[i + 1].order
            t5 = order5 // math.gcd(order5, b)
            if t5 > 1:
                cond *= 4 * t5
            elif a % 2 != 0:
                cond *= 4
            i += 2
        else:
            f = group.factors[i]
            t = f.order // math.gcd(f.order, exponents[i])
            if t > 1:
                vp = 0
                while t % p == 0:
                    t //= p
                    vp += 1
                cond *= p ** (vp + 1)
            i += 1
    return cond


@dataclass(frozen=True, eq=False)
class Character:
    """One multiplicative character mod q, identified by its exponent vector."""

    group: CharacterGroup
    exponents: tuple[int, ...]
    index: int  # position in the lexicographic enumeration; 0 = principal
    order: int
    conductor: int
    is_primitive: bool

    @property
    def q(self) -> int:
        return self.group.q

    @cached_property
    def _phase_weights(self) -> tuple[int, ...]:
        L = self.group.exponent
        return tuple(a * (L // f.order) for f, a in zip(self.group.factors, self.exponents))

    def eval(self, n: int) -> complex:
        """chi(n): 0 when gcd(n, q) > 1, else the exact root of unity."""
        if n < 0:
            raise ParameterError(f"n={n} must be nonnegative")
        q = self.group.q
        if q == 1:
            return 1 + 0j
        r = n % q
        if math.gcd(r, q) != 1:
            return 0j
        num = 0
        for f, w in zip(self.group.factors, self._phase_weights):
            num += w * int(f.dlog[r % f.modulus])
        return complex(self.group._roots[num % self.group.exponent])

    __call__ = eval

    @cached_property
    def value_table(self) -> np.ndarray:
        """chi(r) for every residue r in [0, q), as a complex128 array."""
        g = self.group
        if not g.factors:
            table = np.where(g._unit_mask, 1.0 + 0j, 0j)
        else:
            L = g.exponent
            num = np.zeros(g.q, dtype=np.int64)
            for w, dlog_full in zip(self._phase_weights, g._factor_dlogs_full):
                num += w * dlog_full
            table = g._roots[num % L]
            table = np.where(g._unit_mask, table, 0j)
        table.setflags(write=False)
        return table

    def to_dict(self) -> dict:
        return {
            "q": self.group.q,
            "exponents": list(self.exponents),
            "order": self.order,
            "conductor": self.conductor,
            "is_primitive": self.is_primitive,
        }


def enumerate_characters(group: CharacterGroup) -> list[Character]:
    """All phi(q) characters, lexicographic in exponent vector, principal first."""
    chars = []
    ranges = [range(f.order) for f in group.factors]
    for idx, exps in enumerate(itertools.product(*ranges)):
        cond = _conductor(group, exps)
        chars.append(
            Character(
                group=group,
                exponents=exps,
                index=idx,
                order=_value_order(group.factors, exps),
                conductor=cond,
                is_primitive=cond == group.q,
            )
        )
    return chars


def primitive_characters(group: CharacterGroup) -> list[Character]:
    return [chi for chi in enumerate_characters(group) if chi.is_primitive]


def conductor(chi: Character) -> int:
    """Smallest modulus q' | q such that chi factors through (Z/q'Z)*."""
    return chi.conductor
