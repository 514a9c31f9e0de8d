"""Bounded weight sequences: maps n -> a_n with |a_n| <= 1.

Four kinds are supported.  `ones` and `moebius` are self-explanatory;
`random_unit` puts a_n = e(theta_n) where theta_n in [0,1) comes from a
splitmix64-style hash of (seed, n), so the value at n is a pure function of
(seed, n) and never depends on evaluation order; `file` reads explicit
values from a CSV with columns n,re,im (absent n means a_n = 0) and rejects
any entry with |a_n| > 1.
"""

import csv
import math
from pathlib import Path

import numpy as np

from .errors import ParameterError
from .smoothsieve import primes_upto

_GOLDEN = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_TWO64 = float(2**64)


def _splitmix64(z: np.ndarray) -> np.ndarray:
    z = z + _GOLDEN
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def _moebius_table(limit: int) -> np.ndarray:
    """mu(n) for n = 0..limit (mu(0) unused), via the factor sieve's primes."""
    mu = np.ones(limit + 1, dtype=np.int64)
    for p in primes_upto(limit):
        p = int(p)
        mu[p::p] *= -1
        if p * p <= limit:
            mu[p * p :: p * p] = 0
    return mu


class WeightSequence:
    """Deterministic accessor for a weight family; use the factory functions."""

    def __init__(self, kind: str, seed: int | None = None, table: dict | None = None, label: str | None = None):
        self.kind = kind
        self.seed = seed
        self._table = table
        self.label = label or kind
        self._mu = None  # cached (limit, table)

    def __repr__(self):
        return f"WeightSequence({self.label})"

    def values(self, ns: np.ndarray) -> np.ndarray:
        """a_n for an int64 array of indices, as complex128."""
        ns = np.asarray(ns, dtype=np.int64)
        if self.kind == "ones":
            return np.ones(ns.shape, dtype=np.complex128)
        if self.kind == "moebius":
            limit = int(ns.max()) if ns.size else 1
            if self._mu is None or self._mu[0] < limit:
                self._mu = (limit, _moebius_table(limit))
            return self._mu[1][ns].astype(np.complex128)
        if self.kind == "random_unit":
            seed = np.uint64(self.seed & 0xFFFFFFFFFFFFFFFF)
            mixed = _splitmix64(seed + ns.astype(np.uint64) * _GOLDEN)
            theta = mixed.astype(np.float64) / _TWO64
            return np.exp(2j * np.pi * theta)
        # file-backed
        return np.array([self._table.get(int(n), 0j) for n in ns], dtype=np.complex128)

    def value(self, n: int) -> complex:
        return complex(self.values(np.array([n], dtype=np.int64))[0])


def ones() -> WeightSequence:
    return WeightSequence("ones")


def moebius() -> WeightSequence:
    return WeightSequence("moebius")


def random_unit(seed: int) -> WeightSequence:
    return WeightSequence("random_unit", seed=int(seed), label=f"random_unit(seed={int(seed)})")


def from_file(path) -> WeightSequence:
    """Load a_n from CSV columns n,re,im; entries must satisfy |a_n| <= 1."""
    path = Path(path)
    table: dict[int, complex] = {}
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames is None or not {"n", "re", "im"} <= set(reader.fieldnames):
            raise ParameterError(f"weight file {path} must have columns n,re,im")
        for row in reader:
            n = int(row["n"])
            a = complex(float(row["re"]), float(row["im"]))
            if math.hypot(a.real, a.imag) > 1 + 1e-12:
                raise ParameterError(f"weight file {path}: |a_{n}| = {abs(a):.6g} exceeds 1")
            table[n] = a
    return WeightSequence("file", table=table, label=f"file({path})")


def by_name(spec: str, seed: int = 0) -> WeightSequence:
    """Parse a CLI weight spec: ones | moebius | random_unit | file:PATH."""
    if spec == "ones":
        return ones()
    if spec == "moebius":
        return moebius()
    if spec == "random_unit":
        return random_unit(seed)
    if spec.startswith("file:"):
        return from_file(spec[5:])
    raise ParameterError(f"unknown weight kind {spec!r}")
