"""Generalized extended Hamming (GEH) codes P_q over Z_q, q = 2^n.

Coordinates are indexed (inf, 0, 1, ..., N-1) everywhere; position 0 of an
entry tuple holds c_inf and position 1 + i holds c_i.  The parity-check
matrix has an all-ones first row, and below it column inf is zero and
column i is the basis expansion of xi^i.  A word is in P_q iff

    c_inf + sum_i c_i = 0   and   sum_i c_i xi^i = 0.

Coordinates 0..m-1 carry the identity block, so the code is systematic on
coordinates m..N-1 and has q^k words, k = 2^m - m - 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

import numpy as np

from .ring import GaloisRing, RingElement


class NotACodewordError(ValueError):
    """A word required to lie in the code does not."""


@dataclass(frozen=True)
class WeightReport:
    hamming: int
    lee: int
    profile: tuple[int, ...]


def lee_value(x: int, q: int) -> int:
    x %= q
    return min(x, q - x)


def weight_report(entries: Sequence[int], q: int) -> WeightReport:
    profile = [0] * q
    for x in entries:
        profile[x % q] += 1
    hamming = len(entries) - profile[0]
    lee = sum(cnt * min(i, q - i) for i, cnt in enumerate(profile))
    return WeightReport(hamming, lee, tuple(profile))


@dataclass(frozen=True)
class Codeword:
    """A length-2^m word over Z_q in (inf, 0, ..., N-1) order."""

    entries: tuple[int, ...]
    q: int

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(int(x) % self.q for x in self.entries))

    @cached_property
    def weight(self) -> WeightReport:
        return weight_report(self.entries, self.q)

    @property
    def hamming(self) -> int:
        return self.weight.hamming

    @property
    def lee(self) -> int:
        return self.weight.lee

    @property
    def c_inf(self) -> int:
        return self.entries[0]

    def finite(self, i: int) -> int:
        return self.entries[1 + i]

    def __len__(self) -> int:
        return len(self.entries)

    def __neg__(self) -> Codeword:
        return Codeword(tuple(-x for x in self.entries), self.q)

    def __add__(self, other: Codeword) -> Codeword:
        if other.q != self.q or len(other) != len(self):
            raise ValueError("codewords of different shape")
        return Codeword(tuple(a + b for a, b in zip(self.entries, other.entries)), self.q)

    def __str__(self) -> str:
        return format_word(self.entries)

    def shift(self, s: int) -> Codeword:
        """Cyclic shift of the finite coordinates, i -> i + s mod N (c_inf fixed)."""
        N = len(self.entries) - 1
        finite = self.entries[1:]
        out = [0] * N
        for i, x in enumerate(finite):
            out[(i + s) % N] = x
        return Codeword((self.entries[0], *out), self.q)


def format_word(entries: Sequence[int]) -> str:
    return ",".join(str(int(x)) for x in entries)


def parse_word(text: str) -> tuple[int, ...]:
    """Parse the comma-separated codeword text format (inf first)."""
    parts = [p.strip() for p in text.split(",")]
    if not parts or any(p == "" for p in parts):
        raise ValueError(f"malformed word: {text!r}")
    try:
        return tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"malformed word: {text!r}") from None


class GEHCode:
    """The GEH code P_q over a given Galois ring.

    Build instances with :func:`build_code`.
    """

    def __init__(self, ring: GaloisRing):
        self.ring = ring
        m, N, q = ring.m, ring.N, ring.q
        self.length = N + 1
        parity = np.zeros((m + 1, N + 1), dtype=np.int64)
        parity[0, :] = 1
        for i in range(N):
            parity[1:, 1 + i] = ring.xi_pow(i).coeffs
        parity.setflags(write=False)
        self.parity = parity
        # row r: unit information symbol at coordinate m + r, completed
        gen = np.zeros((ring.k, N + 1), dtype=np.int64)
        for r in range(ring.k):
            col = 1 + m + r
            gen[r, col] = 1
            gen[r, 1 : 1 + m] = (-parity[1:, col]) % q
            gen[r, 0] = (-gen[r, 1:].sum()) % q
        gen.setflags(write=False)
        self.generator = gen

    def __repr__(self) -> str:
        return f"GEHCode(P_{self.q}, m={self.m})"

    n = property(lambda self: self.ring.n)
    m = property(lambda self: self.ring.m)
    q = property(lambda self: self.ring.q)
    k = property(lambda self: self.ring.k)
    N = property(lambda self: self.ring.N)

    def column(self, index: int) -> tuple[int, ...]:
        """Parity column at entry position ``index`` (0 is inf)."""
        return tuple(int(x) for x in self.parity[:, index])

    def _entries(self, word: Codeword | Sequence[int]) -> tuple[int, ...]:
        entries = word.entries if isinstance(word, Codeword) else tuple(int(x) for x in word)
        if len(entries) != self.length:
            raise ValueError(f"word has length {len(entries)}, code length is {self.length}")
        return tuple(x % self.q for x in entries)

    def codeword(self, word: Codeword | Sequence[int]) -> Codeword:
        return Codeword(self._entries(word), self.q)

    def check_vector(self, word: Codeword | Sequence[int]) -> tuple[int, ...]:
        """P c^T mod q: the zero-sum residue followed by the xi-sum coefficients."""
        c = np.asarray(self._entries(word), dtype=np.int64)
        return tuple(int(x) for x in (self.parity @ c) % self.q)

    def syndrome(self, word: Codeword | Sequence[int]) -> tuple[int, RingElement]:
        vec = self.check_vector(word)
        return vec[0], self.ring(vec[1:])

    def is_codeword(self, word: Codeword | Sequence[int]) -> bool:
        return not any(self.check_vector(word))

    def syndromes(self, words: np.ndarray) -> np.ndarray:
        """Row-wise check vectors for a 2-D array of words."""
        return (np.asarray(words, dtype=np.int64) @ self.parity.T) % self.q

    def encode(self, info: Sequence[int]) -> Codeword:
        """Systematic encoding: ``info`` lands verbatim on coordinates m..N-1."""
        info = tuple(int(x) % self.q for x in info)
        if len(info) != self.k:
            raise ValueError(f"info has length {len(info)}, expected k = {self.k}")
        m, q = self.m, self.q
        c = [0] * self.length
        c[1 + m :] = info
        for j in range(m):
            c[1 + j] = -sum(x * int(self.parity[1 + j, 1 + m + r]) for r, x in enumerate(info)) % q
        c[0] = -sum(c[1:]) % q
        return Codeword(tuple(c), q)

    def weight(self, word: Codeword | Sequence[int]) -> WeightReport:
        if isinstance(word, Codeword) and word.q == self.q:
            return word.weight
        return weight_report(self._entries(word), self.q)

    def report(self, word: Codeword | Sequence[int]) -> dict:
        """The JSON-ready membership and weight report for ``word``."""
        entries = self._entries(word)
        w = weight_report(entries, self.q)
        return {
            "n": self.n,
            "m": self.m,
            "word": list(entries),
            "member": self.is_codeword(entries),
            "hamming": w.hamming,
            "lee": w.lee,
            "profile": list(w.profile),
        }


@lru_cache(maxsize=None)
def build_code(ring: GaloisRing) -> GEHCode:
    return GEHCode(ring)


def double_embed(code: GEHCode, word: Codeword | Sequence[int]) -> Codeword:
    """Map c in P_q to 2c in P_2q (Hamming weight kept, Lee weight doubled)."""
    entries = code._entries(word)
    if not code.is_codeword(entries):
        raise NotACodewordError(f"{format_word(entries)} is not in P_{code.q}")
    target = build_code(code.ring.lift_to(code.n + 1))
    out = target.codeword(tuple(2 * x for x in entries))
    if not target.is_codeword(out):
        raise NotACodewordError(f"2c = {out} is not in P_{target.q}")
    return out


def mu_project(code: GEHCode, word: Codeword | Sequence[int]) -> Codeword:
    """Reduce c in P_q entrywise mod q/2, landing in P_(q/2)."""
    if code.n < 2:
        raise ValueError("mu_project needs n >= 2")
    entries = code._entries(word)
    if not code.is_codeword(entries):
        raise NotACodewordError(f"{format_word(entries)} is not in P_{code.q}")
    target = build_code(code.ring.reduce_to(code.n - 1))
    out = target.codeword(entries)
    if not target.is_codeword(out):
        raise NotACodewordError(f"mu(c) = {out} is not in P_{target.q}")
    return out
