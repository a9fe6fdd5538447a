"""Exact arithmetic in the Galois ring GR(2^n, m).

The ring is Z_q[X]/(h_q) with q = 2^n, where h_q is the Hensel (Graeffe) lift
of a primitive binary polynomial h_2 of degree m.  Elements are stored as a
dense tuple of m residues mod q over the basis 1, xi, ..., xi^(m-1), constant
term first.  ``xi`` is the residue class of X; it has multiplicative order
N = 2^m - 1.

Besides ring arithmetic this module provides the structural maps used by the
code constructions: the Teichmuller projection ``tau``, the 2-adic digit
decomposition, the Frobenius automorphism, and the reductions ``eta`` (to the
residue field GR(2, m)) and ``mu`` (to GR(2^(n-1), m)).

Example::

    >>> R = make_ring(3, 3)
    >>> R.xi ** 3
    RingElement(GR(8,3), (1, 6, 5))
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from . import polytable


class RingMismatchError(ValueError):
    """Operands belong to different rings."""


class NotAUnitError(ZeroDivisionError):
    """Inversion of an element of the radical 2R."""


class NotPrimitiveError(ValueError):
    """The supplied binary polynomial is not primitive (or not monic)."""


# ---------------------------------------------------------------------------
# Polynomials over Z_{2^n}
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Polynomial:
    """Polynomial with coefficients mod ``modulus``, constant term first."""

    coeffs: tuple[int, ...]
    modulus: int

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) % self.modulus for c in self.coeffs))

    @property
    def degree(self) -> int:
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return -1

    @property
    def n(self) -> int:
        return self.modulus.bit_length() - 1

    def is_monic(self) -> bool:
        return self.degree >= 0 and self.coeffs[self.degree] == 1

    def reduce(self, modulus: int) -> Polynomial:
        return Polynomial(self.coeffs, modulus)

    def signed(self) -> tuple[int, ...]:
        """Coefficients in the centered range (-q/2, q/2]."""
        half = self.modulus // 2
        return tuple(c - self.modulus if c > half else c for c in self.coeffs)

    def _format(self, coeffs: Sequence[int]) -> str:
        terms = []
        for i in range(len(coeffs) - 1, -1, -1):
            c = coeffs[i]
            if c == 0:
                continue
            mono = "" if i == 0 else ("X" if i == 1 else f"X^{i}")
            mag = abs(c)
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if c < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self._format(self.coeffs)

    def signed_str(self) -> str:
        return self._format(self.signed())


def poly_divmod(num: Sequence[int], den: Sequence[int], modulus: int) -> tuple[list[int], list[int]]:
    """Long division of ``num`` by the monic polynomial ``den`` over Z_modulus."""
    den = [c % modulus for c in den]
    while den and den[-1] == 0:
        den.pop()
    if not den or den[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = [c % modulus for c in num]
    dd = len(den) - 1
    quot = [0] * max(len(rem) - dd, 1)
    for i in range(len(rem) - 1, dd - 1, -1):
        c = rem[i]
        if c:
            quot[i - dd] = c
            for j, d in enumerate(den):
                rem[i - dd + j] = (rem[i - dd + j] - c * d) % modulus
    return quot, rem[:dd]


def _prime_factors(x: int) -> list[int]:
    out = []
    p = 2
    while p * p <= x:
        if x % p == 0:
            out.append(p)
            while x % p == 0:
                x //= p
        p += 1
    if x > 1:
        out.append(x)
    return out


def _gf2_mulmod(a: int, b: int, mod: int, deg: int) -> int:
    # carry-less product of bitmask polynomials, reduced by ``mod`` of degree ``deg``
    out = 0
    while b:
        if b & 1:
            out ^= a
        b >>= 1
        a <<= 1
        if a >> deg & 1:
            a ^= mod
    return out


def _gf2_powmod(base: int, e: int, mod: int, deg: int) -> int:
    result = 1
    while e:
        if e & 1:
            result = _gf2_mulmod(result, base, mod, deg)
        base = _gf2_mulmod(base, base, mod, deg)
        e >>= 1
    return result


def is_primitive_binary(coeffs: Sequence[int]) -> bool:
    """True iff the binary polynomial (constant term first) is primitive.

    The root must have multiplicative order exactly 2^m - 1.
    """
    coeffs = [c % 2 for c in coeffs]
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1 or coeffs[0] != 1:
        return False
    mask = sum(1 << i for i, c in enumerate(coeffs) if c)
    N = 2**m - 1
    x = 0b10 if m > 1 else 1
    if _gf2_powmod(x, N, mask, m) != 1:
        return False
    return all(_gf2_powmod(x, N // p, mask, m) != 1 for p in _prime_factors(N))


def _as_binary(h2: Polynomial | Sequence[int]) -> Polynomial:
    coeffs = h2.coeffs if isinstance(h2, Polynomial) else tuple(h2)
    if any(c not in (0, 1) for c in coeffs):
        raise NotPrimitiveError(f"binary polynomial coefficients must be 0/1: {coeffs}")
    poly = Polynomial(coeffs, 2)
    if not poly.is_monic() or poly.degree != len(coeffs) - 1:
        raise NotPrimitiveError("binary polynomial must be monic with no leading zeros")
    if not is_primitive_binary(coeffs):
        raise NotPrimitiveError(f"{poly} is not primitive over GF(2)")
    return poly


def lift_primitive(h2: Polynomial | Sequence[int], n: int) -> Polynomial:
    """Lift a primitive binary polynomial to the primitive basic irreducible over Z_{2^n}.

    Each Graeffe step splits the current polynomial into even and odd parts,
    h(x) = e(x) + d(x), and forms e(x)^2 - d(x)^2 as a polynomial in X = x^2
    modulo the doubled modulus, negated if needed to stay monic.  One step
    gains one 2-adic digit, so the result at level n is exact.

    >>> str(lift_primitive((1, 0, 1, 1), 2))
    'X^3 + 3X^2 + 2X + 3'
    """
    base = _as_binary(h2)
    if n < 1:
        raise ValueError("n must be >= 1")
    m = base.degree
    cur = list(base.coeffs)
    for level in range(2, n + 1):
        mod = 2**level
        even = cur[0::2]
        odd = cur[1::2]
        new = [0] * (m + 1)
        for i, a in enumerate(even):
            for j, b in enumerate(even):
                if i + j <= m:
                    new[i + j] += a * b
        for i, a in enumerate(odd):
            for j, b in enumerate(odd):
                if i + j + 1 <= m:
                    new[i + j + 1] -= a * b
        new = [c % mod for c in new]
        if new[m] == mod - 1:
            new = [(-c) % mod for c in new]
        cur = new
    return Polynomial(tuple(cur), 2**n)


# ---------------------------------------------------------------------------
# The ring
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class RingElement:
    """An element of GR(q, m): ``coeffs[i]`` multiplies xi^i."""

    ring: GaloisRing
    coeffs: tuple[int, ...]

    def __repr__(self) -> str:
        return f"RingElement({self.ring}, {self.coeffs})"

    def __str__(self) -> str:
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            mono = "" if i == 0 else ("xi" if i == 1 else f"xi^{i}")
            terms.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
        return " + ".join(terms) if terms else "0"

    def _coerce(self, other) -> RingElement:
        if isinstance(other, RingElement):
            if other.ring != self.ring:
                raise RingMismatchError(f"{self.ring} vs {other.ring}")
            return other
        if isinstance(other, int):
            return self.ring(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.ring.q
        return RingElement(self.ring, tuple((a + b) % q for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        q = self.ring.q
        return RingElement(self.ring, tuple((-a) % q for a in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.ring._mul(self, other)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        return self.ring.pow(self, e)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def is_unit(self) -> bool:
        return any(c & 1 for c in self.coeffs)


@dataclass(frozen=True)
class TeichmullerDigits:
    """2-adic digits a_0, ..., a_{n-1} of an element, each in the Teichmuller set."""

    digits: tuple[RingElement, ...]

    def __iter__(self) -> Iterator[RingElement]:
        return iter(self.digits)

    def __len__(self) -> int:
        return len(self.digits)

    def __getitem__(self, i: int) -> RingElement:
        return self.digits[i]

    def exponents(self) -> tuple[int, ...]:
        """Discrete logs of the digits, with -1 standing for the zero digit."""
        return tuple(d.ring.teichmuller_exponent(d) for d in self.digits)


class GaloisRing:
    """GR(2^n, m) built from a primitive binary polynomial and its lift.

    Instances are immutable; build them with :func:`make_ring`, which caches
    one instance per ``(n, m, h2)``.  The only per-instance state beyond the
    defining data is a set of lazily filled lookup tables.
    """

    def __init__(self, n: int, m: int, h2: Polynomial, hq: Polynomial):
        self.n = n
        self.m = m
        self.q = 2**n
        self.N = 2**m - 1
        self.k = 2**m - m - 1
        self.h2 = h2
        self.hq = hq
        # xi^m, ..., xi^(2m-2) in the basis, for reduction after schoolbook products
        self._high = []
        tail = [(-c) % self.q for c in hq.coeffs[:m]]
        cur = tail
        for _ in range(m - 1):
            self._high.append(tuple(cur))
            lead = cur[-1]
            cur = [0] + cur[:-1]
            cur = [(c + lead * t) % self.q for c, t in zip(cur, tail)]
        self._xi_table: list[tuple[int, ...]] | None = None
        self._log_table: dict[tuple[int, ...], int] | None = None

    # -- identity -----------------------------------------------------------

    @property
    def key(self) -> tuple[int, int, tuple[int, ...]]:
        return (self.n, self.m, self.hq.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, GaloisRing) and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __repr__(self) -> str:
        return f"GR({self.q},{self.m})"

    def __reduce__(self):
        return (make_ring, (self.n, self.m, self.h2.coeffs))

    # -- construction of elements ------------------------------------------

    def __call__(self, value) -> RingElement:
        if isinstance(value, RingElement):
            if value.ring != self:
                raise RingMismatchError(f"{value.ring} vs {self}")
            return value
        if isinstance(value, int):
            return RingElement(self, (value % self.q,) + (0,) * (self.m - 1))
        coeffs = tuple(int(c) % self.q for c in value)
        if len(coeffs) != self.m:
            raise ValueError(f"expected {self.m} coefficients, got {len(coeffs)}")
        return RingElement(self, coeffs)

    element = __call__

    @property
    def zero(self) -> RingElement:
        return self(0)

    @property
    def one(self) -> RingElement:
        return self(1)

    @property
    def xi(self) -> RingElement:
        return self.xi_pow(1)

    def elements(self) -> Iterator[RingElement]:
        """All q^m elements, in little-endian base-q order of the coefficients."""
        q, m = self.q, self.m
        for idx in range(q**m):
            coeffs = []
            for _ in range(m):
                idx, r = divmod(idx, q)
                coeffs.append(r)
            yield RingElement(self, tuple(coeffs))

    def _check(self, *xs: RingElement) -> None:
        for x in xs:
            if not isinstance(x, RingElement) or x.ring != self:
                raise RingMismatchError(f"element not in {self}: {x!r}")

    # -- arithmetic ---------------------------------------------------------

    def _mul(self, a: RingElement, b: RingElement) -> RingElement:
        m, q = self.m, self.q
        prod = [0] * (2 * m - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    prod[i + j] += x * y
        res = prod[:m]
        for d in range(m, 2 * m - 1):
            c = prod[d]
            if c:
                for t, r in enumerate(self._high[d - m]):
                    res[t] += c * r
        return RingElement(self, tuple(c % q for c in res))

    def add(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a, b)
        return a + b

    def sub(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a, b)
        return a - b

    def neg(self, a: RingElement) -> RingElement:
        self._check(a)
        return -a

    def mul(self, a: RingElement, b: RingElement) -> RingElement:
        self._check(a, b)
        return self._mul(a, b)

    def pow(self, a: RingElement, e: int) -> RingElement:
        self._check(a)
        if e < 0:
            raise ValueError("exponent must be non-negative")
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self._mul(result, base)
            base = self._mul(base, base)
            e >>= 1
        return result

    def invert(self, a: RingElement) -> RingElement:
        """Inverse of a unit by Newton lifting of the residue-field inverse."""
        self._check(a)
        if not a.is_unit():
            raise NotAUnitError(f"{a} lies in the radical 2R")
        field = self.reduce_to(1)
        inv0 = field.pow(eta(self, a), 2**self.m - 2)
        x = self(inv0.coeffs)
        two = self(2)
        for _ in range(math.ceil(math.log2(self.n)) + 1 if self.n > 1 else 1):
            x = self._mul(x, two - self._mul(a, x))
        assert self._mul(a, x) == self.one
        return x

    # -- powers of xi and the Teichmuller set --------------------------------

    def _xi_powers(self) -> list[tuple[int, ...]]:
        if self._xi_table is None:
            table = []
            cur = self.one
            x = RingElement(self, (0, 1) + (0,) * (self.m - 2))
            for _ in range(self.N):
                table.append(cur.coeffs)
                cur = self._mul(cur, x)
            if cur != self.one:
                raise NotPrimitiveError(f"xi^N != 1 in {self}")
            self._xi_table = table
        return self._xi_table

    def xi_pow(self, j: int) -> RingElement:
        return RingElement(self, self._xi_powers()[j % self.N])

    def teichmuller_set(self) -> list[RingElement]:
        """0, 1, xi, ..., xi^(N-1) in that order."""
        return [self.zero] + [RingElement(self, c) for c in self._xi_powers()]

    def teichmuller_exponent(self, x: RingElement) -> int:
        """Discrete log of ``x`` in the Teichmuller set; -1 for zero."""
        self._check(x)
        if not x:
            return -1
        if self._log_table is None:
            self._log_table = {c: j for j, c in enumerate(self._xi_powers())}
        try:
            return self._log_table[x.coeffs]
        except KeyError:
            raise ValueError(f"{x} is not in the Teichmuller set of {self}") from None

    def is_teichmuller(self, x: RingElement) -> bool:
        self._check(x)
        return not x or self.pow(x, self.N) == self.one

    def validate_order(self) -> None:
        """Raise unless xi has multiplicative order exactly N."""
        xi = self.xi
        if self.pow(xi, self.N) != self.one:
            raise NotPrimitiveError(f"xi^N != 1 in {self}")
        for p in _prime_factors(self.N):
            if self.pow(xi, self.N // p) == self.one:
                raise NotPrimitiveError(f"xi^(N/{p}) == 1 in {self}")

    # -- tower ----------------------------------------------------------------

    def reduce_to(self, level: int) -> GaloisRing:
        """The ring GR(2^level, m) over the same binary polynomial."""
        if not 1 <= level <= self.n:
            raise ValueError(f"level must lie in [1, {self.n}]")
        return make_ring(level, self.m, self.h2.coeffs)

    def lift_to(self, level: int) -> GaloisRing:
        if level < self.n:
            raise ValueError("use reduce_to for lower levels")
        return make_ring(level, self.m, self.h2.coeffs)


# module-level spellings of the ring operations


def add(ring: GaloisRing, a: RingElement, b: RingElement) -> RingElement:
    return ring.add(a, b)


def sub(ring: GaloisRing, a: RingElement, b: RingElement) -> RingElement:
    return ring.sub(a, b)


def neg(ring: GaloisRing, a: RingElement) -> RingElement:
    return ring.neg(a)


def mul(ring: GaloisRing, a: RingElement, b: RingElement) -> RingElement:
    return ring.mul(a, b)


def power(ring: GaloisRing, a: RingElement, e: int) -> RingElement:
    return ring.pow(a, e)


def invert(ring: GaloisRing, a: RingElement) -> RingElement:
    return ring.invert(a)


def xi_pow(ring: GaloisRing, j: int) -> RingElement:
    return ring.xi_pow(j)


def teichmuller_set(ring: GaloisRing) -> list[RingElement]:
    return ring.teichmuller_set()


def _frob_power(ring: GaloisRing, x: RingElement) -> RingElement:
    # x -> x^(2^m) by m squarings
    for _ in range(ring.m):
        x = ring._mul(x, x)
    return x


def tau(ring: GaloisRing, c: RingElement) -> RingElement:
    """Teichmuller projection: the unique member of the Teichmuller set congruent to c mod 2.

    Iterates c -> c^(2^m) to a fixpoint.  For n <= m + 1 one step suffices.
    """
    ring._check(c)
    x = c
    for _ in range(ring.n + 1):
        y = _frob_power(ring, x)
        if y == x:
            return x
        x = y
    raise ArithmeticError(f"tau did not converge for {c}")


def two_adic_decompose(ring: GaloisRing, c: RingElement) -> TeichmullerDigits:
    """Digits a_i in the Teichmuller set with c = a_0 + 2 a_1 + ... + 2^(n-1) a_(n-1)."""
    ring._check(c)
    digits = []
    x = c
    for _ in range(ring.n):
        a = tau(ring, x)
        digits.append(a)
        diff = (x - a).coeffs
        x = RingElement(ring, tuple(d // 2 for d in diff))
    return TeichmullerDigits(tuple(digits))


def recompose(ring: GaloisRing, digits: Iterable[RingElement]) -> RingElement:
    total = ring.zero
    for i, a in enumerate(digits):
        ring._check(a)
        total = total + (2**i) * a
    return total


def frobenius(ring: GaloisRing, c: RingElement) -> RingElement:
    """The Frobenius automorphism: square every 2-adic digit."""
    return recompose(ring, (ring._mul(a, a) for a in two_adic_decompose(ring, c)))


def eta(ring: GaloisRing, c: RingElement) -> RingElement:
    """Reduction to the residue field GR(2, m); sends xi to the binary root theta."""
    ring._check(c)
    return ring.reduce_to(1)(tuple(x & 1 for x in c.coeffs))


def mu(ring: GaloisRing, c: RingElement) -> RingElement:
    """Reduction to GR(q/2, m); sends xi_q to xi_(q/2)."""
    ring._check(c)
    if ring.n < 2:
        raise ValueError("mu needs n >= 2")
    return ring.reduce_to(ring.n - 1)(c.coeffs)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------


def _lift_checked(h2: tuple[int, ...], n: int) -> Polynomial:
    hq = lift_primitive(h2, n)
    m = len(h2) - 1
    N = 2**m - 1
    xN1 = [-1] + [0] * (N - 1) + [1]
    _, rem = poly_divmod(xN1, hq.coeffs, hq.modulus)
    if any(rem):
        raise NotPrimitiveError(f"lift {hq} does not divide X^{N} - 1 mod {hq.modulus}")
    pinned = polytable.pinned_lift(m, n, h2)
    if pinned is not None and pinned != hq.coeffs:
        raise polytable.PolyTableError(
            f"table pins lift {pinned} for m={m}, n={n} but the computed lift is {hq.coeffs}"
        )
    return hq


@lru_cache(maxsize=None)
def _make_ring(n: int, m: int, h2: tuple[int, ...]) -> GaloisRing:
    h2poly = _as_binary(h2)
    hq = _lift_checked(h2poly.coeffs, n)
    ring = GaloisRing(n, m, h2poly, hq)
    ring.validate_order()
    return ring


def make_ring(n: int, m: int, h2: Sequence[int] | Polynomial | None = None) -> GaloisRing:
    """Build (or fetch from cache) GR(2^n, m).

    ``h2`` is the primitive binary polynomial, constant term first; it
    defaults to the table entry for ``m`` (X^3 + X^2 + 1 for m = 3,
    X^4 + X + 1 for m = 4).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if m < 2:
        raise ValueError("m must be >= 2")
    if h2 is None:
        h2 = polytable.default_binary_polynomial(m)
    coeffs = tuple(h2.coeffs if isinstance(h2, Polynomial) else (int(c) for c in h2))
    if len(coeffs) != m + 1:
        raise ValueError(f"h2 must have degree {m}")
    return _make_ring(n, m, coeffs)


RingParams = GaloisRing
