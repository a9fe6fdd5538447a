"""Explicit minimum-weight codewords and the gamma-power dependency checks.

Three families are built here:

* binary extended Hamming words of weight 4 and 6, from column sums of the
  parity-check matrix over GF(2^m);
* the twelve minimum-Lee-weight patterns of P_4 (cases 1-10 for odd m with
  Lee weight 6, cases 11-12 for even m with Lee weight 4);
* Lee-weight-6 words of P_8, either lifted from a case-1 support (any m) or
  from the cube-root-of-unity relation 1 + xi^t + xi^(2t) = 0 (even m).

Supports are given as exponents; coordinate 0 always carries the first
finite value of a pattern, which is no loss of generality because cyclic
shifts of the finite coordinates preserve the code.  Where a pattern has a
coordinate holding 2 (cases 1, 2, 4), that coordinate is not supplied but
read off the 2-adic digits of the partial xi-sum.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .code import Codeword, NotACodewordError, build_code
from .ring import GaloisRing, RingElement, two_adic_decompose


class RelationError(ValueError):
    """The supplied support does not satisfy the relation its case needs."""


class DegenerateSupportError(ValueError):
    """The determined coordinate collides with the supplied support."""


def discrete_log(ring: GaloisRing, x: RingElement) -> int:
    """Exponent j in [0, N-1] with xi^j == x, for nonzero x in the Teichmuller set."""
    if not x:
        raise ValueError("discrete_log of zero")
    return ring.teichmuller_exponent(x)


# ---------------------------------------------------------------------------
# Binary extended Hamming words
# ---------------------------------------------------------------------------


def _binary_word(field: GaloisRing, ones: Sequence[int], with_inf: bool) -> Codeword:
    entries = [0] * (field.N + 1)
    if with_inf:
        entries[0] = 1
    for i in ones:
        entries[1 + i] = 1
    return Codeword(tuple(entries), 2)


def hamming_weight4_word(ring: GaloisRing) -> Codeword:
    """Ones at inf, 0, 1 and i with theta^i = 1 + theta."""
    field = ring.reduce_to(1)
    i = discrete_log(field, field.one + field.xi)
    word = _binary_word(field, (0, 1, i), with_inf=True)
    assert build_code(field).is_codeword(word)
    return word


def hamming_weight6_word(ring: GaloisRing) -> Codeword:
    """Ones at inf, 0, 1, 2, 3 and i with theta^i = 1 + theta + theta^2 + theta^3."""
    if ring.m < 4:
        raise ValueError("the weight-6 construction needs m >= 4")
    field = ring.reduce_to(1)
    total = field.one + field.xi_pow(1) + field.xi_pow(2) + field.xi_pow(3)
    if not total:
        raise DegenerateSupportError("1 + theta + theta^2 + theta^3 = 0")
    i = discrete_log(field, total)
    if i in (0, 1, 2, 3):
        raise DegenerateSupportError(f"log target {i} collides with 0..3")
    word = _binary_word(field, (0, 1, 2, 3, i), with_inf=True)
    assert build_code(field).is_codeword(word)
    return word


# ---------------------------------------------------------------------------
# P_4 minimum-Lee-weight patterns
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CaseDescriptor:
    """One row of the minimum-Lee-weight tables of P_4.

    ``finite_values`` lists c_0 first, then the values at the supplied
    support in order; if ``determined`` is set, a trailing 2 sits at a
    coordinate computed from the digits.
    """

    case_id: int
    c_inf_value: int
    finite_values: tuple[int, ...]
    parity_of_m: str
    determined: bool = False

    @property
    def support_size(self) -> int:
        return len(self.finite_values) - 1

    @property
    def lee_weight(self) -> int:
        return 6 if self.parity_of_m == "odd" else 4

    def signature(self) -> tuple[int, tuple[int, ...]]:
        values = list(self.finite_values) + ([2] if self.determined else [])
        return self.c_inf_value % 4, tuple(sorted(v % 4 for v in values))

    def finite_value_multiset(self) -> tuple[int, ...]:
        return self.signature()[1]


CASES: dict[int, CaseDescriptor] = {
    d.case_id: d
    for d in (
        CaseDescriptor(1, -1, (1, 1, 1), "odd", determined=True),
        CaseDescriptor(2, 1, (-1, 1, 1), "odd", determined=True),
        CaseDescriptor(3, 2, (-1, 1, 1, 1), "odd"),
        CaseDescriptor(4, 0, (-1, 1, 1, 1), "odd", determined=True),
        CaseDescriptor(5, 0, (-1, 1, 1, 1, 1, 1), "odd"),
        CaseDescriptor(6, 0, (-1, -1, -1, 1, 1, 1), "odd"),
        CaseDescriptor(7, -1, (1, 1, 1, 1, 1), "odd"),
        CaseDescriptor(8, 1, (-1, 1, 1, 1, 1), "odd"),
        CaseDescriptor(9, -1, (-1, -1, 1, 1, 1), "odd"),
        CaseDescriptor(10, 1, (-1, -1, -1, 1, 1), "odd"),
        CaseDescriptor(11, 1, (1, 1, 1), "even"),
        CaseDescriptor(12, 0, (1, 1, 1, 1), "even"),
    )
}


@dataclass(frozen=True)
class SupportRelation:
    """Exponents of the supplied support (coordinate 0 excluded)."""

    exponents: tuple[int, ...]
    relation_kind: str = "plain"
    t: int | None = None


@dataclass(frozen=True)
class Construction:
    word: Codeword
    case: int | str
    support: dict = field(default_factory=dict)


def _parity(m: int) -> str:
    return "odd" if m % 2 else "even"


def _coerce_support(support) -> tuple[int, ...]:
    if isinstance(support, SupportRelation):
        return tuple(support.exponents)
    if isinstance(support, int):
        return (support,)
    return tuple(int(x) for x in support)


def _xi_sum(ring: GaloisRing, terms: Sequence[tuple[int, int]]) -> RingElement:
    total = ring.zero
    for value, pos in terms:
        total = total + value * ring.xi_pow(pos)
    return total


def _check_exponents(ring: GaloisRing, exps: Sequence[int], size: int) -> None:
    if len(exps) != size:
        raise ValueError(f"expected {size} support exponents, got {len(exps)}")
    if any(not 1 <= e < ring.N for e in exps):
        raise ValueError(f"support exponents must lie in [1, {ring.N - 1}]")
    if len(set(exps)) != len(exps):
        raise ValueError("support exponents must be distinct")


def build_p4_case(ring: GaloisRing, case_id: int, support) -> Construction:
    if ring.q != 4:
        raise ValueError("P_4 case words need q = 4")
    try:
        desc = CASES[case_id]
    except KeyError:
        raise ValueError(f"unknown case {case_id}") from None
    m = ring.m
    if m < 3 or _parity(m) != desc.parity_of_m:
        raise ValueError(f"case {case_id} needs {desc.parity_of_m} m >= 3, got m = {m}")
    exps = _coerce_support(support)
    if case_id == 11:
        if len(exps) != 1 or 3 * exps[0] != ring.N:
            raise RelationError(f"case 11 needs t = (2^m - 1)/3 = {ring.N // 3}")
        exps = (exps[0], 2 * exps[0])
    _check_exponents(ring, exps, desc.support_size)

    positions = (0, *exps)
    terms = list(zip(desc.finite_values, positions))
    partial = _xi_sum(ring, terms)
    entries = [0] * (ring.N + 1)
    entries[0] = desc.c_inf_value
    for value, pos in terms:
        entries[1 + pos] = value
    info = {"case": case_id, "exponents": list(exps)}
    if desc.determined:
        digits = two_adic_decompose(ring, partial)
        if digits[0] or not digits[1]:
            raise RelationError(f"partial sum {partial} is not of the form 2*xi^d")
        d = discrete_log(ring, digits[1])
        if d in positions:
            raise DegenerateSupportError(f"determined coordinate {d} collides with {positions}")
        entries[1 + d] = 2
        info["determined"] = d
    elif partial:
        raise RelationError(f"case {case_id} relation fails: sum = {partial}")

    word = Codeword(tuple(entries), 4)
    if not build_code(ring).is_codeword(word):
        raise NotACodewordError(f"case {case_id} word {word} fails the parity check")
    if word.lee != desc.lee_weight:
        raise NotACodewordError(f"case {case_id} word {word} has Lee weight {word.lee}")
    return Construction(word, case_id, info)


def p4_case_word(ring: GaloisRing, case_id: int, support) -> Codeword:
    """Minimum-Lee-weight word of P_4 following table row ``case_id``.

    >>> from gehcodes.ring import make_ring
    >>> str(p4_case_word(make_ring(2, 3), 1, (1, 5)))
    '3,1,1,2,0,0,1,0'
    """
    return build_p4_case(ring, case_id, support).word


def _support_candidates(ring: GaloisRing, desc: CaseDescriptor):
    if desc.case_id == 11:
        if ring.N % 3 == 0:
            yield (ring.N // 3,)
        return
    # group runs of equal values so each unordered support is produced once
    values = desc.finite_values[1:]
    groups: list[int] = []
    for i, v in enumerate(values):
        if i and v == values[i - 1]:
            groups[-1] += 1
        else:
            groups.append(1)
    pool = range(1, ring.N)

    def rec(gi, used):
        if gi == len(groups):
            yield ()
            return
        for combo in combinations([e for e in pool if e not in used], groups[gi]):
            for rest in rec(gi + 1, used | set(combo)):
                yield combo + rest

    yield from rec(0, frozenset())


def find_supports(ring: GaloisRing, case_id: int) -> list[tuple[int, ...]]:
    """All supports for which :func:`p4_case_word` succeeds (exhaustive search)."""
    desc = CASES[case_id]
    if _parity(ring.m) != desc.parity_of_m:
        return []
    found = []
    for exps in _support_candidates(ring, desc):
        try:
            build_p4_case(ring, case_id, exps)
        except (RelationError, DegenerateSupportError):
            continue
        found.append(exps)
    return found


def case_signature(word: Codeword) -> tuple[int, tuple[int, ...]]:
    """(c_inf, sorted nonzero finite values): the position-free pattern of a word."""
    return word.c_inf, tuple(sorted(x for x in word.entries[1:] if x))


def match_case(word: Codeword, m: int) -> int | None:
    """Table row matching ``word`` exactly, else up to global negation.

    Exact matches win, which keeps the assignment unique where two rows are
    negations of each other.
    """
    if word.q != 4:
        raise ValueError("case matching applies to P_4 words")
    family = _parity(m)
    rows = [d for d in CASES.values() if d.parity_of_m == family]
    sig = case_signature(word)
    for d in rows:
        if d.signature() == sig:
            return d.case_id
    neg = case_signature(-word)
    for d in rows:
        if d.signature() == neg:
            return d.case_id
    return None


# ---------------------------------------------------------------------------
# P_8 Lee-weight-6 words
# ---------------------------------------------------------------------------


def build_p8_word(ring: GaloisRing, variant: str, support) -> Construction:
    if ring.q != 8:
        raise ValueError("P_8 words need q = 8")
    if ring.m < 3:
        raise ValueError("P_8 constructions need m >= 3")
    code = build_code(ring)
    exps = _coerce_support(support)
    if variant == "odd":
        _check_exponents(ring, exps, 2)
        a, b = exps
        partial = ring.one + ring.xi_pow(a) + ring.xi_pow(b)
        digits = two_adic_decompose(ring, partial)
        if digits[0] or not digits[1]:
            raise RelationError(f"1 + xi^{a} + xi^{b} = {partial} has no 2*xi^c form")
        c = discrete_log(ring, digits[1])
        if c in (0, a, b):
            raise DegenerateSupportError(f"coordinate c = {c} collides with 0, a, b")
        # resolve the sign of +-2 xi^c by the parity check
        for value in (2, 6):
            entries = [0] * (ring.N + 1)
            entries[1] = entries[1 + a] = entries[1 + b] = 1
            entries[1 + c] = value
            entries[0] = -(3 + value)
            word = Codeword(tuple(entries), 8)
            if code.is_codeword(word):
                break
        else:
            raise NotACodewordError(f"neither sign of 2*xi^{c} completes a codeword")
        info = {"a": a, "b": b, "c": c}
    elif variant == "even":
        if len(exps) != 1 or 3 * exps[0] != ring.N:
            raise RelationError(f"even variant needs t = (2^m - 1)/3 with 3 | N, N = {ring.N}")
        t = exps[0]
        if ring.one + ring.xi_pow(t) + ring.xi_pow(2 * t):
            raise RelationError("1 + xi^t + xi^2t != 0")
        entries = [0] * (ring.N + 1)
        entries[0] = 5
        entries[1] = entries[1 + t] = entries[1 + 2 * t] = 1
        word = Codeword(tuple(entries), 8)
        info = {"t": t}
    else:
        raise ValueError(f"variant must be 'odd' or 'even', got {variant!r}")
    if not code.is_codeword(word):
        raise NotACodewordError(f"{word} fails the parity check")
    if word.lee != 6:
        raise NotACodewordError(f"{word} has Lee weight {word.lee}")
    return Construction(word, f"p8-{variant}", info)


def p8_min_lee_word(ring: GaloisRing, variant: str, support) -> Codeword:
    """Lee-weight-6 word of P_8.

    >>> from gehcodes.ring import make_ring
    >>> str(p8_min_lee_word(make_ring(3, 3), "odd", (1, 5)))
    '7,1,1,6,0,0,1,0'
    """
    return build_p8_word(ring, variant, support).word


def p8_odd_supports(ring: GaloisRing) -> list[tuple[int, int]]:
    """Pairs a < b with 1 + theta^a + theta^b = 0 in the residue field."""
    field = ring.reduce_to(1)
    return [
        (a, b)
        for a, b in combinations(range(1, ring.N), 2)
        if not (field.one + field.xi_pow(a) + field.xi_pow(b))
    ]


# ---------------------------------------------------------------------------
# gamma-power dependencies in GR(4, m)
# ---------------------------------------------------------------------------


@dataclass
class DependencyReport:
    item: int
    m: int
    holds: bool
    counterexamples: list[tuple]
    violations: int
    checked: int


MAX_DEPENDENCY_M = 6
_CE_CAP = 100


def check_gamma_dependencies(ring: GaloisRing, item: int, force: bool = False) -> DependencyReport:
    """Exhaustively check one item of the gamma-power dependency lemma over GR(4, m).

    1. +-gamma^j +- gamma^k is a unit for 0 <= j < k < N;
    2. gamma^j - gamma^k != +-gamma^l for distinct j, k, l;
    3. gamma^i - gamma^j = gamma^k - gamma^l (i != j, k != l) forces i = k, j = l;
    4. for odd m, gamma^i + gamma^j + gamma^k + gamma^l = 0 forces i = j = k = l.

    ``force`` runs item 4 for even m anyway, where counterexamples exist.
    """
    if ring.q != 4:
        raise ValueError("the dependency lemma is stated over GR(4, m)")
    if item not in (1, 2, 3, 4):
        raise ValueError("item must be 1, 2, 3 or 4")
    m, N, q = ring.m, ring.N, ring.q
    if m > MAX_DEPENDENCY_M:
        raise ValueError(f"m = {m} exceeds the exhaustive budget (m <= {MAX_DEPENDENCY_M})")
    if item in (3, 4) and m < 3:
        raise ValueError(f"item {item} needs m >= 3")
    if item == 4 and m % 2 == 0 and not force:
        raise ValueError("item 4 needs odd m")

    pw = [ring.xi_pow(j).coeffs for j in range(N)]

    def add(x, y):
        return tuple((a + b) % q for a, b in zip(x, y))

    def negate(x):
        return tuple((-a) % q for a in x)

    found: list[tuple] = []
    violations = 0
    checked = 0

    def hit(ce):
        nonlocal violations
        violations += 1
        if len(found) < _CE_CAP:
            found.append(ce)

    if item == 1:
        for j in range(N):
            for k in range(j + 1, N):
                for sj in (1, -1):
                    for sk in (1, -1):
                        checked += 1
                        x = add(pw[j] if sj > 0 else negate(pw[j]), pw[k] if sk > 0 else negate(pw[k]))
                        if not any(c & 1 for c in x):
                            hit((j, k, sj, sk))
    elif item == 2:
        signed = {}
        for l in range(N):
            signed.setdefault(pw[l], []).append((l, 1))
            signed.setdefault(negate(pw[l]), []).append((l, -1))
        for j in range(N):
            for k in range(N):
                if j == k:
                    continue
                checked += 1
                d = add(pw[j], negate(pw[k]))
                for l, s in signed.get(d, ()):
                    if l != j and l != k:
                        hit((j, k, l, s))
    elif item == 3:
        seen: dict[tuple[int, ...], tuple[int, int]] = {}
        for i in range(N):
            for j in range(N):
                if i == j:
                    continue
                checked += 1
                d = add(pw[i], negate(pw[j]))
                if d in seen:
                    hit(seen[d] + (i, j))
                else:
                    seen[d] = (i, j)
    else:
        sums: dict[tuple[int, ...], list[tuple[int, int]]] = {}
        for i in range(N):
            for j in range(N):
                sums.setdefault(add(pw[i], pw[j]), []).append((i, j))
        for s, pairs in sums.items():
            others = sums.get(negate(s), ())
            for i, j in pairs:
                for k, l in others:
                    if not (i == j == k == l):
                        hit((i, j, k, l))
        # the sum-table join covers every 4-tuple
        checked = N**4
    return DependencyReport(item, m, violations == 0, found, violations, checked)


def construct(family: str, ring: GaloisRing, params: dict) -> Construction:
    """Dispatch used by the command line: build one named family."""
    if family == "h4":
        return Construction(hamming_weight4_word(ring), "h4", {})
    if family == "h6":
        return Construction(hamming_weight6_word(ring), "h6", {})
    if family == "p4-case":
        if "case" not in params:
            raise ValueError("p4-case needs case=<1..12>")
        case_id = int(params["case"])
        if case_id == 11:
            exps = (int(params.get("t", ring.N // 3)),)
        else:
            keys = [k for k in ("a", "b", "c", "d", "e") if k in params]
            exps = tuple(int(params[k]) for k in keys)
        return build_p4_case(ring, case_id, exps)
    if family == "p8-odd":
        return build_p8_word(ring, "odd", (int(params["a"]), int(params["b"])))
    if family == "p8-even":
        return build_p8_word(ring, "even", (int(params.get("t", ring.N // 3)),))
    raise ValueError(f"unknown family {family!r}")


def family_level(family: str) -> int:
    """The exponent n that a construction family lives at."""
    return {"h4": 1, "h6": 1, "p4-case": 2, "p8-odd": 3, "p8-even": 3}[family]


__all__ = [
    "CASES",
    "CaseDescriptor",
    "Construction",
    "DegenerateSupportError",
    "DependencyReport",
    "RelationError",
    "SupportRelation",
    "build_p4_case",
    "build_p8_word",
    "case_signature",
    "check_gamma_dependencies",
    "construct",
    "discrete_log",
    "family_level",
    "find_supports",
    "hamming_weight4_word",
    "hamming_weight6_word",
    "match_case",
    "p4_case_word",
    "p8_min_lee_word",
    "p8_odd_supports",
]
