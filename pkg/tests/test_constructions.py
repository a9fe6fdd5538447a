from __future__ import annotations

import itertools

import pytest

from gehcodes.code import Codeword, build_code
from gehcodes.constructions import (
    CASES,
    RelationError,
    build_p4_case,
    build_p8_word,
    check_gamma_dependencies,
    discrete_log,
    find_supports,
    hamming_weight4_word,
    hamming_weight6_word,
    match_case,
    p4_case_word,
    p8_min_lee_word,
    p8_odd_supports,
)
from gehcodes.ring import make_ring, two_adic_decompose
from gehcodes.search import SearchSpec, min_weight


def test_discrete_log():
    f = make_ring(1, 3)
    assert discrete_log(f, f.one) == 0
    assert discrete_log(f, f.xi) == 1
    assert discrete_log(f, f.one + f.xi) == 5
    with pytest.raises(ValueError):
        discrete_log(f, f.zero)
    with pytest.raises(ValueError):
        discrete_log(make_ring(2, 3), make_ring(2, 3)(2))


def test_hamming_weight4_words():
    w = hamming_weight4_word(make_ring(1, 3))
    assert w.entries == (1, 1, 1, 0, 0, 0, 1, 0)
    w4 = hamming_weight4_word(make_ring(1, 4))
    assert [i for i, x in enumerate(w4.entries) if x] == [0, 1, 2, 5]  # inf, 0, 1, 4
    for m in range(2, 8):
        w = hamming_weight4_word(make_ring(1, m))
        assert w.hamming == 4 and build_code(make_ring(1, m)).is_codeword(w)


def test_hamming_weight6_words():
    w = hamming_weight6_word(make_ring(1, 4))
    assert [i for i, x in enumerate(w.entries) if x] == [0, 1, 2, 3, 4, 13]  # inf, 0..3, 12
    for m in range(4, 8):
        w = hamming_weight6_word(make_ring(1, m))
        assert w.hamming == 6 and build_code(make_ring(1, m)).is_codeword(w)
    with pytest.raises(ValueError):
        hamming_weight6_word(make_ring(1, 3))


def test_case_table_rows_satisfy_zero_sum():
    for d in CASES.values():
        c_inf, values = d.signature()
        assert (c_inf + sum(values)) % 4 == 0, d.case_id
        lee = sum(min(v, 4 - v) for v in (c_inf, *values))
        assert lee == d.lee_weight, d.case_id


def test_case_9_and_10_are_negations():
    s9, s10 = CASES[9].signature(), CASES[10].signature()
    assert s10 == ((-s9[0]) % 4, tuple(sorted((-v) % 4 for v in s9[1])))


def test_p4_case1_reference_word():
    ring = make_ring(2, 3)
    built = build_p4_case(ring, 1, (1, 5))
    assert built.word.entries == (3, 1, 1, 2, 0, 0, 1, 0)
    assert built.support["determined"] == 2
    assert p4_case_word(ring, 1, (1, 5)) == built.word


def test_p4_case11_and_case12_m4():
    ring = make_ring(2, 4)
    assert p4_case_word(ring, 11, (5,)).entries == (1, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0)
    with pytest.raises(RelationError):
        p4_case_word(ring, 11, (4,))
    supports = find_supports(ring, 12)
    assert supports
    g = ring.xi_pow
    code = build_code(ring)
    for a, b, c in supports:
        assert g(0) + g(a) + g(b) + g(c) == ring.zero
        w = p4_case_word(ring, 12, (a, b, c))
        assert w.c_inf == 0 and w.lee == 4 and code.is_codeword(w)


def test_case12_support_oracle():
    # brute force over exponent triples: 1 + g^a + g^b + g^c == 0
    ring = make_ring(2, 4)
    g = ring.xi_pow
    oracle = [
        t for t in itertools.combinations(range(1, ring.N), 3)
        if g(0) + g(t[0]) + g(t[1]) + g(t[2]) == ring.zero
    ]
    assert sorted(tuple(sorted(s)) for s in find_supports(ring, 12)) == oracle


def test_case_parity_and_relation_errors():
    with pytest.raises(ValueError):
        p4_case_word(make_ring(2, 4), 1, (1, 5))
    with pytest.raises(ValueError):
        p4_case_word(make_ring(3, 3), 1, (1, 5))
    with pytest.raises(ValueError):
        p4_case_word(make_ring(2, 3), 1, (1, 1))
    with pytest.raises(RelationError):
        p4_case_word(make_ring(2, 3), 1, (1, 2))
    with pytest.raises(ValueError):
        p4_case_word(make_ring(2, 3), 13, (1, 2))


def _closure(words, N):
    out = set()
    for w in words:
        for s in range(N):
            sh = w.shift(s)
            out.add(sh.entries)
            out.add((-sh).entries)
    return out


def test_case_words_generate_all_lee6_words_m3():
    ring = make_ring(2, 3)
    built = [
        p4_case_word(ring, cid, s)
        for cid in range(1, 11)
        for s in find_supports(ring, cid)
    ]
    res = min_weight(SearchSpec(build_code(ring), "lee", "exhaustive"))
    assert res.min_weight == 6
    assert _closure(built, ring.N) == {w.entries for w in res.witnesses}


def test_match_case_prefers_exact_row():
    ring = make_ring(2, 3)
    w = p4_case_word(ring, 1, (1, 5))
    assert match_case(w, 3) == 1
    assert match_case(-w, 3) == 1
    w9 = Codeword((3, 3, 3, 1, 1, 1, 0, 0), 4)
    assert match_case(w9, 3) == 9 and match_case(-w9, 3) == 10
    assert match_case(Codeword((2, 2) + (0,) * 6, 4), 3) is None
    with pytest.raises(ValueError):
        match_case(Codeword((0,) * 8, 8), 3)


# -- P_8 --------------------------------------------------------------------


@pytest.mark.parametrize(
    "m, variant, support, expected",
    [
        (3, "odd", (1, 5), (7, 1, 1, 6, 0, 0, 1, 0)),
        (4, "even", (5,), (5, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0)),
        (4, "odd", (1, 4), (7, 1, 1, 0, 0, 1, 6, 0, 0, 0, 0, 0, 0, 0, 0, 0)),
    ],
)
def test_p8_reference_words(m, variant, support, expected):
    ring = make_ring(3, m)
    w = p8_min_lee_word(ring, variant, support)
    assert w.entries == expected
    assert w.lee == 6 and build_code(ring).is_codeword(w)


@pytest.mark.parametrize("m", [3, 5])
def test_p8_odd_c_avoids_support(m):
    ring = make_ring(3, m)
    pairs = p8_odd_supports(ring)
    assert pairs
    for a, b in pairs:
        built = build_p8_word(ring, "odd", (a, b))
        assert built.support["c"] not in (0, a, b)
        assert built.word.lee == 6


def test_p8_digit_identities_m3():
    ring = make_ring(3, 3)
    for a, b in p8_odd_supports(ring):
        digits = two_adic_decompose(ring, ring.one + ring.xi_pow(a) + ring.xi_pow(b))
        assert not digits[0] and not digits[2] and digits[1]


def test_even_m_cube_root_identity():
    ring = make_ring(3, 4)
    t = 5
    assert ring.one + ring.xi_pow(t) + ring.xi_pow(2 * t) == ring.zero


def test_p8_errors():
    with pytest.raises(RelationError):
        build_p8_word(make_ring(3, 3), "even", (2,))
    with pytest.raises(ValueError):
        build_p8_word(make_ring(2, 3), "odd", (1, 5))
    with pytest.raises(ValueError):
        build_p8_word(make_ring(3, 3), "sideways", (1, 5))


# -- gamma-power dependencies ------------------------------------------------


@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("item", [1, 2])
def test_dependency_items_1_2(m, item):
    rep = check_gamma_dependencies(make_ring(2, m), item)
    assert rep.holds and not rep.counterexamples and rep.checked > 0


@pytest.mark.parametrize("m", [3, 4, 5])
def test_dependency_item_3(m):
    rep = check_gamma_dependencies(make_ring(2, m), 3)
    assert rep.holds and rep.violations == 0


@pytest.mark.parametrize("m", [3, 5])
def test_dependency_item_4_odd(m):
    rep = check_gamma_dependencies(make_ring(2, m), 4)
    assert rep.holds and rep.checked == (2**m - 1) ** 4


def test_dependency_item_4_even_precondition_and_forced():
    ring = make_ring(2, 4)
    with pytest.raises(ValueError):
        check_gamma_dependencies(ring, 4)
    rep = check_gamma_dependencies(ring, 4, force=True)
    assert not rep.holds and rep.counterexamples
    i, j, k, l = rep.counterexamples[0]
    g = ring.xi_pow
    assert g(i) + g(j) + g(k) + g(l) == ring.zero


def test_dependency_preconditions():
    with pytest.raises(ValueError):
        check_gamma_dependencies(make_ring(3, 3), 1)
    with pytest.raises(ValueError):
        check_gamma_dependencies(make_ring(2, 2), 3)
    with pytest.raises(ValueError):
        check_gamma_dependencies(make_ring(2, 7), 1)
