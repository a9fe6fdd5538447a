from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gehcodes.ring import (
    NotAUnitError,
    NotPrimitiveError,
    RingMismatchError,
    eta,
    frobenius,
    is_primitive_binary,
    lift_primitive,
    make_ring,
    mu,
    poly_divmod,
    recompose,
    tau,
    two_adic_decompose,
)

H2_M3 = (1, 0, 1, 1)  # X^3 + X^2 + 1
H2_M4 = (1, 1, 0, 0, 1)  # X^4 + X + 1


@pytest.fixture(scope="module")
def gr83():
    return make_ring(3, 3)


@pytest.fixture(scope="module")
def elems83(gr83):
    return list(gr83.elements())


# -- lifting ----------------------------------------------------------------


@pytest.mark.parametrize(
    "h2, n, expected",
    [
        (H2_M3, 1, (1, 0, 1, 1)),
        (H2_M3, 2, (3, 2, 3, 1)),
        (H2_M3, 3, (7, 2, 3, 1)),
        (H2_M4, 2, (1, 3, 2, 0, 1)),
    ],
)
def test_lift_examples(h2, n, expected):
    assert lift_primitive(h2, n).coeffs == expected


def test_lift_signed_forms_match_printed_polynomials():
    # X^3 - X^2 - 2X - 1 and X^3 - 5X^2 - 6X - 1
    for n, printed in ((2, (-1, -2, -1, 1)), (3, (-1, -6, -5, 1))):
        q = 2**n
        assert lift_primitive(H2_M3, n).coeffs == tuple(c % q for c in printed)


def _long_division_remainder(num, den, q):
    # independent of poly_divmod: plain school division on lists
    r = list(num)
    for shift in range(len(num) - len(den), -1, -1):
        lead = r[shift + len(den) - 1] % q
        for i, d in enumerate(den):
            r[shift + i] = (r[shift + i] - lead * d) % q
    return [x % q for x in r[: len(den) - 1]]


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_lift_divides_xN_minus_one(m, n):
    ring = make_ring(n, m)
    hq = ring.hq.coeffs
    q = 2**n
    N = 2**m - 1
    assert hq[-1] == 1
    assert tuple(c & 1 for c in hq) == ring.h2.coeffs
    xN1 = [q - 1] + [0] * (N - 1) + [1]
    assert not any(_long_division_remainder(xN1, hq, q))
    _, rem = poly_divmod(xN1, hq, q)
    assert not any(rem)


@pytest.mark.parametrize("m", [3, 4, 5])
@pytest.mark.parametrize("n", [2, 3, 4])
def test_lift_tower_compatible(m, n):
    hi = make_ring(n, m).hq.coeffs
    lo = make_ring(n - 1, m).hq.coeffs
    assert tuple(c % 2 ** (n - 1) for c in hi) == lo


def test_lift_rejects_bad_input():
    with pytest.raises(ValueError):
        lift_primitive((1, 1, 1, 1), 2)  # X^3+X^2+X+1 is reducible
    with pytest.raises(ValueError):
        lift_primitive((1, 0, 1, 0), 2)  # not monic
    with pytest.raises(ValueError):
        lift_primitive(H2_M3, 0)
    assert not is_primitive_binary((1, 1, 1, 1, 1))  # X^4+..+1 has order 5


@pytest.mark.parametrize("n", [1, 2, 3, 4])
@pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
def test_xi_has_order_N(n, m):
    ring = make_ring(n, m)
    xi, one = ring.xi, ring.one
    assert xi**ring.N == one
    cur = one
    for _ in range(1, ring.N):
        cur = cur * xi
        assert cur != one


def test_make_ring_parameters():
    r = make_ring(3, 3)
    assert (r.q, r.N, r.k) == (8, 7, 4)
    r = make_ring(2, 2)
    assert (r.q, r.N, r.k) == (4, 3, 1)
    assert len(list(make_ring(1, 3).elements())) == 8
    with pytest.raises(ValueError):
        make_ring(0, 3)
    with pytest.raises(ValueError):
        make_ring(2, 1)
    with pytest.raises(NotPrimitiveError):
        make_ring(2, 4, (1, 1, 1, 1, 1))


# -- arithmetic ---------------------------------------------------------------


def test_xi_cubed_gr83(gr83):
    # schoolbook oracle: X^3 = -(7 + 2X + 3X^2) mod h8 = 1 + 6X + 5X^2
    assert (gr83.xi * gr83.xi * gr83.xi).coeffs == (1, 6, 5)
    assert gr83.xi_pow(3).coeffs == (1, 6, 5)
    assert gr83.xi_pow(0) == gr83.one
    assert gr83.xi_pow(1) == gr83.xi
    assert gr83.xi_pow(gr83.N - 1) * gr83.xi == gr83.one


def test_pow_conventions(gr83):
    assert gr83.zero**0 == gr83.one
    assert gr83.xi ** (2**gr83.m) == gr83.xi
    with pytest.raises(ValueError):
        gr83.xi ** -1


def test_mismatched_rings_rejected():
    a = make_ring(2, 3).xi
    b = make_ring(3, 3).xi
    with pytest.raises(RingMismatchError):
        a + b
    with pytest.raises(RingMismatchError):
        make_ring(2, 3).mul(a, b)


def test_additive_group_exact(gr83, elems83):
    zero = gr83.zero
    for a in elems83:
        assert a + (-a) == zero
        assert a + zero == a
    sample = elems83[::16]
    for a, b in itertools.product(elems83, sample):
        assert a + b == b + a
        assert (a - b) + b == a


def test_ring_axioms_on_sample(gr83, elems83):
    sample = elems83[::16]  # 32 elements
    assert len(sample) == 32
    for a, b, c in itertools.product(sample, repeat=3):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
    for a, b in itertools.product(sample, repeat=2):
        assert a * b == b * a
    for a in sample:
        assert a * gr83.one == a


def _elements(ring):
    return st.lists(st.integers(0, ring.q - 1), min_size=ring.m, max_size=ring.m).map(
        lambda cs: ring(tuple(cs))
    )


_GR44 = make_ring(2, 4)


@settings(max_examples=200, deadline=None)
@given(_elements(_GR44), _elements(_GR44), _elements(_GR44))
def test_ring_axioms_gr44(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


def test_units_and_inverses(gr83, elems83):
    units = [a for a in elems83 if a.is_unit()]
    assert len(units) == 448
    for a in units:
        assert gr83.invert(a) * a == gr83.one
    nonunits = [a for a in elems83 if not a.is_unit()]
    assert all(not eta(gr83, a) for a in nonunits)
    assert gr83.invert(gr83.one) == gr83.one
    assert gr83.invert(gr83.xi) == gr83.xi_pow(gr83.N - 1)
    with pytest.raises(NotAUnitError):
        gr83.invert(gr83(2) * gr83.xi)
    with pytest.raises(ZeroDivisionError):
        gr83.invert(gr83.zero)


# -- Teichmuller set, tau, decomposition -----------------------------------


def test_teichmuller_set(gr83):
    T = gr83.teichmuller_set()
    assert len(T) == 8
    assert len({t.coeffs for t in T}) == 8
    assert T[0] == gr83.zero and T[1] == gr83.one and T[2] == gr83.xi
    field = make_ring(1, 3)
    assert {t.coeffs for t in field.teichmuller_set()} == {e.coeffs for e in field.elements()}


def _decompose_oracle(ring, c):
    # subtract-and-halve with digits found by brute-force search over T
    T = ring.teichmuller_set()
    digits = []
    x = c
    for _ in range(ring.n):
        a = next(t for t in T if all((u - v) % 2 == 0 for u, v in zip(x.coeffs, t.coeffs)))
        digits.append(a)
        x = ring(tuple(((u - v) % ring.q) // 2 for u, v in zip(x.coeffs, a.coeffs)))
    return digits


def test_tau_examples(gr83):
    assert tau(gr83, gr83.one + 2 * gr83.xi) == gr83.one
    assert tau(gr83, gr83.zero) == gr83.zero
    for t in gr83.teichmuller_set():
        assert tau(gr83, t) == t


def test_decompose_matches_oracle_and_roundtrips(gr83, elems83):
    for c in elems83:
        digits = two_adic_decompose(gr83, c)
        assert list(digits) == _decompose_oracle(gr83, c)
        assert all(gr83.is_teichmuller(a) for a in digits)
        assert recompose(gr83, digits) == c


def test_decompose_roundtrip_gr44():
    ring = _GR44
    for c in ring.elements():
        assert recompose(ring, two_adic_decompose(ring, c)) == c


def test_decompose_known_value(gr83):
    x = gr83.xi_pow
    digits = two_adic_decompose(gr83, x(0) + x(1) + x(5))
    assert tuple(digits) == (gr83.zero, x(2), gr83.zero)
    assert digits.exponents() == (-1, 2, -1)
    assert tuple(two_adic_decompose(gr83, gr83.zero)) == (gr83.zero,) * 3


def test_tau_properties(gr83, elems83):
    for c in elems83:
        t = tau(gr83, c)
        assert gr83.is_teichmuller(t)
        assert tau(gr83, t) == t
        assert eta(gr83, t) == eta(gr83, c)


# -- Frobenius, eta, mu -------------------------------------------------------


def test_frobenius_fixes_integers_and_squares_xi(gr83):
    for a in range(8):
        assert frobenius(gr83, gr83(a)) == gr83(a)
    assert frobenius(gr83, gr83.xi) == gr83.xi_pow(2)


def test_frobenius_automorphism_laws(gr83, elems83):
    f = {c.coeffs: frobenius(gr83, c) for c in elems83}
    assert len({v.coeffs for v in f.values()}) == 512
    for a in elems83:
        fa = f[a.coeffs]
        for b in elems83:
            fb = f[b.coeffs]
            assert f[(a + b).coeffs] == fa + fb
            assert f[(a * b).coeffs] == fa * fb


@pytest.mark.parametrize("n, m", [(3, 3), (2, 4)])
def test_frobenius_order_m(n, m):
    ring = make_ring(n, m)
    for c in ring.elements():
        x = c
        for _ in range(m):
            x = frobenius(ring, x)
        assert x == c


def test_eta_examples(gr83):
    field = make_ring(1, 3)
    assert eta(gr83, gr83.xi) == field.xi
    assert not eta(gr83, 2 * gr83.xi_pow(3))
    assert eta(gr83, gr83((3, 2, 0))) == field.one


def test_mu_examples(gr83):
    gr43 = make_ring(2, 3)
    assert mu(gr83, gr83.xi) == gr43.xi
    assert not mu(gr83, 4 * gr83.xi_pow(5))
    x = gr83.xi_pow
    assert mu(gr83, x(0) + x(1) + x(5)) == 2 * gr43.xi_pow(2)
    with pytest.raises(ValueError):
        mu(make_ring(1, 3), make_ring(1, 3).xi)


def test_mu_is_ring_hom_and_composes_to_eta(gr83, elems83):
    gr43 = make_ring(2, 3)
    for c in elems83:
        assert eta(gr43, mu(gr83, c)) == eta(gr83, c)
    sample = elems83[::7]
    for a, b in itertools.product(sample, repeat=2):
        assert mu(gr83, a * b) == mu(gr83, a) * mu(gr83, b)
        assert mu(gr83, a + b) == mu(gr83, a) + mu(gr83, b)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 6), st.integers(0, 6))
def test_xi_pow_exponent_law(i, j):
    ring = make_ring(3, 3)
    assert ring.xi_pow(i) * ring.xi_pow(j) == ring.xi_pow(i + j)
    assert ring.teichmuller_exponent(ring.xi_pow(i)) == i
