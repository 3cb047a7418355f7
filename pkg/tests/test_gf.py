"""Field arithmetic tests.

The GF(9) expectations are frozen from a brute-force oracle that multiplies
coefficient pairs directly with the reduction t^2 = -1 (see gf9_mul below);
the oracle stays in this file so the table-backed implementation is checked
against an independent path.
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from arcforge.errors import (
    BadParametersError,
    FieldMismatchError,
    NotADivisorError,
    NotIrreducibleError,
    NotPrimeError,
)
from arcforge.gf import (
    FieldElement,
    dth_roots,
    field_create,
    frobenius,
    is_irreducible,
    subfield,
)


def gf9_mul(a: tuple[int, int], b: tuple[int, int]) -> tuple[int, int]:
    """Oracle: multiply c0 + c1*t with t^2 = -1, coefficients mod 3."""
    c0 = (a[0] * b[0] - a[1] * b[1]) % 3
    c1 = (a[0] * b[1] + a[1] * b[0]) % 3
    return (c0, c1)


def gf9_pow(a: tuple[int, int], k: int) -> tuple[int, int]:
    out = (1, 0)
    for _ in range(k):
        out = gf9_mul(out, a)
    return out


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------


def test_default_poly_gf9_is_x2_plus_1():
    # oracle: of the 9 monic quadratics over GF(3), scanned constant-fastest,
    # X^2 is reducible and X^2+1 has no root (1^2=1, 2^2=1, 0^2=0), so it wins
    assert field_create(3, 2).poly == (1, 0, 1)


def test_default_poly_prime_field_is_x():
    assert field_create(3, 1).poly == (0, 1)
    assert field_create(7, 1).poly == (0, 1)


def test_supplied_poly_gf4_accepted():
    f = field_create(2, 2, [1, 1, 1])
    assert f.poly == (1, 1, 1)
    assert f.q == 4


def test_reducible_poly_rejected():
    with pytest.raises(NotIrreducibleError):
        field_create(3, 2, [0, 0, 1])  # X^2
    with pytest.raises(NotIrreducibleError):
        field_create(3, 2, [2, 0, 1])  # X^2 - 1 = (X-1)(X+1)


def test_nonprime_p_rejected():
    with pytest.raises(NotPrimeError):
        field_create(4, 1)
    with pytest.raises(NotPrimeError):
        field_create(1, 2)


def test_nonmonic_poly_rejected():
    with pytest.raises(BadParametersError):
        field_create(3, 2, [1, 0, 2])


def test_irreducibility_scan_against_factor_oracle():
    # oracle: a monic quadratic over GF(p) is reducible iff it has a root
    p = 5
    for c0 in range(p):
        for c1 in range(p):
            has_root = any((x * x + c1 * x + c0) % p == 0 for x in range(p))
            assert is_irreducible([c0, c1, 1], p) == (not has_root)


# ---------------------------------------------------------------------------
# arithmetic in GF(9)
# ---------------------------------------------------------------------------


@pytest.fixture(scope="module")
def f9():
    return field_create(3, 2)


def test_gf9_square_of_t_plus_1(f9):
    t1 = f9.element([1, 1])
    assert gf9_mul((1, 1), (1, 1)) == (0, 2)
    assert (t1 * t1).coeffs == [0, 2]  # 2t


def test_gf9_fourth_power_of_t_plus_1(f9):
    t1 = f9.element([1, 1])
    assert gf9_pow((1, 1), 4) == (2, 0)
    assert (t1**4).coeffs == [2, 0]  # -1


def test_mul_by_one_is_identity(f9):
    for x in f9.elements():
        assert x * f9.one == x


def test_full_gf9_mul_table_matches_oracle(f9):
    for a in f9.elements():
        for b in f9.elements():
            assert (a * b).coeffs == list(gf9_mul(tuple(a.coeffs), tuple(b.coeffs)))


def test_division_and_inverse(f9):
    for x in f9.elements():
        if x.code == 0:
            with pytest.raises(ZeroDivisionError):
                f9.one / x
        else:
            assert (x * (f9.one / x)) == f9.one


def test_field_mismatch_raises(f9):
    other = field_create(3, 3)
    with pytest.raises(FieldMismatchError):
        f9.one + other.one


# ---------------------------------------------------------------------------
# field axioms, exhaustive for q <= 81
# ---------------------------------------------------------------------------

AXIOM_FIELDS = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (3, 4)]


@pytest.mark.parametrize("p,n", AXIOM_FIELDS)
def test_field_axioms_exhaustive(p, n):
    f = field_create(p, n)
    q = f.q
    codes = range(q)
    for a in codes:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in codes:
        for b in codes:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
    for a in codes:
        for b in codes:
            for c in codes:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@given(st.integers(0, 3**4 - 1), st.integers(0, 3**4 - 1), st.integers(0, 3**4 - 1))
@settings(max_examples=200)
def test_field_axioms_random_gf81(a, b, c):
    f = field_create(3, 4)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))


# ---------------------------------------------------------------------------
# Frobenius
# ---------------------------------------------------------------------------


def test_frobenius_of_t_in_gf9(f9):
    t = f9.gen
    assert frobenius(t, 1).coeffs == [0, 2]  # t^3 = -t


def test_frobenius_fixes_prime_subfield(f9):
    for c in range(3):
        x = f9.element([c, 0])
        assert frobenius(x, 1) == x


def test_frobenius_full_power_is_identity(f9):
    for x in f9.elements():
        assert frobenius(x, 2) == x


@pytest.mark.parametrize("p,n", [(2, 2), (3, 2), (2, 3), (3, 3), (2, 4), (3, 4)])
def test_frobenius_is_additive_and_multiplicative(p, n):
    f = field_create(p, n)
    for e in range(1, n + 1):
        for a in range(f.q):
            for b in range(f.q):
                assert f.frob(f.add(a, b), e) == f.add(f.frob(a, e), f.frob(b, e))
                assert f.frob(f.mul(a, b), e) == f.mul(f.frob(a, e), f.frob(b, e))


# ---------------------------------------------------------------------------
# subfields
# ---------------------------------------------------------------------------


def test_prime_subfield_of_gf27():
    f = field_create(3, 3)
    s = subfield(f, 1)
    assert s.member_codes == (0, 1, 2)


def test_prime_subfield_of_gf9(f9):
    assert subfield(f9, 1).member_codes == (0, 1, 2)


@pytest.mark.parametrize("p,n,e", [(2, 4, 2), (3, 4, 2), (2, 4, 1), (3, 3, 1), (5, 2, 1)])
def test_subfield_size_is_p_to_e(p, n, e):
    f = field_create(p, n)
    s = subfield(f, e)
    assert len(s.member_codes) == p**e
    # closed under + and *
    members = set(s.member_codes)
    for a in members:
        for b in members:
            assert f.add(a, b) in members
            assert f.mul(a, b) in members
    # generator has full multiplicative order
    g = s.generator_code
    seen = {g}
    cur = g
    for _ in range(p**e - 2):
        cur = f.mul(cur, g)
        seen.add(cur)
    assert len(seen) == p**e - 1


def test_subfield_bad_divisor(f9):
    with pytest.raises(NotADivisorError):
        subfield(field_create(3, 3), 2)


# ---------------------------------------------------------------------------
# root sets of A x^d + B
# ---------------------------------------------------------------------------


def test_dth_roots_gf9_fourth_roots_of_minus_one(f9):
    # oracle already frozen: exhaustive scan of GF(9) for x^4 = -1 gives
    # {t+1, t+2, 2t+1, 2t+2} = codes {4, 5, 7, 8}
    roots = dth_roots(f9.one, f9.one, 4)
    assert sorted(x.code for x in roots) == [4, 5, 7, 8]
    for x in roots:
        assert gf9_pow(tuple(x.coeffs), 4) == (2, 0)


def test_dth_roots_gf9_fourth_roots_of_one(f9):
    roots = dth_roots(f9.one, -f9.one, 4)
    assert sorted(x.code for x in roots) == [1, 2, 3, 6]


@pytest.mark.parametrize(
    "p,n,e",
    [(3, 2, 1), (3, 3, 1), (2, 4, 2), (5, 2, 1), (2, 4, 1), (3, 4, 2)],
)
def test_dth_roots_count_and_membership(p, n, e):
    f = field_create(p, n)
    s = subfield(f, e)
    d = (f.q - 1) // (p**e - 1)
    if d % p == 0:
        pytest.skip("characteristic divides d for this (n, e)")
    for a_code in s.member_codes[1:]:
        for b_code in s.member_codes[1:]:
            roots = dth_roots(FieldElement(f, a_code), FieldElement(f, b_code), d)
            assert len(roots) == d
            for x in roots:
                # every root is a (q-1)-st root of unity, hence in GF(q)
                assert f.pow(x.code, f.q - 1) == 1


def test_dth_roots_rejects_bad_inputs(f9):
    with pytest.raises(BadParametersError):
        dth_roots(f9.zero, f9.one, 4)
    with pytest.raises(BadParametersError):
        dth_roots(f9.one, f9.one, 3)  # 3 does not divide 8
    with pytest.raises(BadParametersError):
        dth_roots(f9.gen, f9.one, 4)  # t is not in GF(3)
