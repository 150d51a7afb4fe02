"""Field arithmetic: spec'd examples, axioms exhaustively, modulus handling."""

import pytest

from ddlift.gf import GF, default_modulus, field_from_order, is_prime


def brute_poly_mul_mod(p, modulus, a_coeffs, b_coeffs):
    """Independent multiplication oracle: convolution then long reduction."""
    prod = [0] * (len(a_coeffs) + len(b_coeffs) - 1)
    for i, x in enumerate(a_coeffs):
        for j, y in enumerate(b_coeffs):
            prod[i + j] = (prod[i + j] + x * y) % p
    e = len(modulus) - 1
    for i in range(len(prod) - 1, e - 1, -1):
        c = prod[i]
        if c:
            for j in range(e + 1):
                prod[i - e + j] = (prod[i - e + j] - c * modulus[j]) % p
    return tuple(prod[:e]) + (0,) * (e - len(prod[:e]))


def test_prime_field_examples():
    assert GF(3).add(1, 2) == 0
    assert GF(5).div(2, 3) == 4
    assert GF(5).mul(3, 4) == 2


def test_gf4_multiplication_table_against_oracle():
    f = GF(2, 2)  # modulus x^2 + x + 1
    assert f.modulus == (1, 1, 1)
    x = f.from_coeffs((0, 1))
    assert f.mul(x, x) == f.from_coeffs((1, 1))  # x*x = x+1
    for a in f.elements():
        for b in f.elements():
            expected = brute_poly_mul_mod(2, f.modulus, f.coeffs(a), f.coeffs(b))
            assert f.coeffs(f.mul(a, b)) == expected


@pytest.mark.parametrize("p,e", [(2, 1), (3, 1), (2, 2), (5, 1), (2, 3), (3, 2)])
def test_field_axioms_exhaustive_small(p, e):
    f = GF(p, e)
    els = list(f.elements())
    for a in els:
        assert f.add(a, 0) == a
        assert f.mul(a, 1) == a
        assert f.mul(a, 0) == 0
        assert f.add(a, f.neg(a)) == 0
        if a:
            assert f.mul(a, f.inv(a)) == 1
    for a in els:
        for b in els:
            assert f.add(a, b) == f.add(b, a)
            assert f.mul(a, b) == f.mul(b, a)
            for c in els:
                assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
                assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
                assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))


@pytest.mark.parametrize("p,e", [(2, 4), (5, 2), (3, 3), (7, 2), (2, 6)])
def test_field_axioms_exhaustive_up_to_64(p, e):
    f = GF(p, e)
    els = list(f.elements())
    assert f.q <= 64
    for a in els:
        if a:
            assert f.mul(a, f.inv(a)) == 1
    add, mul = f.add, f.mul
    for a in els:
        for b in els:
            ab = add(a, b)
            pab = mul(a, b)
            for c in els:
                assert add(ab, c) == add(a, add(b, c))
                assert mul(a, add(b, c)) == add(pab, mul(a, c))


def test_division_by_zero():
    f = GF(3)
    with pytest.raises(ZeroDivisionError):
        f.div(1, 0)
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_bad_fields_rejected():
    with pytest.raises(ValueError):
        GF(4)  # not prime
    with pytest.raises(ValueError):
        GF(2, 0)
    with pytest.raises(ValueError):
        GF(2, 2, modulus=(0, 0, 1))  # x^2 is reducible
    with pytest.raises(ValueError):
        GF(2, 2, modulus=(1, 1))  # wrong degree
    with pytest.raises(ValueError):
        GF(2, 2, modulus=(1, 1, 2))  # not monic after reduction? 2 % 2 = 0


def test_default_moduli_are_smallest_irreducible():
    assert default_modulus(2, 2) == (1, 1, 1)  # x^2+x+1
    assert default_modulus(2, 3) == (1, 1, 0, 1)  # x^3+x+1
    assert default_modulus(3, 2) == (1, 0, 1)  # x^2+1
    assert default_modulus(5, 1) == (0, 1)


def test_modulus_override():
    f = GF(2, 3, modulus=(1, 0, 1, 1))  # x^3+x^2+1, also irreducible
    for a in f.nonzero_elements():
        assert f.mul(a, f.inv(a)) == 1


def test_coeff_roundtrip():
    f = GF(3, 2)
    for a in f.elements():
        assert f.from_coeffs(f.coeffs(a)) == a
    with pytest.raises(ValueError):
        f.from_coeffs((1,))
    with pytest.raises(ValueError):
        f.from_coeffs((3, 0))


def test_field_from_order():
    assert field_from_order(9).p == 3 and field_from_order(9).e == 2
    assert field_from_order(7).q == 7
    with pytest.raises(ValueError):
        field_from_order(6)
    with pytest.raises(ValueError):
        field_from_order(12)


def test_field_equality_and_mismatch():
    assert GF(3) == GF(3)
    assert GF(2, 2) != GF(2, 3)
    assert is_prime(2) and not is_prime(1) and not is_prime(9)
