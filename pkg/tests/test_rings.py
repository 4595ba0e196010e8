import pytest
import sympy
from hypothesis import given, settings, strategies as st

from mfq.errors import InputError, SingularError
from mfq.rings import (Modulus, SquareMatrix, determinant, factorize, is_prime, mat_inverse,
                       prime_power, standard_form, symplectic_check)


def test_factorize_matches_sympy():
    for n in [2, 12, 360, 1451520, 47377612800, 4585351680]:
        assert factorize(n) == sympy.factorint(n)


@pytest.mark.parametrize("q,pp", [(2, (2, 1)), (9, (3, 2)), (49, (7, 2)), (64, (2, 6)), (6, None), (1, None)])
def test_prime_power(q, pp):
    assert prime_power(q) == pp


def test_gf9_is_a_field():
    R = Modulus.gf(9)
    assert R.is_field and R.characteristic == 3
    for a in R.units():
        assert R.mul(a, R.inv(a)) == 1
    assert len(R.units()) == 8
    # multiplicative group is cyclic of order 8
    assert any(len({R.power(g, k) for k in range(8)}) == 8 for g in R.units())


def test_frobenius_is_additive_and_multiplicative():
    R = Modulus.gf(49)
    for a in range(0, 49, 5):
        for b in range(0, 49, 7):
            assert R.frobenius(R.add(a, b)) == R.add(R.frobenius(a), R.frobenius(b))
            assert R.frobenius(R.mul(a, b)) == R.mul(R.frobenius(a), R.frobenius(b))


def test_non_unit_inverse_raises():
    Z = Modulus.integers(12)
    assert not Z.is_unit(4)
    with pytest.raises((SingularError, InputError)):
        Z.inv(4)


def test_bad_moduli():
    with pytest.raises(InputError):
        Modulus.integers(1)
    with pytest.raises(InputError):
        Modulus.gf(6)


small_mat = st.lists(st.lists(st.integers(-20, 20), min_size=3, max_size=3), min_size=3, max_size=3)


@settings(max_examples=60, deadline=None)
@given(rows=small_mat, m=st.sampled_from([2, 5, 6, 12, 49]))
def test_determinant_against_sympy(rows, m):
    R = Modulus.integers(m) if m != 49 else Modulus.integers(49)
    A = SquareMatrix.from_rows(rows, R)
    assert determinant(A).value == sympy.Matrix(rows).det() % m


@settings(max_examples=60, deadline=None)
@given(rows=small_mat, m=st.sampled_from([5, 7, 12, 25]))
def test_inverse_roundtrip(rows, m):
    R = Modulus.integers(m)
    A = SquareMatrix.from_rows(rows, R)
    if not R.is_unit(determinant(A).value):
        with pytest.raises(SingularError):
            mat_inverse(A)
        return
    assert (A @ mat_inverse(A)).is_identity()


def test_standard_form_is_symplectic():
    R = Modulus.integers(5)
    J = standard_form(2, R)
    assert symplectic_check(J, 2)
    assert not symplectic_check(SquareMatrix.scalar(4, 2, R), 2)


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
