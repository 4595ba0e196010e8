import pytest

from mfq.classical import (classical_order, hermitian_form, is_constructible, parse_group_spec,
                           preserves_hermitian, sp_generators, su3_generators, standard_generators)
from mfq.errors import InputError
from mfq.groups import enumerate_group
from mfq.rings import Modulus, symplectic_check

# literature values (ATLAS order column), independent of the order formulas
KNOWN_ORDERS = {
    "psl(2,7)": 168, "psl(2,8)": 504, "psl(3,4)": 20160, "psu(3,3)": 6048, "psu(4,2)": 25920,
    "psp(4,3)": 25920, "psp(6,2)": 1451520, "psp(8,2)": 47377612800, "psp(6,3)": 4585351680,
    "psu(3,17)": 2317678272, "g2(3)": 4245696, "sz(8)": 29120, "2f4(2)'": 17971200,
    "3d4(2)": 211341312, "m22": 443520, "mcl": 898128000, "j2": 604800, "a(9)": 181440,
    "sl(2,3)": 24, "q8": 8, "z(14)": 14, "s(5)": 120,
}


@pytest.mark.parametrize("text,order", sorted(KNOWN_ORDERS.items()))
def test_orders_match_literature(text, order):
    assert classical_order(parse_group_spec(text)) == order


@pytest.mark.parametrize("text", ["psl(2,6)", "psl(1,7)", "foo", "psp(5,2)", ""])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        parse_group_spec(text)


@pytest.mark.parametrize("text", ["psl(2,7)", "psl(2,9)", "psl(3,3)", "psu(3,3)",
                                  "psp(4,3)", "sl(2,5)", "sp(4,2)", "a(7)", "psl(2,49)"])
def test_enumeration_matches_formula(text):
    spec = parse_group_spec(text)
    G = enumerate_group(standard_generators(spec), cap=2_000_000)
    assert len(G) == classical_order(spec)


def test_sp_generators_preserve_form():
    for p in (2, 3, 5):
        R = Modulus.integers(p)
        for A in sp_generators(6, R):
            assert symplectic_check(A, 3)


def test_su3_generators_preserve_hermitian_form():
    for A in su3_generators(Modulus.gf(25)):
        assert preserves_hermitian(A)
    assert hermitian_form(3, Modulus.gf(25)).dim == 3


def test_constructible():
    assert is_constructible(parse_group_spec("psl(2,7)"))
    assert not is_constructible(parse_group_spec("mcl"))


@pytest.mark.parametrize("text", ["psl(2,8)", "psu(3,4)", "psu(4,2)"])
def test_outside_construction_scope(text):
    assert not is_constructible(parse_group_spec(text))
