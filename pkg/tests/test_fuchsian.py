from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from mfq.classical import standard_generators
from mfq.errors import InputError, NotSurfaceKernel
from mfq.fuchsian import Epimorphism, Signature, find_epimorphisms, kernel_genus, measure
from mfq.groups import enumerate_group

signatures = st.builds(Signature, st.integers(0, 4), st.lists(st.integers(2, 30), max_size=8).map(tuple))


@given(signatures)
def test_parse_str_roundtrip(sig):
    assert Signature.parse(str(sig)) == sig


def test_parse_forms():
    assert Signature.parse("(2,3,7)") == Signature(0, (2, 3, 7))
    assert Signature.parse("(1;2^4)") == Signature(1, (2, 2, 2, 2))
    assert str(Signature.parse("(0;3,3,3,3,3)")) == "(0;3^5)"
    assert str(Signature(2)) == "(2;-)"
    for bad in ("2,3,7", "(a;2)", "(0;1,2)", "(0;2^x)"):
        with pytest.raises(InputError):
            Signature.parse(bad)


def test_measure_and_riemann_hurwitz():
    assert measure(Signature(0, (2, 3, 7))) == Fraction(1, 42)
    assert kernel_genus(Signature(0, (2, 3, 7)), 168) == 3
    assert kernel_genus(Signature(0, (2, 4, 5)), 120) == 4
    assert kernel_genus(Signature(1, (2,)), 8) == 3
    with pytest.raises(NotSurfaceKernel):
        kernel_genus(Signature(0, (2, 3, 6)), 12)
    with pytest.raises(NotSurfaceKernel):
        kernel_genus(Signature(0, (2, 3, 7)), 5)


def test_hurwitz_bound():
    # 84(g-1) is attained only by (2,3,7)
    for sig in ("(2,3,7)", "(2,3,8)", "(2,4,5)", "(3,3,4)"):
        s = Signature.parse(sig)
        assert measure(s) >= Fraction(1, 42)


def test_epimorphisms_s5():
    G = enumerate_group(standard_generators("s(5)"))
    epis = find_epimorphisms(Signature.parse("(2,4,5)"), G)
    assert epis and all(e.surface_kernel for e in epis)
    # the whole group pulls back to the domain itself
    e = epis[0]
    assert e.preimage_signature(list(e.images)) == e.domain


def test_no_epimorphism_when_orders_missing():
    G = enumerate_group(standard_generators("a(5)"))
    assert find_epimorphisms(Signature.parse("(2,3,7)"), G) == []


def test_build_validates():
    G = enumerate_group(standard_generators("psl(2,7)"))
    one = G.keys[0]
    with pytest.raises(InputError):
        Epimorphism.build(Signature.parse("(2,3,7)"), G, [one, one])


def test_conjugate_epimorphism_same_preimages(psl27):
    epi = find_epimorphisms(Signature.parse("(2,3,7)"), psl27)[0]
    g = psl27.keys[5]
    c = epi.conjugate(g)
    for a, b in zip(epi.elliptic, c.elliptic):
        assert str(epi.preimage_signature([a])) == str(c.preimage_signature([b]))


def test_torus_quotient_q8():
    G = enumerate_group(standard_generators("q8"))
    epis = find_epimorphisms(Signature.parse("(1;2)"), G)
    assert epis
    z = epis[0].elliptic[0]
    assert G.order_of_key(z) == 2
    assert str(epis[0].preimage_signature([z])) == "(1;2^4)"
