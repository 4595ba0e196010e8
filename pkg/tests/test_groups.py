import itertools

import pytest
from hypothesis import given, settings, strategies as st

from mfq.classical import standard_generators
from mfq.errors import CapExceeded, InputError
from mfq.groups import (GenSet, Perm, TargetSpec, center_and_projective, coset_action, derived_subgroup,
                        element_order, enumerate_group, find_subgroup_by_type, is_simple, is_solvable,
                        normal_closure, order_spectrum, random_elements, subgroup_from_elements)

perms5 = st.permutations(range(5)).map(Perm)


@given(perms5, perms5)
def test_product_is_composition(p, q):
    assert [(p * q)(i) for i in range(5)] == [p(q(i)) for i in range(5)]


@given(perms5, perms5, perms5)
def test_associative_and_inverse(p, q, r):
    assert (p * q) * r == p * (q * r)
    assert (p * p.inverse()).is_identity()


@given(perms5)
def test_order_is_lcm_of_cycle_type(p):
    from math import lcm
    assert element_order(p) == lcm(*p.cycle_type()) if p.cycle_type() else 1


def test_from_cycles():
    p = Perm.from_cycles([(0, 1, 2), (3, 4)], 6)
    assert element_order(p) == 6 and p(2) == 0 and p(5) == 5


def test_enumerate_s4_against_itertools():
    gs = GenSet((Perm([1, 2, 3, 0]), Perm([1, 0, 2, 3])), "S4")
    G = enumerate_group(gs)
    assert {tuple(x(i) for i in range(4)) for x in G.elements()} == set(itertools.permutations(range(4)))


def test_cap_exceeded():
    with pytest.raises(CapExceeded):
        enumerate_group(standard_generators("a(7)"), cap=1000)


@pytest.mark.parametrize("spec,spectrum", [
    ("a(5)", (1, 2, 3, 5)),
    ("psl(2,7)", (1, 2, 3, 4, 7)),
    ("a(7)", (1, 2, 3, 4, 5, 6, 7)),
    ("q8", (1, 2, 4)),
])
def test_exact_spectrum(spec, spectrum):
    assert order_spectrum(enumerate_group(standard_generators(spec))).orders == spectrum


@pytest.mark.parametrize("spec,kind,found", [
    ("sl(2,3)", "Q8", True),
    ("a(5)", "Q8", False),
    ("a(7)", "PSL27", True),
    ("a(6)", "PSL27", False),
    ("psl(2,7)", "S5", False),
    ("a(7)", "S5", True),
])
def test_subgroup_search(spec, kind, found):
    G = enumerate_group(standard_generators(spec))
    res = find_subgroup_by_type(G, TargetSpec(kind))
    assert res.found == found
    assert res.status == ("found" if found else "absent")
    if found:
        H = G.closure([G.key_of(x) for x in res.witness])
        assert len(H) == {"Q8": 8, "PSL27": 168, "S5": 120}[kind]


def test_target_spec_validation():
    with pytest.raises(InputError):
        TargetSpec("Foo")


def test_simplicity_and_derived():
    psl27 = enumerate_group(standard_generators("psl(2,7)"))
    s6 = enumerate_group(standard_generators("psp(4,2)"))
    assert is_simple(psl27)
    assert not is_simple(s6)
    assert len(derived_subgroup(s6)) == 360
    assert is_solvable(enumerate_group(standard_generators("sl(2,3)")))
    assert not is_solvable(psl27)


def test_normal_closure_of_transposition_in_s5():
    G = enumerate_group(standard_generators("s(5)"))
    t = G.key_of(Perm([1, 0, 2, 3, 4]))
    assert len(normal_closure(G, [t])) == 120
    three = G.key_of(Perm([1, 2, 0, 3, 4]))
    assert len(normal_closure(G, [three])) == 60


def test_center_of_sl25():
    info = center_and_projective(enumerate_group(standard_generators("sl(2,5)")))
    assert len(info.center) == 2 and info.projective_order == 60
    assert info.projective_spectrum == (1, 2, 3, 5)


def test_coset_action_degree():
    G = enumerate_group(standard_generators("psl(2,7)"))
    x = G.keys[G.indices_of_order(7)[0]]
    act = coset_action(G, [x])
    assert act.degree == 24


def test_conjugacy_classes_of_a5():
    G = enumerate_group(standard_generators("a(5)"))
    sizes = sorted(len(c) for c in G.conjugacy_classes())
    assert sizes == [1, 12, 12, 15, 20]


def test_subgroup_from_elements():
    klein = [Perm([0, 1, 2, 3]), Perm([1, 0, 2, 3]), Perm([0, 1, 3, 2]), Perm([1, 0, 3, 2])]
    assert len(subgroup_from_elements(klein)) == 4
    with pytest.raises(InputError):
        subgroup_from_elements(klein[:3])


def test_random_elements_deterministic():
    gs = standard_generators("psu(3,3)")
    a = [x.key for x in random_elements(gs, 50, 7)]
    b = [x.key for x in random_elements(gs, 50, 7)]
    assert a == b


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(0, 10 ** 6))
def test_random_elements_lie_in_group(seed):
    G = enumerate_group(standard_generators("psl(2,7)"))
    for x in random_elements(standard_generators("psl(2,7)"), 20, seed):
        assert x in G
