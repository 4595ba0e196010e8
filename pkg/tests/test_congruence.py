import json

import pytest
from hypothesis import given, settings, strategies as st

from mfq.congruence import (ModGroupSpec, brute_force_elements, crt_check, enumerate_mod_group,
                            mod_group_order, reduction_kernel_check, theorem1_minimal_chain)
from mfq.errors import InputError, Unsupported


@pytest.mark.parametrize("t,n,k,order", [
    ("sl", 2, 2, 6), ("sl", 2, 4, 48), ("sl", 2, 8, 384), ("sl", 2, 9, 648), ("sl", 2, 6, 144),
    ("sl", 3, 2, 168), ("sp", 1, 5, 120), ("sp", 2, 2, 720), ("sl", 2, 1, 1),
])
def test_orders(t, n, k, order):
    assert mod_group_order(ModGroupSpec(t, n, k)) == order


@settings(max_examples=15, deadline=None)
@given(t=st.sampled_from(["sl", "sp"]), k=st.integers(2, 10))
def test_order_formula_against_brute_force(t, k):
    spec = ModGroupSpec(t, 1 if t == "sp" else 2, k)
    assert len(brute_force_elements(spec)) == mod_group_order(spec)


@settings(max_examples=30, deadline=None)
@given(t=st.sampled_from(["sl", "sp"]), n=st.integers(1, 3), a=st.integers(1, 40), b=st.integers(1, 40))
def test_order_multiplicative_on_coprime_moduli(t, n, a, b):
    from math import gcd
    if t == "sl" and n == 1:
        n = 2
    if gcd(a, b) != 1:
        return
    o = lambda k: mod_group_order(ModGroupSpec(t, n, k))
    assert o(a * b) == o(a) * o(b)


def test_closure_equals_brute_force():
    spec = ModGroupSpec("sl", 2, 6)
    G = enumerate_mod_group(spec)
    assert len(G) == 144


def test_spec_validation():
    with pytest.raises(InputError):
        ModGroupSpec("gl", 2, 3)
    with pytest.raises(InputError):
        ModGroupSpec("sl", 1, 3)
    with pytest.raises(InputError):
        ModGroupSpec("sl", 2, 0)
    with pytest.raises(Unsupported):
        brute_force_elements(ModGroupSpec("sl", 3, 9))


@pytest.mark.parametrize("k,total", [(6, 144), (12, 1152)])
def test_crt(k, total):
    rep = crt_check("sl", 2, k)
    assert rep.ok
    assert f"{total} = " in rep.to_text()


@pytest.mark.parametrize("p,size", [(2, 8), (3, 27)])
def test_kernel(p, size):
    rep = reduction_kernel_check("sl", 2, p, 2)
    assert rep.ok and rep.params["kernel_order"] == size


def test_kernel_sp_and_deeper_level():
    rep = reduction_kernel_check("sl", 2, 2, 3)
    assert rep.ok and rep.params["kernel_order"] == 64
    assert reduction_kernel_check("sp", 1, 3, 2).ok


def test_chain_simplicity():
    a = theorem1_minimal_chain("sl", 3, 2)
    assert a.ok and a.params["simple"] and a.params["quotient_order"] == 168
    b = theorem1_minimal_chain("sp", 2, 2)
    assert b.ok and not b.params["simple"] and b.params["quotient_order"] == 720
    assert any("exception" in n for n in b.notes)


def test_chain_rejects_composite_p():
    with pytest.raises(InputError):
        theorem1_minimal_chain("sl", 3, 4)


def test_report_json_shape():
    d = json.loads(crt_check("sl", 2, 6).to_json())
    assert d["ok"] is True and d["kind"] == "crt" and d["checks"]
