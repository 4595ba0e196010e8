import pytest

from mfq.classical import parse_group_spec, standard_generators
from mfq.groups import enumerate_group, order_spectrum
from mfq.spectra import (alternating_spectrum, divisor_closure, divisors, g2_spectrum, psl2_spectrum,
                         ree_spectrum, spectrum_for, suzuki_spectrum)
from mfq.errors import Unsupported

# structural formulas against brute-force enumeration
ENUMERABLE = ["psl(2,4)", "psl(2,7)", "psl(2,9)", "psl(2,11)", "psl(2,13)",
              "psl(2,25)", "psl(2,49)", "psl(3,2)", "psl(3,3)", "psl(3,4)", "psu(3,3)",
              "psu(3,5)", "psp(4,3)", "psp(6,2)", "a(7)", "a(8)", "a(9)"]


@pytest.mark.parametrize("text", ENUMERABLE)
def test_formula_matches_enumeration(text):
    spec = parse_group_spec(text)
    G = enumerate_group(standard_generators(spec), cap=2_000_000)
    assert spectrum_for(spec.family, spec.n, spec.q) == order_spectrum(G).orders


# ATLAS element-order lists for groups not enumerated here
@pytest.mark.parametrize("fn,q,expected", [
    (suzuki_spectrum, 8, (1, 2, 4, 5, 7, 13)),
    (suzuki_spectrum, 32, (1, 2, 4, 5, 25, 31, 41)),
    (g2_spectrum, 3, (1, 2, 3, 4, 6, 7, 8, 9, 12, 13)),
    (g2_spectrum, 4, (1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 13, 15, 21)),
    (ree_spectrum, 27, (1, 2, 3, 6, 7, 9, 13, 14, 19, 26, 37)),
])
def test_exceptional_spectra(fn, q, expected):
    assert fn(q) == expected


def test_alternating_small():
    assert alternating_spectrum(5) == (1, 2, 3, 5)
    assert alternating_spectrum(6) == (1, 2, 3, 4, 5)


def test_psl2_dickson():
    # (q-1)/d, (q+1)/d and p; here q = 49
    s = psl2_spectrum(49)
    assert 24 in s and 25 in s and 7 in s and 48 not in s


def test_divisors():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisor_closure([4, 6]) == (1, 2, 3, 4, 6)


def test_unsupported_family():
    with pytest.raises(Unsupported):
        spectrum_for("3D4", None, 2)
