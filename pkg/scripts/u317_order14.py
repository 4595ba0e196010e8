#!/usr/bin/env python3
"""Does U3(17) have elements of order 14?

Two independent looks: (1) the structural spectrum from maximal tori and
unipotent parts, (2) random elements of PSU(3,17) built from explicit
SU(3,17) generators.  An element of order 14 would need a commuting
involution and element of order 7; 7 divides only q^2 - q + 1 = 273 = 3*7*13,
and the torus of order (q^2 - q + 1)/3 = 91 is self-centralizing of odd order.

    python3 scripts/u317_order14.py [--samples 20000] [--seed 0]
"""
from __future__ import annotations

import argparse
from collections import Counter

from mfq.classical import classical_order, parse_group_spec, standard_generators
from mfq.groups import element_order, random_elements
from mfq.rings import factorize
from mfq.spectra import spectrum_for


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description="order-14 elements in U3(17)")
    ap.add_argument("--samples", type=int, default=20000)
    ap.add_argument("--seed", type=int, default=0)
    a = ap.parse_args(argv)
    q = 17
    spec = parse_group_spec(f"psu(3,{q})")
    print(f"|U3({q})| = {classical_order(spec)} = {factorize(classical_order(spec))}")
    for name, t in (("q+1", q + 1), ("q-1", q - 1), ("q^2-q+1", q * q - q + 1)):
        print(f"  {name} = {t} = {factorize(t)}")
    structural = spectrum_for("PSU", 3, q)
    print(f"structural spectrum: {list(structural)}")
    counts = Counter(element_order(x) for x in random_elements(standard_generators(spec), a.samples, a.seed))
    print(f"{a.samples} random elements (seed {a.seed}): " +
          ", ".join(f"{o}:{c}" for o, c in sorted(counts.items())))
    extra = sorted(set(counts) - set(structural))
    print(f"sampled orders outside the structural spectrum: {extra or 'none'}")
    print(f"order 14 in structural spectrum: {14 in structural}; seen in sample: {14 in counts}")
    return 1 if extra else 0


if __name__ == "__main__":
    raise SystemExit(main())
