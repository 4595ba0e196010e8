#!/usr/bin/env python3
"""Regenerate src/mfq/data/catalog.json.

Every simple group below the g=4 bound gets a record.  Spectra come from the
structural algorithms in mfq.spectra where available (cross-checked against
enumeration for small groups), otherwise from mfq.atlas_data.  Markers are
computed by exhaustive witness search when the group is small enough to
enumerate, else taken from the formula rules in mfq.catalog.

Sporadic permutation generators are obtained with sympy's Schreier-Sims
(M22 as the two-point stabilizer in M24); sympy is only needed here.

    python3 scripts/build_catalog.py [--out PATH] [--enum-cap N] [--samples N]
"""
from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path

from mfq.atlas_data import ATLAS_SPECTRA
from mfq.catalog import (G4_BOUND, MARKER_TARGET, MARKERS, SimpleGroupRecord, dump_catalog,
                         enumerate_simple_groups, formula_markers, min_transitive_degree)
from mfq.classical import is_constructible, omega_generators, standard_generators
from mfq.errors import Unsupported
from mfq.groups import (GenSet, MatrixElement, Perm, element_order, enumerate_group,
                        find_subgroup_by_type, order_spectrum, random_elements)
from mfq.spectra import spectrum_for

log = logging.getLogger("build_catalog")


# ---------------------------------------------------------------------------
# sporadic generators


def _sympy_perm_lists(group, degree_points):
    return [[degree_points.index(g(x)) for x in degree_points] for g in group]


def _two_generators(H, order):
    """First pair of Schreier generators (in sympy's order) generating H."""
    from sympy.combinatorics import PermutationGroup
    gens = H.generators
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            if PermutationGroup([gens[i], gens[j]]).order() == order:
                return [gens[i], gens[j]]
    return list(gens)


def mathieu_generators() -> dict[str, list[list[int]]]:
    from sympy.combinatorics import Permutation, PermutationGroup
    out = {}
    m11 = [Permutation([list(range(11))]), Permutation([[2, 6, 10, 7], [3, 9, 4, 5]], size=11)]
    m12 = [Permutation([list(range(11))], size=12), Permutation([[2, 6, 10, 7], [3, 9, 4, 5]], size=12),
           Permutation([[0, 11], [1, 10], [2, 5], [3, 7], [4, 8], [6, 9]], size=12)]
    for name, gens, order in (("M11", m11, 7920), ("M12", m12, 95040)):
        G = PermutationGroup(gens)
        assert G.order() == order, name
        out[name] = [list(g.array_form) for g in gens]

    # M24 = <PSL(2,23), delta> on the projective line {0..22, inf=23}
    inf = 23
    pts = list(range(24))
    qr = {x * x % 23 for x in range(1, 23)}
    inv = lambda x: pow(x, 21, 23)

    def perm(f):
        return Permutation([f(x) for x in pts])

    shift = perm(lambda x: inf if x == inf else (x + 1) % 23)
    double = perm(lambda x: inf if x == inf else 2 * x % 23)
    neg_inv = perm(lambda x: 0 if x == inf else inf if x == 0 else (-inv(x)) % 23)
    delta = perm(lambda x: x if x in (0, inf) else
                 (pow(x, 3, 23) * inv(9)) % 23 if x in qr else (9 * pow(x, 3, 23)) % 23)
    M24 = PermutationGroup([shift, double, neg_inv, delta])
    assert M24.order() == 244823040
    M22 = M24.stabilizer(inf).stabilizer(0)
    assert M22.order() == 443520
    rest = [x for x in pts if x not in (0, inf)]
    out["M22"] = _sympy_perm_lists(_two_generators(M22, 443520), rest)
    return out


# ---------------------------------------------------------------------------


def orthogonal_sample_check(name: str, n: int, q: int, eps: int, samples: int, seed: int):
    mats = omega_generators(n, q, eps)
    gs = GenSet(tuple(MatrixElement(M) for M in mats), name)
    seen = {1} | {element_order(x) for x in random_elements(gs, samples, seed)}
    extra = sorted(seen - set(ATLAS_SPECTRA[name]))
    if extra:
        raise SystemExit(f"{name}: sampled orders {extra} missing from the shipped spectrum")
    log.info("%s: %d samples, orders %s all in the shipped spectrum", name, samples, sorted(seen))


def build(enum_cap: int, samples: int) -> list[SimpleGroupRecord]:
    sporadic_gens = mathieu_generators()
    records = []
    for e in enumerate_simple_groups(G4_BOUND):
        t0 = time.time()
        spec = e.spec
        prov = {"order": "formula"}
        try:
            spectrum = spectrum_for(spec.family, spec.n, spec.q)
            prov["spectrum"] = "formula"
        except Unsupported:
            spectrum = ATLAS_SPECTRA[e.name]
            prov["spectrum"] = "atlas-data"
        gens = sporadic_gens.get(e.name)
        if gens is not None:
            prov["generators"] = "computed"
            genset = GenSet(tuple(Perm(g) for g in gens), e.name)
        elif (e.order <= enum_cap and spec.family in ("A", "PSL", "PSU", "PSp")
              and is_constructible(spec)):
            genset = standard_generators(spec)
        else:
            genset = None

        formula = formula_markers(e.name, spec, e.order)
        markers, deg = {}, min_transitive_degree(spec)
        if genset is not None and e.order <= enum_cap:
            G = enumerate_group(genset, cap=enum_cap)
            assert len(G) == e.order, (e.name, len(G))
            exact = order_spectrum(G).orders
            if exact != tuple(spectrum):
                raise SystemExit(f"{e.name}: {prov['spectrum']} spectrum {spectrum} != enumerated {exact}")
            spectrum, prov["spectrum"] = exact, "computed"
            for key in MARKERS:
                res = find_subgroup_by_type(G, MARKER_TARGET[key])
                value = "yes" if res.found else "no"
                if key in formula and formula[key][0] != value:
                    raise SystemExit(f"{e.name}: {key} rule says {formula[key][0]}, search says {value}")
                markers[key] = value
                prov[f"markers.{key}"] = "computed"
        else:
            for key in MARKERS:
                if key in formula:
                    markers[key], prov[f"markers.{key}"] = formula[key]
                else:
                    markers[key] = "unknown"
        if deg is not None:
            prov["min_transitive_degree"] = "atlas-data" if spec.family == "sporadic" else "formula"
        rec = SimpleGroupRecord(e.name, e.aliases, spec.family, _params(spec), e.order,
                                tuple(spectrum), markers, deg,
                                tuple(tuple(g) for g in gens) if gens else None, prov)
        records.append(rec)
        dt = time.time() - t0
        if dt > 1:
            log.info("%s (%d): %.1fs", e.name, e.order, dt)

    for name, n, q, eps in (("O7(3)", 7, 3, 0), ("O8+(2)", 8, 2, 1), ("O8-(2)", 8, 2, -1)):
        orthogonal_sample_check(name, n, q, eps, samples, seed=1)
    return records


def _params(spec) -> tuple[int, ...]:
    f = spec.family
    if f in ("sporadic", "2F4'"):
        return ()
    if f == "A":
        return (spec.n,)
    if f in ("PSL", "PSU", "PSp", "O", "O+", "O-"):
        return (spec.n, spec.q)
    return (spec.q,)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default=str(Path(__file__).resolve().parents[1] / "src/mfq/data/catalog.json"))
    ap.add_argument("--enum-cap", type=int, default=1_500_000)
    ap.add_argument("--samples", type=int, default=3000)
    args = ap.parse_args(argv)
    logging.basicConfig(level=logging.INFO, format="%(message)s")
    recs = build(args.enum_cap, args.samples)
    Path(args.out).write_text(dump_catalog(recs), encoding="utf-8")
    log.info("wrote %d records to %s", len(recs), args.out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
