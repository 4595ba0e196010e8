"""Command-line interface.  Exit codes: 0 success, 1 mathematical
discrepancy, 2 input or configuration error."""
from __future__ import annotations

import argparse
import json
import sys

from .catalog import load_catalog
from .classical import classical_order, parse_group_spec, standard_generators
from .errors import CapExceeded, CatalogError, InputError, MfqError, NotSurfaceKernel, Unsupported
from .fuchsian import Signature, find_epimorphisms, kernel_genus
from .groups import (GenSet, TargetSpec, element_order, enumerate_group, find_subgroup_by_type,
                     order_spectrum, random_elements)
from .spectra import spectrum_for

EXIT_OK, EXIT_DISCREPANCY, EXIT_INPUT = 0, 1, 2
ENUM_CAP = 2_000_000


def _generators(text: str, catalog=None) -> GenSet:
    spec = parse_group_spec(text)
    if spec.family == "sporadic":
        rec = (catalog or load_catalog()).get(spec.name)
        gs = rec.genset()
        if gs is None:
            raise Unsupported(f"no embedded generators for {spec.name}")
        return gs
    return standard_generators(spec)


def _group(text: str):
    return enumerate_group(_generators(text), cap=ENUM_CAP)


def cmd_order(args) -> int:
    print(classical_order(parse_group_spec(args.spec)))
    return EXIT_OK


def cmd_spectrum(args) -> int:
    spec = parse_group_spec(args.spec)
    if args.sample:
        gs = _generators(args.spec)
        orders = sorted({1} | {element_order(x) for x in random_elements(gs, args.sample, args.seed)})
        print(f"{args.spec}: {','.join(map(str, orders))} (sampled lower bound, {args.sample} elements, seed {args.seed})")
        return EXIT_OK
    try:
        if classical_order(spec) > ENUM_CAP:
            raise CapExceeded("too large to enumerate")
        G = enumerate_group(_generators(args.spec), cap=ENUM_CAP)
        orders, how = order_spectrum(G).orders, f"exact, enumerated {len(G)} elements"
    except (Unsupported, CapExceeded):
        try:
            orders, how = spectrum_for(spec.family, spec.n, spec.q), "structural formula"
        except (Unsupported, InputError):
            rec = load_catalog().get(str(spec) if spec.family != "sporadic" else spec.name)
            orders, how = rec.spectrum, f"catalog, {rec.provenance.get('spectrum')}"
    print(f"{args.spec}: {','.join(map(str, orders))} ({how})")
    return EXIT_OK


def _subgroup_generators(G, text: str) -> list[tuple[str, list]]:
    """(description, generator keys) for each candidate subgroup."""
    t = text.strip().lower().replace(" ", "")
    if t.startswith("z(") and t.endswith(")"):
        n = int(t[2:-1])
        reps = G.class_representatives(G.indices_of_order(n))
        if not reps:
            raise InputError(f"the group has no element of order {n}")
        return [(f"<x> with x in class #{i + 1} of order {n}", [G.keys[r]]) for i, r in enumerate(reps)]
    kinds = {"q8": TargetSpec("Q8"), "psl(2,7)": TargetSpec("PSL27"), "l2(7)": TargetSpec("PSL27"),
             "s(5)": TargetSpec("S5"), "s5": TargetSpec("S5")}
    if t not in kinds:
        raise InputError(f"unsupported subgroup {text!r}: use z(n), q8, psl(2,7) or s(5)")
    res = find_subgroup_by_type(G, kinds[t])
    if not res.found:
        raise InputError(f"no subgroup {text} in the group ({res.status})")
    return [(f"{text} (witness)", [G.key_of(x) for x in res.witness])]


def cmd_signature_preimage(args) -> int:
    sig = Signature.parse(args.sig)
    G = _group(args.group)
    epis = find_epimorphisms(sig, G, limit=1)
    if not epis:
        print(f"no surface-kernel epimorphism {sig} -> {args.group}")
        return EXIT_DISCREPANCY
    epi = epis[0]
    print(f"epimorphism {sig} -> {args.group} (order {len(G)}, kernel genus {kernel_genus(sig, len(G))}): {epi.describe()}")
    for desc, keys in _subgroup_generators(G, args.subgroup):
        print(f"  {desc}: preimage {epi.preimage_signature(keys)}")
    return EXIT_OK


def cmd_epi_find(args) -> int:
    sig = Signature.parse(args.sig)
    G = _group(args.group)
    epis = find_epimorphisms(sig, G, surface_kernel=not args.any_kernel, limit=args.limit)
    try:
        genus = kernel_genus(sig, len(G))
    except NotSurfaceKernel as exc:
        genus = f"n/a ({exc})"
    print(f"{sig} -> {args.group} (order {len(G)}): {len(epis)} epimorphisms up to conjugacy; kernel genus {genus}")
    for i, e in enumerate(epis[: args.show]):
        print(f"  #{i + 1}: {e.describe()}")
    return EXIT_OK if epis else EXIT_DISCREPANCY


def cmd_ledger(args) -> int:
    from .replay import injected_subgroup_ledger
    entries = injected_subgroup_ledger(args.genus)
    if args.format == "json":
        print(json.dumps([e.to_json() for e in entries], indent=2))
    else:
        for e in entries:
            print(f"[{'PASS' if e.ok else 'FAIL'}] g={e.genus} {e.subgroup} via {e.signature}: kernel genus "
                  f"{e.kernel_genus}, {e.epimorphisms_checked} epimorphisms")
            for p in e.preimages:
                print(f"    {p.subgroup} -> {p.computed}" + (f" (expected {p.expected})" if p.expected else ""))
    return EXIT_OK if all(e.ok for e in entries) else EXIT_DISCREPANCY


def cmd_replay(args) -> int:
    from .replay import frontier_g3, replay_g3, replay_g4
    cat = load_catalog(args.catalog)
    if args.pipeline == "g3":
        rep = replay_g3(cat, seed=args.seed, samples=args.samples)
    elif args.pipeline == "g4":
        rep = replay_g4(cat)
    else:
        rep = frontier_g3(cat)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    return EXIT_OK if rep.ok else EXIT_DISCREPANCY


def cmd_congruence(args) -> int:
    from .congruence import crt_check, reduction_kernel_check, theorem1_minimal_chain
    if args.check == "crt":
        if args.k is None:
            raise InputError("crt needs --k")
        rep = crt_check(args.type, args.n, args.k)
    elif args.check == "kernel":
        if args.p is None or args.r is None:
            raise InputError("kernel needs --p and --r")
        rep = reduction_kernel_check(args.type, args.n, args.p, args.r)
    else:
        if args.p is None:
            raise InputError("chain needs --p")
        rep = theorem1_minimal_chain(args.type, args.n, args.p, args.r or 2)
    sys.stdout.write(rep.to_json() if args.format == "json" else rep.to_text())
    return EXIT_OK if rep.ok else EXIT_DISCREPANCY


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="mfq", description="finite quotients of mapping class groups: replay toolkit")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("order", help="exact order of a group, e.g. 'psp(6,2)'")
    p.add_argument("spec")
    p.set_defaults(func=cmd_order)

    p = sub.add_parser("spectrum", help="element orders of a group")
    p.add_argument("spec")
    p.add_argument("--sample", type=int, default=0, help="sample N random elements instead")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("signature", help="signature computations")
    ssub = p.add_subparsers(dest="sigcmd", required=True)
    q = ssub.add_parser("preimage", help="signature of the preimage of a subgroup")
    q.add_argument("--sig", required=True)
    q.add_argument("--group", required=True)
    q.add_argument("--subgroup", required=True, help="z(n), q8, psl(2,7) or s(5)")
    q.set_defaults(func=cmd_signature_preimage)

    p = sub.add_parser("epi", help="epimorphism search")
    esub = p.add_subparsers(dest="epicmd", required=True)
    q = esub.add_parser("find")
    q.add_argument("--sig", required=True)
    q.add_argument("--group", required=True)
    q.add_argument("--limit", type=int, default=None)
    q.add_argument("--show", type=int, default=5)
    q.add_argument("--any-kernel", action="store_true", help="do not require a torsion-free kernel")
    q.set_defaults(func=cmd_epi_find)

    p = sub.add_parser("ledger", help="re-verify the injected-subgroup ledger")
    p.add_argument("--genus", type=int, choices=(3, 4), required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_ledger)

    p = sub.add_parser("replay", help="run a replay pipeline")
    p.add_argument("pipeline", choices=("g3", "g4", "frontier-g3"))
    p.add_argument("--catalog", default=None)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=2000)
    p.set_defaults(func=cmd_replay)

    p = sub.add_parser("congruence", help="congruence quotient checks")
    p.add_argument("check", choices=("crt", "kernel", "chain"))
    p.add_argument("--type", choices=("sl", "sp"), default="sl")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_congruence)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CatalogError as exc:
        print(f"catalog error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, Unsupported, CapExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MfqError as exc:
        print(f"discrepancy: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY


if __name__ == "__main__":
    sys.exit(main())
