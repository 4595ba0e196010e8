"""Catalog of finite simple groups below an order bound.

Records carry spectra, subgroup markers and minimal permutation degrees with
a provenance tag per field.  ``enumerate_simple_orders`` rebuilds the list of
simple groups from the family order formulas; ``load_catalog`` reads the
shipped JSON file and ``verify_record`` re-derives what it can.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from importlib import resources
from math import gcd
from pathlib import Path

from .classical import SPORADIC_ORDERS, FamilySpec, classical_order, standard_generators
from .errors import CapExceeded, CatalogError, InputError, Unsupported
from .groups import (GenSet, Perm, TargetSpec, enumerate_group, find_subgroup_by_type,
                     order_spectrum, random_elements, element_order)
from .rings import prime_power

MAX_BOUND = 10 ** 11
G4_BOUND = 47_377_612_800
MARKERS = ("contains_psl27", "contains_s5", "contains_q8")
MARKER_TARGET = {"contains_psl27": TargetSpec("PSL27"), "contains_s5": TargetSpec("S5"),
                 "contains_q8": TargetSpec("Q8")}
PROVENANCE = ("atlas-data", "computed", "formula")
FIELDS = ("name", "aliases", "family", "params", "order", "spectrum", "markers",
          "min_transitive_degree", "generators", "provenance")

# name -> canonical name for the exceptional isomorphisms between families
ISOMORPHIC_TO = {
    "L2(4)": "A5", "L2(5)": "A5", "L3(2)": "L2(7)", "L2(9)": "A6",
    "L4(2)": "A8", "S4(3)": "U4(2)",
}
# equal orders, different groups: never merged
NON_ISOMORPHIC_PAIRS = (("A8", "L3(4)"), ("S6(3)", "O7(3)"))


# ---------------------------------------------------------------------------
# naming


def canonical_name(spec: FamilySpec) -> str:
    f, n, q = spec.family, spec.n, spec.q
    if f == "sporadic":
        return spec.name
    if f == "A":
        return f"A{n}"
    if f == "PSL":
        return f"L{n}({q})"
    if f == "PSU":
        return f"U{n}({q})"
    if f == "PSp":
        return f"S{n}({q})"
    if f in ("O", "O+", "O-"):
        return f"O{n}{f[1:]}({q})"
    if f == "2B2":
        return f"Sz({q})"
    if f == "2G2":
        return f"R({q})"
    if f == "2F4'":
        return "2F4(2)'"
    return f"{f}({q})"


def _spec_aliases(spec: FamilySpec) -> list[str]:
    """The FamilySpec rendering (``PSL(2,7)``, ``O+(8,2)``...) when it differs
    from the canonical name."""
    s = str(spec)
    return [s] if s != canonical_name(spec) else []


def _prime_powers(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q) is not None]


def _candidate_specs(bound: int):
    """Every simple-group family member with order < bound (before dedup)."""
    out: list[FamilySpec] = []

    def add(spec: FamilySpec):
        if classical_order(spec) < bound:
            out.append(spec)
            return True
        return False

    n = 5
    while add(FamilySpec("A", n=n)):
        n += 1
    qmax = 2
    while qmax ** 3 // 2 < bound * 4:
        qmax *= 2
    qs = _prime_powers(min(qmax, 20000))
    for q in qs:
        if q >= 4:
            add(FamilySpec("PSL", n=2, q=q))
    for dim in range(3, 40):
        if not any([add(FamilySpec("PSL", n=dim, q=q)) for q in qs[:60]]):
            break
    for dim in range(3, 40):
        if not any([add(FamilySpec("PSU", n=dim, q=q)) for q in qs[:60] if (dim, q) != (3, 2)]):
            break
    for dim in range(4, 40, 2):
        if not any([add(FamilySpec("PSp", n=dim, q=q)) for q in qs[:60] if (dim, q) != (4, 2)]):
            break
    for dim in range(7, 40, 2):
        if not any([add(FamilySpec("O", n=dim, q=q)) for q in qs[:60] if q % 2]):
            break
    for dim in range(8, 40, 2):
        hit = False
        for fam in ("O+", "O-"):
            hit |= any([add(FamilySpec(fam, n=dim, q=q)) for q in qs[:60]])
        if not hit:
            break
    for q in qs[:60]:
        if q >= 3:
            add(FamilySpec("G2", q=q))
        add(FamilySpec("3D4", q=q))
        for fam in ("F4", "E6", "E7", "E8", "2E6"):
            add(FamilySpec(fam, q=q))
        pp = prime_power(q)
        if pp[0] == 2 and pp[1] % 2 == 1 and q > 2:
            add(FamilySpec("2B2", q=q))
            add(FamilySpec("2F4", q=q))
        if pp[0] == 3 and pp[1] % 2 == 1 and q > 3:
            add(FamilySpec("2G2", q=q))
    add(FamilySpec("2F4'"))
    for name in SPORADIC_ORDERS:
        add(FamilySpec("sporadic", name=name))
    return out


@dataclass(frozen=True)
class SimpleGroupEntry:
    name: str
    order: int
    spec: FamilySpec
    aliases: tuple[str, ...]


def enumerate_simple_groups(bound: int) -> list[SimpleGroupEntry]:
    """Nonabelian simple groups of order < bound, one entry per isomorphism
    class, sorted by (order, name)."""
    if bound > MAX_BOUND:
        raise Unsupported(f"bound {bound} exceeds {MAX_BOUND}")
    entries: dict[str, SimpleGroupEntry] = {}
    extra_aliases: dict[str, list[str]] = {}
    for spec in _candidate_specs(bound):
        name = canonical_name(spec)
        target = ISOMORPHIC_TO.get(name)
        if target is not None:
            extra_aliases.setdefault(target, []).append(name)
            continue
        if name in entries:
            raise InputError(f"duplicate family member {name}")
        entries[name] = SimpleGroupEntry(name, classical_order(spec), spec, tuple(_spec_aliases(spec)))
    out = []
    for name, e in entries.items():
        al = tuple(sorted(set(e.aliases) | set(extra_aliases.get(name, ()))))
        out.append(SimpleGroupEntry(name, e.order, e.spec, al))
    out.sort(key=lambda e: (e.order, e.name))
    return out


def enumerate_simple_orders(bound: int) -> list[tuple[str, int]]:
    return [(e.name, e.order) for e in enumerate_simple_groups(bound)]


# ---------------------------------------------------------------------------
# facts derived from formulas


def min_transitive_degree(spec: FamilySpec) -> int | None:
    """Minimal degree of a faithful transitive action (= minimal index of a
    proper subgroup), from the standard tables."""
    from .atlas_data import SPORADIC_MIN_DEGREE
    f, n, q = spec.family, spec.n, spec.q
    if f == "sporadic":
        return SPORADIC_MIN_DEGREE.get(spec.name)
    if f == "A":
        return n
    if f == "PSL":
        if n == 2:
            return {4: 5, 5: 5, 7: 7, 9: 6, 11: 11}.get(q, q + 1)
        if (n, q) == (4, 2):
            return 8
        return (q ** n - 1) // (q - 1)
    if f == "PSp":
        m = n // 2
        if (m, q) == (2, 3):
            return 27
        if q == 2:
            return 2 ** (m - 1) * (2 ** m - 1)
        return (q ** (2 * m) - 1) // (q - 1)
    if f == "PSU":
        if n == 3:
            return 50 if q == 5 else q ** 3 + 1
        if n == 4:
            return (q + 1) * (q ** 3 + 1)
        if (n, q) == (6, 2):
            return 672
        return (q ** n - (-1) ** n) * (q ** (n - 1) - (-1) ** (n - 1)) // (q * q - 1)
    if f == "O":
        m = (n - 1) // 2
        if q == 3:
            return 3 ** m * (3 ** m - 1) // 2
        return (q ** (2 * m) - 1) // (q - 1)
    if f == "O+":
        m = n // 2
        if q == 2:
            return 2 ** (m - 1) * (2 ** m - 1)
        if q == 3:
            return 3 ** (m - 1) * (3 ** m - 1) // 2
        return (q ** m - 1) * (q ** (m - 1) + 1) // (q - 1)
    if f == "O-":
        m = n // 2
        return (q ** m + 1) * (q ** (m - 1) - 1) // (q - 1)
    if f == "G2":
        return {3: 351, 4: 416}.get(q, (q ** 6 - 1) // (q - 1))
    if f == "3D4":
        return (q ** 8 + q ** 4 + 1) * (q + 1)
    if f == "2B2":
        return q * q + 1
    if f == "2G2":
        return q ** 3 + 1
    if f == "2F4'":
        return 1600
    return None


def formula_markers(name: str, spec: FamilySpec, order: int) -> dict[str, tuple[str, str]]:
    """Marker values decidable without computation: (value, provenance).

    Lagrange gives ``no`` whenever the subgroup order does not divide |G|;
    Dickson's subgroup list settles PSL(2,q); the 3-dimensional
    representations of PSL(2,7) settle L3(q) and U3(q).
    """
    from .atlas_data import LIE_PSL27, SPORADIC_PSL27
    out: dict[str, tuple[str, str]] = {}
    for key, size in (("contains_psl27", 168), ("contains_s5", 120), ("contains_q8", 8)):
        if order % size:
            out[key] = ("no", "formula")
    f, n, q = spec.family, spec.n, spec.q
    pp = prime_power(q) if q else None
    p = pp[0] if pp else None
    if f == "PSL" and n == 2:
        k = pp[1]
        out.setdefault("contains_psl27", ("yes" if p == 7 else "no", "formula"))
        out.setdefault("contains_s5", ("yes" if p == 5 and k % 2 == 0 else "no", "formula"))
        out.setdefault("contains_q8", ("no", "formula"))
    elif f == "A":
        out.setdefault("contains_psl27", ("yes" if n >= 7 else "no", "formula"))
        out.setdefault("contains_s5", ("yes" if n >= 7 else "no", "formula"))
        out.setdefault("contains_q8", ("yes" if n >= 8 else "no", "formula"))
    elif f == "PSL" and n == 3:
        yes = p in (2, 7) or q % 7 in (1, 2, 4)
        out.setdefault("contains_psl27", ("yes" if yes else "no", "formula"))
    elif f == "PSU" and n == 3:
        yes = p == 7 or (p != 2 and q % 7 in (3, 5, 6))
        out.setdefault("contains_psl27", ("yes" if yes else "no", "formula"))
    elif f == "PSL" and n >= 4 and p == 2:
        out.setdefault("contains_psl27", ("yes", "formula"))
    elif f == "sporadic" and name in SPORADIC_PSL27:
        out.setdefault("contains_psl27", (SPORADIC_PSL27[name], "atlas-data"))
    elif name in LIE_PSL27:
        out.setdefault("contains_psl27", (LIE_PSL27[name], "atlas-data"))
    return out


# ---------------------------------------------------------------------------
# records


@dataclass(frozen=True)
class SimpleGroupRecord:
    name: str
    aliases: tuple[str, ...]
    family: str
    params: tuple[int, ...]
    order: int
    spectrum: tuple[int, ...]
    markers: dict
    min_transitive_degree: int | None
    generators: tuple[tuple[int, ...], ...] | None
    provenance: dict

    @property
    def spec(self) -> FamilySpec:
        return spec_from_params(self.family, self.params, self.name)

    def marker(self, key: str) -> str:
        return self.markers.get(key, "unknown")

    def genset(self) -> GenSet | None:
        if not self.generators:
            return None
        return GenSet(tuple(Perm(g) for g in self.generators), self.name)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "aliases": list(self.aliases),
            "family": self.family,
            "params": list(self.params),
            "order": str(self.order),
            "spectrum": list(self.spectrum),
            "markers": {k: self.markers.get(k, "unknown") for k in MARKERS},
            "min_transitive_degree": self.min_transitive_degree if self.min_transitive_degree is not None else "unknown",
            "generators": [list(g) for g in self.generators] if self.generators else None,
            "provenance": dict(sorted(self.provenance.items())),
        }


def spec_from_params(family: str, params, name: str = "") -> FamilySpec:
    params = tuple(params)
    if family == "sporadic":
        return FamilySpec("sporadic", name=name)
    if family == "A":
        (n,) = params
        return FamilySpec("A", n=n)
    if family == "2F4'":
        if params:
            raise InputError("2F4' takes no parameters")
        return FamilySpec("2F4'")
    if family in ("G2", "F4", "E6", "E7", "E8", "2E6", "3D4", "2B2", "2G2", "2F4"):
        (q,) = params
        return FamilySpec(family, q=q)
    n, q = params
    return FamilySpec(family, n=n, q=q)


def _fail(path: str, msg: str):
    raise CatalogError(msg, path)


def record_from_json(obj, path: str) -> SimpleGroupRecord:
    if not isinstance(obj, dict):
        _fail(path, "record must be an object")
    keys = set(obj)
    if keys != set(FIELDS):
        missing = sorted(set(FIELDS) - keys)
        extra = sorted(keys - set(FIELDS))
        _fail(path, f"fields mismatch (missing {missing}, unexpected {extra})")
    name = obj["name"]
    if not isinstance(name, str) or not name:
        _fail(f"{path}.name", "must be a nonempty string")
    where = f"{path}({name})"
    aliases = obj["aliases"]
    if not isinstance(aliases, list) or not all(isinstance(a, str) for a in aliases):
        _fail(f"{where}.aliases", "must be a list of strings")
    params = obj["params"]
    if not isinstance(params, list) or not all(isinstance(x, int) for x in params):
        _fail(f"{where}.params", "must be a list of integers")
    try:
        spec = spec_from_params(obj["family"], params, name)
    except (InputError, ValueError, TypeError) as exc:
        _fail(f"{where}.family", f"unknown family or bad parameters: {exc}")
    order_s = obj["order"]
    if not isinstance(order_s, str) or not order_s.isdigit():
        _fail(f"{where}.order", "must be a decimal string")
    order = int(order_s)
    expected = classical_order(spec)
    if order != expected:
        _fail(f"{where}.order", f"{order} does not match the formula value {expected}")
    spec_list = obj["spectrum"]
    if (not isinstance(spec_list, list) or not spec_list
            or not all(isinstance(x, int) and x >= 1 for x in spec_list)):
        _fail(f"{where}.spectrum", "must be a nonempty list of positive integers")
    if spec_list != sorted(set(spec_list)):
        _fail(f"{where}.spectrum", "must be strictly increasing")
    if spec_list[0] != 1:
        _fail(f"{where}.spectrum", "must contain 1")
    for x in spec_list:
        if order % x:
            _fail(f"{where}.spectrum", f"element order {x} does not divide the group order")
    markers = obj["markers"]
    if not isinstance(markers, dict) or set(markers) != set(MARKERS):
        _fail(f"{where}.markers", f"must have exactly the keys {list(MARKERS)}")
    for k, v in markers.items():
        if v not in ("yes", "no", "unknown"):
            _fail(f"{where}.markers.{k}", f"bad value {v!r}")
    deg = obj["min_transitive_degree"]
    if deg == "unknown" or deg is None:
        deg = None
    elif not isinstance(deg, int) or deg < 1:
        _fail(f"{where}.min_transitive_degree", "must be a positive integer or 'unknown'")
    gens = obj["generators"]
    if gens is not None:
        if not isinstance(gens, list) or not gens:
            _fail(f"{where}.generators", "must be null or a nonempty list of permutations")
        degree = len(gens[0])
        for i, g in enumerate(gens):
            if not isinstance(g, list) or sorted(g) != list(range(degree)):
                _fail(f"{where}.generators[{i}]", "not a permutation of 0..d-1")
        gens = tuple(tuple(g) for g in gens)
    prov = obj["provenance"]
    if not isinstance(prov, dict):
        _fail(f"{where}.provenance", "must be an object")
    for k, v in prov.items():
        if v not in PROVENANCE:
            _fail(f"{where}.provenance.{k}", f"bad provenance {v!r}")
    return SimpleGroupRecord(name, tuple(aliases), obj["family"], tuple(params), order,
                             tuple(spec_list), dict(markers), deg, gens, dict(prov))


def default_catalog_path() -> Path:
    return Path(str(resources.files("mfq") / "data" / "catalog.json"))


@dataclass
class Catalog:
    records: list[SimpleGroupRecord]
    path: str
    sha256: str
    _by_name: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        for r in self.records:
            for nm in (r.name, *r.aliases):
                self._by_name[nm.lower()] = r

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def get(self, name: str) -> SimpleGroupRecord:
        try:
            return self._by_name[name.lower()]
        except KeyError:
            raise InputError(f"no catalog record named {name!r}") from None

    @property
    def max_order(self) -> int:
        return max(r.order for r in self.records)


def load_catalog(path: str | Path | None = None) -> Catalog:
    p = Path(path) if path is not None else default_catalog_path()
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise CatalogError(f"cannot read catalog: {exc}", str(p)) from None
    try:
        data = json.loads(raw.decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise CatalogError(f"invalid JSON: {exc}", str(p)) from None
    if not isinstance(data, list):
        raise CatalogError("top level must be an array", str(p))
    records = []
    seen: dict[str, str] = {}
    for i, obj in enumerate(data):
        rec = record_from_json(obj, f"[{i}]")
        for nm in (rec.name, *rec.aliases):
            key = nm.lower()
            if key in seen:
                raise CatalogError(f"duplicate name {nm!r} (also used by {seen[key]})", f"[{i}]({rec.name})")
            seen[key] = rec.name
        records.append(rec)
    return Catalog(records, str(p), hashlib.sha256(raw).hexdigest())


def dump_catalog(records: list[SimpleGroupRecord]) -> str:
    return json.dumps([r.to_json() for r in records], indent=1, ensure_ascii=False) + "\n"


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerifyBudget:
    enumeration_cap: int = 2_000_000
    samples: int = 2000
    seed: int = 0
    search_budget: int | None = None


@dataclass
class VerificationReport:
    name: str
    tier: str  # a | b | c
    checks: list[tuple[str, bool, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok, _ in self.checks)

    @property
    def findings(self) -> list[str]:
        return [f"{c}: {d}" for c, ok, d in self.checks if not ok]

    def add(self, check: str, ok: bool, detail: str = ""):
        self.checks.append((check, ok, detail))


def record_generators(rec: SimpleGroupRecord) -> GenSet | None:
    """Embedded permutations, else constructible matrix generators."""
    gs = rec.genset()
    if gs is not None:
        return gs
    spec = rec.spec
    if spec.family in ("PSL", "PSU", "PSp", "A"):
        try:
            return standard_generators(spec)
        except (Unsupported, InputError):
            return None
    return None


def verify_record(rec: SimpleGroupRecord, budget: VerifyBudget | None = None) -> VerificationReport:
    budget = budget or VerifyBudget()
    formula = classical_order(rec.spec)
    gens = record_generators(rec)
    if gens is not None and rec.order <= budget.enumeration_cap:
        rep = VerificationReport(rec.name, "a")
        try:
            G = enumerate_group(gens, cap=budget.enumeration_cap)
        except CapExceeded:
            rep.add("enumeration", False, "closure exceeded the cap although the order is below it")
            return rep
        rep.add("order", len(G) == rec.order == formula, f"enumerated {len(G)}, stored {rec.order}")
        spec = order_spectrum(G).orders
        rep.add("spectrum", spec == rec.spectrum, f"computed {list(spec)}")
        for key in MARKERS:
            if rec.marker(key) != "yes":
                continue
            res = find_subgroup_by_type(G, MARKER_TARGET[key], budget.search_budget)
            rep.add(f"marker {key}", res.found, f"witness search: {res.status}")
        return rep
    if gens is not None:
        rep = VerificationReport(rec.name, "b")
        rep.add("order", rec.order == formula, f"formula {formula}")
        sample = random_elements(gens, budget.samples, budget.seed)
        seen = sorted({1} | {element_order(x) for x in sample})
        extra = [o for o in seen if o not in rec.spectrum]
        rep.add("sampled spectrum", not extra,
                f"sampled {seen}" + (f"; not in stored spectrum: {extra}" if extra else ""))
        return rep
    rep = VerificationReport(rec.name, "c")
    rep.add("order", rec.order == formula, f"formula {formula}; spectrum trusted external")
    return rep


def catalog_hash_short(cat: Catalog) -> str:
    return cat.sha256[:16]
