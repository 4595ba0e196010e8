"""Concrete finite groups: permutation and matrix elements, enumeration,
element orders, coset actions, sampling and subgroup searches.

Internally every enumerated group runs on an *engine* whose elements are
hashable keys. Permutation groups (and matrix groups with a faithful orbit of
at most 256 points) use byte strings composed with ``bytes.translate``;
larger matrix groups fall back to native matrix arithmetic.
"""
from __future__ import annotations

import random
from array import array
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Sequence

from .errors import CapExceeded, InputError, Unsupported
from .rings import Modulus, SquareMatrix, mat_inverse, mat_mul

DEFAULT_CAP = 5_000_000
DEFAULT_ORDER_CAP = 100_000

_PADS = [bytes(256 - d) for d in range(257)]


def _compose(a, b):
    """a o b, i.e. apply b first."""
    if type(b) is bytes:
        return b.translate(a + _PADS[len(a)])
    return tuple(map(a.__getitem__, b))


def _perm_inverse(a):
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return bytes(inv) if type(a) is bytes else tuple(inv)


# ---------------------------------------------------------------------------
# elements


class Perm:
    """Permutation of ``0..d-1`` given by its image array.

    ``p * q`` is composition ``p o q`` (``q`` acts first), matching the
    product of matrices acting on column vectors.
    """

    __slots__ = ("images",)
    variant = "permutation"

    def __init__(self, images: Sequence[int]):
        images = bytes(images) if len(images) <= 256 else tuple(images)
        if sorted(images) != list(range(len(images))):
            raise InputError("permutation images are not a bijection")
        self.images = images

    @classmethod
    def _raw(cls, images) -> "Perm":
        obj = object.__new__(cls)
        obj.images = images
        return obj

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(images)

    @property
    def degree(self) -> int:
        return len(self.images)

    @property
    def key(self):
        return self.images

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Perm") -> "Perm":
        if len(other.images) != len(self.images):
            raise InputError("degree mismatch")
        return Perm._raw(_compose(self.images, other.images))

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def inverse(self) -> "Perm":
        return Perm._raw(_perm_inverse(self.images))

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def one(self) -> "Perm":
        return Perm.identity(self.degree)

    def cycles(self) -> list[tuple[int, ...]]:
        seen = bytearray(self.degree)
        out = []
        for i in range(self.degree):
            if not seen[i]:
                cyc = [i]
                seen[i] = 1
                j = self.images[i]
                while j != i:
                    cyc.append(j)
                    seen[j] = 1
                    j = self.images[j]
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> list[int]:
        return sorted(len(c) for c in self.cycles())

    def __repr__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        body = "".join("(" + " ".join(map(str, c)) + ")" for c in cyc) or "()"
        return f"Perm{body}[{self.degree}]"


class MatrixElement:
    __slots__ = ("matrix",)
    variant = "matrix"

    def __init__(self, matrix: SquareMatrix):
        self.matrix = matrix

    @property
    def key(self):
        return self.matrix.rows

    @property
    def modulus(self) -> Modulus:
        return self.matrix.modulus

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def __mul__(self, other):
        return MatrixElement(mat_mul(self.matrix, other.matrix))

    def __eq__(self, other):
        return type(other) is type(self) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def inverse(self):
        return MatrixElement(mat_inverse(self.matrix))

    def is_identity(self) -> bool:
        return self.matrix.is_identity()

    def one(self):
        return MatrixElement(SquareMatrix.identity(self.dim, self.modulus))

    def __repr__(self):
        return f"MatrixElement({self.matrix})"


def normalize_projective(rows, R: Modulus):
    """Canonical scalar multiple of a matrix given as a row tuple."""
    flat = [x for row in rows for x in row]
    if R.is_field:
        first = next((x for x in flat if x), None)
        if first is None or first == 1:
            return rows
        c = R.inv(first)
        mul = R.mul
        return tuple(tuple(mul(c, x) for x in row) for row in rows)
    best = None
    for u in R.units():
        cand = tuple(tuple(u * x % R.m for x in row) for row in rows)
        if best is None or cand < best:
            best = cand
    return best


class ProjectiveElement:
    """A matrix up to multiplication by scalar units."""

    __slots__ = ("matrix",)
    variant = "matrix-mod-scalars"

    def __init__(self, matrix: SquareMatrix):
        rows = normalize_projective(matrix.rows, matrix.modulus)
        self.matrix = matrix if rows is matrix.rows else SquareMatrix._trusted(matrix.modulus, rows)

    @property
    def key(self):
        return self.matrix.rows

    @property
    def modulus(self) -> Modulus:
        return self.matrix.modulus

    @property
    def dim(self) -> int:
        return self.matrix.dim

    def __mul__(self, other):
        return ProjectiveElement(mat_mul(self.matrix, other.matrix))

    def __eq__(self, other):
        return type(other) is type(self) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def inverse(self):
        return ProjectiveElement(mat_inverse(self.matrix))

    def is_identity(self) -> bool:
        return self.matrix.scalar_value() is not None

    def one(self):
        return ProjectiveElement(SquareMatrix.identity(self.dim, self.modulus))

    def __repr__(self):
        return f"ProjectiveElement({self.matrix})"


GroupElement = Perm | MatrixElement | ProjectiveElement


@dataclass(frozen=True)
class GenSet:
    generators: tuple
    label: str = ""

    def __post_init__(self):
        gens = tuple(self.generators)
        if not gens:
            raise InputError("a generating set must be nonempty")
        first = gens[0]
        for g in gens[1:]:
            if type(g) is not type(first):
                raise InputError("generators mix element variants")
            if isinstance(g, Perm) and g.degree != first.degree:
                raise InputError("generators have different degrees")
            if not isinstance(g, Perm) and (g.dim != first.dim or g.modulus != first.modulus):
                raise InputError("generators have different dimension or modulus")
        object.__setattr__(self, "generators", gens)

    @property
    def variant(self) -> str:
        return self.generators[0].variant

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


def element_order(x, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Least k >= 1 with x^k = 1 (x^k scalar for projective elements)."""
    if cap < 1:
        raise InputError("cap must be >= 1")
    if isinstance(x, Perm):
        k = lcm(*(len(c) for c in x.cycles()))
        if k > cap:
            raise CapExceeded(f"element order {k} exceeds cap {cap}")
        return k
    y, k = x, 1
    while not y.is_identity():
        y = y * x
        k += 1
        if k > cap:
            raise CapExceeded(f"element order exceeds cap {cap}")
    return k


def power(x, k: int):
    if k < 0:
        x, k = x.inverse(), -k
    result = x.one()
    while k:
        if k & 1:
            result = result * x
        x = x * x
        k >>= 1
    return result


# ---------------------------------------------------------------------------
# engines


class _PermEngine:
    def __init__(self, degree: int):
        self.degree = degree
        self.identity = bytes(range(degree)) if degree <= 256 else tuple(range(degree))

    def mul(self, a, b):
        return _compose(a, b)

    def inv(self, a):
        return _perm_inverse(a)

    def conj(self, g, x, ginv):
        return _compose(_compose(g, x), ginv)

    def order(self, a, cap=DEFAULT_ORDER_CAP) -> int:
        ident = self.identity
        if a == ident:
            return 1
        k = 1
        if type(a) is bytes:
            table = a + _PADS[len(a)]
            y = a
            while y != ident:
                y = y.translate(table)
                k += 1
                if k > cap:
                    raise CapExceeded(f"element order exceeds cap {cap}")
            return k
        return lcm(*(len(c) for c in Perm._raw(a).cycles()))

    def power_orders(self, a, targets: set, cap=DEFAULT_ORDER_CAP) -> int:
        """Least k >= 1 with a^k in ``targets``."""
        k, y = 1, a
        while y not in targets:
            y = _compose(a, y)
            k += 1
            if k > cap:
                raise CapExceeded(f"power probe exceeds cap {cap}")
        return k


class _MatrixEngine:
    def __init__(self, modulus: Modulus, dim: int, projective: bool):
        self.modulus = modulus
        self.dim = dim
        self.projective = projective
        self.identity = SquareMatrix.identity(dim, modulus).rows

    def _wrap(self, rows):
        return SquareMatrix._trusted(self.modulus, rows)

    def mul(self, a, b):
        rows = mat_mul(self._wrap(a), self._wrap(b)).rows
        if self.projective:
            rows = normalize_projective(rows, self.modulus)
        return rows

    def inv(self, a):
        rows = mat_inverse(self._wrap(a)).rows
        if self.projective:
            rows = normalize_projective(rows, self.modulus)
        return rows

    def conj(self, g, x, ginv):
        return self.mul(self.mul(g, x), ginv)

    def order(self, a, cap=DEFAULT_ORDER_CAP) -> int:
        return self.power_orders(a, {self.identity}, cap)

    def power_orders(self, a, targets: set, cap=DEFAULT_ORDER_CAP) -> int:
        k, y = 1, a
        while y not in targets:
            y = self.mul(a, y)
            k += 1
            if k > cap:
                raise CapExceeded(f"power probe exceeds cap {cap}")
        return k


def normalize_vector(v: tuple, R: Modulus) -> tuple:
    if R.is_field:
        first = next((x for x in v if x), None)
        if first is None or first == 1:
            return v
        c = R.inv(first)
        return tuple(R.mul(c, x) for x in v)
    return min(tuple(u * x % R.m for x in v) for u in R.units())


class _Action:
    """Faithful permutation action of a matrix group on a union of orbits of
    vectors (or projective points).

    Faithfulness is guaranteed by requiring the point set to contain a basis
    (linear case) or a projective frame: a matrix fixing every vector of a
    basis is the identity, and one fixing the points of a frame is scalar.
    """

    def __init__(self, gens: Sequence, projective: bool, max_points: int = 256):
        first = gens[0]
        R, n = first.modulus, first.dim
        self.modulus = R
        self.projective = projective
        self._mats = [g.matrix for g in gens]
        seeds = [tuple(int(i == j) for j in range(n)) for i in range(n)]
        seeds.append(tuple([1] * n))
        seeds += [tuple(int(j in (i, i + 1)) for j in range(n)) for i in range(n - 1)]
        if R.kind == "quadratic":
            w = next(a for a in range(R.m) if a >= R.p)
            seeds += [tuple(w if j == i else int(j == 0) for j in range(n)) for i in range(1, n)]
        orbits: list[list[tuple]] = []
        covered: set = set()
        for s in seeds:
            s = normalize_vector(s, R) if projective else s
            if s in covered:
                continue
            orb = self._orbit(s, max_points)
            if orb is None:
                continue
            covered.update(orb)
            orbits.append(orb)
        orbits.sort(key=len)
        points: list[tuple] = []
        for orb in orbits:
            if len(points) + len(orb) > max_points:
                break
            points += orb
            if self._spans(points, n):
                break
        else:
            raise Unsupported("no small faithful orbit union")
        if not self._spans(points, n):
            raise Unsupported("no small faithful orbit union")
        self.points = points
        self.index = {v: i for i, v in enumerate(points)}

    def _orbit(self, seed: tuple, limit: int):
        orb, seen = [seed], {seed}
        i = 0
        while i < len(orb):
            for M in self._mats:
                w = self.act(M, orb[i])
                if w not in seen:
                    seen.add(w)
                    orb.append(w)
                    if len(orb) > limit:
                        return None
            i += 1
        return orb

    def _spans(self, points: list[tuple], n: int) -> bool:
        R = self.modulus
        if R.is_field:
            candidates = [self._greedy_basis(points, n)]
        else:
            from itertools import combinations, islice
            candidates = islice(combinations(points, n), 5000)
        from .rings import determinant
        for combo in candidates:
            if combo is None:
                return False
            B = SquareMatrix(R, tuple(zip(*combo)))
            if not R.is_unit(determinant(B).value):
                continue
            if not self.projective:
                return True
            Binv = mat_inverse(B)
            for v in points:
                if all(R.is_unit(c) for c in Binv.apply(v)):
                    return True
        return False

    def _greedy_basis(self, points: list[tuple], n: int):
        """n linearly independent points (row reduction over the field)."""
        R = self.modulus
        echelon: list[tuple[int, list[int]]] = []  # (pivot column, row)
        chosen = []
        for v in points:
            row = list(v)
            for piv, er in echelon:
                c = row[piv]
                if c:
                    row = [R.sub(a, R.mul(c, b)) for a, b in zip(row, er)]
            piv = next((i for i, a in enumerate(row) if a), None)
            if piv is None:
                continue
            c = R.inv(row[piv])
            echelon.append((piv, [R.mul(c, a) for a in row]))
            chosen.append(v)
            if len(chosen) == n:
                return tuple(chosen)
        return None

    def act(self, M: SquareMatrix, v: tuple) -> tuple:
        w = M.apply(v)
        return normalize_vector(w, self.modulus) if self.projective else w

    def perm_of(self, M: SquareMatrix):
        """Images of the points under M, or None if M leaves the point set."""
        out = []
        index = self.index
        for v in self.points:
            j = index.get(self.act(M, v))
            if j is None:
                return None
            out.append(j)
        return bytes(out) if len(out) <= 256 else tuple(out)


# ---------------------------------------------------------------------------
# enumerated groups


class EnumeratedGroup:
    """A finite group given by generators, fully enumerated when possible."""

    def __init__(self, gens: GenSet):
        self.gens = gens
        self.keys: list = []
        self.index: dict = {}
        self.enumerated = False
        self._parent = array("i")
        self._pgen = array("b")
        self._orders: array | None = None
        self._action: _Action | None = None
        first = gens.generators[0]
        if isinstance(first, Perm):
            self.engine = _PermEngine(first.degree)
            self.gen_keys = [g.key for g in gens]
        else:
            projective = isinstance(first, ProjectiveElement)
            try:
                self._action = _Action(gens.generators, projective)
            except Unsupported:
                self._action = None
            if self._action is not None:
                self.engine = _PermEngine(len(self._action.points))
                self.gen_keys = [self._action.perm_of(g.matrix) for g in gens]
            else:
                self.engine = _MatrixEngine(first.modulus, first.dim, projective)
                self.gen_keys = [g.key for g in gens]

    # -- construction --------------------------------------------------------

    def _close(self, cap: int):
        eng = self.engine
        ident = eng.identity
        keys, index = [ident], {ident: 0}
        parent, pgen = array("i", [-1]), array("b", [-1])
        gen_keys = self.gen_keys
        compact = type(ident) is bytes and isinstance(eng, _PermEngine)
        tables = [g + _PADS[len(g)] for g in gen_keys] if compact else None
        i = 0
        while i < len(keys):
            x = keys[i]
            for gi in range(len(gen_keys)):
                y = x.translate(tables[gi]) if compact else eng.mul(gen_keys[gi], x)
                if y not in index:
                    index[y] = len(keys)
                    keys.append(y)
                    parent.append(i)
                    pgen.append(gi)
                    if len(keys) > cap:
                        raise CapExceeded(f"closure exceeds cap {cap}")
            i += 1
        self.keys, self.index = keys, index
        self._parent, self._pgen = parent, pgen
        self.enumerated = True

    @property
    def order(self) -> int | None:
        return len(self.keys) if self.enumerated else None

    def __len__(self):
        self._require()
        return len(self.keys)

    def __contains__(self, x) -> bool:
        return self.key_of(x) in self.index

    def _require(self):
        if not self.enumerated:
            raise Unsupported(f"group {self.gens.label or ''} is not enumerated")

    # -- conversions ---------------------------------------------------------

    def key_of(self, x):
        """Engine key of a GroupElement (None if it cannot lie in the group)."""
        if self._action is not None:
            return self._action.perm_of(x.matrix)
        return x.key

    def element(self, i: int):
        """Native GroupElement for the element with index i."""
        self._require()
        if isinstance(self.engine, _PermEngine) and self._action is None:
            return Perm._raw(self.keys[i])
        word = []
        while i > 0:
            word.append(self._pgen[i])
            i = self._parent[i]
        gens = self.gens.generators
        x = gens[0].one()
        # keys[j] = gen[pgen[j]] * keys[parent[j]]
        for gi in word:
            x = x * gens[gi]
        return x

    def elements(self) -> list:
        return [self.element(i) for i in range(len(self.keys))]

    # -- element data --------------------------------------------------------

    def element_orders(self) -> array:
        self._require()
        if self._orders is None:
            order = self.engine.order
            self._orders = array("I", (order(k) for k in self.keys))
        return self._orders

    def order_of_key(self, k) -> int:
        if self._orders is not None and k in self.index:
            return self._orders[self.index[k]]
        return self.engine.order(k)

    def mul(self, a, b):
        return self.engine.mul(a, b)

    def inv(self, a):
        return self.engine.inv(a)

    def indices_of_order(self, n: int) -> list[int]:
        orders = self.element_orders()
        return [i for i, o in enumerate(orders) if o == n]

    def closure(self, gen_keys: Sequence, cap: int | None = None) -> set:
        """Set of keys of the subgroup generated by ``gen_keys``."""
        eng = self.engine
        ident = eng.identity
        seen = {ident}
        frontier = [ident]
        gen_keys = list(gen_keys)
        limit = cap if cap is not None else len(self.keys) if self.enumerated else DEFAULT_CAP
        while frontier:
            nxt = []
            for x in frontier:
                for g in gen_keys:
                    y = eng.mul(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
                        if len(seen) > limit:
                            raise CapExceeded(f"subgroup closure exceeds {limit}")
            frontier = nxt
        return seen

    def conjugacy_classes(self, among: Iterable[int] | None = None) -> list[list[int]]:
        """Classes (as index lists) of the elements with indices in ``among``."""
        self._require()
        eng = self.engine
        index, keys = self.index, self.keys
        gk = self.gen_keys
        ginv = [eng.inv(g) for g in gk]
        todo = range(len(keys)) if among is None else sorted(set(among))
        seen: set[int] = set()
        classes = []
        for i in todo:
            if i in seen:
                continue
            cls = [i]
            seen.add(i)
            j = 0
            while j < len(cls):
                x = keys[cls[j]]
                for g, gi in zip(gk, ginv):
                    y = index[eng.conj(g, x, gi)]
                    if y not in seen:
                        seen.add(y)
                        cls.append(y)
                j += 1
            classes.append(sorted(cls))
        return classes

    def class_representatives(self, among: Iterable[int]) -> list[int]:
        return [c[0] for c in self.conjugacy_classes(among)]


def enumerate_group(gens: GenSet, cap: int = DEFAULT_CAP) -> EnumeratedGroup:
    if cap < 1:
        raise InputError("cap must be >= 1")
    G = EnumeratedGroup(gens)
    try:
        G._close(cap)
    except CapExceeded as exc:
        G.keys, G.index = [], {}
        exc.group = G
        raise
    return G


def unenumerated(gens: GenSet) -> EnumeratedGroup:
    """A group handle usable for sampling only."""
    return EnumeratedGroup(gens)


def subgroup_from_elements(elements: Sequence, label: str = "", cap: int = DEFAULT_CAP) -> EnumeratedGroup:
    """Enumerated group whose element set is exactly ``elements``.

    A small generating set is picked greedily; raises InputError if the
    elements are not closed under multiplication.
    """
    elements = list(elements)
    if not elements:
        raise InputError("no elements")
    gens = [elements[0]]
    G = enumerate_group(GenSet(tuple(gens), label), cap)
    target = {G.key_of(x) for x in elements}
    for x in elements:
        if G.key_of(x) not in G.index:
            gens.append(x)
            G = enumerate_group(GenSet(tuple(gens), label), cap)
            target = {G.key_of(x) for x in elements}
            if len(G) > len(target):
                raise InputError("elements are not closed under multiplication")
    if set(G.index) != target:
        raise InputError("elements are not closed under multiplication")
    return G


# ---------------------------------------------------------------------------
# spectra and sampling


@dataclass(frozen=True)
class Spectrum:
    orders: tuple[int, ...]
    exact: bool

    def __contains__(self, n):
        return n in self.orders


def random_elements(gens: GenSet, n: int, seed: int, warmup: int = 64) -> list:
    """Product-replacement pseudo-random walk (with accumulator).

    Uses ``random.Random`` (Mersenne Twister) seeded with ``seed`` so runs are
    reproducible bit for bit.
    """
    if n < 1:
        raise InputError("n must be >= 1")
    rng = random.Random(seed)
    base = list(gens.generators)
    r = max(10, 2 * len(base))
    state = [base[i % len(base)] for i in range(r)]
    acc = base[0].one()

    def step():
        nonlocal acc
        i, j = rng.sample(range(r), 2)
        other = state[j] if rng.random() < 0.5 else state[j].inverse()
        if rng.random() < 0.5:
            state[i] = state[i] * other
        else:
            state[i] = other * state[i]
        acc = acc * state[rng.randrange(r)]
        return acc

    for _ in range(warmup):
        step()
    return [step() for _ in range(n)]


def order_spectrum(G: EnumeratedGroup, sample_budget: int = 0, seed: int = 0) -> Spectrum:
    """Exact spectrum for an enumerated group, else a sampled lower bound."""
    if G.enumerated and sample_budget == 0:
        return Spectrum(tuple(sorted(set(G.element_orders()))), True)
    if sample_budget < 1:
        raise Unsupported("group is not enumerated; give a sample budget")
    orders = {1} | {element_order(x) for x in random_elements(G.gens, sample_budget, seed)}
    return Spectrum(tuple(sorted(orders)), False)


# ---------------------------------------------------------------------------
# cosets


@dataclass
class CosetAction:
    group: EnumeratedGroup
    subgroup: frozenset
    coset_of: dict
    reps: list
    images: list  # Perm for each generator of the group

    @property
    def degree(self) -> int:
        return len(self.reps)

    def permutation(self, key) -> Perm:
        """Action of the element with engine key ``key`` on left cosets."""
        G = self.group
        return Perm._raw(bytes_or_tuple([self.coset_of[G.mul(key, r)] for r in self.reps]))


def bytes_or_tuple(images: list[int]):
    return bytes(images) if len(images) <= 256 else tuple(images)


def coset_action(G: EnumeratedGroup, H_gens: Sequence) -> CosetAction:
    """Left multiplication action of G on the left cosets gH."""
    G._require()
    hkeys = []
    for h in H_gens:
        k = G.key_of(h) if not isinstance(h, (bytes, tuple)) else h
        if k not in G.index:
            raise InputError(f"{h!r} is not an element of the group")
        hkeys.append(k)
    H = frozenset(G.closure(hkeys))
    seen: set = set()
    cosets: list[list] = []
    for g in G.keys:
        if g in seen:
            continue
        members = [G.mul(g, h) for h in H]
        seen.update(members)
        cosets.append(members)
    cosets.sort(key=min)
    coset_of: dict = {}
    reps = []
    for cid, members in enumerate(cosets):
        for x in members:
            coset_of[x] = cid
        reps.append(min(members))
    ca = CosetAction(G, H, coset_of, reps, [])
    ca.images = [ca.permutation(k) for k in G.gen_keys]
    return ca


# ---------------------------------------------------------------------------
# subgroup searches


@dataclass(frozen=True)
class TargetSpec:
    kind: str  # PSL27 | S5 | Q8 | Z
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("PSL27", "S5", "Q8", "Z"):
            raise InputError(f"unknown target {self.kind}")
        if self.kind == "Z" and self.n < 1:
            raise InputError("cyclic target needs n >= 1")


@dataclass
class SearchResult:
    status: str  # found | absent | indeterminate
    witness: tuple = ()
    pairs_checked: int = 0
    note: str = ""

    @property
    def found(self) -> bool:
        return self.status == "found"


# (order of a, order of b, order of ab, order of <a,b>)
_PAIR_TARGETS = {"PSL27": (2, 3, 7, 168), "S5": (2, 4, 5, 120)}


def find_subgroup_by_type(G: EnumeratedGroup, spec: TargetSpec, budget: int | None = None) -> SearchResult:
    """Exhaustive witness search over pairs with the first entry running
    over conjugacy-class representatives.

    A (2,3,7)-generated group of order 168 is identified with PSL(2,7) and a
    (2,4,5)-generated group of order 120 with S5.
    """
    if not G.enumerated:
        raise Unsupported("subgroup search needs an enumerated group")
    orders = G.element_orders()
    keys = G.keys
    if spec.kind == "Z":
        for i, o in enumerate(orders):
            if o == spec.n:
                return SearchResult("found", (G.element(i),), 0)
        return SearchResult("absent", (), 0)

    checked = 0
    if spec.kind == "Q8":
        if len(keys) % 8:
            return SearchResult("absent", (), 0, "8 does not divide the group order")
        fours = G.indices_of_order(4)
        reps = G.class_representatives(fours)
        mul, inv = G.mul, G.inv
        for ia in reps:
            a = keys[ia]
            a2 = mul(a, a)
            ainv = inv(a)
            for ib in fours:
                checked += 1
                if budget is not None and checked > budget:
                    return SearchResult("indeterminate", (), checked - 1, "search budget exhausted")
                b = keys[ib]
                if mul(b, b) != a2 or b == a or b == ainv:
                    continue
                if mul(mul(b, a), inv(b)) != ainv:
                    continue
                if len(G.closure([a, b], cap=8)) == 8:
                    return SearchResult("found", (G.element(ia), G.element(ib)), checked)
        return SearchResult("absent", (), checked)

    oa, ob, oab, target = _PAIR_TARGETS[spec.kind]
    if len(keys) % target:
        return SearchResult("absent", (), 0, f"{target} does not divide the group order")
    a_idx = G.indices_of_order(oa)
    b_idx = G.indices_of_order(ob)
    if not a_idx or not b_idx:
        return SearchResult("absent", (), 0, "required element orders are missing")
    reps = G.class_representatives(a_idx)
    eng = G.engine
    for ia in reps:
        a = keys[ia]
        for ib in b_idx:
            checked += 1
            if budget is not None and checked > budget:
                return SearchResult("indeterminate", (), checked - 1, "search budget exhausted")
            b = keys[ib]
            ab = eng.mul(a, b)
            if G.order_of_key(ab) != oab:
                continue
            try:
                size = len(G.closure([a, b], cap=target))
            except CapExceeded:
                continue
            if size == target:
                return SearchResult("found", (G.element(ia), G.element(ib)), checked)
    return SearchResult("absent", (), checked)


# ---------------------------------------------------------------------------
# normal structure


def normal_closure(G: EnumeratedGroup, keys: Sequence) -> set:
    """Smallest normal subgroup of G containing the given elements."""
    eng = G.engine
    gk = G.gen_keys
    ginv = [eng.inv(g) for g in gk]
    gens = list(keys)
    N = G.closure(gens)
    changed = True
    while changed:
        changed = False
        for h in list(gens):
            for g, gi in zip(gk, ginv):
                c = eng.conj(g, h, gi)
                if c not in N:
                    gens.append(c)
                    N = G.closure(gens)
                    changed = True
    return N


def is_simple(G: EnumeratedGroup) -> bool:
    """True iff G is nontrivial with no proper nontrivial normal subgroup."""
    if not G.enumerated:
        raise Unsupported("simplicity test needs an enumerated group")
    n = len(G.keys)
    if n == 1:
        return False
    for cls in G.conjugacy_classes():
        rep = G.keys[cls[0]]
        if rep == G.engine.identity:
            continue
        if len(normal_closure(G, [rep])) != n:
            return False
    return True


def generating_subset(G: EnumeratedGroup, keys: Iterable) -> list:
    """Greedy generating set (at most log2 of the subgroup order elements)."""
    gens: list = []
    current: set = {G.engine.identity}
    for k in sorted(keys):
        if k not in current:
            gens.append(k)
            current = G.closure(gens)
    return gens


def derived_subgroup(G: EnumeratedGroup, keys: Iterable | None = None) -> set:
    """Commutator subgroup of the subgroup with the given element keys
    (all of G by default): normal closure of the commutators of a
    generating set."""
    eng = G.engine
    hgens = list(G.gen_keys) if keys is None else generating_subset(G, keys)
    hinv = [eng.inv(h) for h in hgens]
    comms = []
    for i, a in enumerate(hgens):
        for j in range(i + 1, len(hgens)):
            b = hgens[j]
            comms.append(eng.mul(eng.mul(a, b), eng.mul(hinv[i], hinv[j])))
    N = G.closure(comms)
    pending = list(comms)
    while pending:
        c = pending.pop()
        for h, hi in zip(hgens, hinv):
            x = eng.conj(h, c, hi)
            if x not in N:
                comms.append(x)
                pending.append(x)
                N = G.closure(comms)
    return N


def is_solvable(G: EnumeratedGroup, keys: Sequence | None = None, max_steps: int = 64) -> bool:
    """Derived series of the subgroup terminates at the identity."""
    current = set(G.keys if keys is None else keys)
    for _ in range(max_steps):
        if len(current) == 1:
            return True
        nxt = derived_subgroup(G, current)
        if len(nxt) == len(current):
            return False
        current = nxt
    return False


@dataclass
class CenterInfo:
    center: list
    projective_order: int
    projective_spectrum: tuple[int, ...]


def center_and_projective(G: EnumeratedGroup) -> CenterInfo:
    """Scalar matrices in G, |G/Z| and the element orders of G/Z."""
    if not G.enumerated:
        raise Unsupported("center computation needs an enumerated group")
    first = G.gens.generators[0]
    if not isinstance(first, MatrixElement):
        raise InputError("center_and_projective needs a matrix group")
    R, n = first.modulus, first.dim
    center_keys = []
    center = []
    for u in R.units():
        S = MatrixElement(SquareMatrix.scalar(n, u, R))
        k = G.key_of(S)
        if k is not None and k in G.index:
            center_keys.append(k)
            center.append(S)
    zset = set(center_keys)
    eng = G.engine
    proj = {eng.power_orders(k, zset) for k in G.keys}
    return CenterInfo(center, len(G.keys) // len(center), tuple(sorted(proj)))
