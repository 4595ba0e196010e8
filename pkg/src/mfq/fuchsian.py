"""Fuchsian signatures, Riemann-Hurwitz genus, Singerman subgroup signatures
and surface-kernel epimorphism search."""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import groupby
from typing import Sequence

from .errors import InputError, InternalInconsistency, NotSurfaceKernel, Unsupported
from .groups import EnumeratedGroup, coset_action


@dataclass(frozen=True)
class Signature:
    """(genus; m_1, ..., m_k) with periods stored expanded and sorted."""

    genus: int
    periods: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise InputError(f"genus must be a nonnegative integer, got {self.genus!r}")
        periods = tuple(sorted(int(m) for m in self.periods))
        if any(m < 2 for m in periods):
            raise InputError("periods must be >= 2")
        object.__setattr__(self, "periods", periods)

    @classmethod
    def parse(cls, text: str) -> "Signature":
        s = text.strip().replace(" ", "")
        if not (s.startswith("(") and s.endswith(")")):
            raise InputError(f"signature must be parenthesised: {text!r}")
        body = s[1:-1]
        if ";" in body:
            g, _, rest = body.partition(";")
            if not g.isdigit():
                raise InputError(f"bad genus in {text!r}")
            genus = int(g)
        else:
            genus, rest = 0, body
        periods: list[int] = []
        if rest not in ("", "-"):
            for tok in rest.split(","):
                m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
                if not m:
                    raise InputError(f"bad period {tok!r} in {text!r}")
                periods += [int(m.group(1))] * int(m.group(2) or 1)
        return cls(genus, tuple(periods))

    def __str__(self):
        if not self.periods:
            return f"({self.genus};-)"
        parts = []
        for m, run in groupby(self.periods):
            k = len(list(run))
            parts.append(f"{m}^{k}" if k >= 4 else ",".join([str(m)] * k))
        return f"({self.genus};{','.join(parts)})"

    @property
    def is_triangle(self) -> bool:
        return self.genus == 0 and len(self.periods) == 3


def measure(sig: Signature) -> Fraction:
    """mu = 2g - 2 + sum(1 - 1/m)."""
    return 2 * sig.genus - 2 + sum((1 - Fraction(1, m) for m in sig.periods), Fraction(0))


def kernel_genus(sig: Signature, N: int) -> int:
    """Genus of the surface covering the orbifold with deck group of order N."""
    mu = measure(sig)
    if mu <= 0:
        raise NotSurfaceKernel(f"{sig} is not hyperbolic")
    twice = N * mu + 2
    if twice.denominator != 1 or twice.numerator % 2:
        raise NotSurfaceKernel(f"{N}*mu({sig}) + 2 is not an even integer")
    g = twice.numerator // 2
    if g < 2:
        raise NotSurfaceKernel(f"genus {g} < 2")
    return g


# ---------------------------------------------------------------------------
# epimorphisms


@dataclass(frozen=True)
class Epimorphism:
    """Images of the canonical generators.

    Triangle domain (0; m1,m2,m3): ``images`` = (x1, x2) and x3 = (x1 x2)^-1.
    Domain (1; m): ``images`` = (a, b) and the elliptic image is
    [a, b]^-1 = b a b^-1 a^-1.  ``elliptic`` holds the images of the elliptic
    generators in period order. Images are engine keys of ``codomain``.
    """

    domain: Signature
    codomain: EnumeratedGroup
    images: tuple
    elliptic: tuple
    surface_kernel: bool

    @classmethod
    def build(cls, domain: Signature, G: EnumeratedGroup, images: Sequence) -> "Epimorphism":
        images = tuple(G.key_of(x) if not isinstance(x, (bytes, tuple)) else x for x in images)
        if any(k not in G.index for k in images):
            raise InputError("image outside the group")
        _check_shape(domain)
        mul, inv = G.mul, G.inv
        if domain.genus == 0:
            x1, x2 = images
            elliptic = (x1, x2, inv(mul(x1, x2)))
        else:
            a, b = images
            elliptic = (mul(mul(b, a), mul(inv(b), inv(a))),)
        orders = [G.order_of_key(x) for x in elliptic]
        if any(m % o for m, o in zip(domain.periods, orders)):
            raise InputError("images violate the period relations")
        if len(G.closure(images)) != len(G):
            raise InputError("images do not generate the group")
        sk = all(o == m for m, o in zip(domain.periods, orders))
        return cls(domain, G, images, elliptic, sk)

    def preimage_signature(self, H_gens: Sequence) -> Signature:
        return preimage_signature(self, H_gens)

    def conjugate(self, g) -> "Epimorphism":
        """Epimorphism with every image conjugated by the key ``g``."""
        G = self.codomain
        gi = G.inv(g)
        return Epimorphism.build(self.domain, G, [G.engine.conj(g, x, gi) for x in self.images])

    def describe(self) -> str:
        G = self.codomain
        return ", ".join(f"x{i + 1}:#{G.index[x]}(ord {G.order_of_key(x)})"
                         for i, x in enumerate(self.elliptic))


def _check_shape(sig: Signature):
    ok = (sig.genus == 0 and len(sig.periods) == 3) or (sig.genus == 1 and len(sig.periods) == 1)
    if not ok:
        raise Unsupported(f"epimorphism search supports (0;a,b,c) and (1;m) only, not {sig}")


def preimage_signature(epi: Epimorphism, H_gens: Sequence) -> Signature:
    """Signature of the preimage of H = <H_gens> (Singerman)."""
    G = epi.codomain
    ca = coset_action(G, H_gens)
    d = ca.degree
    periods: list[int] = []
    for m, x in zip(epi.domain.periods, epi.elliptic):
        for cyc in ca.permutation(x).cycles():
            c = len(cyc)
            if m % c:
                raise InternalInconsistency(f"cycle length {c} does not divide period {m}")
            if c < m:
                periods.append(m // c)
    rhs = d * measure(epi.domain)
    twice_g = rhs + 2 - sum((1 - Fraction(1, m) for m in periods), Fraction(0))
    if twice_g.denominator != 1 or twice_g.numerator % 2 or twice_g < 0:
        raise InternalInconsistency(f"non-integral preimage genus {twice_g}/2")
    return Signature(twice_g.numerator // 2, tuple(periods))


def find_epimorphisms(sig: Signature, G: EnumeratedGroup, surface_kernel: bool = True,
                      up_to_conjugacy: bool = True, limit: int | None = None) -> list[Epimorphism]:
    """Exhaustive search of epimorphisms from the signature's group onto G.

    With ``up_to_conjugacy`` the first image runs over class representatives
    and second images are reduced modulo the centralizer of the first, so each
    inner-conjugacy class of epimorphisms is reported once. Results are sorted
    by image indices.
    """
    _check_shape(sig)
    G._require()
    orders = G.element_orders()
    keys, index = G.keys, G.index
    n = len(keys)
    mul, inv = G.mul, G.inv

    def fits(o: int, m: int) -> bool:
        return o == m if surface_kernel else m % o == 0

    if sig.genus == 0:
        m1, m2, m3 = sig.periods
        first = [i for i in range(n) if fits(orders[i], m1)]
        second = [i for i in range(n) if fits(orders[i], m2)]
    else:
        (m,) = sig.periods
        first = list(range(n))
        second = list(range(n))
    if up_to_conjugacy:
        first = G.class_representatives(first)

    found: list[tuple[int, int]] = []
    for ia in first:
        a = keys[ia]
        cent = _centralizer(G, a) if up_to_conjugacy else None
        seen: set[int] = set()
        for ib in second:
            if ib in seen:
                continue
            b = keys[ib]
            if sig.genus == 0:
                if not fits(G.order_of_key(mul(a, b)), m3):
                    continue
            else:
                c = mul(mul(b, a), mul(inv(b), inv(a)))
                if not fits(G.order_of_key(c), m):
                    continue
            if len(G.closure([a, b])) != n:
                continue
            if cent is not None:
                orbit = {index[G.engine.conj(z, b, inv(z))] for z in cent}
                seen |= orbit
                ib = min(orbit)
            found.append((ia, ib))
            if limit is not None and len(found) >= limit:
                break
        if limit is not None and len(found) >= limit:
            break
    found.sort()
    return [Epimorphism.build(sig, G, (keys[i], keys[j])) for i, j in found]


def _centralizer(G: EnumeratedGroup, a) -> list:
    mul = G.mul
    return [z for z in G.keys if mul(z, a) == mul(a, z)]

