"""Element-order spectra from structure rather than enumeration.

Classical groups PSL_n(q), PSU_n(q) and PSp_2m(q) are handled through the
Jordan decomposition g = su.  The semisimple part is determined up to
conjugacy by its eigenvalue multiset, which must be stable under the relevant
Galois-type map:

* linear:     lambda -> lambda^q
* unitary:    lambda -> lambda^(-q)
* symplectic: lambda -> lambda^q and lambda -> 1/lambda, eigenvalues +-1
              with even multiplicity

and every such multiset occurs (Wall's parametrisation of semisimple
classes).  A unipotent element commuting with s lives in the centralizer,
a product of GL/GU/Sp factors in which an eigenvalue of multiplicity m allows
Jordan blocks of any size up to m; a block of size b has order
p^ceil(log_p b).  Modulo scalars, (su)^k is scalar iff s^k is scalar and
u^k = 1, so the orders in the simple group are projord(s) * p^a.

Eigenvalues are encoded as exponents of a fixed generator of the cyclic group
F_{Q^L}^*, where Q is q (q^2 for unitary) and L = lcm(1..n).
"""
from __future__ import annotations

from functools import lru_cache
from math import gcd, lcm

from .errors import InputError, Unsupported
from .rings import factorize, prime_power


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p ** k for d in out for k in range(e + 1)]
    return sorted(out)


def divisor_closure(orders) -> tuple[int, ...]:
    """Smallest divisor-closed set containing ``orders`` (spectra are
    closed under taking divisors)."""
    out: set[int] = set()
    for o in orders:
        if o not in out:
            out.update(divisors(o))
    return tuple(sorted(out))


def _p_powers_up_to(p: int, b: int) -> list[int]:
    """p-power orders of unipotent elements with blocks of size <= b."""
    out, x = [1], 1
    while x < b:
        x *= p
        out.append(x)
    return out


def _orbits(kind: str, n: int, q: int):
    """Eigenvalue orbits of the relevant Galois action.

    Returns (N, orbits) with each orbit a tuple (size, exponents, flag) where
    flag marks symplectic +-1 (which need even multiplicity).
    """
    L = lcm(*range(1, n + 1))
    Q = q * q if kind == "U" else q
    N = Q ** L - 1
    orbits: dict[int, tuple] = {}

    if kind == "L":
        step = lambda e: e * q % N
        sizes = range(1, n + 1)
        fixed_group = lambda d: q ** d - 1
    elif kind == "U":
        step = lambda e: -e * q % N
        sizes = range(1, n + 1)
        fixed_group = lambda d: abs((-q) ** d - 1)
    else:  # symplectic: Frobenius orbits first, paired with inverses below
        step = lambda e: e * q % N
        sizes = range(1, n + 1)
        fixed_group = lambda d: q ** d - 1

    for d in sizes:
        M = fixed_group(d)
        if N % M:
            raise InputError("internal: fixed group does not divide N")
        base = N // M
        for k in range(M):
            e = k * base % N
            if e in orbits:
                continue
            orb = [e]
            x = step(e)
            while x != e:
                orb.append(x)
                x = step(x)
            if len(orb) != d:
                continue
            orbits[e] = tuple(sorted(orb))

    result = []
    if kind in ("L", "U"):
        for orb in sorted(set(orbits.values())):
            result.append((len(orb), orb, False))
        return N, result

    seen = set()
    half = N // 2 if N % 2 == 0 else None
    for orb in sorted(set(orbits.values())):
        if orb in seen:
            continue
        inv = tuple(sorted((-e) % N for e in orb))
        seen.add(orb)
        seen.add(inv)
        if orb == inv:
            pm1 = len(orb) == 1  # eigenvalue 1 or -1
            if pm1:
                assert orb[0] in (0, half)
            result.append((len(orb), orb, pm1))
        else:
            merged = tuple(sorted(orb + inv))
            if len(merged) <= n:
                result.append((len(merged), merged, False))
    return N, sorted(result)


def _order_mod(x: int, N: int) -> int:
    return N // gcd(x % N, N)


@lru_cache(maxsize=None)
def classical_spectrum(kind: str, n: int, q: int) -> tuple[int, ...]:
    """Spectrum of PSL_n(q) ("L"), PSU_n(q) ("U") or PSp_n(q) ("S", n even)."""
    if kind not in ("L", "U", "S"):
        raise InputError(f"unknown kind {kind}")
    pp = prime_power(q)
    if pp is None:
        raise InputError(f"q={q} is not a prime power")
    p = pp[0]
    if n < 2 or (kind == "S" and n % 2):
        raise InputError("bad dimension")
    N, orbits = _orbits(kind, n, q)
    need_det = kind in ("L", "U")
    orders: set[int] = set()
    # eigenvalue multiset as list of (exponent, multiplicity)
    eig: list[tuple[int, int]] = []

    def leaf(total_exp: int):
        if need_det and total_exp % N:
            return
        e0 = eig[0][0]
        proj = 1
        for e, _ in eig[1:]:
            proj = lcm(proj, _order_mod(e - e0, N))
        bmax = max(m for _, m in eig)
        for u in _p_powers_up_to(p, bmax):
            orders.add(proj * u)

    def rec(start: int, remaining: int, total_exp: int):
        if remaining == 0:
            leaf(total_exp)
            return
        for i in range(start, len(orbits)):
            size, orb, pm1 = orbits[i]
            if size > remaining:
                continue
            step = 2 if pm1 else 1
            m = step
            while size * m <= remaining:
                for e in orb:
                    eig.append((e, m))
                rec(i + 1, remaining - size * m, total_exp + m * sum(orb))
                del eig[len(eig) - len(orb):]
                m += step

    rec(0, n, 0)
    return divisor_closure(orders)


def psl2_spectrum(q: int) -> tuple[int, ...]:
    """Orders in PSL_2(q): p and the divisors of (q-1)/d and (q+1)/d."""
    p = prime_power(q)[0]
    d = gcd(2, q - 1)
    return divisor_closure([p, (q - 1) // d, (q + 1) // d])


def alternating_spectrum(n: int) -> tuple[int, ...]:
    """lcm of cycle lengths over even cycle types of degree n."""
    orders: set[int] = set()

    def rec(remaining: int, maxpart: int, cur_lcm: int, even_cycles: int):
        if even_cycles % 2 == 0:
            orders.add(cur_lcm)
        for k in range(min(remaining, maxpart), 1, -1):
            rec(remaining - k, k, lcm(cur_lcm, k), even_cycles + (k % 2 == 0))

    rec(n, n, 1, 0)
    return tuple(sorted(orders))


def suzuki_spectrum(q: int) -> tuple[int, ...]:
    """Sz(q), q = 2^(2k+1): 2-elements of order 2, 4 and the cyclic tori of
    orders q-1, q+r+1, q-r+1 with r^2 = 2q."""
    r = 1
    while r * r < 2 * q:
        r *= 2
    if r * r != 2 * q:
        raise InputError(f"Sz needs q = 2^(2k+1), got {q}")
    return divisor_closure([4, q - 1, q + r + 1, q - r + 1])


def _unipotent_order(p: int, block: int) -> int:
    return _p_powers_up_to(p, block)[-1]


def g2_spectrum(q: int) -> tuple[int, ...]:
    """Spectrum of G2(q) from its maximal tori and semisimple centralizers.

    Tori: (q-1)^2, (q+1)^2, cyclic q^2-1, q^2+q+1, q^2-q+1.  Non-regular
    semisimple elements are central in a reductive subgroup of type A1xT1,
    A1xA1 or A2 and have order dividing q-1 or q+1; unipotent elements there
    have blocks of size <= 2 (<= 3 for A2, needed only when p = 2).  The
    regular unipotent element has order p^a with p^a >= h = 6.
    """
    p = prime_power(q)[0]
    orders = [q - 1, q + 1, q * q - 1, q * q + q + 1, q * q - q + 1]
    orders.append(_unipotent_order(p, 6))
    for d in divisors(q - 1) + divisors(q + 1):
        orders.append(d * _unipotent_order(p, 2))
    if p == 2:
        # SL3/SU3 centralizers of elements of order 3
        orders.append(3 * _unipotent_order(p, 3))
    return divisor_closure(orders)


def ree_spectrum(q: int) -> tuple[int, ...]:
    """Spectrum of 2G2(q), q = 3^(2k+1) >= 27: cyclic tori q-1, q+-r+1
    (r^2 = 3q), torus of order q+1 with exponent (q+1)/2, Sylow 3 of
    exponent 9, and involution centralizer 2 x PSL_2(q)."""
    r = 1
    while r * r < 3 * q:
        r *= 3
    if r * r != 3 * q or q < 27:
        raise InputError(f"2G2 needs q = 3^(2k+1) >= 27, got {q}")
    orders = [q - 1, (q + 1) // 2, q + r + 1, q - r + 1, 9]
    orders += [lcm(2, d) for d in psl2_spectrum(q)]
    return divisor_closure(orders)


def spectrum_for(family: str, n: int | None, q: int | None) -> tuple[int, ...]:
    """Computed spectrum of the simple group of the given family, or raise
    Unsupported when no structural algorithm is implemented."""
    if family == "A":
        return alternating_spectrum(n)
    if family == "PSL" and n == 2:
        return psl2_spectrum(q)
    if family == "PSL":
        return classical_spectrum("L", n, q)
    if family == "PSU":
        return classical_spectrum("U", n, q)
    if family == "PSp":
        return classical_spectrum("S", n, q)
    if family == "2B2":
        return suzuki_spectrum(q)
    if family == "G2":
        return g2_spectrum(q)
    if family == "2G2":
        return ree_spectrum(q)
    raise Unsupported(f"no structural spectrum for {family}")
