"""Order formulas for the finite simple group families and generating sets
for the groups that can be built concretely."""
from __future__ import annotations

import re
from dataclasses import dataclass
from math import factorial, gcd, prod

from .errors import InputError, Unsupported
from .groups import GenSet, MatrixElement, Perm, ProjectiveElement
from .rings import Modulus, SquareMatrix, prime_power

SPORADIC_ORDERS = {
    "M11": 7920,
    "M12": 95040,
    "J1": 175560,
    "M22": 443520,
    "J2": 604800,
    "M23": 10200960,
    "HS": 44352000,
    "J3": 50232960,
    "M24": 244823040,
    "McL": 898128000,
    "He": 4030387200,
    "Ru": 145926144000,
    "Suz": 448345497600,
    "ON": 460815505920,
    "Co3": 495766656000,
    "Co2": 42305421312000,
    "Fi22": 64561751654400,
    "HN": 273030912000000,
    "Ly": 51765179004000000,
    "Th": 90745943887872000,
    "Fi23": 4089470473293004800,
    "Co1": 4157776806543360000,
    "J4": 86775571046077562880,
    "Fi24'": 1255205709190661721292800,
    "B": 4154781481226426191177580544000000,
    "M": 808017424794512875886459904961710757005754368000000000,
}

FAMILIES = (
    "A", "S", "Z", "D", "Q8",
    "SL", "PSL", "SU", "PSU", "Sp", "PSp",
    "O", "O+", "O-",
    "G2", "F4", "E6", "E7", "E8", "2E6", "3D4", "2B2", "2G2", "2F4", "2F4'",
    "sporadic",
)

_NEEDS_Q = {"SL", "PSL", "SU", "PSU", "Sp", "PSp", "O", "O+", "O-",
            "G2", "F4", "E6", "E7", "E8", "2E6", "3D4", "2B2", "2G2", "2F4"}


@dataclass(frozen=True)
class FamilySpec:
    """A group family with parameters.

    ``n`` is the matrix dimension for linear/unitary/symplectic/orthogonal
    families (so ``PSp`` with n=6 is PSp_6), the degree for A/S, the order
    for Z and the polygon size for D.
    """

    family: str
    n: int = 0
    q: int = 0
    name: str = ""

    def __post_init__(self):
        f, n, q = self.family, self.n, self.q
        if f not in FAMILIES:
            raise InputError(f"unknown family {f!r}")
        if f in _NEEDS_Q and prime_power(q) is None:
            raise InputError(f"{f}: q={q} is not a prime power")
        p = prime_power(q)[0] if f in _NEEDS_Q else None
        r = prime_power(q)[1] if f in _NEEDS_Q else None
        bad = None
        if f in ("A", "S") and n < 1:
            bad = "degree must be >= 1"
        elif f in ("Z", "D") and n < 1:
            bad = "n must be >= 1"
        elif f in ("SL", "PSL", "SU", "PSU") and n < 2:
            bad = "dimension must be >= 2"
        elif f in ("Sp", "PSp") and (n < 2 or n % 2):
            bad = "symplectic dimension must be even and >= 2"
        elif f == "O" and (n < 3 or n % 2 == 0):
            bad = "odd orthogonal dimension must be odd and >= 3"
        elif f in ("O+", "O-") and (n < 2 or n % 2):
            bad = "even orthogonal dimension must be even"
        elif f in ("2B2", "2F4") and (p != 2 or r % 2 == 0):
            bad = f"{f} needs q = 2^(2k+1)"
        elif f == "2G2" and (p != 3 or r % 2 == 0):
            bad = "2G2 needs q = 3^(2k+1)"
        elif f == "sporadic" and self.name not in SPORADIC_ORDERS:
            bad = f"unknown sporadic group {self.name!r}"
        if bad:
            raise InputError(f"{f}({n},{q}): {bad}")

    def __str__(self):
        f = self.family
        if f == "sporadic":
            return self.name
        if f in ("A", "S", "Z", "D"):
            return f"{f}{self.n}"
        if f == "Q8":
            return "Q8"
        if f == "2F4'":
            return "2F4(2)'"
        if f in ("G2", "F4", "E6", "E7", "E8", "2E6", "3D4", "2B2", "2G2", "2F4"):
            return f"{f}({self.q})"
        return f"{f}({self.n},{self.q})"


def _q_prod(q: int, exps, sign=lambda i: 1) -> int:
    return prod(q ** i - sign(i) for i in exps)


def classical_order(spec: FamilySpec) -> int:
    """Exact order of the group named by ``spec``."""
    f, n, q = spec.family, spec.n, spec.q
    if f == "A":
        return max(1, factorial(n) // 2)
    if f == "S":
        return factorial(n)
    if f == "Z":
        return n
    if f == "D":
        return 2 * n
    if f == "Q8":
        return 8
    if f == "sporadic":
        return SPORADIC_ORDERS[spec.name]
    if f in ("SL", "PSL"):
        o = q ** (n * (n - 1) // 2) * _q_prod(q, range(2, n + 1))
        return o // gcd(n, q - 1) if f == "PSL" else o
    if f in ("SU", "PSU"):
        o = q ** (n * (n - 1) // 2) * prod(q ** i - (-1) ** i for i in range(2, n + 1))
        return o // gcd(n, q + 1) if f == "PSU" else o
    if f in ("Sp", "PSp"):
        m = n // 2
        o = q ** (m * m) * _q_prod(q, range(2, 2 * m + 1, 2))
        return o // gcd(2, q - 1) if f == "PSp" else o
    if f == "O":
        m = (n - 1) // 2
        return q ** (m * m) * _q_prod(q, range(2, 2 * m + 1, 2)) // gcd(2, q - 1)
    if f in ("O+", "O-"):
        m = n // 2
        eps = 1 if f == "O+" else -1
        return (q ** (m * (m - 1)) * (q ** m - eps) * _q_prod(q, range(2, 2 * m - 1, 2))
                // gcd(4, q ** m - eps))
    if f == "G2":
        return q ** 6 * (q ** 6 - 1) * (q ** 2 - 1)
    if f == "F4":
        return q ** 24 * _q_prod(q, (12, 8, 6, 2))
    if f == "E6":
        return q ** 36 * _q_prod(q, (12, 9, 8, 6, 5, 2)) // gcd(3, q - 1)
    if f == "E7":
        return q ** 63 * _q_prod(q, (18, 14, 12, 10, 8, 6, 2)) // gcd(2, q - 1)
    if f == "E8":
        return q ** 120 * _q_prod(q, (30, 24, 20, 18, 14, 12, 8, 2))
    if f == "2E6":
        return (q ** 36 * (q ** 12 - 1) * (q ** 9 + 1) * (q ** 8 - 1) * (q ** 6 - 1)
                * (q ** 5 + 1) * (q ** 2 - 1) // gcd(3, q + 1))
    if f == "3D4":
        return q ** 12 * (q ** 8 + q ** 4 + 1) * (q ** 6 - 1) * (q ** 2 - 1)
    if f == "2B2":
        return q ** 2 * (q ** 2 + 1) * (q - 1)
    if f == "2G2":
        return q ** 3 * (q ** 3 + 1) * (q - 1)
    if f == "2F4":
        return q ** 12 * (q ** 6 + 1) * (q ** 4 - 1) * (q ** 3 + 1) * (q - 1)
    if f == "2F4'":
        return 17971200
    raise InputError(f"no order formula for {spec}")


# ---------------------------------------------------------------------------
# group-spec grammar: sp(6,2), psp(8,2), sl(3,2), psl(2,49), psu(3,5), a(9),
# s(5), z(12), q8, d(5), su(3,3), m22, ...

_SPEC_RE = re.compile(r"^\s*([a-z0-9+\-']+?)\s*(?:\(\s*(\d+)\s*(?:,\s*(\d+)\s*)?\))?\s*$", re.I)

_GRAMMAR = {
    "sl": "SL", "psl": "PSL", "l": "PSL", "su": "SU", "psu": "PSU", "u": "PSU",
    "sp": "Sp", "psp": "PSp", "s": "S", "a": "A", "z": "Z", "c": "Z", "d": "D",
    "o": "O", "o+": "O+", "o-": "O-",
    "g2": "G2", "f4": "F4", "e6": "E6", "e7": "E7", "e8": "E8",
    "2e6": "2E6", "3d4": "3D4", "2b2": "2B2", "sz": "2B2", "2g2": "2G2", "r": "2G2", "2f4": "2F4",
}


def parse_group_spec(text: str) -> FamilySpec:
    t = text.strip()
    low = t.lower()
    if low == "q8":
        return FamilySpec("Q8")
    if low in ("2f4(2)'", "tits"):
        return FamilySpec("2F4'")
    for name in SPORADIC_ORDERS:
        if low == name.lower():
            return FamilySpec("sporadic", name=name)
    m = _SPEC_RE.match(t)
    if not m:
        raise InputError(f"cannot parse group spec {text!r}")
    head, a, b = m.group(1).lower(), m.group(2), m.group(3)
    fam = _GRAMMAR.get(head)
    if fam is None:
        # shorthand like a9, z12, m22 without parentheses
        m2 = re.match(r"^([a-z]+)(\d+)$", head)
        if m2 and a is None and m2.group(1) in ("a", "s", "z", "d", "c"):
            return FamilySpec(_GRAMMAR[m2.group(1)], n=int(m2.group(2)))
        raise InputError(f"unknown group family in {text!r}")
    if fam in ("A", "S", "Z", "D"):
        if a is None or b is not None:
            raise InputError(f"{head}(n) takes exactly one parameter")
        return FamilySpec(fam, n=int(a))
    if fam in ("G2", "F4", "E6", "E7", "E8", "2E6", "3D4", "2B2", "2G2", "2F4"):
        if a is None or b is not None:
            raise InputError(f"{head}(q) takes exactly one parameter")
        return FamilySpec(fam, q=int(a))
    if a is None or b is None:
        raise InputError(f"{head}(n,q) takes two parameters")
    return FamilySpec(fam, n=int(a), q=int(b))


# ---------------------------------------------------------------------------
# generators


def _mat(R: Modulus, rows) -> SquareMatrix:
    return SquareMatrix(R, tuple(tuple(r) for r in rows))


def _primitive_element(R: Modulus) -> int:
    size = R.m - 1
    primes = [p for p in range(2, size + 1) if size % p == 0 and all(p % d for d in range(2, p))]
    for a in range(2 if R.m > 2 else 1, R.m):
        if all(R.power(a, size // p) != 1 for p in primes):
            return a
    return 1


def elementary(R: Modulus, n: int, i: int, j: int, t: int) -> SquareMatrix:
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[i][j] = t
    return _mat(R, rows)


def sl_generators(n: int, R: Modulus) -> list[SquareMatrix]:
    """Transvection x_12(1), a signed cyclic permutation matrix and
    diag(w, w^-1, 1, ...) for a primitive w."""
    gens = [elementary(R, n, 0, 1, 1)]
    P = [[0] * n for _ in range(n)]
    for i in range(n):
        P[(i + 1) % n][i] = 1
    if n % 2 == 0:
        P[0][n - 1] = R.neg(1)
    gens.append(_mat(R, P))
    w = _primitive_element(R)
    if w != 1:
        d = [[0] * n for _ in range(n)]
        for i in range(n):
            d[i][i] = 1
        d[0][0], d[1][1] = w, R.inv(w)
        gens.append(_mat(R, d))
    return gens


def sp_generators(n: int, R: Modulus) -> list[SquareMatrix]:
    """Generators of Sp_n preserving J = [[0, I], [-I, 0]]: a root element
    [[I, E11], [0, I]], J itself and the Levi matrices diag(A, A^-T) for A
    generating GL_{n/2}."""
    g = n // 2
    J = [[0] * n for _ in range(n)]
    for i in range(g):
        J[i][i + g] = 1
        J[i + g][i] = R.neg(1)
    U = [[int(a == b) for b in range(n)] for a in range(n)]
    U[0][g] = 1
    gens = [_mat(R, U), _mat(R, J)]
    if g == 1:
        w = _primitive_element(R)
        if w != 1:
            gens.append(_mat(R, [[w, 0], [0, R.inv(w)]]))
        return gens
    levi = sl_generators(g, R)
    w = _primitive_element(R)
    if w != 1:
        d = [[int(a == b) for b in range(g)] for a in range(g)]
        d[0][0] = w
        levi.append(_mat(R, d))
    from .rings import mat_inverse
    for A in levi:
        Ait = mat_inverse(A).transpose()
        rows = [[0] * n for _ in range(n)]
        for i in range(g):
            for j in range(g):
                rows[i][j] = A.rows[i][j]
                rows[i + g][j + g] = Ait.rows[i][j]
        gens.append(_mat(R, rows))
    return gens


def hermitian_form(n: int, R: Modulus) -> SquareMatrix:
    """Anti-diagonal Hermitian form."""
    return _mat(R, [[int(i + j == n - 1) for j in range(n)] for i in range(n)])


def preserves_hermitian(A: SquareMatrix) -> bool:
    """A^T J conj(A) == J for the anti-diagonal form, conj = Frobenius."""
    R = A.modulus
    J = hermitian_form(A.dim, R)
    Abar = A.map(R.frobenius)
    return (A.transpose() @ J) @ Abar == J


def su3_generators(R: Modulus) -> list[SquareMatrix]:
    """SU_3(q) over GF(q^2) for the anti-diagonal form: two root elements,
    a torus element h(w) and the Weyl element."""
    if R.kind != "quadratic":
        raise Unsupported("SU(3,q) needs GF(q^2) with q prime")
    p = R.p
    conj = R.frobenius
    mul, add, neg = R.mul, R.add, R.neg
    w = _primitive_element(R)

    def root(a):
        # x(a, b) = [[1, a, b], [0, 1, -conj(a)], [0, 0, 1]] with b + conj(b) = -a conj(a)
        target = neg(mul(a, conj(a)))
        b = next(b for b in range(R.m) if add(b, conj(b)) == target)
        return _mat(R, [[1, a, b], [0, 1, neg(conj(a))], [0, 0, 1]])

    gens = [root(1), root(w)]
    wb = conj(w)
    gens.append(_mat(R, [[w, 0, 0], [0, mul(wb, R.inv(w)), 0], [0, 0, R.inv(wb)]]))
    gens.append(_mat(R, [[0, 0, 1], [0, neg(1), 0], [1, 0, 0]]))
    return gens


class QuadraticForm:
    """Q(x) = sum x_i x_{n-1-i} over the hyperbolic pairs, plus x_m^2 in odd
    dimension, or an anisotropic binary form on the middle pair for minus
    type."""

    def __init__(self, n: int, q: int, eps: int):
        if prime_power(q) is None or prime_power(q)[1] != 1:
            raise Unsupported("orthogonal generators need prime q")
        self.n, self.q, self.eps = n, q, eps
        self.mid: tuple[int, int] | None = None
        if n % 2 == 0 and eps == -1:
            # x^2 + b x y + c y^2 irreducible over F_q
            self.mid = next((b, c) for b in range(q) for c in range(1, q)
                            if all((x * x + b * x + c) % q for x in range(q)))

    def __call__(self, v) -> int:
        n, q = self.n, self.q
        h = n // 2
        total = 0
        pairs = h - 1 if self.mid else h
        for i in range(pairs):
            total += v[i] * v[n - 1 - i]
        if n % 2:
            total += v[h] * v[h]
        elif self.mid:
            b, c = self.mid
            x, y = v[h - 1], v[h]
            total += x * x + b * x * y + c * y * y
        return total % q

    def bilinear(self, u, v) -> int:
        w = [(a + b) % self.q for a, b in zip(u, v)]
        return (self(w) - self(u) - self(v)) % self.q

    def reflection(self, v) -> SquareMatrix:
        """x -> x - B(x, v)/Q(v) v."""
        q, n = self.q, self.n
        c = pow(self(v), -1, q)
        cols = []
        for j in range(n):
            e = [int(i == j) for i in range(n)]
            t = self.bilinear(e, v) * c % q
            cols.append([(e[i] - t * v[i]) % q for i in range(n)])
        return _mat(Modulus.gf(q), [[cols[j][i] for j in range(n)] for i in range(n)])


def omega_generators(n: int, q: int, eps: int = 0, count: int = 6, seed: int = 0) -> list[SquareMatrix]:
    """Random elements of Omega^eps_n(q) (q prime) as products of two
    reflections: for odd q both vectors have square norm (trivial spinor
    norm); for q = 2 any two nonsingular vectors (trivial Dickson invariant).
    They generate Omega with overwhelming probability."""
    import random as _random
    Qf = QuadraticForm(n, q, eps)
    rng = _random.Random(seed)
    squares = {x * x % q for x in range(1, q)}
    gens = []
    while len(gens) < count:
        u = [rng.randrange(q) for _ in range(n)]
        v = [rng.randrange(q) for _ in range(n)]
        if Qf(u) not in squares or Qf(v) not in squares:
            continue
        gens.append(Qf.reflection(u) @ Qf.reflection(v))
    return gens


def _regular_q8() -> list[Perm]:
    # elements 0..7 = 1, i, j, k, -1, -i, -j, -k
    table = {
        ("i", "i"): "-1", ("i", "j"): "k", ("i", "k"): "-j",
        ("j", "i"): "-k", ("j", "j"): "-1", ("j", "k"): "i",
        ("k", "i"): "j", ("k", "j"): "-i", ("k", "k"): "-1",
    }
    names = ["1", "i", "j", "k", "-1", "-i", "-j", "-k"]

    def mul(x, y):
        sx, bx = (x[0] == "-"), x.lstrip("-")
        sy, by = (y[0] == "-"), y.lstrip("-")
        if bx == "1":
            r = by
        elif by == "1":
            r = bx
        else:
            r = table[(bx, by)]
        neg = sx ^ sy ^ r.startswith("-")
        r = r.lstrip("-")
        return ("-" if neg else "") + r

    return [Perm([names.index(mul(g, x)) for x in names]) for g in ("i", "j")]


def standard_generators(spec: FamilySpec | str) -> GenSet:
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    f, n, q = spec.family, spec.n, spec.q
    label = str(spec)
    if f == "Z":
        return GenSet((Perm.from_cycles([range(n)], n),), label)
    if f == "D":
        if n < 3:
            raise Unsupported("dihedral groups need n >= 3")
        rot = Perm.from_cycles([range(n)], n)
        ref = Perm([(-i) % n for i in range(n)])
        return GenSet((rot, ref), label)
    if f == "Q8":
        return GenSet(tuple(_regular_q8()), label)
    if f in ("A", "S"):
        if n < 3:
            return GenSet((Perm.identity(max(n, 1)) if f == "A" or n < 2 else Perm.from_cycles([(0, 1)], n),), label)
        if f == "S":
            return GenSet((Perm.from_cycles([(0, 1)], n), Perm.from_cycles([range(n)], n)), label)
        full = range(n) if n % 2 else range(1, n)
        return GenSet((Perm.from_cycles([(0, 1, 2)], n), Perm.from_cycles([full], n)), label)
    if f in ("SL", "PSL"):
        R = Modulus.gf(q)
        mats = sl_generators(n, R)
    elif f in ("Sp", "PSp"):
        R = Modulus.gf(q)
        mats = sp_generators(n, R)
    elif f in ("SU", "PSU"):
        if n != 3:
            raise Unsupported("only SU(3,q) is constructible")
        if prime_power(q) is None or prime_power(q)[1] != 1:
            raise Unsupported("SU(3,q) is constructible for prime q only")
        R = Modulus.gf(q * q)
        mats = su3_generators(R)
    else:
        raise Unsupported(f"no concrete generators for {spec}")
    wrap = ProjectiveElement if f.startswith("P") else MatrixElement
    return GenSet(tuple(wrap(M) for M in mats), label)


def is_constructible(spec: FamilySpec) -> bool:
    try:
        standard_generators(spec)
    except (Unsupported, InputError):
        return False
    return True
