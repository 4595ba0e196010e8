"""Exact arithmetic over Z/m, GF(p^2) and small square matrices over them.

Residues are stored as plain ints. For ``Z/m`` the int is the canonical
representative in ``0..m-1``; for ``GF(p^2) = F_p[x]/(x^2 + bx + c)`` the
element ``a0 + a1*x`` is encoded as ``a0 + a1*p``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

from .errors import InputError, SingularError

MAX_DIM = 12


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for n up to ~1e12)."""
    if n < 1:
        raise InputError(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, r) with q = p**r, or None."""
    if q < 2:
        return None
    f = factorize(q)
    if len(f) != 1:
        return None
    ((p, r),) = f.items()
    return p, r


def canonical_quadratic(p: int) -> tuple[int, int]:
    """Smallest (b, c) in lex order with x^2 + bx + c irreducible over F_p."""
    for b in range(p):
        for c in range(p):
            if all((x * x + b * x + c) % p for x in range(p)):
                return b, c
    raise AssertionError("unreachable: an irreducible quadratic always exists")


@dataclass(frozen=True)
class Modulus:
    """A finite coefficient ring: Z/m or GF(p^2).

    ``m`` is the number of elements. ``kind`` is one of ``prime``,
    ``prime-power``, ``composite`` or ``quadratic``.
    """

    m: int
    kind: str
    p: int | None = None
    r: int | None = None
    poly: tuple[int, int] | None = None

    def __post_init__(self):
        if self.m < 2:
            raise InputError(f"modulus must be >= 2, got {self.m}")
        if self.kind == "quadratic":
            p = self.p
            if p is None or not is_prime(p) or self.m != p * p or self.poly is None:
                raise InputError(f"bad quadratic extension {self}")
            b, c = self.poly
            if any((x * x + b * x + c) % p == 0 for x in range(p)):
                raise InputError(f"x^2+{b}x+{c} is reducible over F_{p}")
        elif self.kind in ("prime", "prime-power"):
            pp = prime_power(self.m)
            if pp is None or pp != (self.p, self.r):
                raise InputError(f"{self.m} is not {self.p}^{self.r}")
            if self.kind == "prime" and self.r != 1:
                raise InputError(f"{self.m} is not prime")
        elif self.kind != "composite":
            raise InputError(f"unknown modulus kind {self.kind!r}")

    # -- constructors -----------------------------------------------------

    @classmethod
    def integers(cls, m: int) -> "Modulus":
        """Z/m with the kind detected from the factorization of m."""
        if m < 2:
            raise InputError(f"modulus must be >= 2, got {m}")
        pp = prime_power(m)
        if pp is None:
            return cls(m, "composite")
        p, r = pp
        return cls(m, "prime" if r == 1 else "prime-power", p, r)

    @classmethod
    def gf(cls, q: int) -> "Modulus":
        """The field with q elements, q = p or p^2."""
        pp = prime_power(q)
        if pp is None or pp[1] > 2:
            raise InputError(f"only GF(p) and GF(p^2) are supported, got q={q}")
        p, r = pp
        if r == 1:
            return cls(p, "prime", p, 1)
        return cls(q, "quadratic", p, 2, canonical_quadratic(p))

    # -- structure ---------------------------------------------------------

    @property
    def is_field(self) -> bool:
        return self.kind in ("prime", "quadratic")

    @property
    def characteristic(self) -> int:
        return self.p if self.kind == "quadratic" else self.m

    def __str__(self):
        if self.kind == "quadratic":
            return f"GF({self.m})"
        return f"Z/{self.m}"

    @cached_property
    def _tables(self) -> tuple[list[int], list[int], list[int]]:
        # add, mul, neg tables for GF(p^2), flattened as [a * m + b]
        p, m = self.p, self.m
        b0, c0 = self.poly
        add = [0] * (m * m)
        mul = [0] * (m * m)
        for u in range(m):
            a, b = u % p, u // p
            for v in range(m):
                c, d = v % p, v // p
                add[u * m + v] = (a + c) % p + ((b + d) % p) * p
                bd = b * d
                lo = (a * c - c0 * bd) % p
                hi = (a * d + b * c - b0 * bd) % p
                mul[u * m + v] = lo + hi * p
        neg = [(-(u % p)) % p + ((-(u // p)) % p) * p for u in range(m)]
        return add, mul, neg

    @cached_property
    def _inverses(self) -> dict[int, int]:
        return {a: b for a in range(self.m) for b in range(self.m) if self.mul(a, b) == 1}

    # -- element arithmetic on encoded ints --------------------------------

    def reduce(self, a: int) -> int:
        if self.kind == "quadratic":
            if not 0 <= a < self.m:
                raise InputError(f"{a} is not an encoded element of {self}")
            return a
        return a % self.m

    def add(self, a: int, b: int) -> int:
        if self.kind == "quadratic":
            return self._tables[0][a * self.m + b]
        return (a + b) % self.m

    def neg(self, a: int) -> int:
        if self.kind == "quadratic":
            return self._tables[2][a]
        return -a % self.m

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.kind == "quadratic":
            return self._tables[1][a * self.m + b]
        return a * b % self.m

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        result, base = 1, a
        while k:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def is_unit(self, a: int) -> bool:
        if self.kind == "quadratic":
            return a != 0
        return gcd(a, self.m) == 1

    def inv(self, a: int) -> int:
        if not self.is_unit(a):
            raise SingularError(f"{a} is not a unit in {self}")
        if self.kind == "quadratic":
            return self._inverses[a]
        return pow(a, -1, self.m)

    def units(self) -> list[int]:
        return [a for a in range(self.m) if self.is_unit(a)]

    def frobenius(self, a: int) -> int:
        """a -> a^p (the identity on Z/m)."""
        if self.kind == "quadratic":
            return self.power(a, self.p)
        return a

    def embed(self, k: int) -> int:
        """Image of the integer k in the ring."""
        if self.kind == "quadratic":
            return k % self.p
        return k % self.m

    def elements(self) -> range:
        return range(self.m)


@dataclass(frozen=True)
class Residue:
    value: int
    modulus: Modulus

    def __post_init__(self):
        object.__setattr__(self, "value", self.modulus.reduce(self.value))

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                raise InputError(f"modulus mismatch: {self.modulus} vs {other.modulus}")
            return other.value
        if isinstance(other, int):
            return self.modulus.embed(other)
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        return Residue(self.modulus.add(self.value, v), self.modulus)

    __radd__ = __add__

    def __mul__(self, other):
        v = self._coerce(other)
        return Residue(self.modulus.mul(self.value, v), self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.modulus.neg(self.value), self.modulus)

    def __sub__(self, other):
        v = self._coerce(other)
        return Residue(self.modulus.sub(self.value, v), self.modulus)

    def __pow__(self, k: int):
        return Residue(self.modulus.power(self.value, k), self.modulus)

    def inverse(self) -> "Residue":
        return Residue(self.modulus.inv(self.value), self.modulus)

    def is_unit(self) -> bool:
        return self.modulus.is_unit(self.value)

    def frobenius(self) -> "Residue":
        return Residue(self.modulus.frobenius(self.value), self.modulus)


@dataclass(frozen=True)
class SquareMatrix:
    modulus: Modulus
    rows: tuple[tuple[int, ...], ...]
    _hash: int = field(default=0, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.rows)
        if not 1 <= n <= MAX_DIM:
            raise InputError(f"matrix dimension must be in 1..{MAX_DIM}, got {n}")
        rows = tuple(tuple(self.modulus.reduce(x) for x in row) for row in self.rows)
        if any(len(row) != n for row in rows):
            raise InputError("matrix is not square")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", hash((self.modulus, rows)))

    def __hash__(self):
        return self._hash

    @classmethod
    def _trusted(cls, modulus: Modulus, rows) -> "SquareMatrix":
        # skips reduction; rows must already be canonical
        obj = object.__new__(cls)
        object.__setattr__(obj, "modulus", modulus)
        object.__setattr__(obj, "rows", rows)
        object.__setattr__(obj, "_hash", hash((modulus, rows)))
        return obj

    @classmethod
    def identity(cls, n: int, modulus: Modulus) -> "SquareMatrix":
        return cls(modulus, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @classmethod
    def scalar(cls, n: int, value: int, modulus: Modulus) -> "SquareMatrix":
        return cls(modulus, tuple(tuple(value if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]], modulus: Modulus) -> "SquareMatrix":
        return cls(modulus, tuple(tuple(r) for r in rows))

    @property
    def dim(self) -> int:
        return len(self.rows)

    def entries(self) -> tuple[int, ...]:
        return tuple(x for row in self.rows for x in row)

    def __matmul__(self, other: "SquareMatrix") -> "SquareMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "SquareMatrix":
        return SquareMatrix._trusted(self.modulus, tuple(zip(*self.rows)))

    def map(self, f) -> "SquareMatrix":
        return SquareMatrix._trusted(self.modulus, tuple(tuple(f(x) for x in row) for row in self.rows))

    def scale(self, c: int) -> "SquareMatrix":
        mul = self.modulus.mul
        return self.map(lambda x: mul(c, x))

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def scalar_value(self) -> int | None:
        """The c with self == c*I, or None."""
        c = self.rows[0][0]
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x != (c if i == j else 0):
                    return None
        return c

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        """Matrix times column vector."""
        R = self.modulus
        if R.kind == "quadratic":
            return tuple(_dot_table(R, row, v) for row in self.rows)
        m = R.m
        return tuple(sum(a * b for a, b in zip(row, v)) % m for row in self.rows)

    def __str__(self):
        return "[" + "; ".join(" ".join(map(str, r)) for r in self.rows) + f"] over {self.modulus}"


def _dot_table(R: Modulus, u, v) -> int:
    add, mul, _ = R._tables
    m = R.m
    s = 0
    for a, b in zip(u, v):
        if a and b:
            s = add[s * m + mul[a * m + b]]
    return s


def _check_pair(A: SquareMatrix, B: SquareMatrix):
    if A.modulus != B.modulus:
        raise InputError(f"modulus mismatch: {A.modulus} vs {B.modulus}")
    if A.dim != B.dim:
        raise InputError(f"dimension mismatch: {A.dim} vs {B.dim}")


def mat_mul(A: SquareMatrix, B: SquareMatrix) -> SquareMatrix:
    _check_pair(A, B)
    R = A.modulus
    cols = tuple(zip(*B.rows))
    if R.kind == "quadratic":
        rows = tuple(tuple(_dot_table(R, row, col) for col in cols) for row in A.rows)
    else:
        m = R.m
        rows = tuple(tuple(sum(a * b for a, b in zip(row, col)) % m for col in cols) for row in A.rows)
    return SquareMatrix._trusted(R, rows)


def _bareiss(M: list[list[int]]) -> int:
    """Exact integer determinant, fraction-free elimination."""
    n = len(M)
    M = [row[:] for row in M]
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]


def _field_echelon_det(A: SquareMatrix) -> int:
    R = A.modulus
    M = [list(r) for r in A.rows]
    n = len(M)
    det = 1
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            M[k], M[piv] = M[piv], M[k]
            det = R.neg(det)
        det = R.mul(det, M[k][k])
        inv = R.inv(M[k][k])
        for i in range(k + 1, n):
            if M[i][k]:
                f = R.mul(M[i][k], inv)
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[k])]
    return det


def determinant(A: SquareMatrix) -> Residue:
    R = A.modulus
    if R.kind == "quadratic":
        return Residue(_field_echelon_det(A), R)
    # det is an integer polynomial in the entries, so reducing the integer
    # determinant of the representatives is exact over any Z/m
    return Residue(_bareiss([list(r) for r in A.rows]) % R.m, R)


def _field_inverse(A: SquareMatrix) -> SquareMatrix:
    R = A.modulus
    n = A.dim
    M = [list(r) + [int(i == j) for j in range(n)] for i, r in enumerate(A.rows)]
    for k in range(n):
        piv = next((i for i in range(k, n) if M[i][k]), None)
        if piv is None:
            raise SingularError("matrix is singular")
        M[k], M[piv] = M[piv], M[k]
        inv = R.inv(M[k][k])
        M[k] = [R.mul(inv, x) for x in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                f = M[i][k]
                M[i] = [R.sub(x, R.mul(f, y)) for x, y in zip(M[i], M[k])]
    return SquareMatrix._trusted(R, tuple(tuple(row[n:]) for row in M))


def _integer_adjugate(rows) -> tuple[int, list[list[int]]]:
    n = len(rows)
    M = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    for k in range(n):
        piv = next(i for i in range(k, n) if M[i][k])
        M[k], M[piv] = M[piv], M[k]
        inv = 1 / M[k][k]
        M[k] = [x * inv for x in M[k]]
        for i in range(n):
            if i != k and M[i][k]:
                f = M[i][k]
                M[i] = [x - f * y for x, y in zip(M[i], M[k])]
    d = _bareiss([list(r) for r in rows])
    adj = [[int(x * d) for x in row[n:]] for row in M]
    return d, adj


def mat_inverse(A: SquareMatrix) -> SquareMatrix:
    R = A.modulus
    if R.is_field:
        return _field_inverse(A)
    d = determinant(A).value
    if not R.is_unit(d):
        raise SingularError(f"determinant {d} is not a unit in {R}")
    # an integer determinant that is a unit mod m is nonzero, so the adjugate
    # over Q is integral and reduces to the inverse up to det^-1
    _, adj = _integer_adjugate(A.rows)
    dinv = R.inv(d)
    return SquareMatrix(R, tuple(tuple(x * dinv % R.m for x in row) for row in adj))


def standard_form(g: int, modulus: Modulus) -> SquareMatrix:
    """J = [[0, I_g], [-I_g, 0]]."""
    n = 2 * g
    one, minus = 1, modulus.neg(1)
    rows = []
    for i in range(n):
        row = [0] * n
        if i < g:
            row[i + g] = one
        else:
            row[i - g] = minus
        rows.append(tuple(row))
    return SquareMatrix(modulus, tuple(rows))


def symplectic_check(A: SquareMatrix, g: int | None = None) -> bool:
    """True iff A^T J A = J for the standard alternating form."""
    if A.dim % 2:
        raise InputError(f"symplectic check needs even dimension, got {A.dim}")
    if g is None:
        g = A.dim // 2
    if A.dim != 2 * g:
        raise InputError(f"dimension {A.dim} does not match rank {g}")
    J = standard_form(g, A.modulus)
    return mat_mul(mat_mul(A.transpose(), J), A) == J
