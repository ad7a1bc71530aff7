"""Exact arithmetic in GF(p^n) with a fixed, reproducible element order.

Elements are encoded as integers in [0, q): element i has the base-p digits
of i as its polynomial-basis coefficient vector (least significant digit =
constant term).  Index 0 is therefore always the additive identity, and the
enumeration 0, 1, ..., q-1 is stable across runs.  All row/column/block
indexing elsewhere in the package relies on this order.
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

#: Hard cap on field order q = p**n (construction refuses larger fields).
MAX_FIELD_ORDER = 1 << 16

# Dense q x q add/sub lookup tables are built below this order; larger
# extension fields fall back to digit-vector arithmetic.
_TABLE_LIMIT = 512


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


def _poly_rem(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    """Remainder of num mod den over GF(p); coefficient lists, c0 first, den monic."""
    num = [c % p for c in num]
    dn = len(den) - 1
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            for j in range(dn + 1):
                num[k - dn + j] = (num[k - dn + j] - c * den[j]) % p
    return num[:dn]


def _is_irreducible(coeffs: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..n//2."""
    n = len(coeffs) - 1
    if n == 1:
        return True
    for d in range(1, n // 2 + 1):
        for m in range(p**d):
            div = [(m // p**j) % p for j in range(d)] + [1]
            if not any(_poly_rem(coeffs, div, p)):
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """First monic irreducible of degree n, ordering candidates by the
    integer value of (c_{n-1}, ..., c0) read as a base-p numeral."""
    for m in range(p**n):
        cand = [(m // p**j) % p for j in range(n)] + [1]
        if _is_irreducible(cand, p):
            return tuple(cand)
    raise RuntimeError(f"no irreducible polynomial of degree {n} over GF({p})")


class Field:
    """The finite field GF(p**n) with canonical element order 0, 1, ..., q-1.

    The defining modulus is either supplied (monic, degree n, verified
    irreducible) or chosen deterministically as the smallest monic
    irreducible of degree n, so two constructions with the same arguments
    always yield identical arithmetic tables.

    Arithmetic methods accept integer encodings or numpy arrays of
    encodings and broadcast like numpy ufuncs.  Instances are immutable
    after construction and safe for concurrent reads.
    """

    def __init__(
        self,
        p: int,
        n: int = 1,
        modulus: Sequence[int] | None = None,
        max_order: int = MAX_FIELD_ORDER,
    ):
        if not _is_prime(p):
            raise ValueError(f"characteristic {p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        q = p**n
        if q > max_order:
            raise ValueError(f"field order {q} exceeds the size cap {max_order}")
        if modulus is None:
            modulus = (0, 1) if n == 1 else _smallest_irreducible(p, n)
        else:
            modulus = tuple(int(c) for c in modulus)
            if len(modulus) != n + 1:
                raise ValueError(f"modulus must have degree {n} ({n + 1} coefficients)")
            if modulus[-1] != 1:
                raise ValueError("modulus must be monic")
            if any(not 0 <= c < p for c in modulus):
                raise ValueError(f"modulus coefficients must lie in [0, {p})")
            if not _is_irreducible(modulus, p):
                raise ValueError(f"modulus {modulus} is reducible over GF({p})")
        self.p = p
        self.n = n
        self.q = q
        self.modulus: tuple[int, ...] = modulus
        if n > 1:
            self._build_tables()

    # -- construction internals -------------------------------------------

    def _build_tables(self) -> None:
        p, n, q = self.p, self.n, self.q
        enc = np.arange(q, dtype=np.int64)
        vecs = np.empty((q, n), dtype=np.int64)
        for j in range(n):
            vecs[:, j] = (enc // p**j) % p
        self._vectors = vecs
        self._ppows = p ** np.arange(n, dtype=np.int64)
        self._neg_table = ((p - vecs) % p) @ self._ppows
        self._antilog, self._log = self._generator_tables()
        if q <= _TABLE_LIMIT:
            s = (vecs[:, None, :] + vecs[None, :, :]) % p
            self._add_table = (s @ self._ppows).astype(np.int32)
            d = (vecs[:, None, :] - vecs[None, :, :]) % p
            self._sub_table = (d @ self._ppows).astype(np.int32)
        else:
            self._add_table = None
            self._sub_table = None

    def _poly_mul_enc(self, a: int, b: int) -> int:
        va, vb = self.decode(a), self.decode(b)
        prod = [0] * (2 * self.n - 1)
        for i, ca in enumerate(va):
            if ca:
                for j, cb in enumerate(vb):
                    prod[i + j] = (prod[i + j] + ca * cb) % self.p
        rem = _poly_rem(prod, self.modulus, self.p)
        return sum(c * self.p**j for j, c in enumerate(rem))

    def _generator_tables(self) -> tuple[np.ndarray, np.ndarray]:
        """Find the smallest generator of the multiplicative group and
        derive antilog/log tables (powers of the generator)."""
        p, n, q = self.p, self.n, self.q
        for g in range(2, q):
            # multiplication by g is linear over the digit vectors
            cols = [self.decode(self._poly_mul_enc(g, p**j)) for j in range(n)]
            mul_g = np.array(cols, dtype=np.int64).T
            antilog = np.zeros(q - 1, dtype=np.int32)
            antilog[0] = 1
            vec = np.zeros(n, dtype=np.int64)
            vec[0] = 1
            primitive = True
            for k in range(1, q - 1):
                vec = (mul_g @ vec) % p
                e = int(vec @ self._ppows)
                if e == 1:
                    primitive = False
                    break
                antilog[k] = e
            if primitive:
                assert int(((mul_g @ vec) % p) @ self._ppows) == 1
                log = np.zeros(q, dtype=np.int64)
                log[antilog] = np.arange(q - 1)
                return antilog, log
        raise RuntimeError("no multiplicative generator found")  # pragma: no cover

    # -- encoding ----------------------------------------------------------

    def encode(self, coeffs: Sequence[int]) -> int:
        """Integer encoding of a coefficient vector (c0, ..., c_{n-1})."""
        coeffs = tuple(int(c) for c in coeffs)
        if len(coeffs) != self.n:
            raise ValueError(f"expected {self.n} coefficients, got {len(coeffs)}")
        if any(not 0 <= c < self.p for c in coeffs):
            raise ValueError(f"coefficients must lie in [0, {self.p})")
        return sum(c * self.p**j for j, c in enumerate(coeffs))

    def decode(self, value: int) -> tuple[int, ...]:
        """Coefficient vector (c0, ..., c_{n-1}) of an integer encoding."""
        if not 0 <= value < self.q:
            raise ValueError(f"encoding {value} out of range [0, {self.q})")
        return tuple((value // self.p**j) % self.p for j in range(self.n))

    # -- elements ----------------------------------------------------------

    def element(self, value: int) -> FieldElement:
        return FieldElement(self, value)

    def elements(self) -> list[FieldElement]:
        """All q elements in canonical order; index 0 is the zero element."""
        return [FieldElement(self, v) for v in range(self.q)]

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    # -- arithmetic on encodings (int or ndarray, broadcasting) ------------

    def add(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            if self.n == 1:
                return (a + b) % self.p
            if self._add_table is not None:
                return int(self._add_table[a, b])
            return int(((self._vectors[a] + self._vectors[b]) % self.p) @ self._ppows)
        a, b = np.asarray(a), np.asarray(b)
        if self.n == 1:
            return (a.astype(np.int64) + b.astype(np.int64)) % self.p
        if self._add_table is not None:
            return self._add_table[a, b]
        return ((self._vectors[a] + self._vectors[b]) % self.p) @ self._ppows

    def sub(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            if self.n == 1:
                return (a - b) % self.p
            if self._sub_table is not None:
                return int(self._sub_table[a, b])
            return int(((self._vectors[a] - self._vectors[b]) % self.p) @ self._ppows)
        a, b = np.asarray(a), np.asarray(b)
        if self.n == 1:
            return (a.astype(np.int64) - b.astype(np.int64)) % self.p
        if self._sub_table is not None:
            return self._sub_table[a, b]
        return ((self._vectors[a] - self._vectors[b]) % self.p) @ self._ppows

    def neg(self, a):
        if isinstance(a, int):
            if self.n == 1:
                return (-a) % self.p
            return int(self._neg_table[a])
        a = np.asarray(a)
        if self.n == 1:
            return (-a.astype(np.int64)) % self.p
        return self._neg_table[a]

    def mul(self, a, b):
        if isinstance(a, int) and isinstance(b, int):
            if self.n == 1:
                return (a * b) % self.p
            if a == 0 or b == 0:
                return 0
            return int(self._antilog[(int(self._log[a]) + int(self._log[b])) % (self.q - 1)])
        a, b = np.asarray(a), np.asarray(b)
        if self.n == 1:
            return (a.astype(np.int64) * b.astype(np.int64)) % self.p
        out = self._antilog[(self._log[a] + self._log[b]) % (self.q - 1)]
        return np.where((a == 0) | (b == 0), 0, out)

    def pow(self, a, e: int):
        """a raised to a non-negative integer exponent (0**0 = 1)."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        if isinstance(a, int):
            if self.n == 1:
                return pow(a, e, self.p)
            if a == 0:
                return 0 if e else 1
            return int(self._antilog[(int(self._log[a]) * e) % (self.q - 1)])
        a = np.asarray(a)
        if self.n == 1:
            # numpy has no vectorized modular pow; element count is small here
            return np.array([pow(int(v), e, self.p) for v in a.ravel()]).reshape(a.shape)
        out = self._antilog[(self._log[a] * e) % (self.q - 1)]
        zero_to = 0 if e else 1
        return np.where(a == 0, zero_to, out)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        return int(self._antilog[(self.q - 1 - int(self._log[a])) % (self.q - 1)])

    # -- identity ----------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Field):
            return NotImplemented
        return (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def __repr__(self) -> str:
        if self.n == 1:
            return f"Field(p={self.p})"
        return f"Field(p={self.p}, n={self.n}, modulus={self.modulus})"


class FieldElement:
    """An element of a Field, carrying its canonical integer encoding.

    Arithmetic is defined only between elements of the same field; mixing
    fields raises ValueError.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value: int):
        value = int(value)
        if not 0 <= value < field.q:
            raise ValueError(f"encoding {value} out of range [0, {field.q})")
        self.field = field
        self.value = value

    def _check(self, other: "FieldElement") -> None:
        if self.field is not other.field and self.field != other.field:
            raise ValueError("elements belong to different fields")

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return FieldElement(self.field, self.field.add(self.value, other.value))

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.value, other.value))

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            return NotImplemented
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.value, other.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        if not isinstance(e, int):
            return NotImplemented
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"GF({self.field.q})[{self.value}]"
