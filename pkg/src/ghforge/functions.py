"""Maps f: F -> F stored as dense value tables, the polynomial families
used by the block constructions, and the type I / type II membership tests.

A map is *type I* when its group circulant is a GH(q, 1), which holds
exactly when f is planar: x -> f(x + a) - f(x) is a bijection for every
nonzero shift a.  A map is *type II* when every difference map
x -> f(x) - f(x - a) is constant; equivalently f minus its value at zero
is additive.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

import numpy as np

from .field import Field, FieldElement

#: classify_functions refuses fields with more than this many tables (q**q).
ENUMERATION_LIMIT = 10_000_000


def _eval_poly(field: Field, coeffs: Sequence[int]) -> np.ndarray:
    """Value table of sum(c_j * x**j) over all field elements, via Horner."""
    xs = np.arange(field.q, dtype=np.int64)
    acc = np.zeros(field.q, dtype=np.int64)
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, xs), int(c))
    return np.asarray(acc, dtype=np.int64)


class FieldFunction:
    """A total map F -> F as a length-q table of element encodings.

    ``origin`` optionally records polynomial coefficients (c0, ..., c_d);
    when present, the polynomial is re-evaluated at construction and must
    reproduce the table.
    """

    __slots__ = ("field", "table", "origin")

    def __init__(self, field: Field, table, origin: Sequence[int] | None = None):
        arr = np.asarray(table, dtype=np.int64).copy()
        if arr.shape != (field.q,):
            raise ValueError(f"table must have length q={field.q}, got shape {arr.shape}")
        if arr.size and (arr.min() < 0 or arr.max() >= field.q):
            raise ValueError(f"table entries must lie in [0, {field.q})")
        if origin is not None:
            origin = tuple(int(c) for c in origin)
            if not np.array_equal(_eval_poly(field, origin), arr):
                raise ValueError("origin polynomial does not reproduce the value table")
        arr.flags.writeable = False
        self.field = field
        self.table = arr
        self.origin = origin

    @classmethod
    def from_table(cls, field: Field, values) -> "FieldFunction":
        return cls(field, values)

    @classmethod
    def from_poly(cls, field: Field, coeffs: Sequence[int]) -> "FieldFunction":
        """Build from polynomial coefficients (c0, ..., c_d), degree < q.

        Maps on F are uniquely represented by polynomials of degree < q,
        so higher-degree input is rejected rather than silently aliased.
        """
        coeffs = tuple(int(c) for c in coeffs)
        if not 1 <= len(coeffs) <= field.q:
            raise ValueError(f"need 1..{field.q} coefficients (degree < q), got {len(coeffs)}")
        if any(not 0 <= c < field.q for c in coeffs):
            raise ValueError(f"coefficients must lie in [0, {field.q})")
        return cls(field, _eval_poly(field, coeffs), origin=coeffs)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other) -> bool:
        if not isinstance(other, FieldFunction):
            return NotImplemented
        return self.field == other.field and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.field, self.table.tobytes()))

    def __repr__(self) -> str:
        return f"FieldFunction(q={self.field.q}, table={self.table.tolist()})"


def quadratic_family(field: Field, c) -> FieldFunction:
    """f_c(x) = c + x**2.  Planar in odd characteristic, hence type I."""
    if field.p == 2:
        raise ValueError("the quadratic family requires odd characteristic")
    c = int(c) if isinstance(c, (int, np.integer)) else _element_value(field, c)
    return FieldFunction.from_poly(field, (c, 0, 1))


def linear_family(field: Field, c) -> FieldFunction:
    """f_c(x) = c * x.  Always type II (additive plus nothing)."""
    c = int(c) if isinstance(c, (int, np.integer)) else _element_value(field, c)
    return FieldFunction.from_poly(field, (0, c))


def _element_value(field: Field, c) -> int:
    if isinstance(c, FieldElement):
        if c.field != field:
            raise ValueError("element belongs to a different field")
        return c.value
    raise TypeError(f"expected int or FieldElement, got {type(c).__name__}")


def is_planar(fn: FieldFunction) -> bool:
    """True iff x -> f(x + a) - f(x) is a bijection for every nonzero a."""
    field, q = fn.field, fn.field.q
    xs = np.arange(q, dtype=np.int64)
    t = fn.table
    for a in range(1, q):
        d = field.sub(t[field.add(xs, a)], t)
        if np.bincount(d, minlength=q).max() != 1:
            return False
    return True


def is_type_ii(fn: FieldFunction) -> bool:
    """True iff every difference map x -> f(x) - f(x - a) is constant.

    Decided in O(q^2) by testing additivity of g = f - f(0); the literal
    O(q^3) three-way sweep is equivalent (g(b) - g(b - a) = g(a) for all
    b exactly when g is additive) and is kept in the test suite as an
    independent oracle.
    """
    field, q = fn.field, fn.field.q
    t = fn.table
    g = field.sub(t, int(t[0]))
    xs = np.arange(q, dtype=np.int64)
    s = field.add(xs[:, None], xs[None, :])
    return bool(np.array_equal(g[s], field.add(g[:, None], g[None, :])))


@dataclass(frozen=True)
class FunctionClass:
    """Membership flags; no map on a field with q > 1 can be both."""

    is_type_i: bool
    is_type_ii: bool


def classify_function(fn: FieldFunction) -> FunctionClass:
    type_i = is_planar(fn)
    type_ii = is_type_ii(fn)
    if fn.field.q > 1:
        assert not (type_i and type_ii)
    return FunctionClass(type_i, type_ii)


class FunctionCounts(NamedTuple):
    type_i: int
    type_ii: int


def classify_functions(field: Field) -> FunctionCounts:
    """Exhaustively enumerate all q**q maps and count type I / type II.

    Tables are visited in base-q counter order (table[0] most significant)
    in vectorized chunks.  Refuses fields with q**q > ENUMERATION_LIMIT.
    """
    q = field.q
    total = q**q
    if total > ENUMERATION_LIMIT:
        raise ValueError(f"field too large for exhaustion: {q}**{q} > {ENUMERATION_LIMIT}")
    xs = np.arange(q, dtype=np.int64)
    shifts = [field.add(xs, a) for a in range(1, q)]
    pair_sum = field.add(xs[:, None], xs[None, :])
    powers = q ** np.arange(q - 1, -1, -1, dtype=np.int64)
    count_i = 0
    count_ii = 0
    chunk = max(1, 2_000_000 // (q * q))
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        tables = (idx[:, None] // powers[None, :]) % q
        planar = np.ones(len(idx), dtype=bool)
        for perm in shifts:
            d = field.sub(tables[:, perm], tables)
            planar &= (np.sort(d, axis=1) == xs).all(axis=1)
        g = field.sub(tables, tables[:, :1])
        lhs = g[:, pair_sum]
        rhs = field.add(g[:, :, None], g[:, None, :])
        additive = (lhs == rhs).all(axis=(1, 2))
        if q > 1:
            assert not (planar & additive).any()
        count_i += int(planar.sum())
        count_ii += int(additive.sum())
    return FunctionCounts(count_i, count_ii)
