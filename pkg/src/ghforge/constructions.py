"""Block constructions of generalized Hadamard matrices over GF(q).

Three constructions are provided, selected on the command line as
``--theorem 3.1 / 3.2 / 3.3`` (the tags are also stored as matrix
provenance and in the file header):

* order q**2, claimed GH(q, q), blocks = circulants of c + x**2 with
  c running over all products a_i * a_j (odd characteristic only);
* order q**2, claimed GH(q, q), blocks = circulants of c * x with
  c running over all sums a_i + a_j;
* order q**3, claimed GH(q, q**2), outer block (i, j) = the order-q**2
  linear-block matrix with every entry shifted by a_i * a_j.

All block grids are indexed by the canonical element order, so the zero
element labels the first block row and column.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import numpy as np

from .field import Field
from .functions import FieldFunction, quadratic_family

#: Default cap on constructed matrix order; override with GHFORGE_MAX_ORDER.
DEFAULT_MAX_ORDER = 4096
MAX_ORDER_ENV = "GHFORGE_MAX_ORDER"

PROVENANCE_QUADRATIC = "theorem-3.1"
PROVENANCE_LINEAR = "theorem-3.2"
PROVENANCE_CUBIC = "theorem-3.3"
PROVENANCE_CIRCULANT = "M-of-f"
PROVENANCE_EXTERNAL = "external"
PROVENANCE_TAGS = frozenset(
    {
        PROVENANCE_QUADRATIC,
        PROVENANCE_LINEAR,
        PROVENANCE_CUBIC,
        PROVENANCE_CIRCULANT,
        PROVENANCE_EXTERNAL,
    }
)


def max_order() -> int:
    """Size cap for constructed matrices (GHFORGE_MAX_ORDER or 4096)."""
    raw = os.environ.get(MAX_ORDER_ENV)
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError as exc:
        raise ValueError(f"{MAX_ORDER_ENV} must be an integer, got {raw!r}") from exc
    if cap < 1:
        raise ValueError(f"{MAX_ORDER_ENV} must be positive, got {cap}")
    return cap


def _check_order(k: int, cap: int | None) -> None:
    cap = max_order() if cap is None else cap
    if k > cap:
        raise ValueError(f"matrix order {k} exceeds the size cap {cap}")


@dataclass(frozen=True, eq=False)
class GHMatrix:
    """A square matrix of field-element encodings with a claimed lambda.

    The claim is just bookkeeping (order = q * claimed_lambda is enforced);
    whether the matrix really is a GH(q, lambda) is decided solely by the
    verifier.  Entries are stored dense row-major, one byte per entry for
    q <= 256, and are immutable.
    """

    field: Field
    entries: np.ndarray
    claimed_lambda: int
    provenance: str = PROVENANCE_EXTERNAL

    def __post_init__(self):
        arr = np.asarray(self.entries)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"entries must be square, got shape {arr.shape}")
        k = arr.shape[0]
        if self.claimed_lambda < 1 or k != self.field.q * self.claimed_lambda:
            raise ValueError(
                f"order {k} != q * lambda = {self.field.q} * {self.claimed_lambda}"
            )
        if int(arr.min()) < 0 or int(arr.max()) >= self.field.q:
            raise ValueError(f"entries must lie in [0, {self.field.q})")
        if self.provenance not in PROVENANCE_TAGS:
            raise ValueError(f"unknown provenance tag {self.provenance!r}")
        dtype = np.uint8 if self.field.q <= 256 else np.uint16
        arr = arr.astype(dtype, copy=True)
        arr.flags.writeable = False
        object.__setattr__(self, "entries", arr)

    @property
    def order(self) -> int:
        return self.entries.shape[0]


def circulant(fn: FieldFunction) -> GHMatrix:
    """The q x q matrix with entry (a, b) = f(b - a).

    A circulant over the field's additive group: entries depend only on
    the column-minus-row difference.  Claimed lambda is 1; the claim holds
    exactly when f is planar.
    """
    field = fn.field
    xs = np.arange(field.q, dtype=np.int64)
    diff = field.sub(xs[None, :], xs[:, None])
    return GHMatrix(field, fn.table[diff], 1, PROVENANCE_CIRCULANT)


def gh_quadratic(field: Field, cap: int | None = None) -> GHMatrix:
    """Order q**2 matrix of circulant(a_i * a_j + x**2) blocks; odd p only.

    Block row 0 and block column 0 all equal circulant(x**2) because the
    zero element labels them.
    """
    if field.p == 2:
        raise ValueError("this construction requires odd characteristic")
    q = field.q
    _check_order(q * q, cap)
    xs = np.arange(q, dtype=np.int64)
    base = circulant(quadratic_family(field, 0)).entries.astype(np.int64)
    prods = field.mul(xs[:, None], xs[None, :])
    shifts = np.repeat(np.repeat(prods, q, axis=0), q, axis=1)
    entries = field.add(shifts, np.tile(base, (q, q)))
    return GHMatrix(field, entries, q, PROVENANCE_QUADRATIC)


def gh_linear(field: Field, cap: int | None = None) -> GHMatrix:
    """Order q**2 matrix of circulant((a_i + a_j) * x) blocks; any p."""
    q = field.q
    _check_order(q * q, cap)
    xs = np.arange(q, dtype=np.int64)
    diff = field.sub(xs[None, :], xs[:, None])
    sums = field.add(xs[:, None], xs[None, :])
    scales = np.repeat(np.repeat(sums, q, axis=0), q, axis=1)
    entries = field.mul(scales, np.tile(diff, (q, q)))
    return GHMatrix(field, entries, q, PROVENANCE_LINEAR)


def gh_cubic(field: Field, cap: int | None = None) -> GHMatrix:
    """Order q**3 matrix: outer block (i, j) is the order-q**2 linear-block
    matrix with every entry shifted by a_i * a_j (an all-ones-matrix
    multiple added entrywise).  Claimed GH(q, q**2)."""
    q = field.q
    _check_order(q**3, cap)
    inner = gh_linear(field, cap).entries.astype(np.int64)
    xs = np.arange(q, dtype=np.int64)
    prods = field.mul(xs[:, None], xs[None, :])
    shifts = np.repeat(np.repeat(prods, q * q, axis=0), q * q, axis=1)
    entries = field.add(shifts, np.tile(inner, (q, q)))
    return GHMatrix(field, entries, q * q, PROVENANCE_CUBIC)
