"""Brute-force decision procedure for the generalized Hadamard property.

A k x k matrix over the additive group of GF(q) is a GH(q, lambda) with
k = q * lambda iff for every pair of distinct rows the entrywise
differences hit every field element exactly lambda times.  This module
checks that literally, row pair by row pair, reading nothing but the
entries, q, and lambda -- it is the ground-truth oracle for every
construction and never consults provenance.
"""

from __future__ import annotations

import threading
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .constructions import GHMatrix

# Cap on diffs-block size (rows x columns) scanned per vectorized step.
_BLOCK_ELEMS = 4_000_000


@dataclass(frozen=True)
class PairFailure:
    """A row pair whose difference histogram is not flat."""

    row_i: int
    row_l: int
    histogram: tuple[int, ...]

    @property
    def pair(self) -> tuple[int, int]:
        return (self.row_i, self.row_l)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of a verification run.

    ``checked_pairs`` equals k*(k-1)/2 when the matrix passed; on early
    exit it is the lexicographic rank (1-based) of the first failing pair,
    which keeps it independent of chunking and thread count.
    ``failures`` is populated (sorted) only when collect_all was set.
    """

    passed: bool
    u: int
    lam: int
    order: int
    checked_pairs: int
    first_failure: PairFailure | None = None
    failures: tuple[PairFailure, ...] | None = None


def row_pair_histogram(matrix: GHMatrix, i: int, l: int) -> np.ndarray:
    """Counts of row_i - row_l entrywise differences, one slot per element."""
    k = matrix.order
    if not (0 <= i < k and 0 <= l < k):
        raise ValueError(f"row index out of range [0, {k})")
    if i == l:
        raise ValueError("row indices must differ")
    d = matrix.field.sub(matrix.entries[i], matrix.entries[l])
    return np.bincount(np.asarray(d, dtype=np.int64), minlength=matrix.field.q)


class _SharedBest:
    """Smallest failing pair seen so far, shared across scan workers."""

    def __init__(self):
        self._pair: tuple[int, int] | None = None
        self._lock = threading.Lock()

    def update(self, pair: tuple[int, int]) -> None:
        with self._lock:
            if self._pair is None or pair < self._pair:
                self._pair = pair

    def peek(self) -> tuple[int, int] | None:
        return self._pair


def _scan_rows(entries, field, q, lam, rows, collect_all, best) -> list[PairFailure]:
    """Scan pairs (i, l), i in ``rows`` ascending, l > i, in lexicographic
    order.  Stops at the first failure unless collect_all; also skips work
    that can only find pairs after an already-known failure."""
    k = entries.shape[0]
    failures: list[PairFailure] = []
    row_block = max(1, min(k, _BLOCK_ELEMS // k))
    offsets_cache = np.arange(row_block, dtype=np.int64)[:, None] * q
    for i in rows:
        if not collect_all and best is not None:
            known = best.peek()
            if known is not None and known < (i, i + 1):
                break
        top = entries[i][None, :]
        for lo in range(i + 1, k, row_block):
            block = entries[lo : lo + row_block]
            diffs = np.asarray(field.sub(top, block), dtype=np.int64)
            m = diffs.shape[0]
            flat = (diffs + offsets_cache[:m]).ravel()
            counts = np.bincount(flat, minlength=m * q).reshape(m, q)
            bad = np.flatnonzero((counts != lam).any(axis=1))
            for j in bad:
                failure = PairFailure(i, lo + int(j), tuple(int(c) for c in counts[j]))
                failures.append(failure)
                if not collect_all:
                    if best is not None:
                        best.update(failure.pair)
                    return failures
    return failures


def _pair_rank(k: int, i: int, l: int) -> int:
    """1-based rank of (i, l) among pairs i' < l' in lexicographic order."""
    return i * (k - 1) - i * (i - 1) // 2 + (l - i)


def _row_chunks(k: int, parts: int) -> list[range]:
    """Contiguous row ranges with roughly equal pair mass."""
    total = k * (k - 1) // 2
    target = max(1, -(-total // parts))
    chunks = []
    start, acc = 0, 0
    for i in range(k - 1):
        acc += k - 1 - i
        if acc >= target:
            chunks.append(range(start, i + 1))
            start, acc = i + 1, 0
    if start < k - 1:
        chunks.append(range(start, k - 1))
    return chunks


def verify_gh(
    matrix: GHMatrix,
    lam: int | None = None,
    collect_all: bool = False,
    threads: int = 1,
) -> VerificationReport:
    """Decide whether ``matrix`` is a GH(q, lam) over the additive group.

    Row pairs are independent, so the scan may fan out over a thread pool;
    the reported result (including the lexicographically first failing
    pair) is identical for every thread count.
    """
    field = matrix.field
    q, k = field.q, matrix.order
    lam = matrix.claimed_lambda if lam is None else int(lam)
    if lam < 1 or k != q * lam:
        raise ValueError(f"order {k} != q * lambda = {q} * {lam}")
    entries = matrix.entries

    if threads <= 1 or k < 64:
        failures = _scan_rows(entries, field, q, lam, range(k - 1), collect_all, None)
    else:
        best = _SharedBest()
        chunks = _row_chunks(k, threads * 4)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            futures = [
                pool.submit(
                    _scan_rows, entries, field, q, lam, chunk, collect_all, best
                )
                for chunk in chunks
            ]
            failures = [f for fut in futures for f in fut.result()]

    failures.sort(key=lambda f: f.pair)
    total_pairs = k * (k - 1) // 2
    if not failures:
        return VerificationReport(True, q, lam, k, total_pairs)
    first = failures[0]
    checked = total_pairs if collect_all else _pair_rank(k, first.row_i, first.row_l)
    return VerificationReport(
        False,
        q,
        lam,
        k,
        checked,
        first_failure=first,
        failures=tuple(failures) if collect_all else None,
    )
