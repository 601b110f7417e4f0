"""Linear algebra over F_q on integer "symbols" 0..q-1.

F_q elements are labelled by symbols through lookup tables built by the field
module; symbol 0 is the zero element and symbol 1 the identity. Vectors of F_q^m
are also packed into "codes" c = sum_i s_i * q^i so that subspace members can be
stored as plain integer arrays.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


@dataclass(frozen=True, eq=False)
class FqArith:
    """Addition/multiplication tables of F_q on symbols."""

    q: int
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    neg: np.ndarray = field(repr=False)
    inv: np.ndarray = field(repr=False)  # inv[0] is 0 and never used

    def sub(self, a, b):
        return self.add[a, self.neg[b]]

    def scale(self, c, v):
        return self.mul[c, v]

    @classmethod
    def prime(cls, p: int) -> FqArith:
        """Tables for F_p where symbol == residue."""
        s = np.arange(p, dtype=np.int64)
        add = (s[:, None] + s[None, :]) % p
        mul = (s[:, None] * s[None, :]) % p
        neg = (-s) % p
        inv = np.zeros(p, dtype=np.int64)
        for a in range(1, p):
            inv[a] = pow(a, p - 2, p)
        return cls(q=p, add=add, mul=mul, neg=neg, inv=inv)


# ── Matrices ─────────────────────────────────────────────────────────


def rref(mat: np.ndarray, fq: FqArith) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form and pivot columns.

    Zero rows are moved to the bottom; the returned matrix has the same shape.
    """
    a = np.array(mat, dtype=np.int64, copy=True)
    if a.ndim != 2:
        raise ValueError(f"Expected a 2-d matrix, got shape {a.shape}")
    rows, cols = a.shape
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        a[r] = fq.mul[fq.inv[a[r, c]], a[r]]
        factors = a[:, c].copy()
        factors[r] = 0
        if factors.any():
            a = fq.sub(a, fq.mul[factors[:, None], a[r][None, :]])
        pivots.append(c)
        r += 1
    return a, pivots


def rank(mat: np.ndarray, fq: FqArith) -> int:
    if np.asarray(mat).size == 0:
        return 0
    return len(rref(mat, fq)[1])


def nullspace(mat: np.ndarray, fq: FqArith, cols: int | None = None) -> np.ndarray:
    """Basis (as rows) of {v : mat @ v = 0}."""
    a = np.asarray(mat, dtype=np.int64)
    if cols is None:
        cols = a.shape[1]
    if a.size == 0:
        return np.eye(cols, dtype=np.int64)
    reduced, pivots = rref(a.reshape(-1, cols), fq)
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for k, f in enumerate(free):
        basis[k, f] = 1
        for i, pc in enumerate(pivots):
            basis[k, pc] = fq.neg[reduced[i, f]]
    return basis


def matmul(a: np.ndarray, b: np.ndarray, fq: FqArith) -> np.ndarray:
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"Shape mismatch: {a.shape} x {b.shape}")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(a.shape[1]):
        out = fq.add[out, fq.mul[a[:, k][:, None], b[k][None, :]]]
    return out


# ── Packed vectors ───────────────────────────────────────────────────


def to_symbols(codes, q: int, m: int) -> np.ndarray:
    """Unpack codes (any shape) into a trailing axis of m symbols."""
    codes = np.asarray(codes, dtype=np.int64)
    powers = q ** np.arange(m, dtype=np.int64)
    return (codes[..., None] // powers) % q


def to_codes(symbols, q: int) -> np.ndarray:
    symbols = np.asarray(symbols, dtype=np.int64)
    powers = q ** np.arange(symbols.shape[-1], dtype=np.int64)
    return symbols @ powers


def add_codes(a, b, fq: FqArith, m: int) -> np.ndarray:
    if fq.q == 2:
        return np.bitwise_xor(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64))
    sa = to_symbols(a, fq.q, m)
    sb = to_symbols(b, fq.q, m)
    return to_codes(fq.add[sa, sb], fq.q)


def scale_codes(c: int, v, fq: FqArith, m: int) -> np.ndarray:
    if c == 0:
        return np.zeros_like(np.asarray(v, dtype=np.int64))
    if c == 1:
        return np.asarray(v, dtype=np.int64)
    return to_codes(fq.mul[c, to_symbols(v, fq.q, m)], fq.q)


def span_codes(rows, fq: FqArith, m: int) -> np.ndarray:
    """All q^r F_q-combinations of row codes, zero first.

    ``rows`` has shape (..., r); the span is returned with shape (..., q^r) so a
    whole batch of bases can be expanded at once.
    """
    rows = np.asarray(rows, dtype=np.int64)
    span = np.zeros(rows.shape[:-1] + (1,), dtype=np.int64)
    for i in range(rows.shape[-1]):
        row = rows[..., i : i + 1]
        parts = [add_codes(span, scale_codes(c, row, fq, m), fq, m) for c in range(fq.q)]
        span = np.concatenate(parts, axis=-1)
    return span
