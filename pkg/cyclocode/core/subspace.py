"""Enumeration of F_q-subspaces of F_Q ≅ F_q^m in reduced echelon form.

Vectors are coordinate vectors over the basis 1, θ, ..., θ^(m-1), either as
symbol rows or packed into integer codes (see ``linalg``). Over F_2 a code is a
bitmask and reduction against a basis is a run of XORs.

Enumeration order: pivot-column tuples in lexicographic order; within one tuple,
free entries run as an odometer whose first free slot turns fastest. Free slots
are listed column by column, rows top to bottom.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Sequence

import numpy as np

from cyclocode.core.field import FieldCtx, FieldElem
from cyclocode.core.linalg import matmul, nullspace, rref, span_codes, to_codes, to_symbols
from cyclocode.core.parallel import map_partitions
from cyclocode.errors import BudgetExceeded, ConsistencyError, InvalidArgument

logger = logging.getLogger(__name__)

DEFAULT_SUBSPACE_BUDGET = 10**8
_MATERIALIZE_LIMIT = 4096
_BATCH_CELLS = 1 << 18
_TABLE_CELL_LIMIT = 1 << 26


def gaussian_binomial(m: int, r: int, q: int) -> int:
    """Number of r-dimensional subspaces of F_q^m."""
    if not 0 <= r <= m:
        raise InvalidArgument(f"Need 0 <= r <= m, got r={r!r}, m={m!r}")
    num = den = 1
    for i in range(r):
        num *= q ** (m - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


# ── Subspace ─────────────────────────────────────────────────────────


@dataclass(frozen=True, eq=False)
class Subspace:
    """An F_q-subspace held by its reduced echelon basis (r x m symbols)."""

    ctx: FieldCtx
    basis: np.ndarray = field(repr=False)
    pivots: tuple[int, ...]

    @property
    def r(self) -> int:
        return len(self.pivots)

    @property
    def m(self) -> int:
        return self.ctx.m

    def __repr__(self) -> str:
        rows = ["".join(map(str, row)) for row in self.basis.tolist()]
        return f"Subspace(r={self.r}, basis={rows})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return (
            self.ctx is other.ctx
            and self.pivots == other.pivots
            and np.array_equal(self.basis, other.basis)
        )

    def __hash__(self) -> int:
        return hash((id(self.ctx), self.pivots, self.basis.tobytes()))

    @classmethod
    def from_vectors(cls, ctx: FieldCtx, vectors) -> Subspace:
        """Span of the given coordinate rows (any number, any rank)."""
        vecs = np.asarray(vectors, dtype=np.int64).reshape(-1, ctx.m)
        reduced, pivots = rref(vecs, ctx.fq)
        return cls(ctx=ctx, basis=reduced[: len(pivots)].copy(), pivots=tuple(pivots))

    @classmethod
    def from_elements(cls, ctx: FieldCtx, elems: Iterable[FieldElem]) -> Subspace:
        codes = [ctx.code_of(x) for x in elems]
        return cls.from_vectors(ctx, to_symbols(np.array(codes, dtype=np.int64), ctx.q, ctx.m))

    @classmethod
    def full(cls, ctx: FieldCtx) -> Subspace:
        return cls(ctx=ctx, basis=np.eye(ctx.m, dtype=np.int64), pivots=tuple(range(ctx.m)))

    @classmethod
    def zero(cls, ctx: FieldCtx) -> Subspace:
        return cls(ctx=ctx, basis=np.zeros((0, ctx.m), dtype=np.int64), pivots=())

    @cached_property
    def row_codes(self) -> np.ndarray:
        return to_codes(self.basis, self.ctx.q)

    @cached_property
    def member_codes(self) -> np.ndarray:
        """All q^r members as packed codes, zero first."""
        return span_codes(self.row_codes, self.ctx.fq, self.m)

    @cached_property
    def member_exponents(self) -> np.ndarray:
        """Exponents of the nonzero members."""
        return self.ctx.exponents_of_codes(self.member_codes[1:])

    def elements(self) -> list[FieldElem]:
        return [self.ctx.elem_of_code(int(c)) for c in self.member_codes]

    def basis_elements(self) -> list[FieldElem]:
        return [self.ctx.elem_of_code(int(c)) for c in self.row_codes]

    def contains(self, x: FieldElem) -> bool:
        return bool(self.members_mask(np.array([self.ctx.code_of(x)]))[0])

    def members_mask(self, codes: np.ndarray) -> np.ndarray:
        """Membership of packed codes, by reduction against the echelon basis."""
        return reduce_batch(self.basis[None], self.pivots, codes, self.ctx)[0]


def reduce_batch(
    bases: np.ndarray, pivots: Sequence[int], codes: np.ndarray, ctx: FieldCtx
) -> np.ndarray:
    """Membership mask (B, N) of N codes in each of B bases sharing ``pivots``."""
    codes = np.asarray(codes, dtype=np.int64)
    B = bases.shape[0]
    if ctx.q == 2:
        rows = to_codes(bases, 2)  # (B, r)
        res = np.broadcast_to(codes, (B, codes.size)).copy()
        for i, c in enumerate(pivots):
            res ^= ((res >> c) & 1) * rows[:, i : i + 1]
        return res == 0
    fq = ctx.fq
    sym = np.broadcast_to(to_symbols(codes, ctx.q, ctx.m), (B, codes.size, ctx.m)).copy()
    for i, c in enumerate(pivots):
        f = sym[:, :, c]
        sym = fq.sub(sym, fq.mul[f[:, :, None], bases[:, i][:, None, :]])
    return ~sym.any(axis=-1)


# ── Enumeration ──────────────────────────────────────────────────────


class SubspaceIter:
    """All r-dimensional subspaces of F_q^m, partitioned by pivot columns."""

    def __init__(self, ctx: FieldCtx, r: int, chunk: Optional[int] = None):
        self.ctx = ctx
        self.r = r
        self.total = gaussian_binomial(ctx.m, r, ctx.q)
        self.chunk = chunk or max(1, _BATCH_CELLS // (ctx.q**r * max(r, 1)))

    def __len__(self) -> int:
        return self.total

    def partitions(self) -> list[tuple[int, ...]]:
        return list(combinations(range(self.ctx.m), self.r))

    def free_slots(self, pivots: tuple[int, ...]) -> list[tuple[int, int]]:
        pset = set(pivots)
        return [
            (i, j)
            for j in range(self.ctx.m)
            if j not in pset
            for i in range(self.r)
            if pivots[i] < j
        ]

    def bases(self, pivots: tuple[int, ...]) -> Iterator[np.ndarray]:
        """Basis matrices (B, r, m) for one pivot tuple, in odometer order."""
        q, r, m = self.ctx.q, self.r, self.ctx.m
        slots = self.free_slots(pivots)
        rows = np.array([i for i, _ in slots], dtype=np.int64)
        cols = np.array([j for _, j in slots], dtype=np.int64)
        weights = q ** np.arange(len(slots), dtype=np.int64)
        count = q ** len(slots)
        for lo in range(0, count, self.chunk):
            a = np.arange(lo, min(lo + self.chunk, count), dtype=np.int64)
            out = np.zeros((a.size, r, m), dtype=np.int64)
            if r:
                out[:, np.arange(r), list(pivots)] = 1
            if slots:
                out[:, rows, cols] = (a[:, None] // weights) % q
            yield out

    def __iter__(self) -> Iterator[Subspace]:
        for pivots in self.partitions():
            for batch in self.bases(pivots):
                for basis in batch:
                    yield Subspace(ctx=self.ctx, basis=basis, pivots=pivots)


def enumerate_subspaces(
    ctx: FieldCtx, r: int, budget: int = DEFAULT_SUBSPACE_BUDGET
) -> SubspaceIter:
    it = SubspaceIter(ctx, r)
    if len(it) > budget:
        raise BudgetExceeded(
            f"{len(it)} subspaces of dimension {r} exceed the subspace budget {budget}"
        )
    return it


BatchScorer = Callable[[np.ndarray, tuple[int, ...]], np.ndarray]


def sweep_max(
    ctx: FieldCtx,
    r: int,
    score: BatchScorer,
    threads: int = 1,
    budget: int = DEFAULT_SUBSPACE_BUDGET,
) -> tuple[float, Subspace]:
    """Maximum of ``score`` over all r-subspaces and the first subspace attaining it."""
    it = enumerate_subspaces(ctx, r, budget)

    def run(pivots: tuple[int, ...]):
        best = None
        for batch in it.bases(pivots):
            scores = score(batch, pivots)
            idx = int(np.argmax(scores))
            if best is None or scores[idx] > best[0]:
                best = (scores[idx], batch[idx].copy())
        return best[0], best[1], pivots

    best = None
    for value, basis, pivots in map_partitions(run, it.partitions(), threads):
        if best is None or value > best[0]:
            best = (value, basis, pivots)
    logger.debug("Sweep over %d subspaces of dim %d: max=%s", len(it), r, best[0])
    return best[0], Subspace(ctx=ctx, basis=best[1], pivots=best[2])


# ── Tabulated sweeps ─────────────────────────────────────────────────


class SubspaceTable:
    """Every r-subspace, in enumeration order, with its members tabulated once.

    Specs over the same field share these tables, so a sweep for one spec is a
    gather or a matrix product over rows instead of a fresh enumeration. Row order
    is the enumeration order, so the first maximal row is the subspace
    ``sweep_max`` would return.
    """

    def __init__(self, ctx: FieldCtx, r: int):
        it = SubspaceIter(ctx, r)
        self.ctx = ctx
        self.r = r
        self.pivot_sets = it.partitions()
        bases, pivot_ids, exps = [], [], []
        for i, pivots in enumerate(self.pivot_sets):
            for batch in it.bases(pivots):
                bases.append(batch)
                pivot_ids.append(np.full(batch.shape[0], i, dtype=np.int64))
                exps.append(batch_member_exponents(batch, ctx))
        self.bases = np.concatenate(bases)
        self.pivot_ids = np.concatenate(pivot_ids)
        self.member_exponents = np.concatenate(exps)  # (B, q^r - 1)
        self._profiles: dict[int, np.ndarray] = {}
        logger.debug("Tabulated %d subspaces of dim %d over F_%d", len(self), r, ctx.Q)

    def __len__(self) -> int:
        return self.bases.shape[0]

    @cached_property
    def incidence(self) -> np.ndarray:
        """(Q-1, B) mask: θ^k ∈ H_b."""
        B = len(self)
        inc = np.zeros((self.ctx.order, B), dtype=bool)
        cols = np.broadcast_to(np.arange(B)[:, None], self.member_exponents.shape)
        inc[self.member_exponents, cols] = True
        return inc

    @cached_property
    def annihilator(self) -> np.ndarray:
        """(Q-1, B) mask: Tr(β θ^k) = 0 for every basis vector β of H_b."""
        ctx = self.ctx
        B = len(self)
        ann = np.ones((ctx.order, B), dtype=bool)
        if self.r == 0:
            return ann
        beta = ctx.exponents_of_codes(to_codes(self.bases, ctx.q))  # (B, r)
        ks = np.arange(ctx.order, dtype=np.int64)
        step = max(1, _BATCH_CELLS // (self.r * ctx.order))
        for lo in range(0, B, step):
            chunk = beta[lo : lo + step]
            traces = ctx.trace_q[(chunk[:, :, None] + ks) % ctx.order]
            ann[:, lo : lo + step] = ~traces.any(axis=1).T
        return ann

    def class_profile(self, h: int) -> np.ndarray:
        """(B, h) counts |H_b^* ∩ C_i|."""
        if h not in self._profiles:
            self._profiles[h] = class_profile(self.member_exponents, h)
        return self._profiles[h]

    def subspace(self, row: int) -> Subspace:
        pivots = self.pivot_sets[int(self.pivot_ids[row])]
        return Subspace(ctx=self.ctx, basis=self.bases[row].copy(), pivots=pivots)

    def best(self, scores: np.ndarray) -> tuple[float, Subspace]:
        """Maximum score and the first subspace attaining it."""
        row = int(np.argmax(scores))
        return scores[row], self.subspace(row)


def table_fits(ctx: FieldCtx, r: int) -> bool:
    """Whether the r-subspace table stays within the cell limit."""
    rows = gaussian_binomial(ctx.m, r, ctx.q)
    return rows * max(ctx.order, ctx.q**r) <= _TABLE_CELL_LIMIT


@lru_cache(maxsize=16)
def subspace_table(ctx: FieldCtx, r: int) -> SubspaceTable:
    return SubspaceTable(ctx, r)


def batch_member_exponents(bases: np.ndarray, ctx: FieldCtx) -> np.ndarray:
    """Exponents (B, q^r - 1) of the nonzero members of each basis."""
    span = span_codes(to_codes(bases, ctx.q), ctx.fq, ctx.m)
    return ctx.exponents_of_codes(span[:, 1:])


def class_profile(exponents: np.ndarray, h: int) -> np.ndarray:
    """Per-row counts of exponents in each class mod h, shape (B, h)."""
    classes = exponents % h
    return np.stack([(classes == i).sum(axis=-1) for i in range(h)], axis=-1)


# ── Operations on single subspaces ───────────────────────────────────


def intersect_count(H: Subspace, S: Iterable[FieldElem]) -> int:
    """|S ∩ H| counted with multiplicity, without materialising H."""
    codes = np.array([H.ctx.code_of(x) for x in S], dtype=np.int64)
    if codes.size == 0:
        return 0
    return int(H.members_mask(codes).sum())


@lru_cache(maxsize=32)
def trace_gram(ctx: FieldCtx) -> np.ndarray:
    """G[a, b] = Tr_{Q/q}(θ^a θ^b) for a, b < m."""
    idx = np.arange(ctx.m, dtype=np.int64)
    return ctx.trace_q[(idx[:, None] + idx[None, :]) % ctx.order]


def trace_dual(H: Subspace) -> Subspace:
    """H^⊥ = {v : Tr(uv) = 0 for all u ∈ H}."""
    ctx = H.ctx
    if H.r == 0:
        return Subspace.full(ctx)
    constraints = matmul(H.basis, trace_gram(ctx), ctx.fq)
    return Subspace.from_vectors(ctx, nullspace(constraints, ctx.fq, cols=ctx.m))


def coset_profile(H: Subspace, h: int) -> tuple[int, ...]:
    """|H^* ∩ C_i| for i = 0..h-1."""
    ctx = H.ctx
    if h < 1 or ctx.order % h:
        raise InvalidArgument(f"h={h!r} does not divide Q-1={ctx.order}")
    if ctx.q**H.r < _MATERIALIZE_LIMIT:
        exps = H.member_exponents
    else:
        codes = np.arange(1, ctx.Q, dtype=np.int64)
        exps = ctx.exponents_of_codes(codes[H.members_mask(codes)])
    return tuple(int(c) for c in np.bincount(exps % h, minlength=h))


def subfield_subspace(ctx: FieldCtx, d: int) -> Subspace:
    """F_{q^d} ⊆ F_Q as a d-dimensional F_q-subspace (d | m)."""
    if d < 1 or ctx.m % d:
        raise InvalidArgument(f"d={d!r} does not divide m={ctx.m}")
    size = ctx.q**d - 1
    exps = (ctx.order // size) * np.arange(size, dtype=np.int64)
    H = Subspace.from_vectors(ctx, to_symbols(ctx.codes_of_exponents(exps), ctx.q, ctx.m))
    if H.r != d:
        raise ConsistencyError(f"Subfield of degree {d} spans dimension {H.r}")
    return H
