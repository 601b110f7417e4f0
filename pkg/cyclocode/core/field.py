"""Finite field tower F_p ⊆ F_q ⊆ F_Q with discrete-log tables.

F_Q = F_p[x]/(f) for the first primitive polynomial f of degree e*m, where
polynomials are ordered by the integer sum_i c_i * p^i of their low coefficients.
Every element has a packed "index" (its coefficient vector in base p) and, when
nonzero, an exponent k with x = θ^k. F_q is realised inside F_Q as
{0} ∪ <θ^((Q-1)/(q-1))>, its elements labelled by symbols 0..q-1 in increasing
index order, so symbol 0 is zero and symbol 1 is one.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from math import gcd
from typing import Optional, Sequence

import numpy as np

from cyclocode.core.linalg import FqArith
from cyclocode.errors import (
    ConsistencyError,
    DimensionMismatch,
    FieldTooLarge,
    InvalidArgument,
    MixedContexts,
    NoPrimitivePolyFound,
    NotPrime,
    ZeroArgument,
)

logger = logging.getLogger(__name__)

DEFAULT_FIELD_CAP = 1 << 20


class Subfield(Enum):
    FQ = "q"
    FP = "p"


# ── Integer helpers ──────────────────────────────────────────────────


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of n, ascending."""
    factors = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            factors.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        factors.append(n)
    return factors


# ── Polynomials over F_p (coefficient lists, low degree first) ──────


def _reduce(poly: list[int], f_low: Sequence[int], p: int) -> list[int]:
    n = len(f_low)
    poly = [c % p for c in poly]
    for deg in range(len(poly) - 1, n - 1, -1):
        c = poly[deg]
        if c:
            poly[deg] = 0
            for i in range(n):
                poly[deg - n + i] = (poly[deg - n + i] - c * f_low[i]) % p
    poly = poly[:n]
    return poly + [0] * (n - len(poly))


def _mulmod(a: list[int], b: list[int], f_low: Sequence[int], p: int) -> list[int]:
    prod = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                prod[i + j] += ca * cb
    return _reduce(prod, f_low, p)


def _x_power(exp: int, f_low: Sequence[int], p: int) -> list[int]:
    n = len(f_low)
    result = _reduce([1], f_low, p)
    base = _reduce([0, 1], f_low, p)
    while exp:
        if exp & 1:
            result = _mulmod(result, base, f_low, p)
        base = _mulmod(base, base, f_low, p)
        exp >>= 1
    return result + [0] * (n - len(result))


def is_primitive_poly(f_low: Sequence[int], p: int) -> bool:
    """True iff x has multiplicative order p^n - 1 modulo x^n + f_low.

    That order forces f to be irreducible, so one test covers both properties.
    """
    n = len(f_low)
    if f_low[0] % p == 0:
        return False
    order = p**n - 1
    one = _reduce([1], f_low, p)
    if _x_power(order, f_low, p) != one:
        return False
    return all(_x_power(order // r, f_low, p) != one for r in prime_factors(order))


def find_primitive_poly(p: int, n: int) -> tuple[int, ...]:
    """First primitive monic polynomial of degree n, as full coefficients (low first)."""
    for v in range(p**n):
        f_low = [(v // p**i) % p for i in range(n)]
        if is_primitive_poly(f_low, p):
            return tuple(f_low) + (1,)
    raise NoPrimitivePolyFound(f"No primitive polynomial of degree {n} over F_{p}")


# ── Context and elements ─────────────────────────────────────────────


@dataclass(frozen=True, eq=False)
class FieldCtx:
    """Immutable tables for one field tower."""

    p: int
    e: int
    m: int
    primitive_poly: tuple[int, ...]
    antilog_table: np.ndarray = field(repr=False)  # k -> index of θ^k
    log_table: np.ndarray = field(repr=False)  # index -> k, -1 for zero
    digits: np.ndarray = field(repr=False)  # index -> base-p digits, empty for p=2
    fq_index: np.ndarray = field(repr=False)  # symbol -> index
    fq_symbol: np.ndarray = field(repr=False)  # index -> symbol, -1 outside F_q
    coord_of_index: np.ndarray = field(repr=False)
    index_of_coord: np.ndarray = field(repr=False)
    trace_q: np.ndarray = field(repr=False)  # k -> symbol of Tr_{Q/q}(θ^k)
    trace_p: np.ndarray = field(repr=False)  # k -> Tr_{Q/p}(θ^k) as 0..p-1
    fq: FqArith = field(repr=False)

    @property
    def q(self) -> int:
        return self.p**self.e

    @property
    def Q(self) -> int:
        return self.p ** (self.e * self.m)

    @property
    def order(self) -> int:
        """|F_Q^*| = Q - 1."""
        return self.Q - 1

    @property
    def degree(self) -> int:
        return self.e * self.m

    @property
    def zero(self) -> FieldElem:
        return FieldElem(self, None)

    @property
    def one(self) -> FieldElem:
        return FieldElem(self, 0)

    @property
    def theta(self) -> FieldElem:
        return FieldElem(self, 1 % self.order)

    def element(self, k: int) -> FieldElem:
        """θ^k."""
        return FieldElem(self, k % self.order)

    def elements(self) -> list[FieldElem]:
        """All of F_Q, zero first then θ^0..θ^(Q-2)."""
        return [self.zero] + [FieldElem(self, k) for k in range(self.order)]

    def from_index(self, index: int) -> FieldElem:
        k = int(self.log_table[index])
        return FieldElem(self, None if k < 0 else k)

    def from_coeffs(self, coeffs: Sequence[int]) -> FieldElem:
        """Element with the given F_p coefficients on 1, θ, ..., θ^(em-1)."""
        if len(coeffs) > self.degree:
            raise DimensionMismatch(
                f"Expected at most {self.degree} coefficients, got {len(coeffs)}"
            )
        index = sum((int(c) % self.p) * self.p**i for i, c in enumerate(coeffs))
        return self.from_index(index)

    def fq_element(self, symbol: int) -> FieldElem:
        return self.from_index(int(self.fq_index[symbol]))

    def fq_elements(self) -> list[FieldElem]:
        return [self.fq_element(s) for s in range(self.q)]

    def symbol_of(self, x: FieldElem) -> int:
        """Symbol of an element of F_q; raises if x is outside F_q."""
        self._check(x)
        s = int(self.fq_symbol[x.index])
        if s < 0:
            raise InvalidArgument(f"{x!r} is not in F_{self.q}")
        return s

    # ── vectorised index arithmetic ──

    def add_index(self, a, b):
        if self.p == 2:
            return np.bitwise_xor(a, b)
        return self._pack((self.digits[a] + self.digits[b]) % self.p)

    def neg_index(self, a):
        if self.p == 2:
            return a
        return self._pack((-self.digits[a]) % self.p)

    def _pack(self, d):
        return d @ (self.p ** np.arange(self.degree, dtype=np.int64))

    # ── coordinate codes (F_q^m packed in base q) ──

    def code_of(self, x: FieldElem) -> int:
        self._check(x)
        return int(self.coord_of_index[x.index])

    def elem_of_code(self, code: int) -> FieldElem:
        return self.from_index(int(self.index_of_coord[code]))

    def codes_of_exponents(self, exps) -> np.ndarray:
        return self.coord_of_index[self.antilog_table[np.asarray(exps, dtype=np.int64)]]

    def exponents_of_codes(self, codes) -> np.ndarray:
        """Exponent of each packed vector, -1 for the zero vector."""
        return self.log_table[self.index_of_coord[np.asarray(codes, dtype=np.int64)]]

    def _check(self, *xs: FieldElem) -> None:
        for x in xs:
            if x.ctx is not self:
                raise MixedContexts("Element belongs to a different field context")


@dataclass(frozen=True)
class FieldElem:
    """Zero (exp is None) or θ^exp with exp in 0..Q-2."""

    ctx: FieldCtx
    exp: Optional[int]

    @property
    def is_zero(self) -> bool:
        return self.exp is None

    @property
    def index(self) -> int:
        if self.exp is None:
            return 0
        return int(self.ctx.antilog_table[self.exp])

    def __repr__(self) -> str:
        return "0" if self.exp is None else f"θ^{self.exp}"

    def __add__(self, other: FieldElem) -> FieldElem:
        return add(self, other)

    def __sub__(self, other: FieldElem) -> FieldElem:
        return add(self, neg(other))

    def __neg__(self) -> FieldElem:
        return neg(self)

    def __mul__(self, other: FieldElem) -> FieldElem:
        return mul(self, other)

    def __pow__(self, n: int) -> FieldElem:
        return power(self, n)


# ── Construction ─────────────────────────────────────────────────────


def build_field(
    p: int,
    e: int,
    m: int,
    cap: int = DEFAULT_FIELD_CAP,
    poly: Optional[Sequence[int]] = None,
) -> FieldCtx:
    """Build (or fetch the cached) context for F_p ⊆ F_{p^e} ⊆ F_{p^(em)}.

    ``poly`` optionally pins the defining polynomial as full coefficients, low
    degree first, leading 1 included; it must be primitive.
    """
    if not is_prime(p):
        raise NotPrime(f"p={p!r} is not prime")
    if e < 1 or m < 1:
        raise InvalidArgument(f"Extension degrees must be >= 1, got e={e!r}, m={m!r}")
    Q = p ** (e * m)
    if Q > cap:
        raise FieldTooLarge(f"Q={Q} exceeds the field cap {cap}")
    if poly is not None:
        poly = tuple(int(c) % p for c in poly)
        if len(poly) != e * m + 1 or poly[-1] != 1:
            raise DimensionMismatch(
                f"Defining polynomial must be monic of degree {e * m}, got {poly!r}"
            )
        if not is_primitive_poly(poly[:-1], p):
            raise InvalidArgument(f"Polynomial {poly!r} is not primitive over F_{p}")
    return _build_field_cached(p, e, m, poly)


@lru_cache(maxsize=32)
def _build_field_cached(
    p: int, e: int, m: int, poly: Optional[tuple[int, ...]]
) -> FieldCtx:
    n = e * m
    Q = p**n
    if poly is None:
        poly = find_primitive_poly(p, n)
    f_low = poly[:-1]
    logger.debug("Building F_%d^%d with f=%s", p, n, poly)

    antilog = _antilog_table(f_low, p, Q)
    if np.unique(antilog).size != Q - 1:
        raise NoPrimitivePolyFound(f"θ is not primitive for f={poly!r}")
    log = np.full(Q, -1, dtype=np.int64)
    log[antilog] = np.arange(Q - 1, dtype=np.int64)
    powers = p ** np.arange(n, dtype=np.int64)
    if p == 2:
        digits = np.zeros((0, n), dtype=np.int16)
    else:
        digits = ((np.arange(Q, dtype=np.int64)[:, None] // powers) % p).astype(np.int16)

    def add_index(a, b):
        if p == 2:
            return np.bitwise_xor(a, b)
        return ((digits[a] + digits[b]) % p) @ powers

    q = p**e
    order = Q - 1
    step = order // (q - 1) if q > 1 else 0
    sub_indices = [0] + [int(antilog[(j * step) % order]) for j in range(q - 1)]
    fq_index = np.array(sorted(set(sub_indices)), dtype=np.int64)
    if fq_index.size != q:
        raise ConsistencyError(f"Subfield F_{q} has {fq_index.size} elements")
    fq_symbol = np.full(Q, -1, dtype=np.int64)
    fq_symbol[fq_index] = np.arange(q, dtype=np.int64)

    def sym_log(s: int) -> int:
        return int(log[fq_index[s]])

    add_t = np.zeros((q, q), dtype=np.int64)
    mul_t = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            add_t[a, b] = fq_symbol[add_index(int(fq_index[a]), int(fq_index[b]))]
            if a and b:
                k = (sym_log(a) + sym_log(b)) % order
                mul_t[a, b] = fq_symbol[antilog[k]]
    neg_t = np.array([int(np.nonzero(add_t[a] == 0)[0][0]) for a in range(q)], dtype=np.int64)
    inv_t = np.zeros(q, dtype=np.int64)
    for a in range(1, q):
        inv_t[a] = int(np.nonzero(mul_t[a] == 1)[0][0])
    fq = FqArith(q=q, add=add_t, mul=mul_t, neg=neg_t, inv=inv_t)

    # coordinates over the F_q-basis 1, θ, ..., θ^(m-1)
    index_of_coord = np.zeros(1, dtype=np.int64)
    for i in range(m):
        term = np.array(
            [0] + [int(antilog[(sym_log(s) + i) % order]) for s in range(1, q)],
            dtype=np.int64,
        )
        index_of_coord = add_index(term[:, None], index_of_coord[None, :]).reshape(-1)
    if np.unique(index_of_coord).size != Q:
        raise ConsistencyError("1, θ, ..., θ^(m-1) is not an F_q-basis")
    coord_of_index = np.empty(Q, dtype=np.int64)
    coord_of_index[index_of_coord] = np.arange(Q, dtype=np.int64)

    ks = np.arange(order, dtype=np.int64)
    acc = np.zeros(order, dtype=np.int64)
    for i in range(m):
        acc = add_index(acc, antilog[(ks * pow(q, i, order)) % order])
    trace_q = fq_symbol[acc]
    if (trace_q < 0).any():
        raise ConsistencyError("Tr_{Q/q} left F_q")
    acc = np.zeros(order, dtype=np.int64)
    for i in range(n):
        acc = add_index(acc, antilog[(ks * pow(p, i, order)) % order])
    if (acc >= p).any():
        raise ConsistencyError("Tr_{Q/p} left F_p")

    return FieldCtx(
        p=p,
        e=e,
        m=m,
        primitive_poly=tuple(poly),
        antilog_table=antilog,
        log_table=log,
        digits=digits,
        fq_index=fq_index,
        fq_symbol=fq_symbol,
        coord_of_index=coord_of_index,
        index_of_coord=index_of_coord,
        trace_q=trace_q,
        trace_p=acc,
        fq=fq,
    )


def _antilog_table(f_low: Sequence[int], p: int, Q: int) -> np.ndarray:
    """Index of θ^k for k = 0..Q-2, stepping the multiply-by-x register."""
    n = len(f_low)
    out = np.empty(Q - 1, dtype=np.int64)
    if p == 2:
        mask = sum(c << i for i, c in enumerate(f_low)) | (1 << n)
        state = 1
        for k in range(Q - 1):
            out[k] = state
            state <<= 1
            if state >> n:
                state ^= mask
        return out
    state = [1] + [0] * (n - 1)
    powers = [p**i for i in range(n)]
    for k in range(Q - 1):
        out[k] = sum(d * w for d, w in zip(state, powers))
        top = state[-1]
        state = [0] + state[:-1]
        if top:
            state = [(d - top * c) % p for d, c in zip(state, f_low)]
    return out


# ── Arithmetic ───────────────────────────────────────────────────────


def mul(a: FieldElem, b: FieldElem) -> FieldElem:
    ctx = a.ctx
    ctx._check(b)
    if a.exp is None or b.exp is None:
        return ctx.zero
    return FieldElem(ctx, (a.exp + b.exp) % ctx.order)


def add(a: FieldElem, b: FieldElem) -> FieldElem:
    ctx = a.ctx
    ctx._check(b)
    return ctx.from_index(int(ctx.add_index(a.index, b.index)))


def neg(a: FieldElem) -> FieldElem:
    return a.ctx.from_index(int(a.ctx.neg_index(a.index)))


def inverse(a: FieldElem) -> FieldElem:
    if a.exp is None:
        raise ZeroArgument("0 has no multiplicative inverse")
    return FieldElem(a.ctx, (-a.exp) % a.ctx.order)


def power(a: FieldElem, n: int) -> FieldElem:
    """a^n; 0^0 is 1 and negative powers of 0 raise ZeroArgument."""
    if a.exp is None:
        if n < 0:
            raise ZeroArgument("0 raised to a negative power")
        return a.ctx.one if n == 0 else a.ctx.zero
    return FieldElem(a.ctx, (a.exp * n) % a.ctx.order)


def multiplicative_order(a: FieldElem) -> int:
    if a.exp is None:
        raise ZeroArgument("0 has no multiplicative order")
    return a.ctx.order // gcd(a.exp, a.ctx.order)


# ── Traces ───────────────────────────────────────────────────────────


def trace_to_subfield(x: FieldElem, target: Subfield = Subfield.FQ) -> FieldElem:
    """Tr_{Q/q}(x) or Tr_{Q/p}(x), returned in F_Q representation."""
    ctx = x.ctx
    if x.exp is None:
        return ctx.zero
    if target is Subfield.FQ:
        return ctx.fq_element(int(ctx.trace_q[x.exp]))
    return ctx.from_index(int(ctx.trace_p[x.exp]))


def trace_q_to_p(x: FieldElem) -> FieldElem:
    """Tr_{q/p}(x) = sum_{i<e} x^(p^i) for x in F_q."""
    ctx = x.ctx
    ctx.symbol_of(x)
    total = ctx.zero
    for i in range(ctx.e):
        total = add(total, power(x, ctx.p**i))
    return total


# ── Coordinates over F_q ─────────────────────────────────────────────


def coord_symbols(x: FieldElem) -> tuple[int, ...]:
    ctx = x.ctx
    code = ctx.code_of(x)
    return tuple((code // ctx.q**i) % ctx.q for i in range(ctx.m))


def coords(x: FieldElem) -> tuple[FieldElem, ...]:
    """Coefficients of x on 1, θ, ..., θ^(m-1), each an element of F_q."""
    ctx = x.ctx
    return tuple(ctx.fq_element(s) for s in coord_symbols(x))


def uncoords_symbols(ctx: FieldCtx, symbols: Sequence[int]) -> FieldElem:
    if len(symbols) != ctx.m:
        raise DimensionMismatch(f"Expected {ctx.m} coordinates, got {len(symbols)}")
    code = sum(int(s) * ctx.q**i for i, s in enumerate(symbols))
    return ctx.elem_of_code(code)


def uncoords(ctx: FieldCtx, v: Sequence[FieldElem]) -> FieldElem:
    """Inverse of coords."""
    return uncoords_symbols(ctx, [ctx.symbol_of(c) for c in v])
