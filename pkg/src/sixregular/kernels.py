"""Tables of the partition functions, each with more than one way to produce it.

All counting functions are zero at negative arguments.  A table's
``method`` records which route produced it, so two tables of the same
function built by different routes can be compared directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from . import special
from .series import (
    ProductSpec,
    TruncatedSeries,
    build_product,
    invert,
    mul,
    pentagonal_theta,
    poch,
)

FUNCTIONS = ("p", "b6", "q2", "c", "d", "mk", "pk", "b6e", "b6o", "b6ee", "b6eo", "b3")

METHODS = {
    "p": ("recurrence", "product"),
    "b6": ("product", "euler-sum", "recurrence"),
    "q2": ("product", "rho-sum", "watson-sum", "recurrence"),
    "c": ("product",),
    "d": ("product",),
    "mk": ("truncated-pentagonal",),
    "pk": ("truncated-pentagonal",),
    "b6e": ("product",),
    "b6o": ("product",),
    "b6ee": ("product",),
    "b6eo": ("product",),
    "b3": ("product",),
}

# residues mod 48 excluded from the parts counted by c(n) and d(n)
C_FORBIDDEN_48 = frozenset({0, 2, 46, 20, 28, 22, 26, 24})
D_FORBIDDEN_48 = frozenset({0, 4, 44, 10, 38, 14, 34, 24})


@dataclass(frozen=True)
class SequenceTable:
    """f(0..limit) for a named function, plus the route that produced it."""

    name: str
    limit: int
    values: tuple
    method: str

    def __post_init__(self):
        if len(self.values) != self.limit + 1:
            raise ValueError(f"{self.name}: expected {self.limit + 1} values, got {len(self.values)}")

    def __call__(self, n: int) -> int:
        """f(n), with f = 0 on negative arguments."""
        if n < 0:
            return 0
        if n > self.limit:
            raise IndexError(f"{self.name}({n}) is beyond the table limit {self.limit}")
        return self.values[n]

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self) -> int:
        return self.limit + 1

    def __iter__(self):
        return iter(self.values)

    def same_values(self, other: "SequenceTable") -> bool:
        return self.name == other.name and self.limit == other.limit and self.values == other.values


def _check_limit(limit: int) -> None:
    if limit < 0:
        raise ValueError(f"limit must be nonnegative, got {limit}")


def _check_method(name: str, method: str) -> None:
    if method not in METHODS[name]:
        raise ValueError(f"unknown method {method!r} for {name}; choose from {METHODS[name]}")


def _signed_kernel(kind: str, limit: int) -> list[tuple[int, int]]:
    """[(offset, (-1)^j)] for the bilateral kind, offset > 0, ascending."""
    return sorted((v, special.sign(j)) for j, v in special.terms(kind, limit) if v > 0)


def _solve(limit: int, kernel: list[tuple[int, int]], rhs: Callable[[int], int]) -> list[int]:
    """f(n) + sum_{(g, w) in kernel} w f(n - g) = rhs(n), solved for f(n) in order."""
    f = [0] * (limit + 1)
    for n in range(limit + 1):
        acc = rhs(n)
        for g, w in kernel:
            if g > n:
                break
            acc -= w * f[n - g]
        f[n] = acc
    return f


def _convolve_sparse(values, kernel: Iterable[tuple[int, int]], limit: int) -> list[int]:
    """out(n) = sum_{(g, w)} w * values(n - g), values zero off 0..limit."""
    out = [0] * (limit + 1)
    for g, w in kernel:
        for n in range(g, limit + 1):
            out[n] += w * values[n - g]
    return out


def _from_series(name: str, s: TruncatedSeries, method: str) -> SequenceTable:
    return SequenceTable(name, s.order, s.coeffs, method)


@lru_cache(maxsize=8)
def _p_values(limit: int) -> tuple:
    kernel = _signed_kernel("pentagonal", limit)
    return tuple(_solve(limit, kernel, lambda n: 1 if n == 0 else 0))


def p_table(limit: int, method: str = "recurrence") -> SequenceTable:
    """p(0..limit) from Euler's pentagonal recurrence, or by expanding 1/(q;q)_inf."""
    _check_limit(limit)
    _check_method("p", method)
    if method == "product":
        return _from_series("p", build_product(ProductSpec.of(denominator=[poch(1, 1)]), limit), method)
    return SequenceTable("p", limit, _p_values(limit), method)


def regular_product(ell: int) -> ProductSpec:
    """(q^ell; q^ell)_inf / (q; q)_inf."""
    return ProductSpec.of([poch(ell, ell)], [poch(1, 1)])


def b6_table(limit: int, method: str = "product") -> SequenceTable:
    """Number of partitions of n with no part divisible by 6."""
    _check_limit(limit)
    _check_method("b6", method)
    if method == "product":
        return _from_series("b6", build_product(regular_product(6), limit), method)
    if method == "euler-sum":
        p = _p_values(limit)
        kernel = [(v, special.sign(j)) for j, v in special.terms("expanded-pentagonal", limit)]
        return SequenceTable("b6", limit, tuple(_convolve_sparse(p, kernel, limit)), method)
    kernel = _signed_kernel("pentagonal", limit)
    return SequenceTable("b6", limit, tuple(_solve(limit, kernel, special.alpha_n)), method)


def q2_product() -> ProductSpec:
    """(-q, -q^3, -q^5, -q^6; q^6)_inf."""
    return ProductSpec(tuple(poch(a, 6, negated=True) for a in (1, 3, 5, 6)))


def q2_table(limit: int, method: str = "product") -> SequenceTable:
    """Partitions of n into distinct parts not congruent to +-2 mod 6."""
    _check_limit(limit)
    _check_method("q2", method)
    if method == "product":
        return _from_series("q2", build_product(q2_product(), limit), method)
    if method == "rho-sum":
        p = _p_values(limit)
        kernel = [(v, special.rho(j)) for j, v in special.terms("doubled-triangular", limit)]
        return SequenceTable("q2", limit, tuple(_convolve_sparse(p, kernel, limit)), method)
    if method == "watson-sum":
        p = _p_values(limit // 3)
        out = [0] * (limit + 1)
        for _, v in special.terms("octagonal", limit):
            # p((n - v)/3) only where the argument is a nonnegative integer
            for x in range((limit - v) // 3 + 1):
                out[v + 3 * x] += p[x]
        return SequenceTable("q2", limit, tuple(out), method)
    kernel = _signed_kernel("scaled-pentagonal", limit)
    rhs = lambda n: 1 if special.is_octagonal(n) else 0
    return SequenceTable("q2", limit, tuple(_solve(limit, kernel, rhs)), method)


def allowed_parts_product(forbidden: frozenset, modulus: int) -> ProductSpec:
    """1 / prod (q^a; q^modulus)_inf over residues a not in ``forbidden``."""
    allowed = [a if a else modulus for a in range(modulus) if a not in forbidden]
    return ProductSpec.of(denominator=[poch(a, modulus) for a in sorted(allowed)])


def cd_tables(limit: int) -> tuple[SequenceTable, SequenceTable]:
    _check_limit(limit)
    c = build_product(allowed_parts_product(C_FORBIDDEN_48, 48), limit)
    d = build_product(allowed_parts_product(D_FORBIDDEN_48, 48), limit)
    return _from_series("c", c, "product"), _from_series("d", d, "product")


@lru_cache(maxsize=4)
def _partition_series(limit: int) -> TruncatedSeries:
    return invert(pentagonal_theta(limit))


def _truncated_pentagonal(lo: int, hi: int, limit: int) -> TruncatedSeries:
    terms = {}
    for j in range(lo, hi + 1):
        e = j * (3 * j - 1) // 2
        if e <= limit:
            terms[e] = terms.get(e, 0) + special.sign(j)
    return TruncatedSeries.from_terms(terms, limit)


def mk_table(k: int, limit: int) -> SequenceTable:
    """M_k(0..limit) = (-1)^(k-1) (T_k(q)/(q;q)_inf - 1), T_k summing n = -(k-1)..k."""
    if k < 1:
        raise ValueError(f"M_k needs k >= 1, got {k}")
    _check_limit(limit)
    s = mul(_partition_series(limit), _truncated_pentagonal(-(k - 1), k, limit))
    s = (s - TruncatedSeries.one(limit)).scale(special.sign(k - 1))
    return SequenceTable(f"mk({k})", limit, s.coeffs, "truncated-pentagonal")


def pk_table(k: int, limit: int) -> SequenceTable:
    """P~_k(0..limit) = (-1)^k (T'_k(q)/(q;q)_inf - 1), T'_k summing n = -k..k."""
    if k < 1:
        raise ValueError(f"P~_k needs k >= 1, got {k}")
    _check_limit(limit)
    s = mul(_partition_series(limit), _truncated_pentagonal(-k, k, limit))
    s = (s - TruncatedSeries.one(limit)).scale(special.sign(k))
    return SequenceTable(f"pk({k})", limit, s.coeffs, "truncated-pentagonal")


def signed_length_product() -> ProductSpec:
    """1/(-q, -q^2, -q^3, -q^4, -q^5; q^6)_inf: parts not divisible by 6, each weighted -1."""
    return ProductSpec.of(denominator=[poch(a, 6, negated=True) for a in range(1, 6)])


def signed_even_parts_product() -> ProductSpec:
    """Only even parts weighted -1: 1/((q, q^3, q^5; q^6)(-q^2, -q^4; q^6))."""
    den = [poch(a, 6) for a in (1, 3, 5)] + [poch(a, 6, negated=True) for a in (2, 4)]
    return ProductSpec.of(denominator=den)


def refinement_table(name: str, limit: int) -> SequenceTable:
    """b6e / b6o (length parity) and b6ee / b6eo (parity of the number of even parts)."""
    _check_limit(limit)
    if name not in ("b6e", "b6o", "b6ee", "b6eo"):
        raise ValueError(f"unknown refinement {name!r}")
    total = build_product(regular_product(6), limit)
    spec = signed_length_product() if name in ("b6e", "b6o") else signed_even_parts_product()
    diff = build_product(spec, limit)
    sgn = 1 if name in ("b6e", "b6ee") else -1
    vals = tuple((t + sgn * d) // 2 for t, d in zip(total.coeffs, diff.coeffs))
    return SequenceTable(name, limit, vals, "product")


def regular_table(ell: int, limit: int) -> SequenceTable:
    """b_ell(0..limit) from (q^ell; q^ell)/(q; q)."""
    _check_limit(limit)
    return _from_series(f"b{ell}", build_product(regular_product(ell), limit), "product")


def partition_residues(limit: int, modulus: int) -> np.ndarray:
    """p(0..limit) mod ``modulus`` as an int64 array, by the pentagonal recurrence."""
    _check_limit(limit)
    kernel = _signed_kernel("pentagonal", limit)
    offsets = np.array([g for g, _ in kernel], dtype=np.int64)
    weights = np.array([w for _, w in kernel], dtype=np.int64)
    p = np.zeros(limit + 1, dtype=np.int64)
    p[0] = 1 % modulus
    cut = 0
    for n in range(1, limit + 1):
        while cut < len(offsets) and offsets[cut] <= n:
            cut += 1
        p[n] = -int(weights[:cut] @ p[n - offsets[:cut]]) % modulus
    return p


def regular_residues(ell: int, limit: int, modulus: int) -> np.ndarray:
    """b_ell(0..limit) mod ``modulus``: p convolved with (q^ell; q^ell)_inf."""
    p = partition_residues(limit, modulus)
    out = p.copy()
    for j, v in special.terms("pentagonal", limit // ell):
        g = ell * v
        if g == 0:
            continue
        out[g:] += special.sign(j) * p[: limit + 1 - g]
    return out % modulus


@dataclass(frozen=True)
class MexCensus:
    """Counts of partitions of n by mex_{2,2}: the smallest even positive non-part."""

    n: int
    jmax: int
    counts: tuple  # ((j, pm_{2j}(n)), ...) for j = 1..jmax
    beyond: int  # pm_{>2 jmax}(n)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.counts) + self.beyond

    def count(self, j: int) -> int:
        return dict(self.counts)[j]


def mex22_census(n: int, jmax: int, p: SequenceTable | None = None) -> MexCensus:
    """pm_{2j}(n) = p(n - (j-1)j) - p(n - j(j+1)); pm_{>2j}(n) = p(n - j(j+1)).

    Adding one copy each of 2, 4, ..., 2j to a partition of n - j(j+1)
    is a bijection onto the partitions of n with mex_{2,2} > 2j.
    """
    if n < 0 or jmax < 1:
        raise ValueError("need n >= 0 and jmax >= 1")
    if p is None or p.limit < n:
        p = p_table(n)
    counts = tuple((j, p(n - (j - 1) * j) - p(n - j * (j + 1))) for j in range(1, jmax + 1))
    return MexCensus(n, jmax, counts, p(n - jmax * (jmax + 1)))


def table(name: str, limit: int, method: str | None = None, k: int | None = None) -> SequenceTable:
    """Dispatch by function id; ``k`` is required for mk / pk."""
    if name == "p":
        return p_table(limit, method or "recurrence")
    if name == "b6":
        return b6_table(limit, method or "product")
    if name == "q2":
        return q2_table(limit, method or "product")
    if name in ("c", "d"):
        c, d = cd_tables(limit)
        return c if name == "c" else d
    if name in ("mk", "pk"):
        if k is None:
            raise ValueError(f"{name} needs k")
        return mk_table(k, limit) if name == "mk" else pk_table(k, limit)
    if name in ("b6e", "b6o", "b6ee", "b6eo"):
        return refinement_table(name, limit)
    if name == "b3":
        return regular_table(3, limit)
    raise ValueError(f"unknown function id {name!r}; choose from {FUNCTIONS}")
