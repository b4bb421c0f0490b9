"""Exact truncated power series in q and the q-Pochhammer products built from them.

Every series carries an explicit truncation order ``N``: coefficients of
``q^0 .. q^N`` are exact Python integers and nothing beyond ``N`` is ever
read or invented.  Internally the heavy loops run on numpy ``object``
arrays so that slice arithmetic stays in C while the entries remain
arbitrary-precision ints.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

import numpy as np

__all__ = [
    "TruncatedSeries",
    "Factor",
    "ProductSpec",
    "NonInvertibleError",
    "SubstitutionError",
    "poch",
    "build_product",
    "mul",
    "invert",
    "pentagonal_theta",
    "bilateral_indices",
    "quintuple_specialization",
    "triple_specialization",
]


class NonInvertibleError(ValueError):
    """A series (or product factor) whose constant term is not +1 or -1."""

    def __init__(self, message: str, factor: "Factor | None" = None):
        super().__init__(message)
        self.factor = factor


class SubstitutionError(ValueError):
    """A specialisation of a bivariate identity that leaves nonnegative exponents."""


def _zeros(order: int) -> np.ndarray:
    arr = np.empty(order + 1, dtype=object)
    arr[:] = 0
    return arr


@dataclass(frozen=True, eq=True)
class TruncatedSeries:
    """Power series ``sum c_n q^n`` known exactly for ``0 <= n <= order``."""

    order: int
    coeffs: tuple

    def __post_init__(self):
        if self.order < 0:
            raise ValueError(f"order must be nonnegative, got {self.order}")
        if len(self.coeffs) != self.order + 1:
            raise ValueError(
                f"expected {self.order + 1} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], order: int | None = None) -> "TruncatedSeries":
        cs = [int(c) for c in coeffs]
        if order is None:
            order = len(cs) - 1
        if len(cs) < order + 1:
            cs.extend([0] * (order + 1 - len(cs)))
        return cls(order, tuple(cs[: order + 1]))

    @classmethod
    def from_terms(cls, terms: Mapping[int, int], order: int) -> "TruncatedSeries":
        """Build from a sparse ``{exponent: coefficient}`` mapping; exponents above order are dropped."""
        cs = [0] * (order + 1)
        for e, c in terms.items():
            if e < 0:
                raise ValueError(f"negative exponent {e}")
            if e <= order:
                cs[e] += int(c)
        return cls(order, tuple(cs))

    @classmethod
    def one(cls, order: int) -> "TruncatedSeries":
        return cls.from_terms({0: 1}, order)

    @classmethod
    def _from_array(cls, arr: np.ndarray) -> "TruncatedSeries":
        return cls(len(arr) - 1, tuple(int(c) for c in arr))

    def _array(self) -> np.ndarray:
        arr = np.empty(self.order + 1, dtype=object)
        arr[:] = self.coeffs
        return arr

    def __getitem__(self, n: int) -> int:
        if n < 0:
            return 0
        if n > self.order:
            raise IndexError(f"coefficient q^{n} lies beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return self.order + 1

    def __iter__(self) -> Iterator[int]:
        return iter(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return TruncatedSeries(order, self.coeffs[: order + 1])

    def nonzero_terms(self) -> list[tuple[int, int]]:
        return [(e, c) for e, c in enumerate(self.coeffs) if c]

    def _align(self, other: "TruncatedSeries") -> tuple["TruncatedSeries", "TruncatedSeries"]:
        n = min(self.order, other.order)
        return self.truncate(n), other.truncate(n)

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b = self._align(other)
        return TruncatedSeries(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        a, b = self._align(other)
        return TruncatedSeries(a.order, tuple(x - y for x, y in zip(a.coeffs, b.coeffs)))

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(-c for c in self.coeffs))

    def scale(self, k: int) -> "TruncatedSeries":
        return TruncatedSeries(self.order, tuple(k * c for c in self.coeffs))

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def dilate(self, m: int, order: int | None = None) -> "TruncatedSeries":
        """Substitute ``q -> q^m``.  The result order defaults to ``m * order``."""
        if m < 1:
            raise ValueError("dilation factor must be positive")
        if order is None:
            order = m * self.order
        if order > m * self.order + m - 1:
            raise ValueError("dilated series would need coefficients beyond the known order")
        cs = [0] * (order + 1)
        for e, c in enumerate(self.coeffs):
            if m * e > order:
                break
            cs[m * e] = c
        return TruncatedSeries(order, tuple(cs))

    def shift(self, k: int) -> "TruncatedSeries":
        """Multiply by ``q^k`` (k >= 0), keeping the order."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        cs = (0,) * min(k, self.order + 1) + self.coeffs[: max(self.order + 1 - k, 0)]
        return TruncatedSeries(self.order, cs)

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:12])
        more = ", ..." if self.order >= 12 else ""
        return f"TruncatedSeries(order={self.order}, [{head}{more}])"


@dataclass(frozen=True)
class Factor:
    """One infinite q-Pochhammer symbol.

    ``sign=-1`` encodes ``(q^a; q^m)_inf`` and ``sign=+1`` encodes
    ``(-q^a; q^m)_inf``.  ``power=-1`` places the factor in the denominator.
    """

    offset: int
    modulus: int
    sign: int = -1
    power: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")
        if self.power not in (1, -1):
            raise ValueError(f"power must be +1 or -1, got {self.power}")
        if self.modulus < 1:
            raise ValueError(f"modulus must be positive, got {self.modulus}")

    def describe(self) -> str:
        a = f"-q^{self.offset}" if self.sign == 1 else f"q^{self.offset}"
        body = f"({a}; q^{self.modulus})_inf"
        return body if self.power == 1 else f"1/{body}"

    def exponents(self, order: int) -> range:
        return range(self.offset, order + 1, self.modulus)


def poch(offset: int, modulus: int, *, negated: bool = False, power: int = 1) -> Factor:
    """``(q^offset; q^modulus)_inf``, or ``(-q^offset; ...)`` when ``negated``."""
    return Factor(offset, modulus, 1 if negated else -1, power)


@dataclass(frozen=True)
class ProductSpec:
    factors: tuple[Factor, ...] = ()

    @classmethod
    def of(cls, numerator: Sequence[Factor] = (), denominator: Sequence[Factor] = ()) -> "ProductSpec":
        den = tuple(Factor(f.offset, f.modulus, f.sign, -f.power) for f in denominator)
        return cls(tuple(numerator) + den)

    def __mul__(self, other: "ProductSpec") -> "ProductSpec":
        return ProductSpec(self.factors + other.factors)

    def inverse(self) -> "ProductSpec":
        return ProductSpec(tuple(Factor(f.offset, f.modulus, f.sign, -f.power) for f in self.factors))

    def describe(self) -> str:
        return " * ".join(f.describe() for f in self.factors) or "1"


def _check_factor(f: Factor) -> None:
    if f.offset >= 1:
        return
    # offset 0 makes the leading factor 1 -/+ 1, i.e. 0 or 2
    if f.power == -1:
        raise NonInvertibleError(f"denominator factor {f.describe()} has constant term 0 or 2", f)
    raise ValueError(f"factor {f.describe()} must have offset >= 1")


def _mul_binomial(c: np.ndarray, e: int, s: int) -> None:
    # c <- c * (1 + s q^e), in place
    n = len(c)
    if e < n:
        c[e:] = c[e:] + s * c[: n - e]


def _div_binomial(c: np.ndarray, e: int, s: int) -> None:
    # c <- c / (1 + s q^e), in place; c[i] -= s c[i-e] ascending, one block of width e at a time
    n = len(c)
    for start in range(e, n, e):
        stop = min(start + e, n)
        c[start:stop] -= s * c[start - e : stop - e]


def build_product(spec: ProductSpec, order: int) -> TruncatedSeries:
    """Expand a product of q-Pochhammer symbols through ``q^order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    for f in spec.factors:
        _check_factor(f)
    c = _zeros(order)
    c[0] = 1
    for f in spec.factors:
        s = 1 if f.sign == 1 else -1  # (-q^a) -> 1 + q^e, (q^a) -> 1 - q^e
        for e in f.exponents(order):
            if f.power == 1:
                _mul_binomial(c, e, s)
            else:
                _div_binomial(c, e, s)
    return TruncatedSeries._from_array(c)


def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy product truncated to ``min(a.order, b.order)``."""
    n = min(a.order, b.order)
    left, right = a.coeffs[: n + 1], b.coeffs[: n + 1]
    if sum(1 for x in left if x) > sum(1 for x in right if x):
        left, right = right, left
    rarr = np.empty(n + 1, dtype=object)
    rarr[:] = right
    out = _zeros(n)
    for i, x in enumerate(left):
        if x:
            out[i:] += x * rarr[: n + 1 - i]
    return TruncatedSeries._from_array(out)


def invert(a: TruncatedSeries) -> TruncatedSeries:
    """Multiplicative inverse of a series with constant term +1 or -1."""
    a0 = a.coeffs[0]
    if a0 not in (1, -1):
        raise NonInvertibleError(f"constant term {a0} is not a unit in Z[[q]]")
    n = a.order
    support = [k for k in range(1, n + 1) if a.coeffs[k]]
    idx = np.array(support, dtype=np.int64)
    vals = np.empty(len(support), dtype=object)
    vals[:] = [a.coeffs[k] for k in support]
    b = _zeros(n)
    b[0] = a0
    cut = 0
    for m in range(1, n + 1):
        while cut < len(support) and support[cut] <= m:
            cut += 1
        if cut:
            acc = np.dot(vals[:cut], b[m - idx[:cut]])
            b[m] = -a0 * acc
    return TruncatedSeries._from_array(b)


def bilateral_indices() -> Iterator[int]:
    """0, 1, -1, 2, -2, ..."""
    yield 0
    k = 1
    while True:
        yield k
        yield -k
        k += 1


def pentagonal_theta(order: int) -> TruncatedSeries:
    """``sum_{n in Z} (-1)^n q^{n(3n-1)/2}`` through ``q^order``."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    cs = [0] * (order + 1)
    for n in bilateral_indices():
        e = n * (3 * n - 1) // 2
        if n > 0 and e > order and (n * (3 * n + 1) // 2) > order:
            break
        if e <= order:
            cs[e] += -1 if n % 2 else 1
    return TruncatedSeries(order, tuple(cs))


def _bilateral_sum(terms, order: int) -> TruncatedSeries:
    """Accumulate ``terms(n) -> [(exponent, coeff), ...]`` over n in Z.

    Stops once every exponent produced for both n and -n exceeds the
    order; callers guarantee the exponents grow with |n| from there on.
    """
    cs = [0] * (order + 1)
    k = 0
    while True:
        ns = (0,) if k == 0 else (k, -k)
        live = False
        for n in ns:
            for e, c in terms(n):
                if e < 0:
                    raise SubstitutionError(f"term n={n} has negative exponent {e}")
                if e <= order:
                    cs[e] += c
                    live = True
        if not live and k > 0:
            break
        k += 1
    return TruncatedSeries(order, tuple(cs))


def quintuple_specialization(s: int, m: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the quintuple product identity at ``q -> q^m``, ``z -> q^s``.

    Sum side: ``sum_n q^{m n(3n+1)/2} (q^{-3ns} - q^{s(3n+1)})``.
    Product side: ``(q^s, q^{m-s}, q^m; q^m)_inf (q^{m+2s}, q^{m-2s}; q^{2m})_inf``.
    Requires ``0 < 2s < m`` so that every factor has a positive offset.
    """
    if s < 1 or 2 * s >= m:
        raise SubstitutionError(
            f"z -> q^{s}, q -> q^{m} needs 0 < 2s < m for nonnegative exponents"
        )

    def terms(n):
        base = m * n * (3 * n + 1) // 2
        return [(base - 3 * n * s, 1), (base + s * (3 * n + 1), -1)]

    sum_side = _bilateral_sum(terms, order)
    spec = ProductSpec(
        (
            poch(s, m),
            poch(m - s, m),
            poch(m, m),
            poch(m + 2 * s, 2 * m),
            poch(m - 2 * s, 2 * m),
        )
    )
    return sum_side, build_product(spec, order)


def triple_specialization(s: int, sign: int, m: int, order: int) -> tuple[TruncatedSeries, TruncatedSeries]:
    """Both sides of the Jacobi triple product at ``q -> q^m``, ``z -> sign * q^s``.

    Sum side: ``sum_n (-sign)^n q^{s n + m n(n-1)/2}``.
    Product side: ``(z, q^m/z, q^m; q^m)_inf``.  Requires ``0 < s < m``.
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if s < 1 or s >= m:
        raise SubstitutionError(f"z -> {'-' if sign < 0 else ''}q^{s}, q -> q^{m} needs 0 < s < m")

    def terms(n):
        c = 1 if (n % 2 == 0 or sign == -1) else -1
        return [(s * n + m * n * (n - 1) // 2, c)]

    sum_side = _bilateral_sum(terms, order)
    negated = sign == -1  # z = -q^s gives (-q^s; q^m)
    spec = ProductSpec(
        (poch(s, m, negated=negated), poch(m - s, m, negated=negated), poch(m, m))
    )
    return sum_side, build_product(spec, order)
