"""Figurate numbers that index the sums, and the small sign/weight functions."""

from __future__ import annotations

from math import isqrt
from typing import Iterator

# kind -> (A, B, D) with value(j) = (A j^2 + B j) / D, and whether j runs over Z
KINDS = {
    "pentagonal": (3, -1, 2, True),
    "expanded-pentagonal": (9, -3, 1, True),
    "scaled-pentagonal": (9, -3, 2, True),
    "triangular": (1, 1, 2, False),
    "doubled-triangular": (1, 1, 1, False),
    "octagonal": (3, -2, 1, True),
}


def value(kind: str, j: int) -> int:
    a, b, d, _ = KINDS[kind]
    return (a * j * j + b * j) // d


def terms(kind: str, limit: int) -> Iterator[tuple[int, int]]:
    """Yield ``(j, value(j))`` with ``0 <= value(j) <= limit``.

    Bilateral kinds walk j = 0, 1, -1, 2, -2, ...; the others j = 0, 1, 2, ...
    """
    bilateral = KINDS[kind][3]
    j = 0
    while True:
        js = (j,) if (j == 0 or not bilateral) else (j, -j)
        hit = False
        for i in js:
            v = value(kind, i)
            if v <= limit:
                hit = True
                yield i, v
        if not hit:
            return
        j += 1


def index_of(kind: str, n: int) -> int | None:
    """The j with value(kind, j) == n, or None.  Values are injective on the index range."""
    if n < 0:
        return None
    a, b, d, bilateral = KINDS[kind]
    disc = b * b + 4 * a * d * n
    r = isqrt(disc)
    if r * r != disc:
        return None
    for num in (-b + r, -b - r):
        if num % (2 * a) == 0:
            j = num // (2 * a)
            if (bilateral or j >= 0) and value(kind, j) == n:
                return j
    return None


def rho(k: int) -> int:
    """-2 if k = 1 (mod 3), else 1."""
    return -2 if k % 3 == 1 else 1


def alpha_n(n: int) -> int:
    """(-1)^m if n = 3m(3m-1), else 0."""
    m = index_of("expanded-pentagonal", n)
    return 0 if m is None else (-1) ** (m % 2)


def beta_n(n: int) -> int:
    """(-1)^m if n = m(3m-2), else 0."""
    m = index_of("octagonal", n)
    return 0 if m is None else (-1) ** (m % 2)


def gamma_n(n: int) -> int:
    """rho(m) if n = m(m+1) with m >= 0, else 0."""
    m = index_of("doubled-triangular", n)
    return 0 if m is None else rho(m)


def is_octagonal(n: int) -> bool:
    return index_of("octagonal", n) is not None


def sign(j: int) -> int:
    return -1 if j % 2 else 1
