"""Brute-force partition enumeration under declarative constraints.

This is the independent oracle for every table in :mod:`sixregular.kernels`:
it never touches generating functions, only the combinatorial definitions.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator

from . import special


class Partition(tuple):
    """Nonincreasing tuple of positive parts.  ``Partition([1, 3, 3])`` sorts on entry."""

    def __new__(cls, parts=()):
        parts = sorted((int(x) for x in parts), reverse=True)
        if parts and parts[-1] <= 0:
            raise ValueError(f"parts must be positive, got {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def multiplicities(self) -> Counter:
        return Counter(self)

    def is_distinct(self) -> bool:
        return all(a > b for a, b in zip(self, self[1:]))

    def divide_by(self, k: int) -> "Partition":
        if any(x % k for x in self):
            raise ValueError(f"not every part of {tuple(self)} is divisible by {k}")
        return Partition(x // k for x in self)

    def multiply_by(self, k: int) -> "Partition":
        return Partition(k * x for x in self)

    def union(self, other) -> "Partition":
        return Partition(list(self) + list(other))

    def split(self, pred: Callable[[int], bool]) -> tuple["Partition", "Partition"]:
        """(parts satisfying pred, the rest)."""
        return Partition(x for x in self if pred(x)), Partition(x for x in self if not pred(x))

    def remove(self, part: int) -> "Partition":
        parts = list(self)
        parts.remove(part)
        return Partition(parts)

    def add(self, part: int) -> "Partition":
        return Partition(list(self) + [part])

    def __repr__(self) -> str:
        return f"Partition({tuple(self)})"


_PARITIES = (None, "even", "odd")


@dataclass(frozen=True)
class PartitionConstraint:
    """Which partitions count.

    Residue sets hold ``(residue, modulus)`` pairs.  ``distinct`` caps every
    multiplicity at one except for parts matching ``repeatable_residues``.
    """

    forbidden_residues: frozenset = frozenset()
    allowed_residues: frozenset | None = None
    distinct: bool = False
    max_multiplicity: int | None = None
    repeatable_residues: frozenset = frozenset()
    length_parity: str | None = None
    even_part_count_parity: str | None = None

    def __post_init__(self):
        if self.forbidden_residues and self.allowed_residues is not None:
            raise ValueError("give either forbidden_residues or allowed_residues, not both")
        for r, m in set(self.forbidden_residues) | set(self.allowed_residues or ()) | set(self.repeatable_residues):
            if m < 1:
                raise ValueError(f"modulus must be >= 1 in ({r}, {m})")
        if self.length_parity not in _PARITIES or self.even_part_count_parity not in _PARITIES:
            raise ValueError("parity filters must be 'even', 'odd' or None")
        if self.max_multiplicity is not None and self.max_multiplicity < 1:
            raise ValueError("max_multiplicity must be >= 1")

    def allows_part(self, v: int) -> bool:
        if any(v % m == r % m for r, m in self.forbidden_residues):
            return False
        if self.allowed_residues is not None:
            return any(v % m == r % m for r, m in self.allowed_residues)
        return True

    def max_mult(self, v: int) -> int | None:
        """Largest multiplicity allowed for part v; None means unbounded."""
        if self.distinct and not any(v % m == r % m for r, m in self.repeatable_residues):
            return 1
        return self.max_multiplicity

    def accepts(self, lam) -> bool:
        lam = Partition(lam)
        for v, mult in lam.multiplicities().items():
            if not self.allows_part(v):
                return False
            cap = self.max_mult(v)
            if cap is not None and mult > cap:
                return False
        if self.length_parity and (len(lam) % 2 == 1) != (self.length_parity == "odd"):
            return False
        if self.even_part_count_parity:
            evens = sum(1 for x in lam if x % 2 == 0)
            if (evens % 2 == 1) != (self.even_part_count_parity == "odd"):
                return False
        return True


def _residues(m: int, rs) -> frozenset:
    return frozenset((r, m) for r in rs)


NAMED = {
    "p": PartitionConstraint(),
    "b6": PartitionConstraint(forbidden_residues=_residues(6, [0])),
    "b6e": PartitionConstraint(forbidden_residues=_residues(6, [0]), length_parity="even"),
    "b6o": PartitionConstraint(forbidden_residues=_residues(6, [0]), length_parity="odd"),
    "b6ee": PartitionConstraint(forbidden_residues=_residues(6, [0]), even_part_count_parity="even"),
    "b6eo": PartitionConstraint(forbidden_residues=_residues(6, [0]), even_part_count_parity="odd"),
    "b3": PartitionConstraint(forbidden_residues=_residues(3, [0])),
    "q2": PartitionConstraint(forbidden_residues=_residues(6, [2, 4]), distinct=True),
    "q2prime": PartitionConstraint(
        allowed_residues=_residues(6, [1, 3, 5]), distinct=True, repeatable_residues=_residues(6, [3])
    ),
    "c": PartitionConstraint(forbidden_residues=_residues(48, [0, 2, 46, 20, 28, 22, 26, 24])),
    "d": PartitionConstraint(forbidden_residues=_residues(48, [0, 4, 44, 10, 38, 14, 34, 24])),
    "q61": PartitionConstraint(allowed_residues=_residues(6, [1, 5]), distinct=True),
    "mult6": PartitionConstraint(allowed_residues=_residues(6, [0])),
    "distinct": PartitionConstraint(distinct=True),
    "odd": PartitionConstraint(allowed_residues=_residues(2, [1])),
    "lt6": PartitionConstraint(max_multiplicity=5),
}


def named_constraint(name: str) -> PartitionConstraint:
    try:
        return NAMED[name]
    except KeyError:
        raise ValueError(f"unknown constraint {name!r}; choose from {sorted(NAMED)}") from None


def enumerate_partitions(n: int, c: PartitionConstraint = NAMED["p"]) -> list[Partition]:
    """All partitions of n satisfying c, in lexicographically decreasing order."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out: list[Partition] = []
    parts: list[int] = []

    def rec(rem: int, top: int, run: int):
        # top: last part placed (upper bound for the next), run: its current multiplicity
        if rem == 0:
            lam = Partition(parts)
            if c.accepts(lam):
                out.append(lam)
            return
        for v in range(min(rem, top), 0, -1):
            if not c.allows_part(v):
                continue
            mult = run + 1 if v == top else 1
            cap = c.max_mult(v)
            if cap is not None and mult > cap:
                continue
            parts.append(v)
            rec(rem - v, v, mult)
            parts.pop()

    rec(n, n, 0)
    return out


def iter_partitions(n: int) -> Iterator[Partition]:
    """Every partition of n, lexicographically decreasing (no constraint, no list)."""

    def rec(rem: int, top: int, acc: tuple):
        if rem == 0:
            yield Partition(acc)
            return
        for v in range(min(rem, top), 0, -1):
            yield from rec(rem - v, v, acc + (v,))

    yield from rec(n, n, ())


def count(n: int, c: PartitionConstraint = NAMED["p"]) -> int:
    """|enumerate_partitions(n, c)| by memoised recursion over part sizes."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    want_len = {None: None, "even": 0, "odd": 1}[c.length_parity]
    want_even = {None: None, "even": 0, "odd": 1}[c.even_part_count_parity]

    @lru_cache(maxsize=None)
    def rec(rem: int, v: int, lp: int, ep: int) -> int:
        if rem == 0:
            ok = (want_len is None or lp == want_len) and (want_even is None or ep == want_even)
            return 1 if ok else 0
        if v == 0:
            return 0
        total = rec(rem, v - 1, lp, ep)
        if c.allows_part(v):
            cap = c.max_mult(v)
            mult = 1
            while mult * v <= rem and (cap is None or mult <= cap):
                flip = mult & 1
                total += rec(rem - mult * v, v - 1, lp ^ flip, ep ^ (flip if v % 2 == 0 else 0))
                mult += 1
        return total

    result = rec(n, n, 0, 0)
    rec.cache_clear()
    return result


def is_mk(lam, k: int) -> bool:
    """k is the least missing positive part and parts > k outnumber parts < k."""
    present = set(lam)
    if k in present or any(i not in present for i in range(1, k)):
        return False
    above = sum(1 for x in lam if x > k)
    below = sum(1 for x in lam if x < k)
    return above > below


def is_pk(lam, k: int) -> bool:
    """Every part <= k appears, and the smallest part > k appears at least k + 1 times."""
    present = set(lam)
    if any(i not in present for i in range(1, k + 1)):
        return False
    bigger = [x for x in lam if x > k]
    if not bigger:
        return False
    first = min(bigger)
    return bigger.count(first) >= k + 1


@lru_cache(maxsize=64)
def all_partitions(n: int) -> tuple[Partition, ...]:
    """Cached tuple of every partition of n; meant for desk-scale n only."""
    return tuple(iter_partitions(n))


def count_mk(k: int, n: int) -> int:
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    return sum(1 for lam in all_partitions(n) if is_mk(lam, k))


def count_pk(k: int, n: int) -> int:
    if k < 1 or n < 0:
        raise ValueError("need k >= 1, n >= 0")
    return sum(1 for lam in all_partitions(n) if is_pk(lam, k))


def list_mk(k: int, n: int) -> list[Partition]:
    return [lam for lam in all_partitions(n) if is_mk(lam, k)]


def list_pk(k: int, n: int) -> list[Partition]:
    return [lam for lam in all_partitions(n) if is_pk(lam, k)]


def cardinality_q61_w61(n: int) -> tuple[int, int]:
    """(|Q_{6,1}(n)|, |W_{6,1}(n)|).

    Q_{6,1}: distinct parts congruent to +-1 mod 6.  W_{6,1}: pairs
    (mu, k(3k-2)) with mu having all parts divisible by 6 and
    |mu| + k(3k-2) = n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    q = count(n, NAMED["q61"])
    w = sum(count(n - v, NAMED["mult6"]) for _, v in special.terms("octagonal", n))
    return q, w
