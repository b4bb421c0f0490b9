"""Mod-3 congruence families for b_6 (and the b_3 analogue), checked on finite tables.

A "pass" here means every progression member that fits inside the table
was checked; it is never a proof.  Reports say how much was covered.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from math import isqrt, prod

import numpy as np

from . import special
from .kernels import regular_residues
from .series import ProductSpec, build_product, poch

COVERED_P24 = (7, 11, 13, 17, 19, 23)
HOU_CLASSES_24 = (13, 17, 19, 23)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; the witness set is exact below 3.3e24."""
    if n < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
    for q in small:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in small:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _check_prime(p: int) -> None:
    if p < 5 or not is_prime(p):
        raise ValueError(f"{p} is not a prime >= 5")


def alpha_p(p: int) -> int:
    """5(p^2 - 1)/24 mod p, checked against the two equivalent forms."""
    _check_prime(p)
    a = 5 * (p * p - 1) // 24 % p
    b = (5 * p * p // 24) % p
    c = -5 * pow(24, -1, p) % p
    if not a == b == c:
        raise ArithmeticError(f"alpha_p forms disagree at p={p}: {a}, {b}, {c}")
    return a


@dataclass(frozen=True)
class PrimeFamilySpec:
    """Primes p_1..p_{a+1} (the last one governs validity), the shift j, and the target function."""

    primes: tuple
    j: int
    target: str = "b6"
    exploratory: bool = False

    def __post_init__(self):
        if not self.primes:
            raise ValueError("need at least one prime")
        for p in self.primes:
            _check_prime(p)
        if self.target not in ("b6", "b3"):
            raise ValueError(f"target must be b6 or b3, got {self.target!r}")
        if self.j % self.primes[-1] == 0:
            raise ValueError(f"j={self.j} is divisible by the last prime {self.primes[-1]}")
        if not self.valid and not self.exploratory:
            raise ValueError(
                f"no theorem covers primes {self.primes} for {self.target}; "
                "use exploratory=True to scan anyway"
            )

    @property
    def theorem(self) -> str | None:
        """Which result claims the family: last prime 3 mod 4, or Hou's classes mod 24 (b6 only)."""
        if self.primes[-1] % 4 == 3:
            return "last-prime-3-mod-4"
        if self.target == "b6" and all(p % 24 in HOU_CLASSES_24 for p in self.primes):
            return "hou-13-17-19-23-mod-24"
        return None

    @property
    def valid(self) -> bool:
        return self.theorem is not None

    @property
    def alpha(self) -> int:
        return len(self.primes) - 1

    @property
    def slope(self) -> int:
        return prod(p * p for p in self.primes)

    def as_dict(self) -> dict:
        return {
            "primes": list(self.primes),
            "j": self.j,
            "target": self.target,
            "theorem": self.theorem,
            "exploratory": self.exploratory,
        }


def _offset(spec: PrimeFamilySpec) -> int:
    head = prod(p * p for p in spec.primes[:-1])
    last = spec.primes[-1]
    if spec.target == "b6":
        num, den = head * last * (24 * spec.j + 5 * last) - 5, 24
    else:
        num, den = head * last * (12 * spec.j + last) - 1, 12
    if num % den:
        raise ArithmeticError(f"numerator {num} not divisible by {den} for {spec}")
    return num // den


def m_n(spec: PrimeFamilySpec, n: int) -> int:
    """n-th member of the progression, p_1^2 ... p_{a+1}^2 n + offset."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return spec.slope * n + _offset(spec)


@dataclass
class CongruenceReport:
    theorem: str
    spec: dict
    table_limit: int
    checked: int = 0
    violations: list = field(default_factory=list)
    coverage_note: str = ""
    claim: bool = True
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        if not self.claim:
            return "report-only"
        return "pass" if not self.violations and self.checked else "fail"

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "theorem": self.theorem,
            "spec": self.spec,
            "table_limit": self.table_limit,
            "checked": self.checked,
            "violations": [[str(x) for x in v] for v in self.violations],
            "coverage_note": self.coverage_note,
            "status": self.status,
        }


@lru_cache(maxsize=4)
def residue_table(target: str, limit: int) -> np.ndarray:
    """b_6 or b_3 mod 3 on 0..limit."""
    ell = 6 if target == "b6" else 3
    return regular_residues(ell, limit, 3)


def verify_family(spec: PrimeFamilySpec, table_limit: int) -> CongruenceReport:
    """b(m_n) = 0 mod 3 for every m_n <= table_limit."""
    t0 = time.perf_counter()
    first = m_n(spec, 0)
    if first > table_limit:
        raise ValueError(f"m_0 = {first} exceeds the table limit {table_limit}; nothing to check")
    table = residue_table(spec.target, table_limit)
    args = np.arange(first, table_limit + 1, spec.slope)
    bad = args[table[args] != 0]
    theorem = "b6-family" if spec.target == "b6" else "b3-family"
    report = CongruenceReport(
        theorem,
        spec.as_dict(),
        table_limit,
        checked=len(args),
        violations=[(int(m), int(table[m])) for m in bad],
        claim=spec.valid,
    )
    report.coverage_note = (
        f"m_n for n = 0..{len(args) - 1} (m_n <= {table_limit}); the family is infinite"
    )
    if not spec.valid:
        report.coverage_note += "; no theorem covers these primes, report only"
    report.elapsed = time.perf_counter() - t0
    return report


def verify_corollary_p24(p: int, table_limit: int) -> CongruenceReport:
    """b_6(p^2 n + p j + alpha_p) = 0 mod 3 for j in 0..p-1, j != floor(5p/24)."""
    _check_prime(p)
    if p % 24 not in COVERED_P24:
        raise ValueError(f"p = {p} is {p % 24} mod 24, outside 7, 11, 13, 17, 19, 23")
    t0 = time.perf_counter()
    a = alpha_p(p)
    skip = 5 * p // 24
    table = residue_table("b6", table_limit)
    report = CongruenceReport("b6-corollary-p24", {"p": p, "alpha_p": a, "excluded_j": skip}, table_limit)
    for j in range(p):
        if j == skip:
            continue
        start = p * j + a
        if start > table_limit:
            continue
        args = np.arange(start, table_limit + 1, p * p)
        report.checked += len(args)
        report.violations.extend((int(m), int(table[m])) for m in args[table[args] != 0])
    report.coverage_note = f"all arguments p^2 n + p j + alpha_p <= {table_limit}"
    report.elapsed = time.perf_counter() - t0
    return report


def _square_root(n: int) -> int | None:
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def two_squares_representations(m: int) -> list[tuple[int, int]]:
    """All (a, b) with a = 1, b = 1 (mod 6) and a^2 + (2b)^2 = 24m + 5."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    target = 24 * m + 5
    reps = []
    bmax = isqrt(target // 4)
    for babs in range(bmax + 1):
        r = _square_root(target - 4 * babs * babs)
        if r is None:
            continue
        for b in {babs, -babs}:
            if b % 6 != 1:
                continue
            for a in {r, -r}:
                if a % 6 == 1:
                    reps.append((a, b))
    return sorted(reps)


def two_squares_witness(m: int) -> tuple[int, int] | None:
    """Some (a, b), a = b = 1 (mod 6), with a^2 + (2b)^2 = 24m + 5; None when there is none."""
    reps = two_squares_representations(m)
    return reps[0] if reps else None


def two_squares_coefficient(m: int) -> int:
    """Coefficient of q^m in (q;q)(q^4;q^4), summed over the representations.

    a = 6i + 1, b = 6j + 1 corresponds to the exponent i(3i+1)/2 + 4 j(3j+1)/2
    with sign (-1)^(i+j).
    """
    total = 0
    for a, b in two_squares_representations(m):
        i, j = (a - 1) // 6, (b - 1) // 6
        total += special.sign(i + j)
    return total


def theta_product(limit: int):
    """(q;q)_inf (q^4;q^4)_inf through q^limit."""
    return build_product(ProductSpec((poch(1, 1), poch(4, 4))), limit)


def two_squares_agreement(limit: int, b6_values) -> dict:
    """Cross-check b_6 mod 3 against the two-squares route for 0..limit.

    Checks, for every n: the representation count equals the series
    coefficient; no representation forces a zero coefficient; and
    b_6(n) = (-1)^n coeff (mod 3).
    """
    series = theta_product(limit)
    mismatches = []
    for n in range(limit + 1):
        coeff = series[n]
        reps_coeff = two_squares_coefficient(n)
        witness = two_squares_witness(n)
        ok = reps_coeff == coeff and (witness is not None or coeff == 0)
        ok = ok and (b6_values[n] - special.sign(n) * coeff) % 3 == 0
        if not ok:
            mismatches.append(n)
    return {"limit": limit, "mismatches": mismatches, "status": "pass" if not mismatches else "fail"}
