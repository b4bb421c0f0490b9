"""Executable versions of the combinatorial maps behind the identities.

Glaisher, Franklin, the length-parity involution ``phi`` on B'_6(n),
the bijection ``psi`` from Q'_2(n) onto Q_2(n), and a census that
materialises the pair/triple sets used in the combinatorial proof of the
octagonal recurrence for Q_2 and checks every map on them.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field

from . import special
from .enumerator import NAMED, Partition, count, enumerate_partitions


class PreconditionError(ValueError):
    """A map was applied outside its domain."""


# --- Glaisher ---------------------------------------------------------------

def glaisher(lam) -> Partition:
    """Odd parts -> distinct parts, merging equal pairs until none remain."""
    lam = Partition(lam)
    if any(x % 2 == 0 for x in lam):
        raise PreconditionError(f"glaisher needs odd parts, got {tuple(lam)}")
    mult = Counter(lam)
    out = []
    while mult:
        v = min(mult)
        m = mult.pop(v)
        if m % 2:
            out.append(v)
        if m >= 2:
            mult[2 * v] += m // 2
    return Partition(out)


def glaisher_inverse(lam) -> Partition:
    """Distinct parts -> odd parts, halving even parts until all are odd."""
    lam = Partition(lam)
    if not lam.is_distinct():
        raise PreconditionError(f"glaisher_inverse needs distinct parts, got {tuple(lam)}")
    out = []
    for x in lam:
        copies = 1
        while x % 2 == 0:
            x //= 2
            copies *= 2
        out.extend([x] * copies)
    return Partition(out)


# --- Franklin ---------------------------------------------------------------

def is_pentagonal_partition(lam) -> bool:
    """Empty, (2i, 2i-1, ..., i+1) or (2i-1, 2i-2, ..., i)."""
    lam = tuple(lam)
    if not lam:
        return True
    i = len(lam)
    consecutive = all(a - b == 1 for a, b in zip(lam, lam[1:]))
    return consecutive and lam[-1] in (i, i + 1)


def franklin(lam) -> Partition:
    """Franklin's involution on partitions into distinct parts.

    Returns the input unchanged exactly on the pentagonal partitions;
    every other partition is sent to one of the same weight whose length
    differs by one.
    """
    lam = Partition(lam)
    if not lam.is_distinct():
        raise PreconditionError(f"franklin needs distinct parts, got {tuple(lam)}")
    if not lam:
        return lam
    r = len(lam)
    s = lam[-1]
    d = 1
    while d < r and lam[d - 1] - lam[d] == 1:
        d += 1
    if s <= d:
        if d == r and s == d:
            return lam
        # drop the smallest part, spread it over the s largest parts
        parts = list(lam[:-1])
        for i in range(s):
            parts[i] += 1
        return Partition(parts)
    if d == r and s == d + 1:
        return lam
    # peel one cell off each of the d largest parts into a new smallest part
    parts = list(lam)
    for i in range(d):
        parts[i] -= 1
    parts.append(d)
    return Partition(parts)


# --- phi on B'_6(n) ---------------------------------------------------------

def in_b6_prime(lam) -> bool:
    """6-regular with an even part or a repeated part not congruent to 3 mod 6."""
    lam = Partition(lam)
    if any(x % 6 == 0 for x in lam):
        return False
    mult = lam.multiplicities()
    return any(x % 2 == 0 for x in lam) or any(m > 1 and v % 6 != 3 for v, m in mult.items())


def phi(lam) -> Partition:
    """Length-parity-reversing involution on B'_6(n).

    r is the largest repeated part not congruent to 3 mod 6, e the
    largest even part (0 when absent).  If 2r > e two copies of r merge
    into 2r, otherwise one e splits into two copies of e/2.
    """
    lam = Partition(lam)
    if not in_b6_prime(lam):
        raise PreconditionError(f"{tuple(lam)} is not in B'_6")
    mult = lam.multiplicities()
    r = max((v for v, m in mult.items() if m > 1 and v % 6 != 3), default=0)
    e = max((v for v in mult if v % 2 == 0), default=0)
    assert r or e
    if 2 * r > e:
        return lam.remove(r).remove(r).add(2 * r)
    return lam.remove(e).add(e // 2).add(e // 2)


# --- psi : Q'_2(n) -> Q_2(n) -------------------------------------------------

def in_q2(lam) -> bool:
    return NAMED["q2"].accepts(lam)


def in_q2_prime(lam) -> bool:
    return NAMED["q2prime"].accepts(lam)


def psi_split(lam) -> tuple[Partition, Partition]:
    """(alpha, beta): one copy of every odd-multiplicity part, and the even remainder."""
    mult = Partition(lam).multiplicities()
    alpha = [v for v, m in mult.items() if m % 2]
    beta = []
    for v, m in mult.items():
        beta.extend([v] * (m - m % 2))
    return Partition(alpha), Partition(beta)


def psi(lam) -> Partition:
    """alpha U 3 * glaisher(beta / 3)."""
    lam = Partition(lam)
    if not in_q2_prime(lam):
        raise PreconditionError(f"{tuple(lam)} is not in Q'_2")
    alpha, beta = psi_split(lam)
    if any(m % 2 for m in beta.multiplicities().values()):
        raise PreconditionError(f"beta {tuple(beta)} has a part of odd multiplicity")
    return alpha.union(glaisher(beta.divide_by(3)).multiply_by(3))


def psi_inverse(lam) -> Partition:
    lam = Partition(lam)
    if not in_q2(lam):
        raise PreconditionError(f"{tuple(lam)} is not in Q_2")
    sixes, alpha = lam.split(lambda x: x % 6 == 0)
    return alpha.union(glaisher_inverse(sixes.divide_by(3)).multiply_by(3))


# --- census of the pair/triple sets -------------------------------------------

@dataclass
class CensusReport:
    """Outcome of :func:`three_split_involution_census` for one n."""

    n: int
    signed_count: int
    expected: int
    checks: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        ok = self.signed_count == self.expected and all(self.checks.values())
        return "pass" if ok else "fail"

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "status": self.status,
            "signed_count": self.signed_count,
            "expected": self.expected,
            "checks": dict(self.checks),
            "notes": list(self.notes),
            "elapsed": self.elapsed,
        }


def _check_involution(domain, f, parity) -> bool:
    """f maps domain into itself, f(f(x)) == x, and parity(f(x)) != parity(x)."""
    dom = set(domain)
    for x in dom:
        y = f(x)
        if y not in dom or f(y) != x or parity(y) % 2 == parity(x) % 2:
            return False
    return True


def _divisible_by_3(lam) -> Partition:
    return Partition(x for x in lam if x % 3 == 0)


def _transfer(pair):
    """Swap or first-difference transfer between lambda^{3|} and mu.

    Parities of l(lambda^{3|}) and l(mu) differ: swap the two.
    Parities agree (and the two differ): move the larger of the first
    differing parts across.
    """
    lam, mu = pair
    three, rest = lam.split(lambda x: x % 3 == 0)
    if len(three) % 2 != len(mu) % 2:
        return rest.union(mu), three
    a, b = list(three), list(mu)
    width = max(len(a), len(b))
    a += [0] * (width - len(a))
    b += [0] * (width - len(b))
    i = next(i for i in range(width) if a[i] != b[i])
    if a[i] > b[i]:
        return rest.union(three.remove(a[i])), mu.add(a[i])
    return rest.union(three.add(b[i])), mu.remove(b[i])


def _zeta(triple):
    gamma, octa, beta = triple
    g1 = gamma[0] if gamma else 0
    b1 = beta[0] if beta else 0
    if g1 > b1:
        return gamma.remove(g1), octa, beta.add(g1)
    return gamma.add(b1), octa, beta.remove(b1)


def three_split_involution_census(n: int) -> CensusReport:
    """Materialise A(n), B(n), C(n) and check each sign-reversing map on them.

    A(n): pairs (lambda, mu), lambda in Q_2, mu = 3 eta with eta distinct.
    B(n): pairs (alpha, beta), alpha in Q_{6,1}, beta = 6 gamma with gamma distinct.
    C(n): triples (gamma, k(3k-2), beta), gamma with parts divisible by 6,
    beta = 6 * distinct.  All signs are (-1)^{length of the second/last
    partition}.  The surviving signed count must be 1 when n is a
    generalised octagonal number and 0 otherwise.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    t0 = time.perf_counter()
    sgn = lambda k: -1 if k % 2 else 1
    expected = 1 if special.is_octagonal(n) else 0
    report = CensusReport(n, 0, expected)

    q2 = {w: enumerate_partitions(w, NAMED["q2"]) for w in range(n + 1)}
    distinct = {w: enumerate_partitions(w, NAMED["distinct"]) for w in range(n // 3 + 1)}
    A = [
        (lam, eta.multiply_by(3))
        for m in range(n // 3 + 1)
        for eta in distinct[m]
        for lam in q2[n - 3 * m]
    ]
    signed_a = sum(sgn(len(mu)) for _, mu in A)

    # Franklin on mu/3 away from the pentagonal pairs
    ea = [x for x in A if is_pentagonal_partition(x[1].divide_by(3))]
    non_ea = [x for x in A if not is_pentagonal_partition(x[1].divide_by(3))]
    lift = lambda x: (x[0], franklin(x[1].divide_by(3)).multiply_by(3))
    report.checks["franklin_lift_involution"] = _check_involution(non_ea, lift, lambda x: len(x[1]))
    signed_ea = sum(sgn(len(mu)) for _, mu in ea)
    pent_sum = sum(
        special.sign(j) * len(q2[n - v]) for j, v in special.terms("scaled-pentagonal", n)
    )
    report.checks["pentagonal_pairs_match_q2_sum"] = signed_ea == pent_sum == signed_a

    # swap / transfer on pairs with lambda^{3|} != mu
    moving = [x for x in A if _divisible_by_3(x[0]) != x[1]]
    fixed = [x for x in A if _divisible_by_3(x[0]) == x[1]]
    report.checks["transfer_involution"] = _check_involution(moving, _transfer, lambda x: len(x[1]))
    report.notes.append(
        "second transfer branch applied under the complementary parity guard "
        "l(lambda^{3|}) = l(mu) (mod 2)"
    )
    signed_fixed = sum(sgn(len(mu)) for _, mu in fixed)

    # (lambda, lambda^{3|}) -> (lambda^{3 not |}, 2 lambda^{3|}) onto B(n)
    image = {(lam.split(lambda x: x % 3 == 0)[1], mu.multiply_by(2)) for lam, mu in fixed}
    B = {
        (alpha, gam.multiply_by(6))
        for m in range(n // 6 + 1)
        for gam in enumerate_partitions(m, NAMED["distinct"])
        for alpha in enumerate_partitions(n - 6 * m, NAMED["q61"])
    }
    report.checks["fixed_pairs_biject_onto_B"] = len(image) == len(fixed) and image == B
    signed_b = sum(sgn(len(beta)) for _, beta in B)

    # B(n) -> C(n) through |Q_{6,1}(w)| = |W_{6,1}(w)| weight by weight
    C = [
        (gamma, v, beta)
        for m in range(n // 6 + 1)
        for beta in (g.multiply_by(6) for g in enumerate_partitions(m, NAMED["distinct"]))
        for _, v in special.terms("octagonal", n - 6 * m)
        for gamma in enumerate_partitions(n - 6 * m - v, NAMED["mult6"])
    ]
    signed_c = sum(sgn(len(beta)) for _, _, beta in C)
    same_weights = all(
        count(w, NAMED["q61"]) == sum(count(w - v, NAMED["mult6"]) for _, v in special.terms("octagonal", w))
        for w in range(n + 1)
    )
    report.checks["B_C_signed_counts_agree"] = same_weights and signed_b == signed_c == signed_fixed

    # zeta away from (empty, k(3k-2), empty)
    movable = [t for t in C if t[0] or t[2]]
    report.checks["zeta_involution"] = _check_involution(movable, _zeta, lambda t: len(t[2]))
    survivors = [t for t in C if not t[0] and not t[2]]
    report.signed_count = sum(sgn(len(beta)) for _, _, beta in survivors)
    report.checks["survivors_equal_total"] = report.signed_count == signed_a
    report.elapsed = time.perf_counter() - t0
    return report


def orbit_table(name: str, n: int) -> list[tuple[Partition, Partition]]:
    """(x, f(x)) for every x in the natural domain of map ``name`` at weight n."""
    if name == "glaisher":
        dom, f = enumerate_partitions(n, NAMED["odd"]), glaisher
    elif name == "franklin":
        dom, f = enumerate_partitions(n, NAMED["distinct"]), franklin
    elif name == "phi":
        dom, f = [x for x in enumerate_partitions(n, NAMED["b6"]) if in_b6_prime(x)], phi
    elif name == "psi":
        dom, f = enumerate_partitions(n, NAMED["q2prime"]), psi
    else:
        raise ValueError(f"unknown map {name!r}; choose from glaisher, franklin, phi, psi")
    return [(x, f(x)) for x in dom]
