"""Sign scans and sharpness measurements for the truncated-sum inequalities.

Every id below names a quantity v(n) that is conjectured (or, for cor81 and
c8-1-2, proved) to be >= 0.  A scan evaluates v on 0..limit, reports the
first negative value if any, and measures where v first becomes nonzero.
Nothing here asserts a conjecture: a negative value is reported, not raised.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable

from . import special
from .kernels import _convolve_sparse
from .special import rho, sign
from .suites import TableSet


def _trunc(lo: int, hi: int, scale_num: int = 1, scale_den: int = 2) -> list[tuple[int, int]]:
    """[(offset, (-1)^j)] for j = lo..hi, offset = scale_num * j(3j-1) / scale_den."""
    return [(scale_num * j * (3 * j - 1) // scale_den, sign(j)) for j in range(lo, hi + 1)]


def _rho_kernel(K: int, divide: bool) -> list[tuple[int, int]]:
    """[(j(j+1) or j(j+1)/2, rho_j)] for j = 0..K."""
    return [(j * (j + 1) // (2 if divide else 1), rho(j)) for j in range(K + 1)]


def _bilateral_kernel(kind: str, limit: int) -> list[tuple[int, int]]:
    return [(v, sign(j)) for j, v in special.terms(kind, limit)]


def _seq(fn: Callable[[int], int], limit: int) -> list[int]:
    return [fn(n) for n in range(limit + 1)]


def _scaled(sgn: int, a, b=None) -> list[int]:
    """sgn * (a - b), elementwise."""
    if b is None:
        return [sgn * x for x in a]
    return [sgn * (x - y) for x, y in zip(a, b)]


def _cor81(T, k, branch, N):
    conv = _convolve_sparse(T.p.values, _trunc(-(k - 1), k, 6, 2), N)
    return _scaled(sign(k), T.b6.values[: N + 1], conv)


def _c812(T, k, branch, N):
    upper = _cor81(T, 1, None, N)  # p(n) - p(n-6) - b6(n)
    lower = _cor81(T, 2, None, N)  # b6(n) - (p(n) - p(n-6) - p(n-12) + p(n-30))
    return [min(u, w) for u, w in zip(upper, lower)]


def _conj_q2_p(T, k, branch, N):
    K = 3 * k if branch == "i" else 3 * k + 1
    s = _convolve_sparse(T.p.values, _rho_kernel(K, False), N)
    q2 = T.q2.values[: N + 1]
    return _scaled(1, s, q2) if branch == "i" else _scaled(1, q2, s)


def _cj2(T, k, branch, N):
    s = _convolve_sparse(T.b6.values, _trunc(-(k - 1), k), N)
    return _scaled(sign(k), _seq(special.alpha_n, N), s)


def _cj2a(T, k, branch, N):
    s = _convolve_sparse(T.b6.values, _trunc(-k, k), N)
    return _scaled(sign(k - 1), _seq(special.alpha_n, N), s)


def _ineq12(T, k, branch, N):
    return _convolve_sparse(T.mk(k).values, _bilateral_kernel("expanded-pentagonal", N), N)


def _ineq12a(T, k, branch, N):
    return _convolve_sparse(T.pk(k).values, _bilateral_kernel("expanded-pentagonal", N), N)


def _conj_b6_rho(T, k, branch, N):
    K = 3 * k if branch == "i" else 3 * k + 2
    s = _convolve_sparse(T.b6.values, _rho_kernel(K, True), N)
    beta = _seq(special.beta_n, N)
    return _scaled(1, s, beta) if branch == "i" else _scaled(1, beta, s)


def _cj5(T, k, branch, N):
    s = _convolve_sparse(T.q2.values, _trunc(-(k - 1), k), N)
    return _scaled(sign(k), _seq(special.gamma_n, N), s)


def _cj5a(T, k, branch, N):
    s = _convolve_sparse(T.q2.values, _trunc(-k, k), N)
    return _scaled(sign(k - 1), _seq(special.gamma_n, N), s)


def _ineq13(T, k, branch, N):
    return _convolve_sparse(T.mk(k).values, _rho_kernel(N, False), N)


def _ineq13a(T, k, branch, N):
    return _convolve_sparse(T.pk(k).values, _rho_kernel(N, False), N)


@dataclass(frozen=True)
class Conjecture:
    id: str
    description: str
    evaluate: Callable
    k_min: int = 1
    branches: tuple = (None,)
    claimed: Callable | None = None  # (k, branch) -> threshold
    asserted: bool = False  # whether a threshold mismatch counts against acceptance
    fixed_k: bool = False


CONJECTURES = {
    c.id: c
    for c in (
        Conjecture("cor81", "(-1)^k (b6(n) - sum_{j=-(k-1)}^{k} (-1)^j p(n-3j(3j-1))) >= 0",
                   _cor81, claimed=lambda k, b: 3 * k * (3 * k + 1), asserted=True),
        Conjecture("c8-1-2", "p(n)-p(n-6)-p(n-12)+p(n-30) <= b6(n) <= p(n)-p(n-6); value = smaller slack",
                   _c812, claimed=lambda k, b: 42, asserted=True, fixed_k=True),
        Conjecture("conj-q2-p", "(i) sum_{j<=3k} rho_j p(n-j(j+1)) - Q2(n) >= 0; (ii) Q2(n) - sum_{j<=3k+1} ... >= 0",
                   _conj_q2_p, k_min=0, branches=("i", "ii"),
                   claimed=lambda k, b: (3 * k + 1) * (3 * k + 2) if b == "i" else (3 * k + 2) * (3 * k + 3),
                   asserted=True),
        Conjecture("cj2", "(-1)^k (alpha_n - sum_{j=-(k-1)}^{k} (-1)^j b6(n-j(3j-1)/2)) >= 0",
                   _cj2, claimed=lambda k, b: k * (3 * k + 1) // 2, asserted=True),
        Conjecture("cj2a", "(-1)^(k-1) (alpha_n - sum_{j=-k}^{k} (-1)^j b6(n-j(3j-1)/2)) >= 0",
                   _cj2a, claimed=lambda k, b: k * (3 * k + 1) // 2),
        Conjecture("ineq12", "sum_j (-1)^j M_k(n-3j(3j-1)) >= 0",
                   _ineq12, claimed=lambda k, b: k * (3 * k + 1) // 2, asserted=True),
        Conjecture("ineq12a", "sum_j (-1)^j P~_k(n-3j(3j-1)) >= 0",
                   _ineq12a, claimed=lambda k, b: k * (3 * k + 1) // 2),
        Conjecture("conj-b6-rho", "(i) sum_{j<=3k} rho_j b6(n-j(j+1)/2) - beta_n >= 0; (ii) beta_n - sum_{j<=3k+2} ... >= 0",
                   _conj_b6_rho, k_min=0, branches=("i", "ii"),
                   claimed=lambda k, b: (3 * k + 1) * (3 * k + 2) // 2 if b == "i" else (3 * k + 2) * (3 * k + 3) // 2,
                   asserted=False),
        Conjecture("cj5", "(-1)^k (gamma_n - sum_{j=-(k-1)}^{k} (-1)^j Q2(n-j(3j-1)/2)) >= 0", _cj5),
        Conjecture("cj5a", "(-1)^(k-1) (gamma_n - sum_{j=-k}^{k} (-1)^j Q2(n-j(3j-1)/2)) >= 0", _cj5a),
        Conjecture("ineq13", "sum_{j>=0} rho_j M_k(n-j(j+1)) >= 0", _ineq13),
        Conjecture("ineq13a", "sum_{j>=0} rho_j P~_k(n-j(j+1)) >= 0", _ineq13a),
    )
}

# the conjectures proper; cor81 and c8-1-2 are proved corollaries
CONJECTURE_IDS = tuple(i for i in CONJECTURES if i not in ("cor81", "c8-1-2"))

# paired quantities that must agree value-for-value
EQUIVALENT = (("cj2", "ineq12"), ("cj2a", "ineq12a"), ("cj5", "ineq13"), ("cj5a", "ineq13a"))
IMPLICATIONS = (("ineq12", "ineq12a"), ("ineq13", "ineq13a"))


@dataclass
class ScanResult:
    id: str
    k: int
    branch: str | None
    limit: int
    counterexample: tuple | None  # (n, value) of the first negative value
    first_strict_n: int | None
    last_equality_n: int | None
    claimed: int | None
    sharpness_match: bool | None
    asserted: bool
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        return "no-counterexample" if self.counterexample is None else "counterexample"

    @property
    def label(self) -> str:
        b = f",{self.branch}" if self.branch else ""
        return f"{self.id}(k={self.k}{b})"

    def as_dict(self) -> dict:
        return {
            "schema": 1,
            "id": self.id,
            "k": self.k,
            "branch": self.branch,
            "limit": self.limit,
            "status": self.status,
            "counterexample": None if self.counterexample is None else [str(x) for x in self.counterexample],
            "first_strict_n": self.first_strict_n,
            "last_equality_n": self.last_equality_n,
            "claimed_bound": self.claimed,
            "sharpness_match": self.sharpness_match,
            "threshold_asserted": self.asserted,
        }


def _get(cid: str) -> Conjecture:
    try:
        return CONJECTURES[cid]
    except KeyError:
        raise ValueError(f"unknown conjecture {cid!r}; choose from {list(CONJECTURES)}") from None


def _validate(c: Conjecture, k: int, branch):
    if c.fixed_k:
        return 2, None
    if k is None or k < c.k_min:
        raise ValueError(f"{c.id} needs k >= {c.k_min}")
    if branch not in c.branches:
        raise ValueError(f"{c.id} takes branch in {c.branches}, got {branch!r}")
    return k, branch


def values(cid: str, k: int | None, limit: int, branch: str | None = None,
           tables: TableSet | None = None) -> list[int]:
    """v(0..limit) for one id; the conjecture says every entry is >= 0."""
    c = _get(cid)
    k, branch = _validate(c, k, branch)
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    T = tables if tables is not None and tables.limit >= limit else TableSet(limit)
    return c.evaluate(T, k, branch, limit)


def scan(cid: str, k: int | None, limit: int, branch: str | None = None,
         tables: TableSet | None = None) -> ScanResult:
    c = _get(cid)
    k, branch = _validate(c, k, branch)
    t0 = time.perf_counter()
    v = values(cid, k, limit, branch, tables)
    neg = next(((n, x) for n, x in enumerate(v) if x < 0), None)
    strict = [n for n, x in enumerate(v) if x != 0]
    zeros = [n for n, x in enumerate(v) if x == 0]
    claimed = c.claimed(k, branch) if c.claimed else None
    match = None
    if claimed is not None:
        # "strict iff n >= B": zero below B, nonzero from B on (within range)
        match = all(x == 0 for x in v[:claimed]) and all(x > 0 for x in v[claimed:])
    return ScanResult(
        cid, k, branch, limit, neg,
        strict[0] if strict else None,
        zeros[-1] if zeros else None,
        claimed, match, c.asserted,
        time.perf_counter() - t0,
    )


def _grid(c: Conjecture, k_max: int):
    if c.fixed_k:
        yield 2, None
        return
    for k in range(c.k_min, k_max + 1):
        for b in c.branches:
            yield k, b


def scan_matrix(ids, k_max: int, limit: int, tables: TableSet | None = None) -> list[ScanResult]:
    """Every id over k = k_min..k_max and each branch, ordered by (id, k, branch)."""
    T = tables if tables is not None and tables.limit >= limit else TableSet(limit)
    out = []
    for cid in ids:
        c = _get(cid)
        out.extend(scan(cid, k, limit, b, T) for k, b in _grid(c, k_max))
    return out


def consistency_check(k_max: int, limit: int, tables: TableSet | None = None) -> list[str]:
    """Problems found, as strings: pairs that should agree but don't, or broken implications."""
    T = tables if tables is not None and tables.limit >= limit else TableSet(limit)
    problems = []
    for k in range(1, k_max + 1):
        v = {cid: values(cid, k, limit, None, T) for pair in EQUIVALENT for cid in pair}
        for a, b in EQUIVALENT:
            bad = next((n for n in range(limit + 1) if v[a][n] != v[b][n]), None)
            if bad is not None:
                problems.append(f"{a} != {b} at k={k}, n={bad}")
        for strong, weak in IMPLICATIONS:
            bad = next((n for n in range(limit + 1) if v[strong][n] >= 0 and v[weak][n] < 0), None)
            if bad is not None:
                problems.append(f"{strong} holds but {weak} fails at k={k}, n={bad}")
    return problems


def exit_code(results) -> int:
    return 1 if any(r.counterexample is not None for r in results) else 0


CSV_HEADER = ("id", "k", "branch", "status", "first_strict_n", "claimed_bound", "match")


def csv_rows(results) -> list[tuple]:
    fmt = lambda x: "" if x is None else x
    return [
        (r.id, r.k, fmt(r.branch), r.status, fmt(r.first_strict_n), fmt(r.claimed), fmt(r.sharpness_match))
        for r in results
    ]
