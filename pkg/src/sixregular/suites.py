"""Named identity checks, each evaluated as expected-vs-computed for n = 0..limit."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from . import kernels, special
from .special import rho, sign


class TableSet:
    """Lazily built tables up to ``limit`` (plus a little headroom for shifted arguments)."""

    def __init__(self, limit: int):
        self.limit = limit
        self.size = limit + 2
        self._mk: dict[int, kernels.SequenceTable] = {}
        self._pk: dict[int, kernels.SequenceTable] = {}

    @cached_property
    def p(self):
        return kernels.p_table(self.size, "recurrence")

    @cached_property
    def b6(self):
        return kernels.b6_table(self.size, "product")

    @cached_property
    def q2(self):
        return kernels.q2_table(self.size, "product")

    @cached_property
    def cd(self):
        return kernels.cd_tables(self.size)

    @property
    def c(self):
        return self.cd[0]

    @property
    def d(self):
        return self.cd[1]

    @cached_property
    def b6e(self):
        return kernels.refinement_table("b6e", self.size)

    @cached_property
    def b6o(self):
        return kernels.refinement_table("b6o", self.size)

    @cached_property
    def b6ee(self):
        return kernels.refinement_table("b6ee", self.size)

    @cached_property
    def b6eo(self):
        return kernels.refinement_table("b6eo", self.size)

    def mk(self, k: int):
        if k not in self._mk:
            self._mk[k] = kernels.mk_table(k, self.size)
        return self._mk[k]

    def pk(self, k: int):
        if k not in self._pk:
            self._pk[k] = kernels.pk_table(k, self.size)
        return self._pk[k]


def _bilateral(f, kind: str, n: int, weight=sign) -> int:
    return sum(weight(j) * f(n - v) for j, v in special.terms(kind, n))


def _truncated(f, n: int, lo: int, hi: int, scale: int = 1) -> int:
    """sum_{j=lo..hi} (-1)^j f(n - scale * j(3j-1)/2)."""
    return sum(sign(j) * f(n - scale * (j * (3 * j - 1) // 2)) for j in range(lo, hi + 1))


def _th1(T, n, k):
    return sign(n) * T.q2(n), T.b6e(n) - T.b6o(n)


def _th3(T, n, k):
    return (T.q2(n), T.b6(n)), (T.c(n) - T.d(n - 2), T.c(n) + T.d(n - 2))


def _cor15(T, n, k):
    even = n % 2 == 0
    expected = (T.b6e(n), T.b6o(n), T.c(n), T.d(n))
    got = (
        T.c(n) if even else T.d(n - 2),
        T.d(n - 2) if even else T.c(n),
        T.b6ee(n),
        T.b6eo(n + 2),
    )
    return expected, got


def _th5(T, n, k):
    conv = sum(T.b6(n - 6 * j) * T.mk(k)(j) for j in range(n // 6 + 1))
    lhs = sign(k) * (T.b6(n) - _truncated(T.p, n, -(k - 1), k, scale=6))
    return conv, lhs


def _th5a(T, n, k):
    conv = sum(T.b6(n - 6 * j) * T.pk(k)(j) for j in range(n // 6 + 1))
    lhs = sign(k - 1) * (T.b6(n) - _truncated(T.p, n, -k, k, scale=6))
    return conv, lhs


def _eq5(T, n, k):
    return special.alpha_n(n), _bilateral(T.b6, "pentagonal", n)


def _th6(T, n, k):
    return special.beta_n(n), _bilateral(T.b6, "triangular", n, rho)


def _th8i(T, n, k):
    return T.q2(n), _bilateral(T.p, "doubled-triangular", n, rho)


def _th8ii(T, n, k):
    got = sum(T.p((n - v) // 3) for _, v in special.terms("octagonal", n) if (n - v) % 3 == 0)
    return T.q2(n), got


def _th10i(T, n, k):
    return special.gamma_n(n), _bilateral(T.q2, "pentagonal", n)


def _th10ii(T, n, k):
    return int(special.is_octagonal(n)), _bilateral(T.q2, "scaled-pentagonal", n)


def _parity(T, n, k):
    return T.q2(n) % 2, T.b6(n) % 2


def _mod2(T, n, k):
    return T.q2(n) % 2, _bilateral(T.p, "expanded-pentagonal", n, lambda j: 1) % 2


def _mod3(T, n, k):
    return T.q2(n) % 3, _bilateral(T.p, "doubled-triangular", n, lambda j: 1) % 3


def _octagonal_parity(T, n, k):
    return int(special.is_octagonal(n)), _bilateral(T.b6, "scaled-pentagonal", n, lambda j: 1) % 2


def _mex(T, n, k):
    jmax = 1
    while jmax * (jmax + 1) <= n:
        jmax += 1
    census = kernels.mex22_census(n, jmax, T.p)
    weight = {0: 0, 1: 1, 2: -1}
    got = sum(weight[j % 3] * v for j, v in census.counts)
    return T.q2(n), got


def _q2_even_parts(T, n, k):
    return T.q2(n), T.b6ee(n) - T.b6eo(n)


@dataclass(frozen=True)
class Suite:
    id: str
    description: str
    formula: str
    check: Callable
    parametrised: bool = False


SUITES = {
    s.id: s
    for s in (
        Suite("th1-signed-count", "signed count of 6-regular partitions by length parity",
              "(-1)^n Q2(n) = b6e(n) - b6o(n)", _th1),
        Suite("th3-c-d", "Q2 and b6 from the mod-48 restricted functions c, d",
              "Q2(n) = c(n) - d(n-2);  b6(n) = c(n) + d(n-2)", _th3),
        Suite("cor15-b6eo-b6ee", "length-parity refinements of b6 in terms of c and d",
              "b6e(n) = c(n) | d(n-2), b6o(n) = d(n-2) | c(n) (n even | odd);  c(n) = b6ee(n), d(n) = b6eo(n+2)", _cor15),
        Suite("th5-convolution", "b6 minus a truncated expanded-pentagonal sum of p, via M_k",
              "(-1)^k (b6(n) - sum_{j=-(k-1)}^{k} (-1)^j p(n - 3j(3j-1))) = sum_j b6(n-6j) M_k(j)", _th5, True),
        Suite("th5a-convolution", "the same with the symmetric truncation, via P~_k",
              "(-1)^(k-1) (b6(n) - sum_{j=-k}^{k} (-1)^j p(n - 3j(3j-1))) = sum_j b6(n-6j) P~_k(j)", _th5a, True),
        Suite("eq5-recurrence", "Euler-type recurrence for b6",
              "sum_j (-1)^j b6(n - j(3j-1)/2) = (-1)^k if n = 3k(3k-1) else 0", _eq5),
        Suite("th6-recurrence", "triangular-number recurrence for b6 with weights rho_j",
              "sum_{j>=0} rho_j b6(n - j(j+1)/2) = (-1)^k if n = k(3k-2) else 0", _th6),
        Suite("th8i-rho-sum", "Q2 as a rho-weighted sum of p",
              "Q2(n) = sum_{j>=0} rho_j p(n - j(j+1))", _th8i),
        Suite("th8ii-watson", "Q2 as a sum of p over octagonal shifts divided by 3",
              "Q2(n) = sum_j p((n - j(3j-2))/3), p = 0 off the nonnegative integers", _th8ii),
        Suite("th10i", "pentagonal recurrence for Q2",
              "sum_j (-1)^j Q2(n - j(3j-1)/2) = rho_k if n = k(k+1) (k >= 0) else 0", _th10i),
        Suite("th10ii", "scaled pentagonal recurrence for Q2",
              "sum_j (-1)^j Q2(n - 3j(3j-1)/2) = 1 if n = k(3k-2) else 0", _th10ii),
        Suite("parity-q2-b6", "Q2 and b6 have the same parity",
              "Q2(n) = b6(n) (mod 2)", _parity),
        Suite("mod2-corollary", "expanded pentagonal sum of p mod 2",
              "sum_j p(n - 3j(3j-1)) = Q2(n) (mod 2)", _mod2),
        Suite("mod3-corollary", "unweighted doubled-triangular sum of p mod 3",
              "sum_{j>=0} p(n - j(j+1)) = Q2(n) (mod 3)", _mod3),
        Suite("octagonal-parity", "odd exactly at generalised octagonal numbers",
              "sum_j b6(n - 3j(3j-1)/2) odd iff n = k(3k-2)", _octagonal_parity),
        Suite("mex-remark", "Q2 by the residue of mex_{2,2} mod 6",
              "Q2(n) = #{mex22 = 2 mod 6} - #{mex22 = 4 mod 6}", _mex),
        Suite("q2-b6ee-minus-b6eo", "Q2 from the parity of the number of even parts",
              "Q2(n) = b6ee(n) - b6eo(n)", _q2_even_parts),
    )
}

DEFAULT_K = tuple(range(1, 9))


@dataclass
class VerificationReport:
    suite: str
    limit: int
    params: dict = field(default_factory=dict)
    status: str = "pass"
    first_failure: tuple | None = None  # (n, expected, got) or (n, k, expected, got)
    failures: list = field(default_factory=list)
    checked: int = 0
    elapsed: float = 0.0

    def as_dict(self) -> dict:
        enc = lambda v: [enc(x) for x in v] if isinstance(v, (tuple, list)) else (str(v) if isinstance(v, int) else v)
        return {
            "schema": 1,
            "suite": self.suite,
            "limit": self.limit,
            "params": {k: list(v) if isinstance(v, tuple) else v for k, v in self.params.items()},
            "status": self.status,
            "first_failure": enc(self.first_failure) if self.first_failure else None,
            "failures": [enc(f) for f in self.failures],
            "checked": self.checked,
            "elapsed": round(self.elapsed, 6),
        }


def suite_catalog() -> list[tuple[str, str, str]]:
    """(id, description, formula) for every suite, in a fixed order."""
    return [(s.id, s.description, s.formula) for s in SUITES.values()]


def _get(suite_id: str) -> Suite:
    try:
        return SUITES[suite_id]
    except KeyError:
        raise ValueError(f"unknown suite {suite_id!r}; choose from {list(SUITES)}") from None


def run_suite(suite_id: str, limit: int, params: dict | None = None, *,
              tables: TableSet | None = None, collect_all: bool = False) -> VerificationReport:
    """Evaluate one suite for n = 0..limit.  Stops at the first failure unless ``collect_all``."""
    suite = _get(suite_id)
    if limit < 0:
        raise ValueError("limit must be nonnegative")
    params = dict(params or {})
    if suite.parametrised:
        ks = params.get("k", DEFAULT_K)
        ks = (ks,) if isinstance(ks, int) else tuple(ks)
        if any(k < 1 for k in ks):
            raise ValueError("k must be >= 1")
        params["k"] = ks
    else:
        ks = (None,)
    T = tables if tables is not None and tables.limit >= limit else TableSet(limit)
    report = VerificationReport(suite_id, limit, params)
    t0 = time.perf_counter()
    for k in ks:
        for n in range(limit + 1):
            expected, got = suite.check(T, n, k)
            report.checked += 1
            if expected != got:
                entry = (n, expected, got) if k is None else (n, k, expected, got)
                report.failures.append(entry)
                if report.first_failure is None:
                    report.first_failure = entry
                if not collect_all:
                    break
        if report.failures and not collect_all:
            break
    report.status = "fail" if report.failures else "pass"
    report.elapsed = time.perf_counter() - t0
    return report


def run_all(limit: int, k_values=DEFAULT_K, collect_all: bool = False) -> list[VerificationReport]:
    T = TableSet(limit)
    return [
        run_suite(sid, limit, {"k": k_values} if s.parametrised else None, tables=T, collect_all=collect_all)
        for sid, s in SUITES.items()
    ]


def residual_rows(suite_id: str, limit: int, k: int | None = None) -> list[tuple]:
    """(n, expected, got) rows for CSV output."""
    suite = _get(suite_id)
    if suite.parametrised and k is None:
        raise ValueError(f"{suite_id} needs k")
    T = TableSet(limit)
    return [(n, *suite.check(T, n, k)) for n in range(limit + 1)]
