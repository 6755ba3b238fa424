"""Closed-form counts of genus one partitions and permutations.

Every function works in exact integers; a division that leaves a remainder
is reported as an ``ArithmeticError`` since it can only mean a transcription
mistake in a formula.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial
from typing import Iterable, Literal, Union

__all__ = [
    "Backpoints",
    "CountTable",
    "binom",
    "formula_table",
    "full_count",
    "j_count",
    "narayana",
    "reduced_count",
    "totals",
]

Backpoints = Union[int, Literal["any"]]
KINDS = ("partition", "permutation")
PROVENANCES = ("formula", "bruteforce", "series")


def binom(n: int, k: int) -> int:
    """``C(n, k)``, zero whenever ``k < 0`` or ``k > n`` (including negative n)."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


def _selector(j: Backpoints) -> Backpoints:
    if j in ("any", "*"):
        return "any"
    if j in (0, 1, 2):
        return j
    raise ValueError(f"back-point selector must be 0, 1, 2 or 'any', not {j!r}")


def reduced_count(n: int, k: int, j: Backpoints = "any") -> int:
    """Reduced genus one permutations of {1..n} with ``k`` cycles and ``j``
    back points; ``j = 0`` counts reduced genus one partitions."""
    j = _selector(j)
    if j == 0:
        return binom(n, 2 * k) * binom(k + 1, 3)
    if j == 1:
        return binom(n, 2 * k + 1) * (binom(k + 2, 3) + binom(k + 1, 3))
    if j == 2:
        return binom(n, 2 * k + 2) * binom(k + 2, 3)
    return binom(n + 2, 2 * k + 2) * binom(k + 1, 3) + binom(n + 1, 2 * k + 2) * binom(k + 1, 2)


def full_count(n: int, k: int, j: Backpoints = "any") -> int:
    """All genus one permutations of {1..n} with ``k`` cycles and ``j`` back
    points; ``j = 0`` gives genus one partitions with ``k`` blocks."""
    j = _selector(j)
    if j == 0:
        return _exact_div(binom(n, 2) * binom(n - 2, k) * binom(n - 2, k - 2), 6)
    if j == 1:
        return _exact_div(binom(n, 2) * binom(n - 2, k) * binom(n - 2, k - 1), 3)
    if j == 2:
        return _exact_div(binom(n, 2) * binom(n - 2, k + 1) * binom(n - 2, k - 1), 6)
    return _exact_div(binom(n + 1, 2) * binom(n - 1, k + 1) * binom(n - 1, k - 1), 6)


def narayana(n: int, k: int) -> int:
    """Noncrossing partitions of {1..n} with ``k`` blocks.

    ``narayana(0, 0) == 1``: the empty set has one partition, with no blocks.
    """
    if n == 0:
        return 1 if k == 0 else 0
    if n < 0:
        return 0
    return _exact_div(binom(n, k) * binom(n, k - 1), n)


def j_count(n: int, k: int) -> int:
    return binom(n, k) * binom(n - 1, k - 1)


def _p0_total_closed(n: int) -> int:
    return _exact_div(factorial(2 * n - 5), 6 * factorial(n - 4) * factorial(n - 3))


def _r0_total_delannoy(n: int) -> int:
    # asymmetric Delannoy number d~(3, n-4): sum_t C(3,t) C(n-4,t) 2^(n-4-t)
    m = n - 4
    return sum(binom(3, t) * binom(m, t) * 2 ** (m - t) for t in range(0, min(3, m) + 1))


def totals(n: int, which: str) -> int:
    """Row total over ``k`` of ``p0`` or ``r0``, checked against its closed form."""
    if n < 4:
        raise ValueError("totals are defined for n >= 4")
    if which == "p0_total":
        closed = _p0_total_closed(n)
        row = sum(full_count(n, k, 0) for k in range(n + 1))
    elif which == "r0_total":
        closed = _r0_total_delannoy(n)
        row = sum(reduced_count(n, k, 0) for k in range(n + 1))
    else:
        raise ValueError(f"unknown total {which!r}")
    if closed != row:
        raise ArithmeticError(f"{which}({n}): closed form {closed} != row sum {row}")
    return closed


@dataclass
class CountTable:
    """Exact counts keyed by ``(n, k)``; only nonzero entries are stored."""

    kind: str
    reduced: bool
    backpoints: Backpoints
    provenance: str
    entries: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}")
        if self.provenance not in PROVENANCES:
            raise ValueError(f"provenance must be one of {PROVENANCES}")
        self.backpoints = _selector(self.backpoints)
        if self.kind == "partition" and self.backpoints not in (0, "any"):
            raise ValueError("partitions have no back points")
        self.entries = {key: v for key, v in self.entries.items() if v}

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def rows(self) -> list[tuple[int, int, int]]:
        return [(n, k, v) for (n, k), v in sorted(self.entries.items())]

    def restrict(self, n_values: Iterable[int]) -> "CountTable":
        keep = set(n_values)
        return CountTable(self.kind, self.reduced, self.backpoints, self.provenance,
                          {key: v for key, v in self.entries.items() if key[0] in keep})

    def same_counts(self, other: "CountTable") -> bool:
        return self.entries == other.entries


def _effective_j(kind: str, backpoints: Backpoints) -> Backpoints:
    return 0 if kind == "partition" else _selector(backpoints)


def formula_table(kind: str, n_max: int, reduced: bool = False,
                  backpoints: Backpoints = "any", n_min: int = 0) -> CountTable:
    j = _effective_j(kind, backpoints)
    fn = reduced_count if reduced else full_count
    entries = {(n, k): fn(n, k, j) for n in range(n_min, n_max + 1) for k in range(n + 1)}
    return CountTable(kind, reduced, j, "formula", entries)
