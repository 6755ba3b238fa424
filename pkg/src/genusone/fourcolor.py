"""Four-colored noncrossing partitions and the genus one permutations they encode.

A coloring of the circle {1..n} is fixed by coloring points
``1 <= i < j <= k < l <= n``, giving arcs

    A = {l+1..n, 1..i},  B = {i+1..j},  C = {j+1..k},  D = {k+1..l},

with only ``C`` allowed to be empty.  Relabeling the points so that A is
followed by D, C and B turns a noncrossing partition into a permutation of
genus at most one.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import DomainError
from .perm import Permutation, compose, genus, hypermap_genus, inverse
from .setpart import SetPartition, from_permutation, is_noncrossing, to_permutation

__all__ = [
    "COLORS",
    "Classification",
    "ColoredPartition",
    "ColoringPoints",
    "SeparatingPoints",
    "all_colorings",
    "all_separating",
    "colored_genus_classify",
    "coloring_to_separating",
    "find_separating",
    "induced_representation",
    "is_separating",
    "phi_map",
    "phi_of_coloring",
    "separating_points_of",
    "separating_to_coloring",
    "theta_of_separating",
]

COLORS = ("A", "B", "C", "D")


@dataclass(frozen=True)
class ColoringPoints:
    n: int
    i: int
    j: int
    k: int
    l: int

    def __post_init__(self):
        if not 1 <= self.i < self.j <= self.k < self.l <= self.n:
            raise DomainError(f"invalid coloring points {self.as_tuple()} for n={self.n}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.i, self.j, self.k, self.l)

    def color(self, x: int) -> str:
        if x <= self.i or x > self.l:
            return "A"
        if x <= self.j:
            return "B"
        if x <= self.k:
            return "C"
        return "D"

    def color_sets(self) -> dict[str, frozenset[int]]:
        sets: dict[str, set[int]] = {c: set() for c in COLORS}
        for x in range(1, self.n + 1):
            sets[self.color(x)].add(x)
        return {c: frozenset(s) for c, s in sets.items()}

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.as_tuple())) + ")"


@dataclass(frozen=True)
class SeparatingPoints:
    n: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not 1 <= self.a < self.b <= self.c < self.d <= self.n:
            raise DomainError(f"invalid separating points {self.as_tuple()} for n={self.n}")

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    def color(self, x: int) -> str:
        """Color of a point in the relabeled (permutation side) numbering."""
        if x <= self.a or x > self.d:
            return "A"
        if x <= self.b:
            return "D"
        if x <= self.c:
            return "C"
        return "B"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.as_tuple())) + ")"


@dataclass(frozen=True)
class ColoredPartition:
    partition: SetPartition
    coloring: ColoringPoints

    def __post_init__(self):
        if self.coloring.n != self.partition.n:
            raise DomainError("coloring and partition have different ground sets")
        if not is_noncrossing(self.partition):
            raise DomainError(f"{self.partition} is not noncrossing")

    def __str__(self) -> str:
        return f"{self.partition}|ijkl={self.coloring}"


@dataclass(frozen=True)
class Classification:
    genus: int
    witness: tuple[tuple[int, ...], ...] = ()


def coloring_to_separating(cp: ColoringPoints) -> SeparatingPoints:
    i, j, k, l = cp.as_tuple()
    return SeparatingPoints(cp.n, i, i + l - k, i + l - j, l)


def separating_to_coloring(sp: SeparatingPoints) -> ColoringPoints:
    a, b, c, d = sp.as_tuple()
    return ColoringPoints(sp.n, a, a + d - c, a + d - b, d)


def all_colorings(n: int) -> Iterator[ColoringPoints]:
    """Every valid coloring quadruple, in lexicographic order."""
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j, n + 1):
                for l in range(k + 1, n + 1):
                    yield ColoringPoints(n, i, j, k, l)


def all_separating(n: int) -> Iterator[SeparatingPoints]:
    """Every quadruple ``a < b <= c < d`` in lexicographic order."""
    for a in range(1, n + 1):
        for b in range(a + 1, n + 1):
            for c in range(b, n + 1):
                for d in range(c + 1, n + 1):
                    yield SeparatingPoints(n, a, b, c, d)


def phi_of_coloring(cp: ColoringPoints) -> Permutation:
    """The relabeling map sending each point to its new label; fixes A."""
    i, j, k, l = cp.as_tuple()
    shift = {"A": 0, "B": l - j, "C": i + l - j - k, "D": i - k}
    return Permutation(tuple(x + shift[cp.color(x)] for x in range(1, cp.n + 1)))


def phi_map(colored: ColoredPartition) -> Permutation:
    """``phi . beta . phi^-1`` with ``beta`` the partition's permutation."""
    phi = phi_of_coloring(colored.coloring)
    beta = to_permutation(colored.partition)
    return compose(compose(phi, beta), inverse(phi))


def theta_of_separating(sp: SeparatingPoints) -> Permutation:
    """``zeta_n (a,c)(b,d)``, a single n-cycle.

    Listed explicitly it is ``(1..a, c+1..d, b+1..c, a+1..b, d+1..n)``.
    """
    a, b, c, d = sp.as_tuple()
    order = (list(range(1, a + 1)) + list(range(c + 1, d + 1)) + list(range(b + 1, c + 1))
             + list(range(a + 1, b + 1)) + list(range(d + 1, sp.n + 1)))
    return Permutation.from_cycles([order], sp.n)


def _require_genus1(alpha: Permutation) -> None:
    if genus(alpha) != 1:
        raise DomainError(f"{alpha!r} is not of genus 1")


def _separating_unchecked(alpha: Permutation, sp: SeparatingPoints) -> bool:
    return hypermap_genus(theta_of_separating(sp), alpha) == 0


def is_separating(alpha: Permutation, sp: SeparatingPoints) -> bool:
    _require_genus1(alpha)
    if sp.n != alpha.n:
        raise DomainError("separating points and permutation have different n")
    return _separating_unchecked(alpha, sp)


def separating_points_of(alpha: Permutation) -> list[SeparatingPoints]:
    """All separating quadruples of a genus one permutation, lexicographically."""
    _require_genus1(alpha)
    return [sp for sp in all_separating(alpha.n) if _separating_unchecked(alpha, sp)]


def find_separating(alpha: Permutation) -> SeparatingPoints:
    """Lexicographically smallest separating quadruple of a genus one permutation."""
    _require_genus1(alpha)
    for sp in all_separating(alpha.n):
        if _separating_unchecked(alpha, sp):
            return sp
    raise ArithmeticError(f"no separating points for genus one permutation {alpha!r}")


def induced_representation(alpha: Permutation, sp: SeparatingPoints) -> ColoredPartition:
    cp = separating_to_coloring(sp)
    phi = phi_of_coloring(cp)
    beta = compose(compose(inverse(phi), alpha), phi)
    p = from_permutation(beta)
    if p is None or not is_noncrossing(p):
        raise DomainError(f"{sp} are not separating points of {alpha!r}")
    return ColoredPartition(p, cp)


def colored_genus_classify(colored: ColoredPartition) -> Classification:
    """Genus of ``phi_map(colored)`` read off the part colorings.

    Genus is 1 when some part meets three or four colors, or when two
    bicolored parts share exactly one color; the witness names those parts.
    """
    cp = colored.coloring
    palettes = [(b, frozenset(cp.color(x) for x in b)) for b in colored.partition.blocks]
    for b, pal in palettes:
        if len(pal) >= 3:
            return Classification(1, (b,))
    bicolored = [(b, pal) for b, pal in palettes if len(pal) == 2]
    for (b1, p1), (b2, p2) in combinations(bicolored, 2):
        if len(p1 & p2) == 1:
            return Classification(1, (b1, b2))
    return Classification(0)
