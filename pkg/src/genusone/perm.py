"""Permutations of {1..n}: cycles, genus, back points and genus one types.

Points are 1-based everywhere.  Products compose right to left, so
``compose(alpha, beta)`` sends ``i`` to ``alpha(beta(i))``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

from .errors import DomainError, NotationError

__all__ = [
    "Cycle",
    "Genus1Type",
    "Permutation",
    "TwistClass",
    "back_points",
    "classify_genus1",
    "compose",
    "cycle_decomposition",
    "genus",
    "hypermap_genus",
    "identity",
    "inverse",
    "kreweras",
    "num_cycles",
    "parse_cycles",
    "parse_permutation",
    "transposition",
    "twist_class",
    "zeta",
]


class Cycle(tuple):
    """A cycle ``(b1, ..., bp)`` rotated so that its minimum comes first."""

    def __new__(cls, elements: Iterable[int]):
        elems = list(elements)
        if not elems:
            raise ValueError("a cycle needs at least one element")
        if len(set(elems)) != len(elems):
            raise ValueError(f"repeated point in cycle {elems}")
        m = elems.index(min(elems))
        return super().__new__(cls, elems[m:] + elems[:m])

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    def __repr__(self) -> str:
        return f"Cycle{tuple(self)!r}"


class TwistClass(Enum):
    NOT_TWISTED = "NotTwisted"
    SIMPLY_TWISTED = "SimplyTwisted"
    DOUBLY_TWISTED = "DoublyTwisted"


class Genus1Type(Enum):
    PARTITION = "Partition"
    ONE_SIMPLY_TWISTED = "OneSimplyTwisted"
    ONE_DOUBLY_TWISTED = "OneDoublyTwisted"
    TWO_SIMPLY_TWISTED = "TwoSimplyTwisted"


@dataclass(frozen=True)
class Permutation:
    """A bijection of {1..n} stored as its image table.

    ``images[i - 1]`` is the image of ``i``.  The empty permutation
    (``n == 0``) is allowed.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        object.__setattr__(self, "images", images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise DomainError(f"{list(images)} is not a permutation of 1..{n}")

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return "".join(str(c) for c in cycle_decomposition(self))

    def __repr__(self) -> str:
        return f"Permutation({str(self) or '()'}, n={self.n})"

    def cycles(self) -> list[Cycle]:
        return cycle_decomposition(self)

    def inverse(self) -> "Permutation":
        return inverse(self)

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        images = list(range(1, n + 1))
        seen: set[int] = set()
        for cyc in cycles:
            for p in cyc:
                if not 1 <= p <= n:
                    raise NotationError(f"point {p} outside 1..{n}")
                if p in seen:
                    raise NotationError(f"point {p} appears twice")
                seen.add(p)
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a - 1] = b
        return cls(tuple(images))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _int_list(body: str, text: str) -> list[int]:
    parts = [t.strip() for t in body.split(",")]
    if not parts or any(not re.fullmatch(r"[+-]?\d+", t) for t in parts):
        raise NotationError(f"malformed notation: {text!r}")
    return [int(t) for t in parts]


def parse_cycles(text: str, n: int) -> Permutation:
    """Parse cycle notation such as ``"(1,4,3,8)(2,7)(5)(6)"``.

    Unlisted points are fixed; whitespace between tokens is ignored.
    """
    stripped = re.sub(r"\s+", "", text)
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != pos:
            raise NotationError(f"malformed cycle notation: {text!r}")
        cycles.append(_int_list(m.group(1), text))
        pos = m.end()
    if pos != len(stripped):
        raise NotationError(f"malformed cycle notation: {text!r}")
    return Permutation.from_cycles(cycles, n)


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse either cycle notation or a bracketed one-line image list.

    For cycle notation without ``n`` the largest mentioned point is used.
    """
    stripped = re.sub(r"\s+", "", text)
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise NotationError(f"malformed one-line notation: {text!r}")
        body = stripped[1:-1]
        images = _int_list(body, text) if body else []
        if n is not None and n != len(images):
            raise NotationError(f"one-line notation has {len(images)} entries, expected {n}")
        try:
            return Permutation(tuple(images))
        except DomainError as exc:
            raise NotationError(str(exc)) from None
    if n is None:
        points = [int(t) for t in re.findall(r"[+-]?\d+", stripped)]
        n = max(points, default=0)
    return parse_cycles(text, n)


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(1, n + 1)))


def zeta(n: int) -> Permutation:
    """The circular permutation ``i -> i + 1``, ``n -> 1``."""
    if n < 0:
        raise DomainError("n must be non-negative")
    return Permutation(tuple(range(2, n + 1)) + ((1,) if n else ()))


def transposition(i: int, j: int, n: int) -> Permutation:
    images = list(range(1, n + 1))
    images[i - 1], images[j - 1] = j, i
    return Permutation(tuple(images))


def compose(alpha: Permutation, beta: Permutation) -> Permutation:
    """Right-to-left product: ``i -> alpha(beta(i))``."""
    if alpha.n != beta.n:
        raise DomainError(f"cannot compose permutations of {alpha.n} and {beta.n} points")
    a = alpha.images
    return Permutation(tuple(a[b - 1] for b in beta.images))


def inverse(alpha: Permutation) -> Permutation:
    inv = [0] * alpha.n
    for i, v in enumerate(alpha.images, start=1):
        inv[v - 1] = i
    return Permutation(tuple(inv))


def cycle_decomposition(alpha: Permutation) -> list[Cycle]:
    """Cycles sorted by their minimum; fixed points included."""
    seen = [False] * (alpha.n + 1)
    out = []
    for s in range(1, alpha.n + 1):
        if seen[s]:
            continue
        cyc = []
        x = s
        while not seen[x]:
            seen[x] = True
            cyc.append(x)
            x = alpha.images[x - 1]
        out.append(Cycle(cyc))
    return out


def _count_cycles(images: Sequence[int]) -> int:
    # 1-based image table
    n = len(images)
    seen = [False] * (n + 1)
    z = 0
    for s in range(1, n + 1):
        if seen[s]:
            continue
        z += 1
        x = s
        while not seen[x]:
            seen[x] = True
            x = images[x - 1]
    return z


def num_cycles(alpha: Permutation) -> int:
    return _count_cycles(alpha.images)


def kreweras(alpha: Permutation) -> Permutation:
    """``alpha^-1 zeta_n``; the Kreweras complement on noncrossing partitions."""
    return compose(inverse(alpha), zeta(alpha.n))


def genus(alpha: Permutation) -> int:
    """Genus from ``n + 1 - 2g = z(alpha) + z(alpha^-1 zeta_n)``.

    The empty permutation has genus 0 by convention.
    """
    n = alpha.n
    if n == 0:
        return 0
    twice = n + 1 - num_cycles(alpha) - num_cycles(kreweras(alpha))
    if twice < 0 or twice % 2:
        raise ArithmeticError(f"cycle counts of {alpha!r} give a non-integral genus")
    return twice // 2


def _connected(n: int, perms: Sequence[Permutation]) -> bool:
    if n == 0:
        return True
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for p in perms:
        for i, v in enumerate(p.images, start=1):
            ri, rv = find(i), find(v)
            if ri != rv:
                parent[ri] = rv
    root = find(1)
    return all(find(i) == root for i in range(2, n + 1))


def hypermap_genus(sigma: Permutation, alpha: Permutation) -> int:
    """Genus of the hypermap ``(sigma, alpha)``.

    ``n + 2 - 2g = z(sigma) + z(alpha) + z(alpha^-1 sigma)``; the pair must
    generate a transitive group, which is checked as connectivity of the
    graph with edges ``{i, alpha(i)}`` and ``{i, sigma(i)}``.
    """
    if sigma.n != alpha.n:
        raise DomainError("sigma and alpha act on different point sets")
    n = sigma.n
    if not _connected(n, (sigma, alpha)):
        raise DomainError("sigma and alpha do not generate a transitive group")
    if n == 0:
        return 0
    twice = n + 2 - num_cycles(sigma) - num_cycles(alpha) - num_cycles(compose(inverse(alpha), sigma))
    if twice < 0 or twice % 2:
        raise ArithmeticError("non-integral hypermap genus")
    return twice // 2


def back_points(alpha: Permutation) -> frozenset[int]:
    """Points ``i`` with ``alpha(i) < i`` and ``alpha(i)`` not its cycle minimum."""
    out = set()
    for cyc in cycle_decomposition(alpha):
        m = cyc[0]
        for x in cyc:
            y = alpha(x)
            if y < x and y != m:
                out.add(x)
    return frozenset(out)


def twist_class(alpha: Permutation, cycle: Sequence[int]) -> TwistClass:
    cyc = Cycle(cycle)
    m = cyc[0]
    count = sum(1 for x in cyc if alpha(x) < x and alpha(x) != m)
    if count == 0:
        return TwistClass.NOT_TWISTED
    if count == 1:
        return TwistClass.SIMPLY_TWISTED
    if count == 2:
        return TwistClass.DOUBLY_TWISTED
    raise DomainError(f"cycle {cyc} has {count} back points")


def classify_genus1(alpha: Permutation) -> Genus1Type:
    """Sort a genus one permutation into one of its four twisting types."""
    if genus(alpha) != 1:
        raise DomainError(f"{alpha!r} is not of genus 1")
    twisted = [t for t in (twist_class(alpha, c) for c in cycle_decomposition(alpha))
               if t is not TwistClass.NOT_TWISTED]
    if not twisted:
        return Genus1Type.PARTITION
    if twisted == [TwistClass.SIMPLY_TWISTED]:
        return Genus1Type.ONE_SIMPLY_TWISTED
    if twisted == [TwistClass.DOUBLY_TWISTED]:
        return Genus1Type.ONE_DOUBLY_TWISTED
    if twisted == [TwistClass.SIMPLY_TWISTED, TwistClass.SIMPLY_TWISTED]:
        return Genus1Type.TWO_SIMPLY_TWISTED
    raise ArithmeticError(f"{alpha!r} has genus 1 but twisting pattern {twisted}")
