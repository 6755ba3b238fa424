"""Trivial cycles, reduction to the unique reduced form, and canonical
representations of reduced genus one permutations."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import DomainError
from .fourcolor import ColoredPartition, SeparatingPoints, induced_representation, is_separating
from .perm import Cycle, Permutation, back_points, cycle_decomposition, genus

__all__ = [
    "ReductionStep",
    "ReductionTrace",
    "TrivialCycle",
    "canonical_properties",
    "canonical_representation",
    "canonical_separating",
    "cycles_cross",
    "is_reduced",
    "reduce_fully",
    "reduce_once",
    "relabel_restriction",
    "removable_cycles",
    "split_at",
    "trivial_cycles",
]


@dataclass(frozen=True)
class TrivialCycle:
    """The cycle ``(start, start+1, ..., start+length-1)``, indices mod n."""

    start: int
    length: int

    def elements(self, n: int) -> tuple[int, ...]:
        return tuple((self.start - 1 + t) % n + 1 for t in range(self.length))

    def as_cycle(self, n: int) -> Cycle:
        return Cycle(self.elements(n))


def _is_trivial(alpha: Permutation, cyc: Sequence[int]) -> int | None:
    """Start point if ``cyc`` runs along the circle in successor order."""
    n = alpha.n
    breaks = [x for x in cyc if alpha(x) != x % n + 1]
    if not breaks:
        return 1
    if len(breaks) == 1:
        return alpha(breaks[0])
    return None


def trivial_cycles(alpha: Permutation) -> list[TrivialCycle]:
    """Trivial cycles of ``alpha``, ordered by their minimal element."""
    out = []
    for cyc in cycle_decomposition(alpha):
        start = _is_trivial(alpha, cyc)
        if start is not None:
            out.append(TrivialCycle(start, len(cyc)))
    return out


def is_reduced(alpha: Permutation) -> bool:
    return all(_is_trivial(alpha, c) is None for c in cycle_decomposition(alpha))


def relabel_restriction(alpha: Permutation, keep: Sequence[int] | set[int]) -> Permutation:
    """Restrict ``alpha`` to an invariant set and compress labels in order."""
    kept = sorted(keep)
    new = {x: t for t, x in enumerate(kept, start=1)}
    try:
        return Permutation(tuple(new[alpha(x)] for x in kept))
    except KeyError:
        raise DomainError("set is not a union of cycles") from None


def reduce_once(alpha: Permutation, t: TrivialCycle) -> Permutation:
    """Remove one trivial cycle and renumber the survivors order-preservingly."""
    n = alpha.n
    if not 1 <= t.length <= n or not 1 <= t.start <= n:
        raise DomainError(f"{t} is not a trivial cycle of {alpha!r}")
    elems = t.elements(n)
    cyc = Cycle(elems)
    if cyc not in cycle_decomposition(alpha) or _is_trivial(alpha, cyc) is None:
        raise DomainError(f"{t} is not a trivial cycle of {alpha!r}")
    removed = set(elems)
    return relabel_restriction(alpha, [x for x in range(1, n + 1) if x not in removed])


@dataclass(frozen=True)
class ReductionStep:
    removed: TrivialCycle
    original: Cycle  # the same cycle in the input's labels
    n_before: int


@dataclass(frozen=True)
class ReductionTrace:
    original: Permutation
    steps: tuple[ReductionStep, ...]
    result: Permutation
    survivors: tuple[int, ...] = field(default=())

    def replay(self) -> Permutation:
        current = self.original
        for step in self.steps:
            current = reduce_once(current, step.removed)
        return current

    def removed_cycles(self) -> set[Cycle]:
        return {s.original for s in self.steps}


def reduce_fully(alpha: Permutation) -> ReductionTrace:
    """Strip trivial cycles until none remain.

    The trivial cycle with the smallest minimal element goes first; the end
    result does not depend on this choice.
    """
    current = alpha
    labels = list(range(1, alpha.n + 1))  # labels[i-1]: original label of point i
    steps = []
    while True:
        found = trivial_cycles(current)
        if not found:
            break
        t = min(found, key=lambda tc: min(tc.elements(current.n)))
        elems = set(t.elements(current.n))
        steps.append(ReductionStep(t, Cycle(labels[e - 1] for e in t.elements(current.n)), current.n))
        current = reduce_once(current, t)
        labels = [lab for i, lab in enumerate(labels, start=1) if i not in elems]
    return ReductionTrace(alpha, tuple(steps), current, tuple(labels))


def _runs(x_set: set[int], y_set: set[int]) -> int:
    runs = 0
    prev = None
    for v in sorted(x_set | y_set):
        side = v in x_set
        if side != prev:
            runs += 1
            prev = side
    return runs


def cycles_cross(c1: Sequence[int], c2: Sequence[int]) -> bool:
    """``a < b < a' < b'`` with ``a, a'`` in one cycle and ``b, b'`` in the other."""
    return _runs(set(c1), set(c2)) >= 4


def removable_cycles(alpha: Permutation) -> set[Cycle]:
    """Cycles deleted by every complete reduction, found structurally.

    A cycle is removable when it is not twisted, crosses no other cycle, and
    at most one of the circular gaps between its consecutive elements holds
    a twisted cycle or a cycle crossing some other cycle.
    """
    n = alpha.n
    cycles = cycle_decomposition(alpha)
    backs = back_points(alpha)
    twisted = [any(x in backs for x in c) for c in cycles]
    crossing = [False] * len(cycles)
    for s in range(len(cycles)):
        for t in range(s + 1, len(cycles)):
            if cycles_cross(cycles[s], cycles[t]):
                crossing[s] = crossing[t] = True
    owner = {x: idx for idx, c in enumerate(cycles) for x in c}

    out = set()
    for idx, cyc in enumerate(cycles):
        if twisted[idx] or crossing[idx]:
            continue
        pts = sorted(cyc)
        bad_gaps = 0
        for s, lo in enumerate(pts):
            hi = pts[(s + 1) % len(pts)]
            gap = range(lo + 1, hi) if s + 1 < len(pts) else [*range(lo + 1, n + 1), *range(1, pts[0])]
            inside = {owner[x] for x in gap}
            if any(twisted[o] or crossing[o] for o in inside):
                bad_gaps += 1
        if bad_gaps <= 1:
            out.add(cyc)
    return out


def _require_reduced_genus1(alpha: Permutation) -> None:
    if genus(alpha) != 1:
        raise DomainError(f"{alpha!r} is not of genus 1")
    if not is_reduced(alpha):
        raise DomainError(f"{alpha!r} is not reduced")


def canonical_separating(alpha: Permutation) -> SeparatingPoints:
    """Canonical separating points of a reduced genus one permutation.

    ``a`` is the first point not sent to its successor, ``b`` the first point
    after ``a`` sent outside ``[a+1, alpha(a)]``, ``c = alpha(a) - 1`` and
    ``d = alpha(b) - 1`` taken mod n.
    """
    _require_reduced_genus1(alpha)
    n = alpha.n
    a = next(x for x in range(1, n + 1) if alpha(x) != x + 1)
    b = next(x for x in range(a + 1, n + 1) if alpha(x) > alpha(a) or alpha(x) <= a)
    c = alpha(a) - 1
    d = n if alpha(b) == 1 else alpha(b) - 1
    return SeparatingPoints(n, a, b, c, d)


def canonical_properties(alpha: Permutation, sp: SeparatingPoints) -> list[int]:
    """Numbers (1-4) of the canonical-representation properties that fail.

    An empty list means the representation induced by ``sp`` satisfies all
    four; exactly one ``sp`` does so for a reduced genus one permutation.
    """
    n = alpha.n
    a, b, c, d = sp.as_tuple()
    succ = lambda x: x % n + 1  # noqa: E731
    failed = []
    # the uniqueness argument also needs every point before a sent to its successor
    if not (a < b <= c < d and alpha(a) == succ(c) and alpha(b) == succ(d)
            and all(alpha(x) == x + 1 for x in range(1, a))):
        failed.append(1)
    if any(sp.color(x) == sp.color(alpha(x)) and alpha(x) != succ(x) for x in range(1, n + 1)):
        failed.append(2)
    backs = back_points(alpha)
    b_cycle = next(cyc for cyc in cycle_decomposition(alpha) if b in cyc)
    bad3 = bad4 = False
    for cyc in cycle_decomposition(alpha):
        colors = {sp.color(x) for x in cyc}
        if {"A", "D"} <= colors and cyc != b_cycle:
            bad3 = True
        if {"B", "D"} <= colors:
            twisted = any(x in backs for x in cyc)
            if not (cyc == b_cycle and twisted and succ(d) in cyc):
                bad4 = True
    if bad3:
        failed.append(3)
    if bad4:
        failed.append(4)
    return failed


def canonical_representation(alpha: Permutation) -> ColoredPartition:
    sp = canonical_separating(alpha)
    if not is_separating(alpha, sp):
        raise ArithmeticError(f"canonical points {sp} do not separate {alpha!r}")
    return induced_representation(alpha, sp)


def split_at(alpha: Permutation, a: int) -> tuple[Permutation, Permutation]:
    """Split along the chord ``a -> alpha(a)`` when the points strictly inside
    form a union of cycles; genus is additive over the two pieces."""
    n = alpha.n
    if not (1 <= a <= n and a + 1 < alpha(a)):
        raise DomainError(f"need a + 1 < alpha(a) at a={a}")
    inner = set(range(a + 1, alpha(a)))
    if any(alpha(x) not in inner for x in inner):
        raise DomainError(f"{sorted(inner)} is not a union of cycles of {alpha!r}")
    outer = [x for x in range(1, n + 1) if x not in inner]
    return relabel_restriction(alpha, inner), relabel_restriction(alpha, outer)
