"""Set partitions of {1..n} and their increasing-cycle permutations."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .errors import DomainError, NotationError
from .perm import Permutation, back_points, cycle_decomposition, genus, kreweras

__all__ = [
    "SetPartition",
    "enumerate_set_partitions",
    "from_permutation",
    "genus_of_partition",
    "is_noncrossing",
    "kreweras_dual",
    "parse_partition",
    "restricted_growth_strings",
    "to_permutation",
]


@dataclass(frozen=True)
class SetPartition:
    """Blocks of {1..n}, each sorted, ordered by their minimum."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        blocks = tuple(sorted((tuple(sorted(b)) for b in self.blocks), key=lambda b: b[0] if b else 0))
        if any(not b for b in blocks):
            raise DomainError("partition blocks must be nonempty")
        flat = [x for b in blocks for x in b]
        if sorted(flat) != list(range(1, self.n + 1)):
            raise DomainError(f"blocks {blocks} do not partition 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def from_blocks(cls, blocks: Iterable[Iterable[int]], n: int | None = None) -> "SetPartition":
        blocks = [tuple(b) for b in blocks]
        if n is None:
            n = max((max(b) for b in blocks if b), default=0)
        return cls(n, tuple(blocks))

    @classmethod
    def from_rgs(cls, rgs: Sequence[int]) -> "SetPartition":
        blocks: list[list[int]] = []
        for i, label in enumerate(rgs, start=1):
            if label == len(blocks):
                blocks.append([i])
            else:
                blocks[label].append(i)
        return cls(len(rgs), tuple(tuple(b) for b in blocks))

    def __len__(self) -> int:
        return len(self.blocks)

    def __str__(self) -> str:
        return "/".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)

    def block_of(self, x: int) -> tuple[int, ...]:
        for b in self.blocks:
            if x in b:
                return b
        raise KeyError(x)


def parse_partition(text: str, n: int | None = None) -> SetPartition:
    """Parse ``{1,5,7,8}/{2,4}/{3}/{6}``; block order in the text is free."""
    stripped = re.sub(r"\s+", "", text)
    if not stripped:
        return SetPartition(n or 0, ())
    blocks = []
    for chunk in stripped.split("/"):
        m = re.fullmatch(r"\{(\d+(?:,\d+)*)\}", chunk)
        if not m:
            raise NotationError(f"malformed partition: {text!r}")
        blocks.append(tuple(int(t) for t in m.group(1).split(",")))
    try:
        return SetPartition.from_blocks(blocks, n)
    except DomainError as exc:
        raise NotationError(str(exc)) from None


def to_permutation(p: SetPartition) -> Permutation:
    """One cycle per block, listing the block in increasing order."""
    return Permutation.from_cycles(p.blocks, p.n)


def from_permutation(alpha: Permutation) -> SetPartition | None:
    """The partition whose blocks are the cycles of ``alpha``, if every cycle
    increases from its minimum; ``None`` otherwise."""
    if back_points(alpha):
        return None
    return SetPartition(alpha.n, tuple(tuple(c) for c in cycle_decomposition(alpha)))


def genus_of_partition(p: SetPartition) -> int:
    return genus(to_permutation(p))


def is_noncrossing(p: SetPartition) -> bool:
    """True iff no ``a < b < a' < b'`` with ``a, a'`` and ``b, b'`` in distinct blocks."""
    label = [0] * (p.n + 1)
    for idx, b in enumerate(p.blocks):
        for x in b:
            label[x] = idx
    # stack scan: a block may only be resumed when it is on top
    stack: list[int] = []
    last = [b[-1] for b in p.blocks]
    for x in range(1, p.n + 1):
        blk = label[x]
        if stack and stack[-1] == blk:
            pass
        elif blk in stack:
            return False
        else:
            stack.append(blk)
        if x == last[blk]:
            stack.pop()
    return True


def restricted_growth_strings(n: int, prefix: Sequence[int] = ()) -> Iterator[tuple[int, ...]]:
    """Restricted growth strings of length ``n`` in lexicographic order.

    Only strings starting with ``prefix`` are produced, which lets disjoint
    prefixes be enumerated independently.
    """
    if n == 0:
        if not prefix:
            yield ()
        return
    a = list(prefix) or [0]
    if a[0] != 0 or len(a) > n:
        return
    mx = [0] * n
    for i in range(1, len(a)):
        if not 0 <= a[i] <= mx[i - 1] + 1:
            return
        mx[i] = max(mx[i - 1], a[i])
    fixed = len(a)
    a += [0] * (n - fixed)
    for i in range(fixed, n):
        mx[i] = mx[i - 1] if i else 0
    while True:
        yield tuple(a)
        # rightmost free position that can still grow
        i = n - 1
        while i >= fixed and (i == 0 or a[i] > mx[i - 1]):
            i -= 1
        if i < max(fixed, 1):
            return
        a[i] += 1
        mx[i] = max(mx[i - 1], a[i])
        for t in range(i + 1, n):
            a[t] = 0
            mx[t] = mx[i]


def enumerate_set_partitions(
    n: int,
    filter: Callable[[SetPartition], bool] | None = None,
    prefix: Sequence[int] = (),
) -> Iterator[SetPartition]:
    for rgs in restricted_growth_strings(n, prefix):
        p = SetPartition.from_rgs(rgs)
        if filter is None or filter(p):
            yield p


def kreweras_dual(p: SetPartition) -> SetPartition:
    """Partition of ``to_permutation(p)^-1 zeta_n`` for noncrossing ``p``."""
    if not is_noncrossing(p):
        raise DomainError(f"{p} is crossing; its Kreweras complement is not a partition")
    dual = from_permutation(kreweras(to_permutation(p)))
    assert dual is not None
    return dual
