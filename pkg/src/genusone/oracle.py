"""Exhaustive enumeration of permutations and set partitions.

This is the ground truth that every formula, series and structure theorem
in the package is checked against.  Classification runs on a compact
0-based kernel; ``verify_suite`` cross-checks that kernel against the
1-based reference implementation in :mod:`genusone.perm`.
"""
from __future__ import annotations

import csv
import os
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from pathlib import Path
from typing import Callable, Iterable, Iterator

from . import count as _count
from . import series as _series
from .count import Backpoints, CountTable
from .errors import DomainError
from .fourcolor import (
    ColoredPartition,
    all_colorings,
    colored_genus_classify,
    coloring_to_separating,
    find_separating,
    induced_representation,
    is_separating,
    phi_map,
    separating_points_of,
)
from .perm import Permutation, back_points, genus, kreweras, num_cycles
from .reduce import (
    canonical_properties,
    canonical_separating,
    is_reduced,
    reduce_fully,
    reduce_once,
    removable_cycles,
    trivial_cycles,
)
from .setpart import enumerate_set_partitions, is_noncrossing, restricted_growth_strings

__all__ = [
    "CACHE_ENV",
    "PARTITION_LIMIT",
    "PERMUTATION_LIMIT",
    "ClassKey",
    "brute_table",
    "class_counts",
    "enumerate_permutations",
    "extension_count",
    "verify_suite",
]

PERMUTATION_LIMIT = 9
PARTITION_LIMIT = 12
CACHE_ENV = "GENUSONE_CACHE"
KINDS = ("permutation", "partition")


@dataclass(frozen=True, order=True)
class ClassKey:
    n: int
    k: int
    genus: int
    backpoints: int
    reduced: bool


def _limit(kind: str) -> int:
    if kind == "permutation":
        return PERMUTATION_LIMIT
    if kind == "partition":
        return PARTITION_LIMIT
    raise DomainError(f"kind must be one of {KINDS}, not {kind!r}")


def _check_limit(kind: str, n: int, limit: int | None = None) -> None:
    cap = _limit(kind) if limit is None else limit
    if n < 0:
        raise DomainError("n must be non-negative")
    if n > cap:
        raise DomainError(f"{kind} oracle limited to n <= {cap}, got {n}")


def enumerate_permutations(n: int, limit: int | None = None) -> Iterator[Permutation]:
    """Every element of S_n once, lexicographic in the image table."""
    _check_limit("permutation", n, limit)
    for images in permutations(range(1, n + 1)):
        yield Permutation(images)


# -- classification kernel (0-based images) --------------------------------

def _classify(p: tuple[int, ...]) -> tuple[int, int, int, bool]:
    """``(cycles, genus, back points, reduced)`` of a 0-based image tuple."""
    n = len(p)
    if n == 0:
        return 0, 0, 0, True
    seen = [False] * n
    k = backs = 0
    reduced = True
    for start in range(n):
        if seen[start]:
            continue
        k += 1
        breaks = 0
        x = start  # the cycle minimum, since smaller points are all seen
        while not seen[x]:
            seen[x] = True
            y = p[x]
            if y != (x + 1) % n:
                breaks += 1
            if y < x and y != start:
                backs += 1
            x = y
        if breaks <= 1:
            reduced = False
    inv = [0] * n
    for i, y in enumerate(p):
        inv[y] = i
    seen = [False] * n
    z = 0
    for start in range(n):
        if seen[start]:
            continue
        z += 1
        x = start
        while not seen[x]:
            seen[x] = True
            x = inv[(x + 1) % n]
    twice = n + 1 - k - z
    return k, twice // 2, backs, reduced


def _permutation_chunk(args: tuple[int, int | None]) -> Counter:
    n, first = args
    counts: Counter = Counter()
    if first is None:
        pool: Iterable[tuple[int, ...]] = permutations(range(n))
    else:
        rest = [v for v in range(n) if v != first]
        pool = ((first,) + t for t in permutations(rest))
    for p in pool:
        counts[_classify(p)] += 1
    return counts


def _partition_chunk(args: tuple[int, tuple[int, ...]]) -> Counter:
    n, prefix = args
    counts: Counter = Counter()
    for rgs in restricted_growth_strings(n, prefix):
        blocks: list[list[int]] = []
        for i, label in enumerate(rgs):
            if label == len(blocks):
                blocks.append([i])
            else:
                blocks[label].append(i)
        p = [0] * n
        for b in blocks:
            for s, x in enumerate(b):
                p[x] = b[(s + 1) % len(b)]
        counts[_classify(tuple(p))] += 1
    return counts


def _run_chunks(fn, tasks: list, jobs: int) -> Counter:
    total: Counter = Counter()
    if jobs <= 1 or len(tasks) <= 1:
        for t in tasks:
            total.update(fn(t))
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            for part in ex.map(fn, tasks):
                total.update(part)
    return total


def _classify_with(genus_fn: Callable[[Permutation], int], alpha: Permutation) -> tuple[int, int, int, bool]:
    return num_cycles(alpha), genus_fn(alpha), len(back_points(alpha)), is_reduced(alpha)


def _cache_dir(cache: str | os.PathLike | None) -> Path | None:
    if cache is not None:
        return Path(cache)
    env = os.environ.get(CACHE_ENV)
    return Path(env) if env else None


def _read_cache(path: Path) -> Counter | None:
    if not path.is_file():
        return None
    out: Counter = Counter()
    with path.open(newline="") as fh:
        for row in csv.DictReader(fh):
            out[(int(row["k"]), int(row["genus"]), int(row["backpoints"]), row["reduced"] == "1")] = int(row["count"])
    return out


def _write_cache(path: Path, n: int, counts: Counter) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    with tmp.open("w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "k", "genus", "backpoints", "reduced", "count"])
        for (k, g, b, r), c in sorted(counts.items()):
            w.writerow([n, k, g, b, int(r), c])
    tmp.replace(path)


_MEMO: dict[tuple[str, int], Counter] = {}


def _class_counts_raw(kind: str, n: int, jobs: int) -> Counter:
    if (kind, n) in _MEMO:
        return _MEMO[kind, n]
    if kind == "permutation":
        tasks = [(n, None)] if n == 0 else [(n, f) for f in range(n)]
        counts = _run_chunks(_permutation_chunk, tasks, jobs)
    else:
        tasks = [(n, ())] if n < 2 else [(n, (0, 0)), (n, (0, 1))]
        if n >= 3:
            tasks = [(n, pre + (s,)) for _, pre in tasks for s in range(max(pre) + 2)]
        counts = _run_chunks(_partition_chunk, tasks, jobs)
    _MEMO[kind, n] = counts
    return counts


def class_counts(kind: str, n: int, jobs: int = 1,
                 cache: str | os.PathLike | None = None,
                 genus_fn: Callable[[Permutation], int] | None = None) -> Counter:
    """Histogram of ``ClassKey`` values over all objects of size ``n``.

    With ``genus_fn`` the reference implementation is used object by object
    (no caching), so a substitute genus function is honoured.
    """
    _check_limit(kind, n)
    if genus_fn is not None:
        if kind == "permutation":
            objs: Iterable[Permutation] = enumerate_permutations(n)
        else:
            objs = (Permutation.from_cycles(p.blocks, n) for p in enumerate_set_partitions(n))
        raw = Counter(_classify_with(genus_fn, a) for a in objs)
        return Counter({ClassKey(n, *key): c for key, c in raw.items()})
    folder = _cache_dir(cache)
    path = folder / f"{kind}-{n}.csv" if folder else None
    raw = _read_cache(path) if path else None
    if raw is None:
        raw = _class_counts_raw(kind, n, max(1, jobs))
        if path:
            _write_cache(path, n, raw)
    return Counter({ClassKey(n, *key): c for key, c in raw.items()})


def brute_table(kind: str, n_max: int, genus: int = 1, reduced: bool = False,
                backpoints: Backpoints = "any", n_min: int = 0, jobs: int = 1,
                cache: str | os.PathLike | None = None,
                genus_fn: Callable[[Permutation], int] | None = None) -> CountTable:
    """Counts by ``(n, k)`` of one slice of the class histogram.

    ``reduced=True`` keeps only reduced objects; ``backpoints`` keeps only
    objects with that many back points.
    """
    _check_limit(kind, n_max)
    bp = 0 if kind == "partition" and backpoints == "any" else backpoints
    sel = "any" if kind == "partition" else _count._selector(bp)
    entries: Counter = Counter()
    for n in range(n_min, n_max + 1):
        for key, c in class_counts(kind, n, jobs, cache, genus_fn).items():
            if key.genus != genus or (reduced and not key.reduced):
                continue
            if sel != "any" and key.backpoints != sel:
                continue
            entries[(n, key.k)] += c
    return CountTable(kind, reduced, bp, "bruteforce", dict(entries))


def extension_count(rho: Permutation, n: int, k: int) -> int:
    """Permutations of S_n with ``k`` cycles whose reduced form is ``rho``."""
    _check_limit("permutation", n)
    if not is_reduced(rho):
        raise DomainError(f"{rho} is not reduced")
    if rho.n > n:
        return 0
    target_genus = genus(rho)
    total = 0
    for images in permutations(range(n)):
        kk, g, _, _ = _classify(images)
        if kk != k or g != target_genus:
            continue
        alpha = Permutation(tuple(v + 1 for v in images))
        if reduce_fully(alpha).result == rho:
            total += 1
    return total


# -- verification suite ------------------------------------------------------

class _Check:
    def __init__(self, name: str):
        self.name = name
        self.witness: str | None = None

    def fail(self, witness: str) -> bool:
        if self.witness is None:
            self.witness = witness
        return False

    def report(self) -> dict:
        return {"name": self.name, "passed": self.witness is None, "witness": self.witness}


def _bell(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def _compare_tables(chk: _Check, brute: CountTable, expected: Callable[[int, int], int],
                    n_range: Iterable[int], label: str) -> None:
    for n in n_range:
        for k in range(n + 1):
            want = expected(n, k)
            got = brute[(n, k)]
            if got != want:
                chk.fail(f"{label} n={n} k={k}: enumeration {got}, formula {want}")
                return


def verify_suite(n_max: int, jobs: int = 1,
                 genus_fn: Callable[[Permutation], int] = genus,
                 structure_max: int | None = None,
                 seed: int = 0) -> dict:
    """Run every invariant that can be checked exhaustively up to ``n_max``.

    Structure theorems (four-colorings, canonical forms, reduction order)
    are checked up to ``structure_max``, default ``min(n_max, 6)``.
    Returns ``{"schema_version": 1, "n_max", "passed", "checks": [...]}``
    where each check carries its first counterexample as ``witness``.
    """
    _check_limit("permutation", n_max)
    smax = min(n_max, 6) if structure_max is None else min(structure_max, n_max)
    custom = None if genus_fn is genus else genus_fn
    checks: list[_Check] = []

    def new(name: str) -> _Check:
        c = _Check(name)
        checks.append(c)
        return c

    perm_hist = {n: class_counts("permutation", n, jobs, genus_fn=custom) for n in range(n_max + 1)}
    part_hist = {n: class_counts("partition", n, jobs, genus_fn=custom) for n in range(n_max + 1)}

    chk = new("kernel_matches_reference_genus")
    for n in range(min(n_max, 6) + 1):
        for alpha in enumerate_permutations(n):
            g = genus_fn(alpha)
            kern = _classify(tuple(v - 1 for v in alpha.images))
            if g != kern[1] or num_cycles(alpha) != kern[0] or len(back_points(alpha)) != kern[2] \
                    or is_reduced(alpha) != kern[3]:
                chk.fail(f"{alpha}: reference genus {g}, kernel {kern}")
                break
        if chk.witness:
            break

    chk = new("genus_histogram_totals")
    for n in range(n_max + 1):
        if sum(perm_hist[n].values()) != factorial(n):
            chk.fail(f"permutations n={n}: {sum(perm_hist[n].values())} != {factorial(n)}")
        if sum(part_hist[n].values()) != _bell(n):
            chk.fail(f"partitions n={n}: {sum(part_hist[n].values())} != Bell {_bell(n)}")
        bad = [key for key in perm_hist[n] if key.genus < 0]
        if bad:
            chk.fail(f"negative genus {bad[0]}")

    chk = new("back_points_twice_genus")
    for n in range(min(n_max, 7) + 1):
        for alpha in enumerate_permutations(n):
            if len(back_points(alpha)) + len(back_points(kreweras(alpha))) != 2 * genus_fn(alpha):
                chk.fail(f"{alpha} (n={n})")
                break
        if chk.witness:
            break

    def table(hist, genus_val, reduced=False, bp="any"):
        entries: Counter = Counter()
        for n, h in hist.items():
            for key, c in h.items():
                if key.genus == genus_val and (not reduced or key.reduced) and (bp == "any" or key.backpoints == bp):
                    entries[(n, key.k)] += c
        return CountTable("permutation", reduced, bp, "bruteforce", dict(entries))

    chk = new("genus0_is_narayana")
    _compare_tables(chk, table(perm_hist, 0), _count.narayana, range(1, n_max + 1), "permutations")
    _compare_tables(chk, table(part_hist, 0), _count.narayana, range(1, n_max + 1), "partitions")

    chk = new("genus1_back_points_at_most_two")
    for n, h in perm_hist.items():
        bad = [key for key in h if key.genus == 1 and key.backpoints > 2]
        if bad:
            chk.fail(f"{bad[0]}")

    chk = new("genus1_partition_counts")
    _compare_tables(chk, table(part_hist, 1), lambda n, k: _count.full_count(n, k, 0),
                    range(1, n_max + 1), "partitions")

    chk = new("genus1_permutation_counts_by_back_points")
    for j in (0, 1, 2, "any"):
        _compare_tables(chk, table(perm_hist, 1, bp=j), lambda n, k, j=j: _count.full_count(n, k, j),
                        range(1, n_max + 1), f"j={j}")

    chk = new("reduced_genus1_counts")
    _compare_tables(chk, table(part_hist, 1, reduced=True), lambda n, k: _count.reduced_count(n, k, 0),
                    range(1, n_max + 1), "partitions")
    for j in (0, 1, 2, "any"):
        _compare_tables(chk, table(perm_hist, 1, reduced=True, bp=j),
                        lambda n, k, j=j: _count.reduced_count(n, k, j), range(1, n_max + 1), f"j={j}")

    chk = new("series_matches_formulas")
    trunc = max(n_max, 4)
    for name, fn, j in (("R0", _count.reduced_count, 0), ("R1", _count.reduced_count, 1),
                        ("R2", _count.reduced_count, 2), ("Rstar", _count.reduced_count, "any"),
                        ("P0", _count.full_count, 0), ("P1", _count.full_count, 1),
                        ("P2", _count.full_count, 2), ("Pstar", _count.full_count, "any")):
        s = _series.expand_named(name, trunc)
        for n in range(trunc + 1):
            for k in range(n + 1):
                if s.coefficient(n, k) != fn(n, k, j):
                    chk.fail(f"{name} [x^{n} y^{k}] = {s.coefficient(n, k)}, formula {fn(n, k, j)}")
    D = _series.solve_D(trunc)
    for n in range(trunc + 1):
        for k in range(n + 1):
            if D.coefficient(n, k) != _count.narayana(n, k):
                chk.fail(f"D [x^{n} y^{k}] = {D.coefficient(n, k)}")

    chk = new("reduction_lift")
    for r, p in (("R0", "P0"), ("R1", "P1"), ("R2", "P2"), ("Rstar", "Pstar")):
        if _series.lift_reduced_to_full(_series.expand_named(r, trunc)) != _series.expand_named(p, trunc):
            chk.fail(f"lift({r}) != {p} to x^{trunc}")

    rng = random.Random(seed)
    genus1 = {n: [a for a in enumerate_permutations(n) if genus_fn(a) == 1] for n in range(smax + 1)}

    chk = new("colored_partitions_classify")
    for n in range(1, smax + 1):
        for p in enumerate_set_partitions(n, is_noncrossing):
            for cp in all_colorings(n):
                colored = ColoredPartition(p, cp)
                alpha = phi_map(colored)
                g = genus_fn(alpha)
                cls = colored_genus_classify(colored)
                if g not in (0, 1) or cls.genus != g:
                    chk.fail(f"{colored}: genus {g}, classified {cls.genus}")
                elif g == 1 and not is_separating(alpha, coloring_to_separating(cp)):
                    chk.fail(f"{colored}: coloring points do not separate {alpha}")

    chk = new("separating_points_exist")
    for n, perms in genus1.items():
        for alpha in perms:
            try:
                sp = find_separating(alpha)
                if phi_map(induced_representation(alpha, sp)) != alpha:
                    chk.fail(f"{alpha}: representation at {sp} does not round trip")
            except (DomainError, ArithmeticError) as exc:
                chk.fail(f"{alpha}: {exc}")

    chk = new("canonical_representation_unique")
    for n, perms in genus1.items():
        for alpha in perms:
            if not is_reduced(alpha):
                continue
            try:
                sp = canonical_separating(alpha)
            except DomainError as exc:
                chk.fail(f"{alpha}: {exc}")
                continue
            if not is_separating(alpha, sp) or canonical_properties(alpha, sp):
                chk.fail(f"{alpha}: canonical points {sp} fail {canonical_properties(alpha, sp)}")
            others = [q for q in separating_points_of(alpha) if q != sp and not canonical_properties(alpha, q)]
            if others:
                chk.fail(f"{alpha}: {others[0]} also satisfies the canonical properties")

    chk = new("reduction_order_independent")
    for n in range(smax + 1):
        for alpha in enumerate_permutations(n):
            target = reduce_fully(alpha)
            if genus_fn(target.result) != genus_fn(alpha):
                chk.fail(f"{alpha}: genus changes under reduction")
            if set(removable_cycles(alpha)) != target.removed_cycles():
                chk.fail(f"{alpha}: removable {sorted(removable_cycles(alpha))} "
                         f"vs removed {sorted(target.removed_cycles())}")
            for _ in range(3):
                cur = alpha
                while True:
                    found = trivial_cycles(cur)
                    if not found:
                        break
                    cur = reduce_once(cur, rng.choice(found))
                if cur != target.result:
                    chk.fail(f"{alpha}: random order gives {cur}, canonical order {target.result}")
                    break

    reports = [c.report() for c in checks]
    return {
        "schema_version": 1,
        "n_max": n_max,
        "structure_max": smax,
        "passed": all(r["passed"] for r in reports),
        "checks": reports,
    }

