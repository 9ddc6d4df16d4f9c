"""Exhaustive enumeration of labeled polygon triangulations, and brute-force checks.

Triangulations of the n-gon are generated by the usual recursion: the root edge
``(0, n-1)`` lies in exactly one triangle, whose apex splits the polygon into two
smaller ones. The apex of that root triangle also names a shard, so
``n - 2`` shards partition the whole enumeration and can run independently.

Everything here is an oracle for the closed forms in :mod:`chordspan.builders`;
it never calls them on the enumeration path.
"""

from __future__ import annotations

import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor, ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterator, Optional

from chordspan.builders import build_greedy, max_tcl, min_tcl
from chordspan.errors import CapExceeded, VerificationFailure
from chordspan.graph_core import Chord, MopGraph, count_ears, layer_profile, tcl

DEFAULT_CAP = 16

# sub-polygons with at most this many boundary steps are materialized and reused
_SMALL_SPAN = 10

Visitor = Callable[[MopGraph], None]


def catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


@dataclass
class EnumStats:
    """Aggregates over one enumeration (or one shard of it).

    ``tcl_ears`` is the joint histogram of (TCL, ear count); ``min_max_layer`` is
    the smallest doubled max layer count seen, filled only when layer tracking
    is switched on.
    """

    n: int
    count: int = 0
    tcl_histogram: Counter = field(default_factory=Counter)
    tcl_ears: Counter = field(default_factory=Counter)
    min_max_layer: Optional[int] = None

    @property
    def min_seen(self) -> int:
        return min(self.tcl_histogram)

    @property
    def max_seen(self) -> int:
        return max(self.tcl_histogram)

    @property
    def ears_at_max(self) -> set[int]:
        top = self.max_seen
        return {e for (t, e) in self.tcl_ears if t == top}

    def merge(self, other: EnumStats) -> EnumStats:
        if other.n != self.n:
            raise ValueError("cannot merge stats of different orders")
        layers = [x for x in (self.min_max_layer, other.min_max_layer) if x is not None]
        return EnumStats(
            self.n,
            self.count + other.count,
            self.tcl_histogram + other.tcl_histogram,
            self.tcl_ears + other.tcl_ears,
            min(layers) if layers else None,
        )


@lru_cache(maxsize=1024)
def _small(lo: int, hi: int) -> tuple[tuple[Chord, ...], ...]:
    return tuple(_tri(lo, hi))


def _tri(lo: int, hi: int) -> Iterator[tuple[Chord, ...]]:
    """Chord tuples triangulating the polygon lo, lo+1, ..., hi (base edge excluded)."""
    if hi - lo < 2:
        yield ()
        return
    for k in range(lo + 1, hi):
        yield from _with_apex(lo, hi, k)


def _with_apex(lo: int, hi: int, k: int) -> Iterator[tuple[Chord, ...]]:
    own: tuple[Chord, ...] = ()
    if k - lo >= 2:
        own += ((lo, k),)
    if hi - k >= 2:
        own += ((k, hi),)
    if hi - k <= _SMALL_SPAN:
        rights = _small(k, hi)
        for left in (_small(lo, k) if k - lo <= _SMALL_SPAN else _tri(lo, k)):
            head = left + own
            for right in rights:
                yield head + right
    else:
        for left in (_small(lo, k) if k - lo <= _SMALL_SPAN else _tri(lo, k)):
            head = left + own
            for right in _tri(k, hi):
                yield head + right


def _check_order(n: int, cap: int) -> None:
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    if n > cap:
        raise CapExceeded(f"order {n} is above the enumeration cap {cap}; raise the cap explicitly")


def iter_shard(n: int, apex: int) -> Iterator[tuple[Chord, ...]]:
    """Raw chord tuples of every triangulation whose root triangle is (0, apex, n-1)."""
    yield from _with_apex(0, n - 1, apex)


def shard_apexes(n: int) -> range:
    return range(1, n - 1)


def iter_triangulations(n: int, cap: int = DEFAULT_CAP) -> Iterator[MopGraph]:
    """Every labeled triangulation of the n-gon, in deterministic order."""
    _check_order(n, cap)
    for apex in shard_apexes(n):
        for chords in iter_shard(n, apex):
            yield MopGraph.trusted(n, chords)


def enumerate_shard(
    n: int, apex: int, visitor: Optional[Visitor] = None, track_layers: bool = False
) -> EnumStats:
    lens = [min(d, n - d) for d in range(n)]
    ear_weight = [int(d == 2) + int(d == n - 2) for d in range(n)]
    hist: Counter = Counter()
    joint: Counter = Counter()
    best_layer = None
    count = 0
    for chords in iter_shard(n, apex):
        total = 0
        ears = 0
        for u, v in chords:
            d = v - u
            total += lens[d]
            ears += ear_weight[d]
        count += 1
        hist[total] += 1
        joint[total, ears] += 1
        if visitor is not None or track_layers:
            g = MopGraph.trusted(n, chords)
            if track_layers:
                m = max(layer_profile(g))
                if best_layer is None or m < best_layer:
                    best_layer = m
            if visitor is not None:
                visitor(g)
    return EnumStats(n, count, hist, joint, best_layer)


def _shard_job(args):
    n, apex, track_layers = args
    return enumerate_shard(n, apex, None, track_layers)


def enumerate_all(
    n: int,
    visitor: Optional[Visitor] = None,
    *,
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    track_layers: bool = False,
) -> EnumStats:
    """Visit every triangulation of the n-gon once and return aggregate stats.

    With ``workers > 1`` shards run concurrently: in worker processes when there
    is no visitor, otherwise in threads, in which case the visitor must be
    thread-safe. Stats are merged in shard order either way.
    """
    _check_order(n, cap)
    apexes = list(shard_apexes(n))
    if workers <= 1:
        parts = [enumerate_shard(n, a, visitor, track_layers) for a in apexes]
    elif visitor is None:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_shard_job, [(n, a, track_layers) for a in apexes]))
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(lambda a: enumerate_shard(n, a, visitor, track_layers), apexes))
    stats = EnumStats(n)
    for part in parts:
        stats = stats.merge(part)
    return stats


# -- verification -------------------------------------------------------------


def spectrum_by_enumeration(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> set[int]:
    return set(enumerate_all(n, cap=cap, workers=workers).tcl_histogram)


def _find(n: int, cap: int, predicate: Callable[[MopGraph], bool]) -> Optional[MopGraph]:
    for g in iter_triangulations(n, cap):
        if predicate(g):
            return g
    return None


@dataclass
class ExtremesReport:
    n: int
    min_seen: int
    max_seen: int
    min_witness: MopGraph
    max_witness: MopGraph
    stats: EnumStats


def verify_extremes(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> ExtremesReport:
    stats = enumerate_all(n, cap=cap, workers=workers)
    lo, hi = stats.min_seen, stats.max_seen
    lo_g = _find(n, cap, lambda g: tcl(g) == lo)
    hi_g = _find(n, cap, lambda g: tcl(g) == hi)
    if lo != min_tcl(n):
        raise VerificationFailure(f"n={n}: enumerated minimum {lo} != formula {min_tcl(n)}", lo_g)
    if n >= 4 and hi != max_tcl(n):
        raise VerificationFailure(f"n={n}: enumerated maximum {hi} != formula {max_tcl(n)}", hi_g)
    return ExtremesReport(n, lo, hi, lo_g, hi_g, stats)


@dataclass
class EarsReport:
    n: int
    maximal_graphs: int
    two_ear_graphs: int


def verify_two_ears_characterization(n: int, cap: int = DEFAULT_CAP, workers: int = 1) -> EarsReport:
    """TCL-maximal if and only if exactly two ears, over the whole enumeration."""
    if n < 5:
        raise ValueError("the characterization is stated for n >= 5")
    stats = enumerate_all(n, cap=cap, workers=workers)
    top = max_tcl(n)
    for (t, ears), _ in sorted(stats.tcl_ears.items()):
        if (t == top) != (ears == 2):
            bad = _find(n, cap, lambda g: tcl(g) == t and count_ears(g) == ears)
            raise VerificationFailure(f"n={n}: graph with tcl={t} has {ears} ears", bad)
    return EarsReport(
        n,
        sum(c for (t, _), c in stats.tcl_ears.items() if t == top),
        sum(c for (_, e), c in stats.tcl_ears.items() if e == 2),
    )


def verify_theta(k: int, cap: int = DEFAULT_CAP) -> int:
    """Largest order admitting a triangulation with every layer count at most ``k``.

    Scans orders upward through ``3 * 2**k + 1``, checking the greedy graph of
    order ``3 * 2**k`` as witness and exhausting order ``3 * 2**k + 1``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    target = 3 * 2**k
    _check_order(target + 1, cap)
    limit = 2 * k
    largest = None
    for n in range(3, target + 2):
        stats = enumerate_all(n, cap=cap, track_layers=True)
        if stats.min_max_layer <= limit:
            largest = n
    witness = build_greedy(target).graph
    if max(layer_profile(witness)) > limit:
        raise VerificationFailure(f"greedy graph of order {target} exceeds layer {k}", witness)
    if largest != target:
        raise VerificationFailure(f"theta({k}) = {largest}, expected {target}")
    return largest


def max_layer_bound_holds(g: MopGraph) -> bool:
    """Every layer count is at most (n - 3) / 2."""
    return max(layer_profile(g)) <= g.n - 3
