"""Witness graphs for every total chord length between the minimum and the maximum.

The re-anchoring walk turns the shell (a fan at vertex 0) into the greedy graph
by flips. At each stage the current anchor ``a`` holds a fan over the face
``a, x1, x2, ..., x_{m-1}``; the chord ``(a, x2)`` is frozen as permanent and
every other fan chord ``(a, x_j)`` is flipped, in order, to ``(x2, x_{j+1})``.
The fan then sits at ``x2`` over a face one vertex smaller, and the frozen
chords are exactly the greedy chords in their greedy order. The walk stops as
soon as it reaches the greedy graph, which can happen before the last stage.

Values the walk skips are reached by a bounded best-first search over flips,
started from the walk graph whose TCL is nearest the target.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from chordspan.builders import build_greedy, build_shell, max_tcl, min_tcl
from chordspan.errors import NotAChord, OutOfRange, SearchExhausted, WalkStuck
from chordspan.graph_core import Chord, MopGraph, chord_length, flip_partner, normalize, tcl

DEFAULT_FRONTIER = 100_000
DEFAULT_SEEDS = 256


@dataclass(frozen=True)
class ReanchorStep:
    removed: Chord
    added: Chord
    anchor_before: int
    anchor_after: int
    tcl_after: int
    permanent_added: Optional[Chord] = None


@dataclass(frozen=True)
class FlipMove:
    removed: Chord
    added: Chord
    tcl_after: int


Move = Union[ReanchorStep, FlipMove]


@dataclass(frozen=True)
class WitnessReport:
    graph: MopGraph
    target: int
    moves: tuple[Move, ...]
    certified: bool


def _apply_flip(g: MopGraph, removed: Chord) -> tuple[MopGraph, Chord]:
    added = flip_partner(g, removed)
    return MopGraph.trusted(g.n, [c for c in g.chords if c != removed] + [added]), added


@dataclass(frozen=True)
class _Walk:
    graphs: tuple[MopGraph, ...]
    steps: tuple[ReanchorStep, ...]
    permanent: tuple[Chord, ...]


@lru_cache(maxsize=32)
def _walk(n: int) -> _Walk:
    g = build_shell(n)
    goal = build_greedy(n).graph
    graphs = [g]
    steps = []
    permanent = []
    face = list(range(n))
    total = tcl(g)
    while len(face) > 3 and g != goal:
        a, x2 = face[0], face[2]
        frozen = normalize(a, x2)
        if frozen not in g.chord_set:
            raise WalkStuck(f"n={n}: expected fan chord {frozen} at anchor {a}")
        permanent.append(frozen)
        fresh = frozen
        for j in range(3, len(face) - 1):
            c = normalize(a, face[j])
            want = normalize(x2, face[j + 1])
            try:
                g_next, added = _apply_flip(g, c)
            except NotAChord as exc:
                raise WalkStuck(f"n={n}: {c} vanished before its flip") from exc
            if added != want:
                raise WalkStuck(f"n={n}: flipping {c} gave {added}, expected {want}")
            total += chord_length(n, added) - chord_length(n, c)
            steps.append(ReanchorStep(c, added, a, x2, total, fresh))
            fresh = None
            g = g_next
            graphs.append(g)
            if g == goal:
                break
        face = face[2:] + [a]
    return _Walk(tuple(graphs), tuple(steps), tuple(permanent))


def reanchor_steps(n: int) -> tuple[ReanchorStep, ...]:
    if n < 5:
        raise ValueError("the re-anchoring walk is defined for n >= 5")
    return _walk(n).steps


def permanent_chords(n: int) -> tuple[Chord, ...]:
    """Chords frozen along the walk, in the order they were frozen."""
    if n < 5:
        raise ValueError("the re-anchoring walk is defined for n >= 5")
    return _walk(n).permanent


def reanchor_walk(n: int) -> list[tuple[MopGraph, int]]:
    """Every graph of the walk from the shell to the greedy graph, with its TCL."""
    if n < 5:
        raise ValueError("the re-anchoring walk is defined for n >= 5")
    w = _walk(n)
    tcls = [tcl(w.graphs[0])] + [s.tcl_after for s in w.steps]
    return list(zip(w.graphs, tcls))


def replay(n: int, moves) -> MopGraph:
    """Apply ``moves`` to the shell of order ``n``, checking each one is the expected flip."""
    g = build_shell(n)
    for mv in moves:
        g, added = _apply_flip(g, mv.removed)
        if added != mv.added:
            raise ValueError(f"move {mv} is not a flip of the current graph")
    return g


def _neighbors(n: int, chords: frozenset) -> list[set]:
    adj = [{(v - 1) % n, (v + 1) % n} for v in range(n)]
    for u, v in chords:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def _flips(n: int, chords: frozenset):
    """(removed, added, length change) for every chord, in sorted chord order."""
    adj = _neighbors(n, chords)
    for c in sorted(chords):
        u, v = c
        w1, w2 = adj[u] & adj[v]
        added = (w1, w2) if w1 < w2 else (w2, w1)
        yield c, added, chord_length(n, added) - chord_length(n, c)


def search_flips(
    starts: Sequence[MopGraph],
    target: int,
    max_depth: Optional[int] = None,
    max_states: int = DEFAULT_FRONTIER,
) -> tuple[int, list[FlipMove]]:
    """Flip search from several start graphs to any graph with TCL ``target``.

    Returns the index of the start graph the path leaves from, and the flips.
    Only flips that strictly shrink the distance to the target are taken, so
    every path is monotone and no plateau can trap the search. The closest
    state is expanded first, then the shallowest, then the earliest found, so
    the result is deterministic. Chord sets already seen are skipped.
    """
    n = starts[0].n
    lo, hi = min_tcl(n), max_tcl(n)
    depth_cap = n if max_depth is None else max_depth
    parent: dict = {}
    tie = itertools.count()
    heap = []
    for i, g in enumerate(starts):
        root = frozenset(g.chords)
        if root in parent:
            continue
        t0 = tcl(g)
        if t0 == target:
            return i, []
        parent[root] = i
        heap.append((abs(t0 - target), 0, next(tie), root, t0))
    heapq.heapify(heap)
    best = min(h[0] for h in heap)
    expanded = 0
    while heap:
        gap, depth, _, state, t = heapq.heappop(heap)
        if depth >= depth_cap:
            continue
        expanded += 1
        for removed, added, delta in _flips(n, state):
            t_new = t + delta
            if abs(t_new - target) >= gap or not lo <= t_new <= hi:
                continue
            nxt = (state - {removed}) | {added}
            if nxt in parent:
                continue
            parent[nxt] = (state, FlipMove(removed, added, t_new))
            if t_new == target:
                path = []
                node = nxt
                while not isinstance(parent[node], int):
                    node, mv = parent[node]
                    path.append(mv)
                return parent[node], path[::-1]
            if len(parent) > max_states:
                raise SearchExhausted(
                    f"n={n}, target {target}: frontier limit {max_states} reached",
                    expanded, best,
                )
            best = min(best, abs(t_new - target))
            heapq.heappush(heap, (abs(t_new - target), depth + 1, next(tie), nxt, t_new))
    raise SearchExhausted(f"n={n}, target {target}: no graph within depth {depth_cap}", expanded, best)


def find_graph_with_tcl(
    n: int,
    target: int,
    max_depth: Optional[int] = None,
    max_states: int = DEFAULT_FRONTIER,
    seed_count: int = DEFAULT_SEEDS,
) -> WitnessReport:
    """A graph of order ``n`` whose total chord length is exactly ``target``.

    Moves are recorded from the shell, so :func:`replay` rebuilds the witness.
    """
    if n < 5:
        raise ValueError("witness search is defined for n >= 5")
    lo, hi = min_tcl(n), max_tcl(n)
    if not lo <= target <= hi:
        raise OutOfRange(f"target {target} outside [{lo}, {hi}] for n={n}")
    w = _walk(n)
    tcls = [tcl(w.graphs[0])] + [st.tcl_after for st in w.steps]
    for i, t in enumerate(tcls):
        if t == target:
            return _certify(w.graphs[i], target, w.steps[:i])
    seeds = sorted(range(len(tcls)), key=lambda j: (abs(tcls[j] - target), j))[:seed_count]
    k, extra = search_flips([w.graphs[j] for j in seeds], target, max_depth, max_states)
    i = seeds[k]
    g = w.graphs[i]
    for mv in extra:
        g, _ = _apply_flip(g, mv.removed)
    return _certify(g, target, w.steps[:i] + tuple(extra))


def _certify(g: MopGraph, target: int, moves) -> WitnessReport:
    ok = tcl(g) == target
    assert ok, (tcl(g), target)
    return WitnessReport(g, target, tuple(moves), ok)
