"""The greedy (minimal TCL) and shell (maximal TCL) constructions, and the closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import repeat

from chordspan.graph_core import Chord, MopGraph


@dataclass(frozen=True)
class FormulaParams:
    n: int
    k: int


@dataclass(frozen=True)
class GreedyTrace:
    graph: MopGraph
    chord_order: list[Chord]
    anchors: list[int]
    restarts: list[int] = field(default_factory=list)


def formula_params(n: int) -> FormulaParams:
    """k is the largest integer with 3 * 2**k <= n (integer arithmetic only)."""
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    return FormulaParams(n, (n // 3).bit_length() - 1)


def min_tcl(n: int) -> int:
    k = formula_params(n).k
    return n * (k + 2) - 3 * (2 << k)


def max_tcl(n: int) -> int:
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    num = n * n - (9 if n % 2 else 8)
    assert num % 4 == 0
    return num // 4


def build_greedy(n: int) -> GreedyTrace:
    """Chain shortest clockwise chords starting from vertex 0.

    Every chord so far cuts a triangle off one shrinking face, so the shortest
    admissible chord from the anchor always skips exactly one face vertex. The
    construction therefore runs in passes over the face: an even face keeps its
    even positions, an odd face wraps around and restarts two positions in.
    """
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    need = n - 3
    face = list(range(n))
    starts: list[int] = []
    ends: list[int] = []
    while len(starts) < need:
        m = len(face)
        take = min((m + 1) // 2, need - len(starts))
        starts += face[0::2][:take]
        if m % 2 == 0:
            ends += (face[2::2] + face[:1])[:take]
            face = face[0::2]
        else:
            ends += (face[2::2] + face[2:3])[:take]
            face = face[2::2]
    chords = [(u, v) if u < v else (v, u) for u, v in zip(starts, ends)]
    return GreedyTrace(MopGraph.trusted(n, chords), chords, [0] + ends)


def build_shell(n: int) -> MopGraph:
    """The fan of all chords at vertex 0: (0, 2), (0, 3), ..., (0, n-2)."""
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    return MopGraph(n, tuple(zip(repeat(0), range(2, n - 1))))
