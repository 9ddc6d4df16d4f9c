"""Labeled maximal outerplanar graphs and their chord-length measurements.

A graph of order ``n`` is the cycle ``0, 1, ..., n-1`` (clockwise) plus a set of
``n - 3`` pairwise non-crossing chords triangulating its interior. In 1-based
notation ``v_1 .. v_n``, vertex ``i`` here is ``v_{i+1}``.

Layer counts can be half-integral (a diameter contributes 1/2 to every cycle
edge), so they are carried as :class:`HalfInt`, which stores twice the value.
No floating point is involved in any chord-length arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from chordspan.errors import (
    ChordCountMismatch,
    CrossingChords,
    InvalidChord,
    NotAChord,
    NotACycleEdge,
    NotAnEar,
)

Chord = tuple[int, int]


@functools.total_ordering
@dataclass(frozen=True)
class HalfInt:
    """Exact non-negative half-integer, stored as ``doubled = 2 * value``."""

    doubled: int

    def __post_init__(self):
        if self.doubled < 0:
            raise ValueError("HalfInt must be non-negative")

    @classmethod
    def of(cls, value: int) -> HalfInt:
        return cls(2 * value)

    @property
    def is_integer(self) -> bool:
        return self.doubled % 2 == 0

    def _coerce(self, other):
        if isinstance(other, HalfInt):
            return other.doubled
        if isinstance(other, int):
            return 2 * other
        return NotImplemented

    def __add__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return HalfInt(self.doubled + d)

    __radd__ = __add__

    def __eq__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return self.doubled == d

    def __lt__(self, other):
        d = self._coerce(other)
        if d is NotImplemented:
            return d
        return self.doubled < d

    def __hash__(self):
        return hash(self.doubled)

    def __int__(self):
        if not self.is_integer:
            raise ValueError(f"{self} is not an integer")
        return self.doubled // 2

    def __str__(self):
        if self.is_integer:
            return str(self.doubled // 2)
        return f"{self.doubled}/2"

    def __repr__(self):
        return f"HalfInt({self})"


@dataclass(frozen=True)
class MopGraph:
    """A maximal outerplanar graph: order plus a sorted tuple of normalized chords.

    Build instances with :func:`validate`. Equality and hashing compare the order
    and the chord set.
    """

    n: int
    chords: tuple[Chord, ...]

    @classmethod
    def trusted(cls, n: int, chords: Iterable[Chord]) -> MopGraph:
        """Wrap a chord set already known to be valid; skips all checks."""
        return cls(n, tuple(sorted(chords)))

    @cached_property
    def chord_set(self) -> frozenset[Chord]:
        return frozenset(self.chords)

    @cached_property
    def neighbors(self) -> tuple[frozenset[int], ...]:
        n = self.n
        adj = [{(v - 1) % n, (v + 1) % n} for v in range(n)]
        for u, v in self.chords:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(s) for s in adj)

    def degree(self, v: int) -> int:
        return len(self.neighbors[v])

    def __len__(self):
        return len(self.chords)


def normalize(u: int, v: int) -> Chord:
    return (u, v) if u < v else (v, u)


def cyclic_distance(n: int, u: int, v: int) -> int:
    d = abs(u - v) % n
    return min(d, n - d)


def crosses(c1: Chord, c2: Chord) -> bool:
    """True when two normalized chords cross in the interior. Shared endpoints never cross."""
    a, b = c1
    c, d = c2
    return a < c < b < d or c < a < d < b


def validate(n: int, chords: Iterable[Sequence[int]]) -> MopGraph:
    """Check a chord list and return the normalized :class:`MopGraph`.

    Raises ChordCountMismatch, InvalidChord or CrossingChords.
    """
    if n < 3:
        raise InvalidChord(f"order must be at least 3, got {n}")
    normalized = []
    for pair in chords:
        if len(pair) != 2:
            raise InvalidChord(f"chord {tuple(pair)!r} is not a vertex pair")
        u, v = (int(x) for x in pair)
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidChord(f"chord {(u, v)} has a vertex outside 0..{n - 1}")
        if cyclic_distance(n, u, v) < 2:
            raise InvalidChord(f"chord {(u, v)} is a loop or a cycle edge")
        normalized.append(normalize(u, v))
    if len(normalized) != n - 3:
        raise ChordCountMismatch(f"order {n} needs {n - 3} chords, got {len(normalized)}")

    # sweep by left endpoint, longest first: a valid set is a laminar family of arcs
    normalized.sort(key=lambda c: (c[0], -c[1]))
    stack: list[Chord] = []
    prev = None
    for c in normalized:
        if c == prev:
            raise InvalidChord(f"duplicate chord {c}")
        prev = c
        while stack and stack[-1][1] <= c[0]:
            stack.pop()
        if stack and c[1] > stack[-1][1]:
            raise CrossingChords(stack[-1], c)
        stack.append(c)

    g = MopGraph(n, tuple(sorted(normalized)))
    if n % 2 == 0:
        assert sum(1 for c in g.chords if chord_length(n, c) * 2 == n) <= 1
    return g


# -- measurements -------------------------------------------------------------


def chord_length(n: int, c: Chord) -> int:
    """Length of the shorter boundary path between the chord's endpoints."""
    d = abs(c[1] - c[0])
    return min(d, n - d)


def tcl(g: MopGraph) -> int:
    """Total chord length: the sum of all chord lengths."""
    n = g.n
    spans = [v - u for u, v in g.chords]
    # a span past n/2 is measured the other way round
    return sum(spans) - sum(2 * d - n for d in spans if 2 * d > n)


def has_diameter(g: MopGraph) -> bool:
    n = g.n
    return n % 2 == 0 and any(2 * (v - u) == n for u, v in g.chords)


def _edge_start(n: int, edge: Sequence[int]) -> int:
    a, b = (int(x) for x in edge)
    if 0 <= a < n and 0 <= b < n:
        if b == (a + 1) % n:
            return a
        if a == (b + 1) % n:
            return b
    raise NotACycleEdge(f"{tuple(edge)} is not a cycle edge of the {n}-cycle")


def _short_arc_start(n: int, c: Chord) -> tuple[int, int]:
    """(first edge index, arc length) of the shorter arc; edge i is (i, i+1)."""
    u, v = c
    d = v - u
    if 2 * d <= n:
        return u, d
    return v, n - d


def layer_count(g: MopGraph, edge: Sequence[int]) -> HalfInt:
    """How many chords layer the cycle edge, plus 1/2 when ``g`` has a diameter.

    A non-diameter chord layers an edge when the edge lies on its shorter arc.
    The diameter never counts as a full unit.
    """
    n = g.n
    e = _edge_start(n, edge)
    doubled = 0
    for c in g.chords:
        start, length = _short_arc_start(n, c)
        if 2 * length == n:
            doubled += 1
        elif (e - start) % n < length:
            doubled += 2
    return HalfInt(doubled)


def layer_profile(g: MopGraph) -> list[int]:
    """Doubled layer counts for every cycle edge ``(i, i+1)``, via a difference array."""
    n = g.n
    diff = [0] * (n + 1)
    half = 0
    for u, v in g.chords:
        d = v - u
        if 2 * d == n:
            half = 1
        elif 2 * d < n:
            diff[u] += 2
            diff[v] -= 2
        else:
            # shorter arc runs v .. n-1, 0 .. u
            diff[v] += 2
            diff[n] -= 2
            diff[0] += 2
            diff[u] -= 2
    out = []
    run = 0
    for i in range(n):
        run += diff[i]
        out.append(run + half)
    return out


def max_layer(g: MopGraph) -> HalfInt:
    return HalfInt(max(layer_profile(g)))


def count_ears(g: MopGraph) -> int:
    """Number of ears: vertices whose two cycle neighbours are joined by a chord.

    For n >= 5 this equals the number of length-2 chords. At n = 4 the single
    chord cuts off two vertices, so the count is 2.
    """
    n = g.n
    cs = g.chord_set
    return sum(1 for w in range(n) if normalize((w - 1) % n, (w + 1) % n) in cs)


def degree_two_vertices(g: MopGraph) -> list[int]:
    return [v for v in range(g.n) if g.degree(v) == 2]


# -- transformations ----------------------------------------------------------


def subdivide(g: MopGraph, edge: Sequence[int]) -> MopGraph:
    """Insert a vertex into cycle edge ``(a, a+1)`` and keep ``(a, a+1)`` as a chord.

    The new vertex takes label ``a + 1`` and every label above ``a`` shifts up by
    one. For the wrap-around edge ``(n-1, 0)`` the new vertex is ``n`` and no
    label moves.
    """
    n = g.n
    a = _edge_start(n, edge)
    if a == n - 1:
        new = list(g.chords)
        new.append((0, n - 1))
    else:
        new = [(u if u <= a else u + 1, v if v <= a else v + 1) for u, v in g.chords]
        new.append((a, a + 2))
    out = MopGraph.trusted(n + 1, new)
    if __debug__:
        bonus = 3 if has_diameter(g) else 4
        assert 2 * tcl(out) == 2 * tcl(g) + bonus + layer_count(g, (a, (a + 1) % n)).doubled
    return out


def contract_ear(g: MopGraph, v: int) -> MopGraph:
    """Delete the degree-2 vertex ``v``; its ear chord becomes a cycle edge."""
    n = g.n
    if n < 4:
        raise NotAnEar("a triangle has no ear to contract")
    if not 0 <= v < n or g.degree(v) != 2:
        raise NotAnEar(f"vertex {v} does not have degree 2")
    ear = normalize((v - 1) % n, (v + 1) % n)
    new = [(a - (a > v), b - (b > v)) for a, b in g.chords if (a, b) != ear]
    return MopGraph.trusted(n - 1, new)


def flip_partner(g: MopGraph, c: Sequence[int]) -> Chord:
    """The other diagonal of the quadrilateral formed by the two triangles on ``c``."""
    c = normalize(*c)
    if c not in g.chord_set:
        raise NotAChord(f"{c} is not a chord of the graph")
    u, v = c
    common = g.neighbors[u] & g.neighbors[v]
    # exactly one apex on each side in a triangulated polygon
    inside = [w for w in common if u < w < v]
    outside = [w for w in common if not u < w < v]
    assert len(inside) == 1 and len(outside) == 1, (c, sorted(common))
    return normalize(inside[0], outside[0])


def flip(g: MopGraph, c: Sequence[int]) -> MopGraph:
    """Replace chord ``c`` by the opposite diagonal of its quadrilateral."""
    c = normalize(*c)
    new = flip_partner(g, c)
    return MopGraph.trusted(g.n, [x for x in g.chords if x != c] + [new])


def cycle_edges(n: int) -> list[Chord]:
    return [(i, (i + 1) % n) for i in range(n)]


def random_mop(n: int, rng) -> MopGraph:
    """Random graph of order ``n`` grown from a triangle by subdividing random cycle edges.

    Every graph is reachable this way; the distribution is not uniform.
    ``rng`` is a :class:`random.Random`.
    """
    if n < 3:
        raise ValueError(f"order must be at least 3, got {n}")
    g = MopGraph(3, ())
    while g.n < n:
        a = rng.randrange(g.n)
        g = subdivide(g, (a, (a + 1) % g.n))
    return g
