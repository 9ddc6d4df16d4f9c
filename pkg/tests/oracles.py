"""Slow, obviously-correct reference implementations used only by the tests.

None of these call into the code paths they are compared against.
"""

from __future__ import annotations

import itertools
from collections import deque
from fractions import Fraction


def diagonals(n):
    return [(i, j) for i in range(n) for j in range(i + 2, n) if not (i == 0 and j == n - 1)]


def _cross(c1, c2):
    a, b = c1
    c, d = c2
    return a < c < b < d or c < a < d < b


def brute_triangulations(n):
    """All (n-3)-subsets of pairwise non-crossing diagonals, as frozensets."""
    out = []
    for combo in itertools.combinations(diagonals(n), n - 3):
        if all(not _cross(x, y) for x, y in itertools.combinations(combo, 2)):
            out.append(frozenset(combo))
    return out


def brute_length(n, c):
    # walk clockwise both ways around the cycle
    u, v = c
    steps_cw = 0
    x = u
    while x != v:
        x = (x + 1) % n
        steps_cw += 1
    return min(steps_cw, n - steps_cw)


def brute_layer(n, chords, e):
    """Layer count of edge (e, e+1) as a Fraction, walking each chord's short arc."""
    total = Fraction(0)
    diameter = False
    for u, v in chords:
        length = brute_length(n, (u, v))
        if 2 * length == n:
            diameter = True
            continue
        # the short arc starts at whichever endpoint reaches the other clockwise in `length` steps
        start = u if (v - u) % n == length else v
        arc = {(start + i) % n for i in range(length)}
        if e in arc:
            total += 1
    if diameter:
        total += Fraction(1, 2)
    return total


def naive_greedy(n):
    """Literal shortest-clockwise-chord chaining with explicit crossing checks."""
    chords = []
    anchor = 0
    restarts = []
    while len(chords) < n - 3:
        for d in range(2, n - 1):
            b = (anchor + d) % n
            c = (min(anchor, b), max(anchor, b))
            if c in chords or any(_cross(c, x) for x in chords):
                continue
            chords.append(c)
            anchor = b
            break
        else:
            restarts.append(anchor)
            anchor = (anchor + 1) % n
    return chords, restarts


def brute_flip(n, chords, c):
    """Other diagonal of c's quadrilateral, found by trying every diagonal."""
    rest = set(chords) - {c}
    for cand in diagonals(n):
        if cand == c or cand in rest:
            continue
        if all(not _cross(cand, x) for x in rest):
            return cand
    raise AssertionError("no flip partner")


def flip_closure(n, start):
    """BFS over the flip graph from ``start`` using brute_flip."""
    seen = {frozenset(start)}
    queue = deque([frozenset(start)])
    while queue:
        s = queue.popleft()
        for c in s:
            t = frozenset((s - {c}) | {brute_flip(n, s, c)})
            if t not in seen:
                seen.add(t)
                queue.append(t)
    return seen

