"""
Hitting every value in between
==============================

Start from the fan, re-anchor step by step towards the greedy graph, and fill
any value the walk skipped with a short run of flips. The result comes with a
replayable move list.
"""

from chordspan import find_graph_with_tcl, max_tcl, min_tcl, reanchor_walk, tcl, to_dot, to_json
from chordspan.spectrum import replay

n = 30
walk = reanchor_walk(n)
seen = {t for _, t in walk}
print(f"walk at n={n}: {len(walk)} graphs, TCL from {walk[0][1]} down to {walk[-1][1]}")
missing = [l for l in range(min_tcl(n), max_tcl(n) + 1) if l not in seen]
print(f"{len(missing)} values not on the walk, e.g. {missing[:8]}")

target = missing[len(missing) // 2]
report = find_graph_with_tcl(n, target)
print(f"witness for {target}: {len(report.moves)} moves, certified={report.certified}")
assert replay(n, report.moves) == report.graph and tcl(report.graph) == target
print(to_json(report.graph, include_metadata=True))

# DOT output pins every vertex on a circle, so neato draws it as-is:
#   python demos/03_witnesses.py | sed -n '/^graph/,$p' | neato -n -Tsvg > witness.svg
print(to_dot(report.graph))
