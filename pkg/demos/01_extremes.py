"""
Smallest and largest total chord length
=======================================

Two families pin down the range of total chord length (TCL) at each order:
the greedy graph sits at the bottom and the fan at vertex 0 sits at the top.
"""

from chordspan import build_greedy, build_shell, count_ears, max_tcl, min_tcl, tcl
from chordspan.graph_core import max_layer

# Twelve vertices. The greedy graph halves the open face on each pass.
trace = build_greedy(12)
print("greedy chord order:", trace.chord_order)
print("greedy TCL:", tcl(trace.graph), "closed form:", min_tcl(12))

# The fan (0, 2), ..., (0, 10) has exactly two ears and the largest TCL.
shell = build_shell(12)
print("fan TCL:", tcl(shell), "closed form:", max_tcl(12), "ears:", count_ears(shell))

# Layer counts are half-integers once a diameter is present.
print("fan max layer:", max_layer(shell))

# The gap between the two grows quadratically.
for n in (10, 100, 1000):
    print(f"n={n:5d}  min={min_tcl(n):7d}  max={max_tcl(n):7d}")
