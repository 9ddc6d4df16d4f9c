"""
Checking the closed forms by brute force
========================================

Every triangulation of a small polygon is generated once, and the histogram
of TCL values is compared with the closed forms.
"""

from chordspan import catalan, enumerate_all, max_tcl, min_tcl, tcl

for n in range(5, 13):
    stats = enumerate_all(n)
    assert stats.count == catalan(n - 2)
    values = sorted(stats.tcl_histogram)
    gaps = set(range(values[0], values[-1] + 1)) - set(values)
    print(
        f"n={n:2d} graphs={stats.count:6d} min={values[0]} ({min_tcl(n)})"
        f" max={values[-1]} ({max_tcl(n)}) gaps={sorted(gaps) or 'none'}"
        f" ears at max={sorted(stats.ears_at_max)}"
    )

# A visitor sees each graph as it is produced. Here it collects the maximisers at n=8.
top = []


def keep_maximal(g):
    if tcl(g) == max_tcl(8):
        top.append(g)


enumerate_all(8, visitor=keep_maximal)
print(len(top), "maximal graphs at n=8, e.g.", top[0].chords)
