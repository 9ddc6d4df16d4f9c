"""Total chord length of maximal outerplanar graphs.

Build the extremal graphs, measure chord lengths and layer counts, enumerate
every triangulation of small polygons, and construct a graph for any total
chord length between the minimum and the maximum.
"""

from chordspan.builders import build_greedy, build_shell, max_tcl, min_tcl
from chordspan.enumeration import (
    catalan,
    enumerate_all,
    iter_triangulations,
    spectrum_by_enumeration,
    verify_extremes,
    verify_theta,
    verify_two_ears_characterization,
)
from chordspan.graph_core import (
    HalfInt,
    MopGraph,
    chord_length,
    contract_ear,
    count_ears,
    flip,
    has_diameter,
    layer_count,
    subdivide,
    tcl,
    validate,
)
from chordspan.io_formats import from_json, to_dot, to_json
from chordspan.spectrum import find_graph_with_tcl, reanchor_walk

__version__ = "0.1.0"
