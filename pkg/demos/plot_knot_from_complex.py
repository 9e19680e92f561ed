"""
Reading a knot diagram off a cell complex
=========================================

Any cellulation of the sphere determines a knot diagram: its 1-skeleton is
taken as a Tait graph, each edge becomes a crossing, and a sign per edge
picks the over-strand. Going back recovers the complex.
"""

import random

from taitmorse import (
    complex_from_map,
    count_spanning_trees,
    knot_from_complex,
    map_from_pd,
    random_planar_map,
    serialize_pd,
)
from taitmorse.morse import complex_roundtrip

# %%
# A random cellulation with seven edges.
m = random_planar_map(7, random.Random(3))
d = complex_from_map(m)
print("cells V, E, F:", d.counts())

# %%
# All-positive signs give an alternating diagram; flipping every sign gives
# its mirror image on the same universe.
plus = knot_from_complex(d)
minus = knot_from_complex(d, [-1] * m.edge_count)
print(serialize_pd(plus))
print(serialize_pd(minus))
print("same universe:", map_from_pd(plus).is_isomorphic(map_from_pd(minus)))

# %%
# The determinant of an alternating diagram is the number of spanning trees
# of its Tait graph.
print("spanning trees:", count_spanning_trees(m))

# %%
# Complex -> diagram -> complex, with mixed signs.
signs = [1, -1] * 4
print("round-trip:", complex_roundtrip(d, signs[: m.edge_count]).is_isomorphic(d))
