"""
From a trefoil diagram to its balanced overlaid Tait graph
==========================================================

Walks the trefoil through every stage: PD code, universe, checkerboard
colouring, signed Tait graphs, the overlaid quadrangulation, and finally the
balanced graph left after starring one square.
"""

from taitmorse import (
    balance,
    builtin_diagram,
    checkerboard,
    map_from_pd,
    overlay,
    serialize_pd,
    star_candidates,
    tait_graphs,
)

# %%
# The diagram and its universe
# ----------------------------
# Each crossing lists its four arcs counterclockwise, starting at the
# incoming under-strand.
code = builtin_diagram("3_1")
print(serialize_pd(code))

u = map_from_pd(code)
print("universe V, E, F:", u.counts())

# %%
# Colour the five regions. The region to the left of dart 0 is black.
coloring = checkerboard(u)
print("region colours:", coloring.color)

# %%
# Signed Tait graphs
# ------------------
# G lives on the black regions, G* on the white ones. For the trefoil one is
# a triangle and the other a theta graph with three parallel edges.
g, g_star = tait_graphs(code)
print("G :", g.map.counts(), "signs", g.signs)
print("G*:", g_star.map.counts(), "signs", g_star.signs)

# %%
# Overlay and balance
# -------------------
# Crossings become black vertices, Tait vertices and faces become white
# vertices, and every face is a square.
gh = overlay(g, g_star)
print("overlay V, E, F:", gh.counts())
print("face lengths:", sorted({len(f) for f in gh.map.faces}))

stars = star_candidates(gh)
print(len(stars), "ways to star a square")

bg = balance(gh, stars[0])
print("balanced:", len(bg.blacks), "black,", len(bg.whites), "white")
print("periphery walk(s):", bg.periphery)

# %%
# The balanced graph in DOT, ready for Graphviz.
print(bg.to_dot())
