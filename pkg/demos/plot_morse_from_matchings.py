"""
Discrete Morse functions from perfect matchings
===============================================

Take the sphere cut into two triangles. Its face poset is a quadrangulation;
starring one square and matching the rest pairs every cell except one vertex
and one face. Each pairing is acyclic and is realised by an integer function
whose only critical cells are the starred ones.
"""

from taitmorse import (
    CombMap,
    balance,
    complex_from_map,
    enumerate_matchings,
    face_poset,
    matching_to_morse,
    matching_to_tree,
    star_candidates,
    validate_morse,
)
from taitmorse.morse import cell_name

# %%
# The 1-skeleton is a triangle; its rotation system fixes the embedding.
triangle = CombMap((2, 4, 0, 5, 1, 3))
d = complex_from_map(triangle)
print("cells:", [cell_name(c) for c in d.cells])

gh = face_poset(d)
s = star_candidates(gh)[0]
bg = balance(gh, s)

# %%
# Every matching gives a spanning tree of the triangle and a Morse function.
for m in enumerate_matchings(bg):
    tree, _ = matching_to_tree(bg, m)
    pairing, f = matching_to_morse(d, s, m, bg)
    report = validate_morse(d, f)
    print("tree", sorted(tree.edges),
          "pairs", [f"{cell_name(a)}<{cell_name(b)}" for a, b in pairing.cell_pairs()],
          "critical", [cell_name(c) for c in report.critical])
    print("   values", {cell_name(c): f[c] for c in d.cells})

# %%
# A constant function breaks the local conditions at every cell.
print("\n".join(validate_morse(d, {c: 0 for c in d.cells}).lines()))
