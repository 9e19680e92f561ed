"""Discrete Morse functions on the 2-sphere and dimers of balanced overlaid Tait graphs."""

from .diagram_io import BUILTIN_NAMES, PdCode, builtin_diagram, parse_pd, serialize_pd
from .dimers_trees import (
    KasteleynOrientation,
    Matching,
    SpanningTree,
    count_matchings_bruteforce,
    count_matchings_fkt,
    count_spanning_trees,
    enumerate_matchings,
    enumerate_spanning_trees,
    kasteleyn_orient,
    matching_to_tree,
    tree_to_matching,
)
from .errors import (
    CapExceeded,
    ColoringError,
    InvariantError,
    MapError,
    PdError,
    RestrictionError,
)
from .morse import (
    Complex2,
    HassePairing,
    MorseFunction,
    acyclic_check,
    complex_from_diagram,
    complex_from_map,
    enumerate_morse,
    face_poset,
    knot_from_complex,
    matching_to_morse,
    morse_function,
    validate_morse,
)
from .planar_map import (
    CombMap,
    FaceColoring,
    checkerboard,
    dual,
    faces,
    map_from_json,
    map_from_pd,
    medial,
    random_planar_map,
    universe,
)
from .tait_overlay import (
    BalancedGraph,
    OverlaidGraph,
    SignedTaitGraph,
    StarPair,
    balance,
    diagram_from_tait,
    overlay,
    sign_of_crossing,
    star_candidates,
    tait_from_universe,
    tait_graphs,
)

__all__ = [
    "BUILTIN_NAMES",
    "BalancedGraph",
    "CapExceeded",
    "ColoringError",
    "CombMap",
    "Complex2",
    "FaceColoring",
    "HassePairing",
    "InvariantError",
    "KasteleynOrientation",
    "MapError",
    "Matching",
    "MorseFunction",
    "OverlaidGraph",
    "PdCode",
    "PdError",
    "RestrictionError",
    "SignedTaitGraph",
    "SpanningTree",
    "StarPair",
    "acyclic_check",
    "balance",
    "builtin_diagram",
    "checkerboard",
    "complex_from_diagram",
    "complex_from_map",
    "count_matchings_bruteforce",
    "count_matchings_fkt",
    "count_spanning_trees",
    "diagram_from_tait",
    "dual",
    "enumerate_matchings",
    "enumerate_morse",
    "enumerate_spanning_trees",
    "face_poset",
    "faces",
    "kasteleyn_orient",
    "knot_from_complex",
    "map_from_json",
    "map_from_pd",
    "matching_to_morse",
    "matching_to_tree",
    "medial",
    "morse_function",
    "overlay",
    "parse_pd",
    "random_planar_map",
    "serialize_pd",
    "sign_of_crossing",
    "star_candidates",
    "tait_from_universe",
    "tait_graphs",
    "tree_to_matching",
    "universe",
    "validate_morse",
]

__version__ = "0.1.0"
