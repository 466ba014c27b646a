"""Distance-hereditary graph recognition and Δ-confluent drawing."""

from ._core import (
    ArgumentError,
    DeltaTree,
    EliminationSequence,
    Graph,
    ParseError,
    RecognitionError,
    RenderError,
    TooLargeError,
    UnresolvableOverlap,
    ValidationError,
    build_delta_tree,
    check_hex,
    check_ortho,
    check_svg,
    draw_svg,
    draw_tree_svg,
    eliminate,
    gen_dh_random,
    gen_gnp,
    hex_layout,
    is_distance_hereditary,
    is_distance_hereditary_oracle,
    max_dh_subgraph,
    ortho_layout,
    radial_ratio_bound,
)

__all__ = [
    "ArgumentError",
    "DeltaTree",
    "EliminationSequence",
    "Graph",
    "ParseError",
    "RecognitionError",
    "RenderError",
    "TooLargeError",
    "UnresolvableOverlap",
    "ValidationError",
    "build_delta_tree",
    "check_hex",
    "check_ortho",
    "check_svg",
    "draw_svg",
    "draw_tree_svg",
    "eliminate",
    "gen_dh_random",
    "gen_gnp",
    "hex_layout",
    "is_distance_hereditary",
    "is_distance_hereditary_oracle",
    "max_dh_subgraph",
    "ortho_layout",
    "radial_ratio_bound",
]
