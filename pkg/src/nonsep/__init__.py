"""Trees whose removal keeps a graph 2-connected or a digraph strongly connected."""
from .connectivity import (
    completion,
    components,
    ends,
    fragments,
    hamidoune_check,
    is_biconnected,
    is_connected,
    is_k_connected,
    is_strongly_connected,
    kappa,
    kpair_check,
    max_strong_component,
    minimum_separator,
    strong_components,
)
from .digraph_finder import (
    find_nonsep_oriented_double_star,
    find_nonsep_oriented_star,
    improve_oriented_double_star,
    improve_oriented_star,
    reentrant_path,
)
from .errors import (
    ContradictionError,
    InputError,
    InvalidEmbeddingError,
    NonsepError,
    NotFoundError,
    ParseError,
    PreconditionError,
)
from .graph import Digraph, Graph, delete, induced, min_degree, parse_edge_list, semi_degree
from .graph_finder import (
    KPair,
    find_nonsep_double_star_k2,
    find_nonsep_shape_in_pair,
    find_nonsep_star_k2,
    find_path_double_star,
    find_path_star,
    find_rooted_nonsep_path,
    lift_by_lemma32,
)
from .oracle import exists_nonseparating_bruteforce, verify_nonseparating
from .shapes import Embedding, Kind, ShapeSpec, double_star_from_arc, parse_shape

__version__ = "0.1.0"
