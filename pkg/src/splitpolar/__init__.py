"""Recognition and (s,k)-polarity of split, pseudo-split, 2K2-split and C4-split graphs."""
from .graph import (Graph, Graph6Error, GraphError, build_named, canonical_code, complement,
                    complete_graph, cycle_graph, disjoint_union, empty_graph, from_graph6,
                    h_split_graph, is_isomorphic, join, to_graph6)
from .oracle import (UNBOUNDED, UNIPOLAR, PolarPartition, PolarityParams, oracle_is_polar,
                     oracle_minimal_obstruction, oracle_polar)
from .recognition import (recognize_2k2_split, recognize_c4_split, recognize_h_split,
                          recognize_pseudo_split, recognize_split)
from .pseudosplit import ps_catalog, ps_decide, ps_witness
from .twok2 import c4_decide, c4_witness, twok2_catalog, twok2_decide, twok2_witness
from .coloring import bicolor_obstruction_family, ps_coloring_profile, ps_is_kl_colorable
from .search import FamilySpec, find_minimal_obstructions, verify_order_bound
from .cli import class_ladder, decide_polarity

__version__ = "0.1.0"
