"""k-tuple total domination in inflated graphs."""

from .closed_forms import (
    CompositionBound, FamilySpec, construct_family_ktds, cutedge_bounds, cutvertex_bounds,
    formula, gamma_complete, gamma_complete_bipartite, gamma_complete_cutedge, gamma_gpg_k2,
    gamma_harary, upper_multipartite,
)
from .decomposition import (
    GammaPrediction, HLCertificate, TwoFactor, find_certificate, find_two_factor,
    ktds_from_certificate, predict_gamma,
)
from .domination import (
    BoundsReport, SolveResult, bounds, brute_force_min_ktds, generic_upper_set, is_ktds,
    solve_inflated,
)
from .errors import (
    CapacityError, GraphFormatError, InfeasibleError, InflataError, InputError,
    UnsupportedError,
)
from .graph import (
    Graph, Matching, VComponentSplit, complete_graph, complete_multipartite, cut_elements,
    cycle_graph, graph_from_edge_list, harary_graph, maximum_matching, petersen_graph,
    v_components,
)
from .inflation import InflatedGraph, blue_partner, inflate, red_clique

__version__ = "0.1.0"
