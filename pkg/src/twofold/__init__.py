"""Two-fold automorphisms, canonical double covers and TF-isomorphism."""

from __future__ import annotations

from .constructions import (
    LabeledGraph,
    achievable_construction,
    cayley,
    gamma_construction,
    gcay,
    grr_z2k,
    local_graph,
    m0_graph,
    m_graph,
    skeleton_r,
)
from .double_cover import (
    DomainError,
    PreconditionError,
    TwoFoldStructure,
    alpha_of,
    aut,
    aut_pi,
    aut_tau,
    double_cover,
    gamma_of,
    is_stable,
    ne_refinement,
    stability_report,
)
from .graph import Graph, GraphError, VertexPartition
from .groups import FiniteGroup, GroupAutomorphism, GroupError, SemidirectZ2, builtin_group, rank
from .io import Graph6Error, graph6_decode, graph6_encode, read_graph
from .perm import Permutation, PermGroup, ResourceError
from .tf_iso import ActionRejected, census, permutation_matrix_action, tf_isomorphic, verify_identities

__version__ = "0.1.0"
