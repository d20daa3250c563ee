"""Verification laboratory for spanning structures in plane graph families."""

__version__ = "0.1.0"

from .graphs import (
    Graph,
    GraphError,
    RotationEmbedding,
    block_decomposition,
    check_embedding,
    connected_components,
    is_connected,
    is_k_connected,
)
from .cactus import (
    CactusReport,
    DeletionReport,
    Interval,
    analyze_cactus,
    bags,
    classify_deletion,
)
from .search import (
    Budget,
    CactusConstraints,
    SearchOutcome,
    enumerate_spanning_even_cacti,
    hamilton_cycle,
    hamilton_path,
    k_tree,
    k_walk,
    linear_forest,
    spanning_even_cactus,
)
from .families import (
    FragmentChart,
    anchor_cactus,
    build_G,
    build_chain,
    certificate_cactus,
    fragment_A,
    fragment_C,
    fragment_D,
    gadget_I,
)
from .prism import (
    cactus_prism_hamilton,
    prism,
    reflect,
    stitch_hamilton_GD,
)
from .generators import random_good_cactus, random_good_even_cactus
from .checks import CheckResult, run_check
from .certificates import build_certificate, verify_certificate

__all__ = [
    "Budget",
    "CactusConstraints",
    "CactusReport",
    "CheckResult",
    "DeletionReport",
    "FragmentChart",
    "Graph",
    "GraphError",
    "Interval",
    "RotationEmbedding",
    "SearchOutcome",
    "analyze_cactus",
    "anchor_cactus",
    "bags",
    "block_decomposition",
    "build_G",
    "build_certificate",
    "build_chain",
    "cactus_prism_hamilton",
    "certificate_cactus",
    "check_embedding",
    "classify_deletion",
    "connected_components",
    "enumerate_spanning_even_cacti",
    "fragment_A",
    "fragment_C",
    "fragment_D",
    "gadget_I",
    "hamilton_cycle",
    "hamilton_path",
    "is_connected",
    "is_k_connected",
    "k_tree",
    "k_walk",
    "linear_forest",
    "prism",
    "random_good_cactus",
    "random_good_even_cactus",
    "reflect",
    "run_check",
    "spanning_even_cactus",
    "stitch_hamilton_GD",
    "verify_certificate",
]
