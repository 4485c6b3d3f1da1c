"""Strong structural controllability for diffusively coupled networks.

Exact subset-enumeration checks, a numerical rank oracle, path/cycle (pactus)
decompositions with closed-form shortcuts, and stage-wise minimum input
placement.
"""

from .composer import InputPlacement, StageRecord, StageType, min_inputs, minimality_audit, verify_placement
from .errors import *  # noqa: F401,F403
from .exact import NodeRole, SscReport, anchored_failure, classify_node, dedicated_nodes, is_ssc_exact, ssc_nodes
from .graph import InputNode, StructuredNetwork, SubsetAlpha, build_network, is_accessible
from .oracle import OracleConfig, WeightedRealization, controllability_rank, realize, sample, sample_verdict
from .pactus import Kind, PactusDecomposition, check_cycle_ssc, check_pactus_ssc, check_path_ssc, check_tree_ssc, decompose

__version__ = "0.1.0"
