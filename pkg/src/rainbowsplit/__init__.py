"""Rainbow colourings of split graphs: recognition, exact solvers, the k >= 4
polynomial procedure, and the 3SAT -> BCC -> RC(G, 2) reduction chain."""

from rainbowsplit.errors import CapacityError, ContractError, NotSplitError
from rainbowsplit.graph import Graph, SplitPartition, recognize_split
from rainbowsplit.rainbow import EdgeColouring, verify_rainbow, rc_exact

__all__ = [
    "CapacityError",
    "ContractError",
    "NotSplitError",
    "Graph",
    "SplitPartition",
    "recognize_split",
    "EdgeColouring",
    "verify_rainbow",
    "rc_exact",
]
