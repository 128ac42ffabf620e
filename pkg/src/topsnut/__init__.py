"""Graph labellings, Topsnut-matrices, TB-paws, graphic groups and encrypted networks."""

from .errors import TopsnutError
from .graph import Graph
from .labelling import Labelling, SetLabelling, verify
from .paw import TbPaw

__all__ = ["Graph", "Labelling", "SetLabelling", "TbPaw", "TopsnutError", "verify"]
