"""Multisegment combinatorics: removal processes, fine chains, the
Zelevinsky order and minimal elements of removal fibers."""
from .core import EMPTY, INFINITY, Cmp, Multisegment, Segment
from .finechain import fc_compare, fine_chain, fs
from .minimal import enumerate_fiber, find_minimal
from .removal import NotAdmissible, r_mult, r_seg
from .zpos import leq_Z

__version__ = "0.1.0"
