"""
Quandle Lab

Exact (co)homology of finite quandles and cocycle state-sum invariants of
classical links and knotted surfaces, with a command-line front end.
"""

__version__ = "0.1.0"

# Version info
VERSION = __version__
