"""Select the compiled kernels when available, else the pure-Python ones.

Set ``PORTCGD_PURE=1`` to force the fallback.
"""
import os

BACKEND = "python"

if os.environ.get("PORTCGD_PURE") != "1":
    try:
        from ._ckernels import bfs_code, hinge_classes, longest_hinge  # noqa: F401
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import bfs_code, hinge_classes, longest_hinge  # noqa: F401
