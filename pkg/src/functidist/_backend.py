"""Pick the compiled kernels when importable, else the pure-Python ones.

Set ``FUNCTIDIST_PURE_PYTHON=1`` to force the fallback.
"""

import os

if os.environ.get("FUNCTIDIST_PURE_PYTHON") == "1":
    from . import _pykernels as kernels
else:
    try:
        from . import _kernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.NAME
