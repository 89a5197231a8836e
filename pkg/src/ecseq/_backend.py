"""Select the kernel implementation at import time.

The compiled ``_ckernels`` extension is used when it was built; otherwise the
pure-Python ``_pykernels`` module takes over.  Setting ``ECSEQ_PURE=1`` in the
environment forces the fallback (used by the benchmark and the parity tests).
"""

import os

from . import _pykernels

BACKEND = "python"
kernels = _pykernels

if not os.environ.get("ECSEQ_PURE"):
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        kernels = _ckernels
        BACKEND = "cython"

bm_synthesis = kernels.bm_synthesis
edwards_multiples = kernels.edwards_multiples
weierstrass_multiples = kernels.weierstrass_multiples

__all__ = ["BACKEND", "bm_synthesis", "edwards_multiples", "weierstrass_multiples"]
