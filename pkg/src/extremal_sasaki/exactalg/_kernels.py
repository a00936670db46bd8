"""Backend selection for the integer polynomial kernels.

The compiled ``_ckernels`` extension is used when it was built; set
``EXTREMAL_SASAKI_PURE=1`` to force the pure-Python fallback.
"""
import os

BACKEND = "python"
if not os.environ.get("EXTREMAL_SASAKI_PURE"):
    try:
        from ._ckernels import (content, derivative, grid_signs, horner_hom,
                                mul, prem, primitive, sign_at, sturm_chain,
                                trim, variations)
        BACKEND = "cython"
    except ImportError:
        pass

if BACKEND == "python":
    from ._pykernels import (content, derivative, grid_signs, horner_hom,  # noqa: F811
                             mul, prem, primitive, sign_at, sturm_chain, trim,
                             variations)

__all__ = ["BACKEND", "content", "derivative", "grid_signs", "horner_hom",
           "mul", "prem", "primitive", "sign_at", "sturm_chain", "trim",
           "variations"]
