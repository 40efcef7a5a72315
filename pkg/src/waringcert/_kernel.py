"""Select the elimination kernel: compiled if available, else pure Python.

Set ``WARINGCERT_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernel_py

BACKEND = "python"
gauss_jordan = _kernel_py.gauss_jordan
rank_mod_p = _kernel_py.rank_mod_p

if os.environ.get("WARINGCERT_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from . import _kernel_c
    except ImportError:
        pass
    else:
        BACKEND = "cython"
        gauss_jordan = _kernel_c.gauss_jordan
        rank_mod_p = _kernel_c.rank_mod_p

# largest prime below 2**31; products of two residues fit in a signed 64-bit int
PRIME = 2147483647
