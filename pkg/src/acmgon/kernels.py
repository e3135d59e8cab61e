"""Backend selection for the oracle scans.

The compiled extension is used when it was built; otherwise the pure-Python
module is used. Setting ``ACMGON_PURE_PYTHON=1`` forces the fallback.
"""
from __future__ import annotations

import os

from . import _pykernels

python_backend = _pykernels

if os.environ.get("ACMGON_PURE_PYTHON", "") not in ("", "0"):
    compiled_backend = None
else:
    try:
        from . import _ckernels as compiled_backend
    except ImportError:
        compiled_backend = None

backend = compiled_backend if compiled_backend is not None else python_backend
BACKEND_NAME = "compiled" if compiled_backend is not None else "python"


def exceptional_classes(bound: int, h, k):
    instances, sols = backend.exceptional_classes(bound, tuple(h), tuple(k))
    return instances, sorted(sols)


def s0_characters(max_len: int, lo: int = -1, hi: int = 3, target_s0: int = 3):
    instances, seqs = backend.s0_characters(max_len, lo, hi, target_s0)
    return instances, sorted(seqs)
