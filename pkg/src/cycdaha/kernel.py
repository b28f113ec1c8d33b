"""Kernel selection: compiled extension if available, pure Python otherwise.

Set CYCDAHA_PURE_PYTHON=1 to force the fallback (used by the benchmark and
the kernel-equivalence tests).
"""

import os

from . import _kernel_py

if os.environ.get("CYCDAHA_PURE_PYTHON") == "1":
    impl = _kernel_py
else:
    try:
        from . import _kernel_c as impl  # type: ignore[no-redef]
    except ImportError:
        impl = _kernel_py

IMPLEMENTATION = impl.IMPLEMENTATION

terms_add = impl.terms_add
terms_sub = impl.terms_sub
terms_addmul = impl.terms_addmul
terms_neg = impl.terms_neg
terms_scale = impl.terms_scale
terms_mul = impl.terms_mul
terms_shift = impl.terms_shift
terms_permute = impl.terms_permute
terms_scale_var = impl.terms_scale_var
