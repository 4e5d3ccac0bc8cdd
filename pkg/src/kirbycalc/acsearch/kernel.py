"""Select the compiled word kernel when available, else the pure twin.

Set KIRBYCALC_PURE=1 to force the pure-Python kernel.
"""

import os

from . import _kernel_py

if os.environ.get("KIRBYCALC_PURE"):
    impl = _kernel_py
    IMPL_NAME = "python"
else:
    try:
        from . import _kernel_c as impl
        IMPL_NAME = "cython"
    except ImportError:
        impl = _kernel_py
        IMPL_NAME = "python"

reduce_word = impl.reduce_word
invert_word = impl.invert_word
cyclic_core = impl.cyclic_core
multiply_relator = impl.multiply_relator
conjugate_relator = impl.conjugate_relator
canon_relator = impl.canon_relator
canonical_form = impl.canonical_form
canonical_key = impl.canonical_key
search_key = impl.search_key
is_trivial_encoded = impl.is_trivial_encoded
