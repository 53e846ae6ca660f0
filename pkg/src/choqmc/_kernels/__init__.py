"""Kernel backend selection.

The hot loops (radical-inverse generation and critical-box enumeration for
the star discrepancy) exist twice: a compiled Cython extension
(``_native``) and a pure-numpy fallback (``_fallback``).  The native
extension is preferred when it imported cleanly; set the environment
variable ``CHOQMC_PURE_PYTHON=1`` to force the fallback.  Both backends
implement the same API and are cross-checked in the test suite.
"""

import os

if os.environ.get("CHOQMC_PURE_PYTHON"):
    from . import _fallback as _impl
else:
    try:
        from . import _native as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _fallback as _impl  # type: ignore[no-redef]

BACKEND = _impl.BACKEND
radical_inverse_sequence = _impl.radical_inverse_sequence
max_local_discrepancy = _impl.max_local_discrepancy
