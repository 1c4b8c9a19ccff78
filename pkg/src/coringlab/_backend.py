"""Row-reduction backend selection.

The compiled kernel is preferred when it imported cleanly; set
``CORINGLAB_PURE=1`` to force the pure-Python fallback for the whole
library.  ``scripts/bench_rref.py`` times the two kernels side by side.
"""

import os

if os.environ.get("CORINGLAB_PURE"):
    from . import _rrefpy as kernel
else:
    try:
        from . import _rrefc as kernel  # type: ignore[attr-defined]
    except ImportError:
        from . import _rrefpy as kernel


def backend_name():
    return kernel.BACKEND
