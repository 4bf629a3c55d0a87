"""Backend selection for the Fourier-Motzkin kernel.

The compiled extension is preferred when it imports; set
``AMPLEANGLES_FME=python`` to force the interpreted kernel (used by the
parity tests and the benchmark).
"""

import os

if os.environ.get("AMPLEANGLES_FME", "").lower() == "python":
    from . import _fme_py as _impl
else:
    try:
        from . import _fme_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _fme_py as _impl

BACKEND = _impl.BACKEND
normalize = _impl.normalize
reduce_rows = _impl.reduce_rows
eliminate = _impl.eliminate
feasible = _impl.feasible
