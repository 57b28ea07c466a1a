"""Backend selection for the Monte Carlo kernels.

Prefers the compiled extension, falling back to the pure-Python twin when it
is unavailable.  ``RUINFAIR_BACKEND=pure`` or ``=cython`` forces a choice
(forcing ``cython`` raises if the extension was not built).  Both backends
are bit-identical; the choice only affects speed.
"""

from __future__ import annotations

import os

_requested = os.environ.get("RUINFAIR_BACKEND", "").strip().lower()

if _requested == "pure":
    from . import _pure as _impl
elif _requested == "cython":
    from . import _fast as _impl  # type: ignore[no-redef]
elif _requested == "":
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        from . import _pure as _impl  # type: ignore[no-redef]
else:
    raise ImportError(
        f"RUINFAIR_BACKEND must be 'pure' or 'cython', got {_requested!r}"
    )

BACKEND: str = _impl.BACKEND
ruin_mc_count = _impl.ruin_mc_count
surplus_path_values = _impl.surplus_path_values
chance_mc_count = _impl.chance_mc_count

__all__ = ["BACKEND", "ruin_mc_count", "surplus_path_values", "chance_mc_count"]
