"""State-sum backend selection.

The compiled Cython kernel is preferred when its extension module built;
otherwise (or when ``KNOTX_PURE_PYTHON`` is set to a non-empty value other
than ``0``) the pure-Python twin is used.  Both expose the same
``state_histogram`` contract and are required by the test suite to agree
exactly.
"""

from __future__ import annotations

import os

__all__ = ["state_histogram", "BACKEND"]


def _want_pure() -> bool:
    return os.environ.get("KNOTX_PURE_PYTHON", "0") not in ("", "0")


if _want_pure():
    from ._statesum_py import state_histogram

    BACKEND = "python"
else:
    try:
        from ._statesum import state_histogram  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:  # pragma: no cover - build-environment dependent
        from ._statesum_py import state_histogram

        BACKEND = "python"
