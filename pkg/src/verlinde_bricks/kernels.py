"""Backend selection for the hot kernels.

The compiled ``_native`` extension is used when it was built and importable;
otherwise the pure-Python ``_fallback`` is used.  Set
``VERLINDE_BRICKS_PURE_PYTHON=1`` to force the fallback.
"""

from __future__ import annotations

import os

from . import _fallback

if os.environ.get("VERLINDE_BRICKS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _fallback
    BACKEND = "python"
else:
    try:
        from . import _native as _impl  # type: ignore[attr-defined]

        BACKEND = "cython"
    except ImportError:
        _impl = _fallback
        BACKEND = "python"

_NATIVE_MAX_GENUS = 31


def _pick(genus: int):
    return _impl if genus <= _NATIVE_MAX_GENUS else _fallback


def e_mul_packed(x: int, y: int, genus: int) -> int:
    return _pick(genus).e_mul_packed(x, y, genus)


def associativity_failure(xs, ys, zs, genus: int) -> int:
    return _pick(genus).associativity_failure(xs, ys, zs, genus)


def exhaustive_associativity(genus: int) -> int:
    return _pick(genus).exhaustive_associativity(genus)


def form_census(genus: int) -> tuple[list[int], list[int], list[int]]:
    return _pick(genus).form_census(genus)
