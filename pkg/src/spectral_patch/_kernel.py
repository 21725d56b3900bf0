"""Backend selection for the root-finder kernel.

Prefers the compiled extension, falls back to the pure-Python twin when the
extension is missing or when SPECTRAL_PATCH_PURE is set to a non-empty value.
"""

import os

if os.environ.get("SPECTRAL_PATCH_PURE"):
    from . import _roots_py as _impl
else:
    try:
        from . import _roots_cy as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _roots_py as _impl

BACKEND_NAME = _impl.BACKEND_NAME
aberth_roots = _impl.aberth_roots
aberth_roots_batch = _impl.aberth_roots_batch


def backend_name():
    """Name of the active kernel backend: 'compiled' or 'python'."""
    return BACKEND_NAME
