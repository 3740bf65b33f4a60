"""Backend selection for the search kernels.

The compiled extension is used when it imports; setting
``QUIVERSTAB_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _pykernels

BACKEND = "python"
_impl = _pykernels

if not os.environ.get("QUIVERSTAB_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _pykernels


def closed_tuples(members, arrows):
    return _impl.closed_tuples(members, arrows)


def full_rank_search(p, basis, blocks, count=False):
    return _impl.full_rank_search(p, basis, blocks, count)


def backends():
    """Available kernel modules by name, for tests and benchmarks."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels

        out["cython"] = _ckernels
    except ImportError:
        pass
    return out
