"""Hot kernels, compiled when the extension is built and pure Python otherwise.

Set ``MCGDIM_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _python

if os.environ.get("MCGDIM_PURE_PYTHON"):
    _impl = _python
else:
    try:
        from . import _native as _impl
    except ImportError:
        _impl = _python

BACKEND = "native" if _impl is not _python else "python"

bounded_multisets = _impl.bounded_multisets
dihedral_words = _impl.dihedral_words
subgroup_closure = _impl.subgroup_closure
all_subgroups = _impl.all_subgroups

__all__ = [
    "BACKEND",
    "bounded_multisets",
    "dihedral_words",
    "subgroup_closure",
    "all_subgroups",
]
