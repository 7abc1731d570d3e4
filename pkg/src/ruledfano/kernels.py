"""Kernel selection.

The compiled kernels are used when the extension was built and
``RULEDFANO_PURE_PYTHON`` is unset. Any call the compiled kernel refuses
(OverflowError on large inputs) is rerun on the Python-int kernel, so results
never depend on which backend is active.
"""

import os

from . import _pykernels

try:
    if os.environ.get("RULEDFANO_PURE_PYTHON"):
        raise ImportError("pure Python requested")
    from . import _ckernels as _fast
except ImportError:
    _fast = None

BACKEND = _fast.BACKEND if _fast is not None else _pykernels.BACKEND


def available_backends():
    """Names of importable kernel modules, fastest first."""
    names = []
    if _fast is not None:
        names.append(_fast.BACKEND)
    names.append(_pykernels.BACKEND)
    return names


def backend_module(name):
    if name == _pykernels.BACKEND:
        return _pykernels
    if _fast is not None and name == _fast.BACKEND:
        return _fast
    raise ValueError(f"kernel backend {name!r} is not available")


def _dispatch(name):
    slow = getattr(_pykernels, name)
    if _fast is None:
        return slow
    fast = getattr(_fast, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return slow(*args)

    call.__name__ = name
    call.__doc__ = slow.__doc__
    return call


# exact integer formula with no overflow risk; no compiled variant needed
twist_coords = _pykernels.twist_coords

ring_mul = _dispatch("ring_mul")
chi12 = _dispatch("chi12")
twisted_chi12 = _dispatch("twisted_chi12")
twisted_chi12_grid = _dispatch("twisted_chi12_grid")
