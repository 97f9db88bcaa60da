"""Kernel selection: the compiled extension when it imports, pure Python otherwise.

Set MERTENS_BACKEND=python to force the fallback.
"""

from __future__ import annotations

import importlib
import os

#: The compiled kernels keep x in a signed 64-bit word with headroom for x*q.
C_MAX_X = 2 ** 62

_cache = {}


def available():
    names = ["python"]
    try:
        importlib.import_module("mertens._ckernels")
        names.insert(0, "c")
    except ImportError:
        pass
    return names


def get(name=None):
    """Kernel module by name ("c" or "python"); None picks the default."""
    if name is not None and not isinstance(name, str):
        return name
    if name is None:
        name = os.environ.get("MERTENS_BACKEND", "").strip().lower() or None
    if name in _cache:
        return _cache[name]
    if name in (None, "c"):
        try:
            mod = importlib.import_module("mertens._ckernels")
        except ImportError:
            if name == "c":
                raise
            mod = importlib.import_module("mertens._pykernels")
    elif name == "python":
        mod = importlib.import_module("mertens._pykernels")
    else:
        raise ValueError(f"unknown backend {name!r}")
    _cache[name] = mod
    return mod


def for_x(x: int, name=None):
    """Kernel module able to handle arguments up to x."""
    mod = get(name)
    if getattr(mod, "NAME", "python") == "c" and x >= C_MAX_X:
        return get("python")
    return mod


def name_of(mod) -> str:
    return getattr(mod, "NAME", "python")
