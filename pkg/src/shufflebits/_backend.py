"""Kernel selection.

The compiled kernel is used when it imports; otherwise the pure-Python one.
Both expose ``walk``, ``count`` and ``collect`` with identical semantics.
"""
from importlib import import_module
from types import ModuleType

_MODULES = {"cython": "shufflebits._ckernel", "python": "shufflebits._pykernel"}


def load(name: str) -> ModuleType:
    """Import the kernel called ``name`` ("cython" or "python")."""
    try:
        return import_module(_MODULES[name])
    except KeyError:
        raise ValueError(f"unknown backend {name!r}; choose from {sorted(_MODULES)}") from None


def available() -> list[str]:
    names = []
    for name in _MODULES:
        try:
            load(name)
        except ImportError:
            continue
        names.append(name)
    return names


try:
    kernel = load("cython")
    ACTIVE = "cython"
except ImportError:
    kernel = load("python")
    ACTIVE = "python"


def get(name: str | None = None) -> ModuleType:
    return kernel if name is None else load(name)
