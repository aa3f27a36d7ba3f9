"""Adinkra graphs, free-module complexes, and their invariants."""

try:
    from adinkralab._core import *  # noqa: F401,F403  (installed layout)
    from adinkralab import _core as _c
except ImportError:  # build-tree layout: _core sits directly on sys.path
    from _core import *  # noqa: F401,F403
    import _core as _c

__all__ = [name for name in dir(_c) if not name.startswith("_")]
__version__ = "1.0.0"
