"""JIT switch for the numeric kernels.

Kernels are written once in a numba-compatible subset of Python.  When
``SBUNDLE_DISABLE_JIT`` is set (or numba is missing) ``njit`` degrades to the
identity decorator and the very same functions run as plain Python over numpy
arrays, which is handy for debugging and gives the benchmark its baseline.
"""
import os

_FLAG = os.environ.get("SBUNDLE_DISABLE_JIT", "").strip().lower()

try:
    if _FLAG in ("1", "true", "yes", "on"):
        raise ImportError("JIT disabled by SBUNDLE_DISABLE_JIT")
    import numba as _numba
except ImportError:
    _numba = None

JIT_ENABLED = _numba is not None


if JIT_ENABLED:
    def njit(func=None, **kwargs):
        kwargs.setdefault("cache", True)
        kwargs.setdefault("nogil", True)
        if func is not None:
            return _numba.njit(**kwargs)(func)
        return _numba.njit(**kwargs)
else:
    def njit(func=None, **kwargs):
        if func is not None:
            return func

        def wrapper(f):
            return f
        return wrapper
