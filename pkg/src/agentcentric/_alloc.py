"""Allocator tuning for the large short-lived activation buffers of a learner step.

glibc serves big requests with fresh ``mmap`` pages and returns them on free,
so every step pays the page faults again. Raising the mmap and trim
thresholds keeps those pages in the heap for reuse. No-op off glibc.
"""
import ctypes
import ctypes.util

_M_TRIM_THRESHOLD = -1
_M_MMAP_THRESHOLD = -3
_done = False


def tune_allocator(threshold=1 << 30):
    global _done
    if _done:
        return True
    try:
        libc = ctypes.CDLL(ctypes.util.find_library("c") or "libc.so.6")
        mallopt = libc.mallopt
    except (OSError, AttributeError):
        return False
    ok = mallopt(_M_MMAP_THRESHOLD, threshold) == 1 and mallopt(_M_TRIM_THRESHOLD, threshold) == 1
    _done = ok
    return ok
