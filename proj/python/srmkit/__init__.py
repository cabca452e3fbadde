"""Least-squares and square-root measurements for pure-state discrimination."""

try:
    from srmkit._core import *  # noqa: F401,F403
    from srmkit._core import __doc__  # noqa: F401
except ImportError:  # extension on sys.path next to the package (dev builds)
    from _core import *  # noqa: F401,F403
    from _core import __doc__  # noqa: F401

__version__ = "0.1.0"
