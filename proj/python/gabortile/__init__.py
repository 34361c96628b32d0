"""Verification toolkit for Gabor systems with piecewise-constant windows."""

try:
    # Wheel layout: the extension lives inside the package.
    from gabortile._core import *  # noqa: F401,F403
    from gabortile._core import __doc__ as _core_doc
except ImportError:
    # In-tree build: the extension sits on PYTHONPATH next to the package.
    from _core import *  # noqa: F401,F403
    from _core import __doc__ as _core_doc

__doc__ = _core_doc
