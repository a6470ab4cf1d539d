"""Weighted tree augmentation toolkit.

Thin wrapper around the compiled ``_tapkit`` module. Instances travel as JSON
strings (see the repository README for the schema); every numeric result is an
exact rational string such as ``"5/2"``.
"""

try:
    from ._tapkit import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # in-tree builds put _tapkit on sys.path directly
    from _tapkit import *  # noqa: F401,F403
