"""Exact orbifold Riemann-Roch arithmetic for K-trivial terminal threefolds.

All rationals cross the boundary as strings ("p/q" or "n"); parse them with
fractions.Fraction when arithmetic is needed on the Python side.
"""

try:
    from ._orbirr import *  # noqa: F401,F403  (installed wheel layout)
except ImportError:  # in-tree build: the module sits next to the package on sys.path
    from _orbirr import *  # noqa: F401,F403
