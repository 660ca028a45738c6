"""Exact convex polygons in Cartesian-product grids."""
from .geometry import *  # noqa: F401,F403
from .constructions import *  # noqa: F401,F403
from .optimize import *  # noqa: F401,F403
from .counting import *  # noqa: F401,F403

__version__ = "0.1.0"
