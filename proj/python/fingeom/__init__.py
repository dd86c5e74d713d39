from fingeom._core import *  # noqa: F401,F403
