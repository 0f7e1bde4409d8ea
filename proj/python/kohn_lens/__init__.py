"""Kohn Laplacian spectra on spheres and lens spaces."""

from ._kohn_lens import *  # noqa: F401,F403
from ._kohn_lens import KohnError, LensSpace, __version__  # noqa: F401
