# SPDX-License-Identifier: Apache-2.0
"""Quantum illumination toolkit: hypothesis states, discrimination bounds,
Monte Carlo detection, and imaging scans."""

from ._qillum import *  # noqa: F401,F403
from ._qillum import __all__, __version__  # noqa: F401
