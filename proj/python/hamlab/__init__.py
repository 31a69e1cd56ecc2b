"""Graph toolkit: Mycielski constructions, exact Hamiltonicity and coloring
decision procedures with certificates, and verification suites."""

from ._hamlab import *  # noqa: F401,F403
from ._hamlab import __version__  # noqa: F401
