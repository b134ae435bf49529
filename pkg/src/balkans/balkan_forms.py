"""Region classification, per-region closed forms, the dispatcher and symmetries.

The implementation lives in the :mod:`balkans.forms` subpackage; this module
is the flat import point.
"""

from .forms import *  # noqa: F401,F403
