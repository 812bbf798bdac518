"""Genus-2 Riemann theta functions with characteristics.

Evaluation of the sixteen theta functions, the tables of their quadratic
addition relations, the hyperelliptic quotients ``F = theta / theta[0011]``
with their addition formulas, and a seeded harness that checks all of
them numerically.
"""
from .core import *  # noqa: F401,F403
from .core import __all__ as _core_all
from .identities import *  # noqa: F401,F403
from .identities import __all__ as _identities_all
from .hyperelliptic import *  # noqa: F401,F403
from .hyperelliptic import __all__ as _hyperelliptic_all
from .harness import *  # noqa: F401,F403
from .harness import __all__ as _harness_all
from .argexpr import ArgExpr, parse_arg
from .oracle import brute_force_theta, genus1_theta
from .cli import cli

__version__ = "0.1.0"

__all__ = (
    list(_core_all) + list(_identities_all) + list(_hyperelliptic_all) + list(_harness_all)
    + ["ArgExpr", "parse_arg", "brute_force_theta", "genus1_theta", "cli"]
)
