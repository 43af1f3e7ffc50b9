"""Good colorings of the sphere triangulations T(beta)."""

import json

from . import _eisenfold
from ._eisenfold import DomainError, InternalError, UndeterminedError

__all__ = [
    "DomainError",
    "InternalError",
    "UndeterminedError",
    "build",
    "color",
    "validate",
    "eta_limit",
    "search",
    "render",
    "fib_counts",
]


def build(a, b):
    return json.loads(_eisenfold.complex_json(a, b))


def color(a, b, scheme="cf"):
    return json.loads(_eisenfold.coloring_json(a, b, scheme))


def validate(doc):
    return json.loads(_eisenfold.validate_json(json.dumps(doc)))


def eta_limit(zeta, max_digits=7000):
    return json.loads(_eisenfold.eta_limit_json(zeta, max_digits))


def search(a, b, mode="exact", time_limit=0.0, threads=0, seed=1):
    return json.loads(_eisenfold.search_json(a, b, mode, time_limit, threads, seed))


def render(a, b, domains=1, show_rhombus=True, show_folds=True, scale=20.0):
    return _eisenfold.render_svg(a, b, domains, show_rhombus, show_folds, scale)


def fib_counts(n):
    """(folds, faces) of C(a_n + a_{n+1} alpha) from the closed forms."""
    f, F = _eisenfold.fib_counts(n)
    return int(f), int(F)
