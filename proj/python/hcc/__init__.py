"""Exact mod-p homology of regular covers of presentation complexes.

Thin wrappers over the compiled ``_core`` module. Functions ending in
``_json`` on the core return JSON text; the wrappers here decode it.
"""

import json

from . import _core
from ._core import (
    CapError,
    Group,
    Homomorphism,
    InputError,
    Presentation,
    elementary_abelian_hom,
    normalize,
    reidemeister_schreier,
    run_cli,
)

__all__ = [
    "CapError",
    "Group",
    "Homomorphism",
    "InputError",
    "Presentation",
    "bound",
    "cover",
    "elementary_abelian_hom",
    "filtration",
    "growth",
    "manifold3",
    "normalize",
    "omega",
    "pi",
    "reidemeister_schreier",
    "run_cli",
    "selfcheck",
    "summary",
]


def omega(p, r):
    """Coefficients of (1 + x + ... + x^(p-1))^r as Python ints."""
    return [int(c) for c in _core.omega(p, r)]


def pi(p, r, k):
    return int(_core.pi(p, r, k))


def filtration(p, group, k_max=0):
    """Dimensions of the augmentation ideal powers of F_p[group]."""
    return json.loads(_core.filtration_json(p, group, k_max))


def summary(presentation, p):
    return json.loads(_core.summary_json(presentation, p))


def cover(hom, p):
    """Betti numbers of the regular cover of hom, with a verdict for (Z_p)^r targets."""
    return json.loads(_core.cover_json(hom, p))


def bound(b1, d, p, r, actual=None):
    return json.loads(_core.bound_json(b1, d, p, r, actual))


def manifold3(b1_q, r):
    return json.loads(_core.manifold3_json(b1_q, r))


def growth(presentation, p, steps=2):
    return json.loads(_core.growth_json(presentation, p, steps))


def selfcheck():
    return json.loads(_core.selfcheck_json())
