"""Exact circle counts, higher-order spherical Voronoi graphs and their local moves.

Coordinates are exact rationals. Pass ``fractions.Fraction``, ``int`` or
canonical ``"p/q"`` strings; results come back as ``Fraction``. Dot indices
are 0-based here, 1-based in the JSON documents.
"""

import json
from fractions import Fraction

from . import _core
from ._core import (
    CirclesepError,
    avoidant_partition_count,
    count_oriented_incident,
    enumerate_separable,
    gluing_count_check,
    hull_face_count,
    incident_histogram,
    oracle_separable,
    planar_interior_histogram,
    random_config,
    strata_counts,
    voronoi_dot,
)

__all__ = [
    "CirclesepError",
    "Config",
    "avoidant_partition_count",
    "config",
    "count_oriented_incident",
    "counts_report",
    "enumerate_separable",
    "general_position_violation",
    "gluing_count_check",
    "hull_face_count",
    "incident_histogram",
    "move_log",
    "oracle_separable",
    "planar",
    "planar_interior_histogram",
    "random_config",
    "strata_counts",
    "verify_all",
    "voronoi",
    "voronoi_dot",
]

Config = _core.Config


def _text(x):
    if isinstance(x, str):
        return x
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def config(points):
    """Build a configuration from planar (u, v) pairs."""
    return Config([(_text(u), _text(v)) for u, v in points])


def planar(cfg):
    """Planar coordinates of a configuration as Fractions."""
    return [(Fraction(u), Fraction(v)) for u, v in cfg.planar()]


def general_position_violation(cfg):
    """First cocircular quadruple (0-based), or None."""
    return _core.general_position_violation(cfg)


def counts_report(cfg):
    return json.loads(_core.counts_report_json(cfg))


def voronoi(cfg, k):
    return json.loads(_core.voronoi_json(cfg, k))


def move_log(a, b, k, max_retries=8, seed=0):
    return json.loads(_core.move_log_json(a, b, k, max_retries, seed))


def verify_all(n_min=4, n_max=10, seeds=5, seed_base=0):
    return json.loads(_core.verify_all_json(n_min, n_max, seeds, seed_base))
