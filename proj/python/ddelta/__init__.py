"""Finite-level verification of Fedder-action local cohomology and the Delta-Delta complex."""

import json as _json

from ._core import (
    CechClass,
    Ideal,
    Polynomial,
    Ring,
    Sequence,
    colon,
    intersect,
    list_checks,
    f_fed,
    f_nat,
    phi_embed,
    phi_section,
    level_summary,
    cohomology_dimension,
    verify_vanishing,
    verify_augmentation,
    verify_structure_kernels,
    verify_codim2_V,
    top_class_persists,
)
from ._core import run_config as _run_config


def run(config, jobs=1):
    """Run a config (dict or JSON text). Returns (report dict, exit code)."""
    text = config if isinstance(config, str) else _json.dumps(config)
    report, code = _run_config(text, jobs)
    return _json.loads(report), code


__all__ = [
    "CechClass",
    "Ideal",
    "Polynomial",
    "Ring",
    "Sequence",
    "colon",
    "intersect",
    "list_checks",
    "f_fed",
    "f_nat",
    "phi_embed",
    "phi_section",
    "level_summary",
    "cohomology_dimension",
    "verify_vanishing",
    "verify_augmentation",
    "verify_structure_kernels",
    "verify_codim2_V",
    "top_class_persists",
    "run",
]
