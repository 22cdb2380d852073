"""Bohr-type radii and Bohr-Rogosinski functionals on disk self-maps.

The compiled core exposes:

* series constructors (``moebius``, ``reflected``, ``koebe``, ``half_plane``,
  ``blaschke``, ``random_self_map``, ``from_coeffs``) producing truncated
  Taylor series with certified tail majorants,
* series operations (``eval``, ``bohr_sum``, ``tail_sum``, ``square_sum``,
  ``area_functional``, ``partial_sum``),
* the certified bisection solver ``solve_radius`` for the radius-defining
  equations,
* ``evaluate_functional`` / ``sharpness_scan`` / ``property_fuzz`` for the
  inequality checks, and
* ``verify_subordinate`` / ``coefficient_bound_check`` for the subordination
  (distance-form) variants.
"""

from ._core import (
    Series,
    area_functional,
    blaschke,
    bohr_sum,
    coefficient_bound_check,
    eval,
    evaluate_functional,
    from_coeffs,
    half_plane,
    kind_names,
    koebe,
    moebius,
    partial_sum,
    property_fuzz,
    random_self_map,
    reflected,
    sharpness_scan,
    solve_radius,
    square_sum,
    tail_sum,
    verify_subordinate,
)

__all__ = [
    "Series",
    "area_functional",
    "blaschke",
    "bohr_sum",
    "coefficient_bound_check",
    "eval",
    "evaluate_functional",
    "from_coeffs",
    "half_plane",
    "kind_names",
    "koebe",
    "moebius",
    "partial_sum",
    "property_fuzz",
    "random_self_map",
    "reflected",
    "sharpness_scan",
    "solve_radius",
    "square_sum",
    "tail_sum",
    "verify_subordinate",
]

__version__ = "0.1.0"
