"""
Geometry Module

Borel-Weil-Bott cohomology on Grassmannians and Kapranov windows.
"""

from .bwb import (
    BwbOutcome,
    bott_dot,
    dominant_weights,
    euler_dimension,
    grassmann_cohomology,
    verify_anchors,
    verify_dot_action_agreement,
    verify_serre_duality,
    window_ext
)
from .windows import (
    ExtTable,
    WindowSpec,
    dual_window_weights,
    ext_table,
    in_window,
    kapranov_collection,
    verify_beilinson,
    verify_dual_window,
    verify_strong_exceptionality,
    verify_window_fixed_point
)

__all__ = [
    'BwbOutcome',
    'bott_dot',
    'dominant_weights',
    'euler_dimension',
    'grassmann_cohomology',
    'verify_anchors',
    'verify_dot_action_agreement',
    'verify_serre_duality',
    'window_ext',
    'ExtTable',
    'WindowSpec',
    'dual_window_weights',
    'ext_table',
    'in_window',
    'kapranov_collection',
    'verify_beilinson',
    'verify_dual_window',
    'verify_strong_exceptionality',
    'verify_window_fixed_point'
]
