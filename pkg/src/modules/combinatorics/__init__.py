"""
Combinatorics Module

Young diagram arithmetic used by every other module.
"""

from .partitions import (
    Partition,
    SigmaBulletResult,
    conjugate,
    count_inversions,
    enumerate_box,
    enumerate_partitions,
    full_rows,
    sigma_bullet
)

__all__ = [
    'Partition',
    'SigmaBulletResult',
    'conjugate',
    'count_inversions',
    'enumerate_box',
    'enumerate_partitions',
    'full_rows',
    'sigma_bullet'
]
