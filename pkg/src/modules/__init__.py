"""
Modules package for grassflop.
"""
