"""
Step definitions for Behave tests.
"""


