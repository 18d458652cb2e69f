"""
Tests for Swagger Tool
"""

