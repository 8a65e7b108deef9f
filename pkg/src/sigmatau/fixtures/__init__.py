"""Shipped reference data: the length-16 binary construction and its goldens."""
