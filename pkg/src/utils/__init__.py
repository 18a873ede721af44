"""Utility modules for configuration, errors and data loading."""
