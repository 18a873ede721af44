"""Reusable pieces shared by the command modules."""
