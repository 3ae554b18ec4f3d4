"""Shared exact algebra, configuration and output helpers."""
