"""Helper functions for testing the operators."""

from .asserts import are_equal

__all__ = ["are_equal"]
