"""Kochen-Specker configurations built from exceptional and non-crystallographic root systems."""

__version__ = "0.1.0"
