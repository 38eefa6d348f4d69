"""Acyclic edge colouring of planar graphs with Delta+5 colours."""

__version__ = "0.1.0"
