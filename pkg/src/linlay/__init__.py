"""Deque and rique linear layouts: validation, constructions, SAT search and bounds."""

__version__ = "0.1.0"
