"""Source code for the rhkit project: space-time variational shock conditions for fluids."""

__version__ = "0.1.0"
