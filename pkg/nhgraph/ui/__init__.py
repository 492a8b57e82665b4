"""Command line user interface."""
