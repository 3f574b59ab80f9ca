"""Neologism detection and analysis for socially-annotated letter corpora."""

__version__ = "0.1.0"
