"""Extractive QA microservice speaking the reader wire protocol."""

from .app import create_app
from .spans import SpanCandidate, merge_window_candidates, select_spans

__version__ = "0.1.0"

__all__ = [
    "SpanCandidate",
    "create_app",
    "merge_window_candidates",
    "select_spans",
]
