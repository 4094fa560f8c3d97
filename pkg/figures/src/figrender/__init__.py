"""figrender: turn squeezeslab figure CSV tables into images."""

__version__ = "0.1.0"

from .render import EXPECTED_HEADERS, FigureSpec, SchemaError, default_spec, render

__all__ = ["EXPECTED_HEADERS", "FigureSpec", "SchemaError", "default_spec", "render"]
