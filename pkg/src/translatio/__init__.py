"""Exact triangle functions for translation functors over semisimple root systems."""

__version__ = "0.1.0"

from .errors import ConfigurationError, DomainError, PoleError, ResourceError, TranslatioError
from .rootsys import Root, RootSystem, Weight, WeylElement, build_root_system

__all__ = [
    "ConfigurationError",
    "DomainError",
    "PoleError",
    "ResourceError",
    "Root",
    "RootSystem",
    "TranslatioError",
    "Weight",
    "WeylElement",
    "build_root_system",
    "__version__",
]
