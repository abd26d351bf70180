"""HTTP service exposing the maintenance engines over per-session graphs."""

from .app import create_app

__all__ = ["create_app"]
