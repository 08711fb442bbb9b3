"""Exact tools for pencils of conics, the quadrics cutting out their orbit
closures in Gr(2, S^2 U), and length-four clusters in three-space."""

from __future__ import annotations

__version__ = "0.1.0"

from hilbquad.kernel import BACKEND  # noqa: E402

__all__ = ["BACKEND", "__version__"]
