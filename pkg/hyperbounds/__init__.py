"""Exact verification of the degree bounds for entire curves in projective hypersurfaces."""

from __future__ import annotations

from .const import VERSION

__version__ = VERSION
