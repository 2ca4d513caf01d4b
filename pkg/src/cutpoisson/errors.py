"""Exception and warning types shared across the package."""

from __future__ import annotations


class CutPoissonError(Exception):
    """Base class for all package-specific failures."""


class GeometryError(CutPoissonError):
    """Invalid geometry descriptor or interface outside the unit box."""


class MultiCutError(CutPoissonError):
    """A cell edge crosses the interface more than once; unsupported topology."""


class QuadratureError(CutPoissonError):
    """Subdivision depth cap reached; geometry unresolvable at this mesh width."""


class RankDeficientError(CutPoissonError):
    """A stencil least-squares system has too few independent rows."""


class NoConvergenceError(CutPoissonError):
    """Iterative solve failed to reach the requested tolerance."""


class IllConditionedStencilWarning(UserWarning):
    """Weighted stencil system condition estimate exceeded the warn threshold."""
