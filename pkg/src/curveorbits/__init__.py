"""Exact equivariant classes of orbit closures of plane curves and point configurations."""

from .poly import ConsistencyError, Poly, Symbols, UsageError

__version__ = "0.1.0"

__all__ = [
    "Poly",
    "Symbols",
    "UsageError",
    "ConsistencyError",
    "__version__",
    "compute_class",
    "quartic_table",
    "cubic_table",
    "section_counts",
    "points_class",
]


def __getattr__(name):
    # heavy modules load lazily so `import curveorbits` stays cheap
    if name in ("compute_class", "quartic_table", "cubic_table", "section_counts"):
        from . import orbits

        return getattr(orbits, name)
    if name == "points_class":
        from .points import points_class

        return points_class
    raise AttributeError(name)
