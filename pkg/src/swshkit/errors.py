class DomainError(ValueError):
    """Arguments violate a documented domain constraint (bad quantum numbers,
    out-of-range angles, pole proximity, degenerate geometry, ...)."""
