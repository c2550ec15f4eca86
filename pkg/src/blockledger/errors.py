class CorruptionError(RuntimeError):
    """An internal invariant that valid input cannot break was broken."""
