"""Guard rail for the size-bounded constructions."""


class LimitError(Exception):
    """A requested construction exceeds the active size cap."""


def ensure_within(value, cap, default, what):
    """Raise LimitError if value is above the active cap.

    cap=None means "use the module default"; anything else overrides it.
    """
    active = default if cap is None else cap
    if value > active:
        raise LimitError(f"{what} {value} exceeds the active limit {active}")
