import os

DEFAULT_MAX_ELEMENTS = 20000
ENV_VAR = "QS_MAX_ELEMENTS"


def max_elements(override=None):
    """Element cap for any constructed poset; ``QS_MAX_ELEMENTS`` overrides the default."""
    if override is not None:
        return int(override)
    value = os.environ.get(ENV_VAR)
    if value:
        return int(value)
    return DEFAULT_MAX_ELEMENTS
