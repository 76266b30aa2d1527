"""Process-wide defaults."""

import os

DEFAULT_PRECISION_BITS = 256
MIN_PRECISION_BITS = 64


def default_precision():
    """Working precision in bits, overridable with ``HPEXP_PRECISION_BITS``."""
    raw = os.environ.get("HPEXP_PRECISION_BITS")
    if not raw:
        return DEFAULT_PRECISION_BITS
    bits = int(raw)
    if bits < MIN_PRECISION_BITS:
        raise ValueError(f"HPEXP_PRECISION_BITS must be at least {MIN_PRECISION_BITS}")
    return bits
