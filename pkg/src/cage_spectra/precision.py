"""Extended-precision configuration.

The environment variable ``CAGE_SPECTRA_PRECISION`` sets the number of bits
of working precision used where binary64 is not enough (deep recurrences,
root bookkeeping).  Default is 128 bits.
"""

from __future__ import annotations

import os
from contextlib import contextmanager

import mpmath

ENV_VAR = "CAGE_SPECTRA_PRECISION"
DEFAULT_BITS = 128


def precision_bits() -> int:
    """Working precision in bits, read from the environment at call time."""
    raw = os.environ.get(ENV_VAR)
    if raw is None:
        return DEFAULT_BITS
    bits = int(raw)
    if bits < 53:
        raise ValueError(f"{ENV_VAR} must be at least 53 bits, got {bits}")
    return bits


@contextmanager
def working_precision(bits: int | None = None):
    """Context manager yielding mpmath's global context at the configured
    precision."""
    with mpmath.mp.workprec(bits if bits is not None else precision_bits()):
        yield mpmath.mp
