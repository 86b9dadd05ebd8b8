"""Python front-end to the pcm C++ core."""

import json

from ._core import (
    PrecisionError,
    class_number,
    classify,
    cm_inf,
    cm_p,
    hensel_sqrt_digits,
    hilbert_symbol,
    legendre,
)
from ._core import run as _run

__all__ = [
    "PrecisionError",
    "class_number",
    "classify",
    "cli",
    "cm_inf",
    "cm_p",
    "hensel_sqrt_digits",
    "hilbert_symbol",
    "legendre",
]


def cli(*args: str) -> tuple[int, dict]:
    """Run a command as the `pcm` binary would; returns (exit code, document)."""
    code, text, _summary = _run([str(a) for a in args])
    return code, json.loads(text) if text else {}
