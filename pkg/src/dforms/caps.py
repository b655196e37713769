"""Resource caps shared by the enumeration routines.

Defaults can be overridden through the DFORMS_CAPS environment variable,
e.g. ``DFORMS_CAPS="group=100000,monomials=5000"``.
"""

import os
from contextlib import contextmanager

DEFAULTS = {
    "group": 10**7,
    "monomials": 200_000,
    "orbit": 2_000_000,
}


_OVERRIDES = {}


class CapExceeded(RuntimeError):
    pass


@contextmanager
def override(**values):
    """Temporarily replace caps (explicit per-call values still win)."""
    saved = dict(_OVERRIDES)
    _OVERRIDES.update({k: int(v) for k, v in values.items() if v is not None})
    try:
        yield
    finally:
        _OVERRIDES.clear()
        _OVERRIDES.update(saved)


def caps(**overrides):
    out = dict(DEFAULTS)
    env = os.environ.get("DFORMS_CAPS", "").strip()
    if env:
        for item in env.split(","):
            if not item.strip():
                continue
            name, _, value = item.partition("=")
            name = name.strip()
            if name not in DEFAULTS:
                raise ValueError(f"unknown cap {name!r} in DFORMS_CAPS")
            out[name] = int(float(value))
    out.update(_OVERRIDES)
    for name, value in overrides.items():
        if value is not None:
            out[name] = int(value)
    return out


def get_cap(name, value=None):
    return caps(**{name: value})[name]
