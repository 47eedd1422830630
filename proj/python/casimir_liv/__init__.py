"""Casimir energy, pressure and force between parallel plates with a
Lorentz-violation factor L, plus bounds on L from force measurements."""

import os
from pathlib import Path

# Installed wheels ship the presets next to the extension; the compiled-in
# default points at the source tree and may not exist.
_bundled = Path(__file__).with_name("presets")
if "CASIMIR_LIV_PRESET_DIR" not in os.environ and _bundled.is_dir():
    os.environ["CASIMIR_LIV_PRESET_DIR"] = str(_bundled)

from ._core import *  # noqa: E402,F401,F403
from ._core import DomainError, InputError, IoError  # noqa: E402,F401

__version__ = "0.1.0"
