"""Reading and writing level-spectrum files.

A spectrum file is a JSON document with exactly two keys::

    {
      "levels": [{"degeneracy": 2, "energy": 0.0}, ...],
      "statistics": "fermi"
    }

:func:`dumps` is the canonical writer: levels merged and sorted, keys sorted,
two-space indent, trailing newline.  ``loads(dumps(...))`` round-trips.
"""

import json
import math

from .ensemble import STATISTICS, Level, Spectrum
from .errors import DomainError

__all__ = ["SpectrumFormatError", "loads", "dumps", "read_spectrum", "write_spectrum"]


class SpectrumFormatError(DomainError):
    """The document is not a valid spectrum file."""


def loads(text):
    """Parse a spectrum document; returns ``(statistics, Spectrum)``."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpectrumFormatError(f"not valid JSON: {exc}") from None
    if not isinstance(doc, dict) or set(doc) != {"statistics", "levels"}:
        raise SpectrumFormatError('expected an object with exactly the keys "statistics" and "levels"')
    stat = doc["statistics"]
    if stat not in STATISTICS:
        raise SpectrumFormatError(f"statistics must be one of {STATISTICS}, got {stat!r}")
    raw = doc["levels"]
    if not isinstance(raw, list) or not raw:
        raise SpectrumFormatError('"levels" must be a non-empty list')
    levels = []
    for i, item in enumerate(raw):
        if not isinstance(item, dict) or set(item) != {"energy", "degeneracy"}:
            raise SpectrumFormatError(f'level {i}: expected exactly the keys "energy" and "degeneracy"')
        e, z = item["energy"], item["degeneracy"]
        if isinstance(e, bool) or not isinstance(e, (int, float)) or not math.isfinite(e):
            raise SpectrumFormatError(f"level {i}: energy must be a finite number, got {e!r}")
        if isinstance(z, bool) or not isinstance(z, int) or z < 1:
            raise SpectrumFormatError(f"level {i}: degeneracy must be an integer >= 1, got {z!r}")
        levels.append(Level(float(e), z))
    return stat, Spectrum.from_levels(levels)


def dumps(stat, spectrum):
    """Canonical text for a spectrum."""
    if stat not in STATISTICS:
        raise DomainError(f"statistics must be one of {STATISTICS}, got {stat!r}")
    spectrum = Spectrum.from_levels(spectrum)
    doc = {
        "statistics": stat,
        "levels": [{"energy": lv.energy, "degeneracy": lv.degeneracy} for lv in spectrum],
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def read_spectrum(path):
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())


def write_spectrum(path, stat, spectrum):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(stat, spectrum))
