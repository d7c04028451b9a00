"""Deterministic CSV writing shared by the CLI and trajectory export.

Floats are rendered with 17 significant digits ("." decimal separator),
lines end with "\\n", one header row per file.  Identical inputs therefore
produce byte-identical files.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager


def format_value(v) -> str:
    if isinstance(v, bool):
        return "1" if v else "0"
    if isinstance(v, float):
        return format(v, ".17g")
    if isinstance(v, int):
        return str(v)
    return str(v)


def write_csv(fh, header, rows):
    fh.write(",".join(header) + "\n")
    n = 0
    for row in rows:
        fh.write(",".join(format_value(v) for v in row) + "\n")
        n += 1
    return n


@contextmanager
def open_out(path):
    """Yield a text handle for ``path``; None or "-" means stdout."""
    if path is None or path == "-":
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            yield fh
