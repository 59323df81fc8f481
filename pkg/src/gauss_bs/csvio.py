"""CSV output with round-trip float formatting.

Floats use 17 significant digits, which round-trips every double exactly.
Fields are comma separated, lines end in ``\\n`` and a header is always written.
"""

from __future__ import annotations

import csv
import io
from pathlib import Path
from typing import Iterable, Sequence


def format_value(x) -> str:
    if isinstance(x, (bool,)):
        return str(int(x))
    if isinstance(x, int):
        return str(x)
    return format(float(x), ".17g")


def render(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(x) for x in row])
    return buf.getvalue()


def write_csv(path, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    text = render(header, rows)
    with open(Path(path), "w", newline="", encoding="ascii") as fh:
        fh.write(text)


def read_csv(path) -> tuple[list[str], list[list[float]]]:
    with open(Path(path), newline="", encoding="ascii") as fh:
        reader = csv.reader(fh)
        header = next(reader)
        rows = [[float(x) for x in row] for row in reader]
    return header, rows
