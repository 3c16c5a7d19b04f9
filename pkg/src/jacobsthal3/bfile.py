"""Reading and writing b-files: plain ``index value`` sequence tables."""
from __future__ import annotations

from typing import Iterable, NamedTuple

from .exceptions import BFileParseError


class BFileRow(NamedTuple):
    index: int
    value: int


def parse_bfile(lines: Iterable[str]) -> list[BFileRow]:
    """Parse b-file lines; '#' comments and blank lines are skipped.

    Raises :class:`BFileParseError` carrying the 1-based line number on a
    malformed line or a non-increasing index.
    """
    rows: list[BFileRow] = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(lineno, f"expected '<index> <value>', got {raw.rstrip()!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(lineno, f"non-integer field in {raw.rstrip()!r}") from None
        if rows and index <= rows[-1].index:
            raise BFileParseError(lineno, f"index {index} does not increase (previous {rows[-1].index})")
        rows.append(BFileRow(index, value))
    return rows


def read_bfile(path) -> list[BFileRow]:
    with open(path, encoding="utf-8") as fh:
        return parse_bfile(fh)


def format_bfile(rows: Iterable[tuple[int, int]], header: str | None = None) -> str:
    out = []
    if header:
        out.extend(f"# {line}" for line in header.splitlines())
    out.extend(f"{i} {v}" for i, v in rows)
    return "\n".join(out) + ("\n" if out else "")
