"""Grid files: one spec per line, ``p e m h t1,t2,...``; ``#`` starts a comment."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Iterable, Union

from cyclocode.core.cyclotomy import check_spec
from cyclocode.errors import GridParseError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GridEntry:
    line: int
    p: int
    e: int
    m: int
    h: int
    t: tuple[int, ...]

    @property
    def key(self) -> str:
        return f"{self.p} {self.e} {self.m} {self.h} {','.join(map(str, self.t))}"

    def params(self) -> tuple[int, int, int, int, tuple[int, ...]]:
        return self.p, self.e, self.m, self.h, self.t


def parse_grid(text: str) -> list[GridEntry]:
    """Parse grid text. Syntax errors raise; invalid specs are returned as-is."""
    entries = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 5:
            raise GridParseError(
                f"Line {lineno}: expected 'p e m h t1,t2,...', got {raw.strip()!r}"
            )
        try:
            p, e, m, h = (int(x) for x in parts[:4])
            t = tuple(int(x) for x in parts[4].split(",") if x != "")
        except ValueError:
            raise GridParseError(f"Line {lineno}: non-integer field in {raw.strip()!r}") from None
        entries.append(GridEntry(line=lineno, p=p, e=e, m=m, h=h, t=t))
    logger.debug("Parsed %d grid entries", len(entries))
    return entries


def load_grid(path: Union[str, Path]) -> list[GridEntry]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise GridParseError(f"Cannot read grid file {str(path)!r}: {exc}") from None
    return parse_grid(text)


def format_grid(entries: Iterable[GridEntry]) -> str:
    return "".join(f"{e.key}\n" for e in entries)


def default_grid() -> list[GridEntry]:
    """The worked examples: two-weight, gap, simplex, MDS and s=2 specs."""
    return parse_grid(
        "2 1 6 3 0\n"
        "2 1 6 3 0,1\n"
        "2 1 4 3 0\n"
        "2 1 4 3 0,1,2\n"
        "3 1 2 2 0\n"
    )


def admissible_h(p: int, e: int, m: int) -> list[int]:
    """All h with h(q-1) | Q-1 and 1 < h < sqrt(Q) + 1."""
    q = p**e
    Q = q**m
    return [h for h in range(2, Q) if not check_spec(p, e, m, h, (0,))]


def acceptance_grid(
    fields: Iterable[tuple[int, int]] = ((2, 1), (3, 1)),
    degrees: Iterable[int] = (2, 4, 6),
    max_s: int = 3,
) -> list[GridEntry]:
    """Every valid spec over the given (p, e) and m, all t with |t| <= max_s."""
    entries = []
    degrees = tuple(degrees)
    for p, e in fields:
        for m in degrees:
            for h in admissible_h(p, e, m):
                for s in range(1, min(max_s, h) + 1):
                    for t in combinations(range(h), s):
                        entries.append(GridEntry(line=len(entries) + 1, p=p, e=e, m=m, h=h, t=t))
    return entries
