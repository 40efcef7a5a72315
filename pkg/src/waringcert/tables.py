"""Rows of generic, monomial and maximum-rank bounds for 3 and 4 variables."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from functools import lru_cache
from importlib import resources

from .bounds import algen, generic_rank, max_monomial_rank

SOURCES = ("construction", "monomial", "generic", "known")


@dataclass(frozen=True)
class TableRow:
    d: int
    generic: int
    monomial_max: int
    lower: int
    lower_source: str
    upper_literature: int | None = None

    def to_json(self) -> dict:
        return asdict(self)


@lru_cache(maxsize=None)
def literature() -> dict:
    text = resources.files("waringcert").joinpath("data/literature_bounds.json").read_text()
    return json.loads(text)


def construction_bound(n: int, d: int) -> int | None:
    """``algen(n-1, d-1) + 1`` for odd d >= 5, the value the construction certifies."""
    if n < 3 or d < 5 or d % 2 == 0:
        return None
    return algen(n - 1, d - 1) + 1


def table_row(n: int, d: int) -> TableRow:
    lit = literature()
    known = lit["known_maximum"].get(str(n), {}).get(str(d))
    upper = lit["upper_bound"].get(str(n), {}).get(str(d), known)
    candidates = {
        "construction": construction_bound(n, d),
        "monomial": max_monomial_rank(n, d),
        "generic": generic_rank(n, d),
        "known": known,
    }
    lower = max(v for v in candidates.values() if v is not None)
    source = next(s for s in SOURCES if candidates[s] == lower)
    return TableRow(d, candidates["generic"], candidates["monomial"], lower, source, upper)


def table(n: int, dmax: int, dmin: int = 3) -> list[TableRow]:
    if n not in (3, 4):
        raise ValueError("tables are available for n = 3 and n = 4")
    return [table_row(n, d) for d in range(dmin, dmax + 1)]
