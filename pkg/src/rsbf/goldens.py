"""Reference tables shipped as package data, kept apart from computed output."""

from __future__ import annotations

from functools import lru_cache
from importlib import resources

from .report import TableArtifact

__all__ = ["load_reference_table", "zero_value_maps"]


@lru_cache(maxsize=None)
def _read(name: str) -> str:
    return resources.files("rsbf").joinpath(f"data/{name}").read_text(encoding="ascii")


def load_reference_table(which: int) -> TableArtifact:
    """The stored copy of reference table 1 or 2."""
    if which not in (1, 2):
        raise ValueError(f"reference tables are numbered 1 and 2, got {which}")
    return TableArtifact.from_csv_text(f"table{which}", _read(f"table{which}.csv"))


def zero_value_maps() -> tuple[dict[tuple[int, int, int], int], dict[int, int]]:
    """Zero-mask value maps (variant, family) from reference table 1.

    The stored upper triangle is mirrored across the diagonal, which is
    exact because swapping the variant indices only reverses the inputs.
    """
    art = load_reference_table(1)
    arities = [int(col) for col in art.columns]
    sub: dict[tuple[int, int, int], int] = {}
    fam: dict[int, int] = {}
    for key, values in art.rows:
        if key == "F4":
            fam.update(zip(arities, values))
            continue
        i, j = int(key[1]), int(key[2])
        for n, v in zip(arities, values):
            sub[(i, j, n)] = v
            sub[(j, i, n)] = v
    return sub, fam
