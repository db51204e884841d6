"""Irreducible characters of the symmetric group by the Murnaghan-Nakayama rule.

Characters are computed on beta-sets: removing a border strip of length k
from a partition moves one bead of its beta-set down by k, with sign
(-1)^(number of beads jumped over).
"""

from __future__ import annotations

import os
import threading
from collections import Counter
from dataclasses import dataclass
from functools import cache
from math import factorial, prod
from pathlib import Path

from .errors import CacheValidationError, SizeMismatch
from .partitions import Partition, partitions_of

__all__ = [
    "z_value",
    "class_size",
    "mn_character",
    "CharacterTable",
    "character_table",
    "save_table",
    "load_table",
]


def z_value(rho: Partition) -> int:
    """Order of the centralizer of a permutation of cycle type rho."""
    return prod(m**k * factorial(k) for m, k in Counter(rho).items())


def class_size(rho: Partition) -> int:
    return factorial(sum(rho)) // z_value(rho)


def _strip_removals(shape: tuple[int, ...], k: int):
    """Yield (sign, smaller shape) for every border strip of length k in ``shape``."""
    length = len(shape)
    beta = [p + length - 1 - i for i, p in enumerate(shape)]
    occupied = set(beta)
    for pos, b in enumerate(beta):
        target = b - k
        if target < 0 or target in occupied:
            continue
        jumped = sum(1 for c in beta if target < c < b)
        new_beta = sorted((target if i == pos else c for i, c in enumerate(beta)), reverse=True)
        parts = [c - (length - 1 - i) for i, c in enumerate(new_beta)]
        while parts and parts[-1] == 0:
            parts.pop()
        yield (-1) ** jumped, tuple(parts)


@cache
def _mn(shape: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # cycles is sorted decreasing; the largest one is consumed first
    if not cycles:
        return 1 if not shape else 0
    k, rest = cycles[0], cycles[1:]
    return sum(sign * _mn(smaller, rest) for sign, smaller in _strip_removals(shape, k))


def mn_character(lam: Partition, rho: Partition) -> int:
    """chi^lam evaluated on the conjugacy class of cycle type rho."""
    lam, rho = Partition(lam), Partition(rho)
    if lam.size != rho.size:
        raise SizeMismatch(f"|{lam.text()}| != |{rho.text()}|")
    return _mn(tuple(lam), tuple(rho))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: tuple[Partition, ...]
    values: tuple[tuple[int, ...], ...]  # values[row lam][column rho]

    @property
    def classes(self) -> tuple[Partition, ...]:
        return self.partitions

    @property
    def class_sizes(self) -> tuple[int, ...]:
        return tuple(class_size(rho) for rho in self.partitions)

    def row(self, lam: Partition) -> tuple[int, ...]:
        return self.values[self._index[Partition(lam)]]

    def __getitem__(self, key: tuple[Partition, Partition]) -> int:
        lam, rho = key
        return self.values[self._index[Partition(lam)]][self._index[Partition(rho)]]

    @property
    def _index(self) -> dict[Partition, int]:
        idx = self.__dict__.get("_idx")
        if idx is None:
            idx = {p: i for i, p in enumerate(self.partitions)}
            object.__setattr__(self, "_idx", idx)
        return idx

    def row_orthogonality_holds(self) -> bool:
        sizes = self.class_sizes
        order = factorial(self.n)
        for i, a in enumerate(self.values):
            for j, b in enumerate(self.values):
                s = sum(c * x * y for c, x, y in zip(sizes, a, b))
                if s != (order if i == j else 0):
                    return False
        return True

    def column_orthogonality_holds(self) -> bool:
        zs = [z_value(rho) for rho in self.partitions]
        cols = list(zip(*self.values))
        for i, a in enumerate(cols):
            for j, b in enumerate(cols):
                s = sum(x * y for x, y in zip(a, b))
                if s != (zs[i] if i == j else 0):
                    return False
        return True


_tables: dict[int, CharacterTable] = {}
_tables_lock = threading.Lock()


def _build_table(n: int) -> CharacterTable:
    parts = tuple(partitions_of(n))
    values = tuple(tuple(_mn(tuple(lam), tuple(rho)) for rho in parts) for lam in parts)
    return CharacterTable(n, parts, values)


def character_table(n: int) -> CharacterTable:
    """Full character table of S_n, built once per process and then shared."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    table = _tables.get(n)
    if table is not None:
        return table
    with _tables_lock:
        table = _tables.get(n)
        if table is None:
            table = _load_from_env_cache(n) or _build_table(n)
            _tables[n] = table
    return table


# On-disk format (plain decimal text, one item per line):
#   line 1: n
#   line 2: number of partitions p(n)
#   next p(n) lines: the partitions of n in table order, "3,2,1" style ("-" for n = 0)
#   next p(n) lines: table rows, space separated integers, row i is chi^{partition i}
CACHE_ENV = "HORNKRON_CACHE"


def save_table(table: CharacterTable, path: str | os.PathLike) -> None:
    lines = [str(table.n), str(len(table.partitions))]
    lines += [p.text() for p in table.partitions]
    lines += [" ".join(map(str, row)) for row in table.values]
    Path(path).write_text("\n".join(lines) + "\n")


def load_table(path: str | os.PathLike) -> CharacterTable:
    """Read a saved table; refuse it unless both orthogonality relations hold exactly."""
    from .partitions import parse_partition

    lines = Path(path).read_text().split("\n")
    try:
        n, count = int(lines[0]), int(lines[1])
        parts = tuple(parse_partition(t) for t in lines[2 : 2 + count])
        rows = tuple(tuple(int(x) for x in line.split()) for line in lines[2 + count : 2 + 2 * count])
    except (ValueError, IndexError) as exc:
        raise CacheValidationError(f"malformed character table file {path}") from exc
    if any(p.size != n for p in parts) or len(set(parts)) != count or any(len(r) != count for r in rows):
        raise CacheValidationError(f"inconsistent character table file {path}")
    if set(parts) != set(partitions_of(n)):
        raise CacheValidationError(f"{path} does not list every partition of {n}")
    table = CharacterTable(n, parts, rows)
    if not (table.row_orthogonality_holds() and table.column_orthogonality_holds()):
        raise CacheValidationError(f"{path} fails the orthogonality relations")
    return table


def _load_from_env_cache(n: int) -> CharacterTable | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    path = Path(root) / f"chartable_{n}.txt"
    if path.exists():
        return load_table(path)
    table = _build_table(n)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        save_table(table, path)
    except OSError:
        pass
    return table
