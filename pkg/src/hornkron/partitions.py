"""Partitions, index sets and the small operations the inequality families are built from.

A partition is stored in canonical form (trailing zeros stripped) as an
immutable tuple. Row indices in the public helpers are 1-based, matching the
usual notation ``alpha_1 >= alpha_2 >= ...``; rows past the length read as 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from .errors import AmbientTooSmall, BadIndexSet, NegativePart, NotWeaklyDecreasing

__all__ = [
    "Partition",
    "IndexSet",
    "make_partition",
    "drop_first",
    "select",
    "tau",
    "complement",
    "conjugate",
    "partitions_of",
    "bounded_partitions",
    "subsets",
    "parse_partition",
    "parse_index_set",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive integers.

    Build through :func:`make_partition` (or ``Partition(values)``), which
    validates and strips trailing zeros.
    """

    __slots__ = ()

    def __new__(cls, values: Iterable[int] = ()):
        parts = tuple(int(v) for v in values)
        for v in parts:
            if v < 0:
                raise NegativePart(f"negative part in {parts}")
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise NotWeaklyDecreasing(f"{parts} is not weakly decreasing")
        end = len(parts)
        while end and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th row (1-based), zero beyond the length."""
        if i < 1:
            raise IndexError("rows are numbered from 1")
        return self[i - 1] if i <= len(self) else 0

    def padded(self, d: int) -> tuple[int, ...]:
        if len(self) > d:
            raise AmbientTooSmall(f"{self.text()} has more than {d} rows")
        return tuple(self) + (0,) * (d - len(self))

    def scaled(self, k: int) -> "Partition":
        return Partition(k * p for p in self)

    def contains(self, other: "Partition") -> bool:
        """True if the diagram of ``other`` fits inside this one."""
        return len(other) <= len(self) and all(a >= b for a, b in zip(self, other))

    def text(self) -> str:
        return ",".join(map(str, self)) if self else "-"

    def __repr__(self) -> str:
        return f"Partition({self.text()})"


def make_partition(values: Sequence[int]) -> Partition:
    return Partition(values)


def drop_first(alpha: Partition) -> Partition:
    """Remove the first row: (a1, a2, a3, ...) -> (a2, a3, ...)."""
    return Partition(alpha[1:])


@dataclass(frozen=True, order=True)
class IndexSet:
    """A strictly increasing subset of {1, ..., ambient}."""

    indices: tuple[int, ...]
    ambient: int

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", idx)
        if self.ambient < 0:
            raise BadIndexSet(f"negative ambient {self.ambient}")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise BadIndexSet(f"{idx} is not strictly increasing")
        if idx and (idx[0] < 1 or idx[-1] > self.ambient):
            raise BadIndexSet(f"{idx} not inside 1..{self.ambient}")

    @property
    def r(self) -> int:
        return len(self.indices)

    def __iter__(self) -> Iterator[int]:
        return iter(self.indices)

    def __len__(self) -> int:
        return len(self.indices)

    def __contains__(self, i) -> bool:
        return i in self.indices

    def text(self) -> str:
        return "{" + ",".join(map(str, self.indices)) + "}/" + str(self.ambient)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.indices)) + "}"


def select(alpha: Partition, index_set: IndexSet) -> Partition:
    """alpha_I: the rows of alpha (zero padded to the ambient) at the positions of I."""
    padded = alpha.padded(index_set.ambient)
    return Partition(padded[i - 1] for i in index_set)


def tau(index_set: IndexSet) -> Partition:
    """The partition (d-r+1-i_1, d-r+2-i_2, ..., d-i_r); it fits in an r x (d-r) box."""
    d, r = index_set.ambient, index_set.r
    return Partition(d - r + k - i for k, i in enumerate(index_set.indices, start=1))


def complement(index_set: IndexSet) -> IndexSet:
    rest = tuple(i for i in range(1, index_set.ambient + 1) if i not in index_set.indices)
    return IndexSet(rest, index_set.ambient)


def conjugate(alpha: Partition) -> Partition:
    if not alpha:
        return alpha
    return Partition(sum(1 for p in alpha if p > c) for c in range(alpha[0]))


def subsets(r: int, d: int) -> list[IndexSet]:
    """All of P(r, d) in lexicographic order."""
    return [IndexSet(c, d) for c in combinations(range(1, d + 1), r)]


@cache
def _partitions(n: int, max_part: int, max_len: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    if max_len == 0:
        return ()
    out = []
    for head in range(min(n, max_part), 0, -1):
        for tail in _partitions(n - head, head, max_len - 1):
            out.append((head,) + tail)
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n, lexicographically decreasing."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return [Partition(p) for p in _partitions(n, n, n)]


def bounded_partitions(n: int, max_len: int, max_part: int | None = None) -> list[Partition]:
    """Partitions of n with at most ``max_len`` rows (and parts <= ``max_part``), lex decreasing."""
    if n < 0 or max_len < 0:
        return []
    bound = n if max_part is None else min(n, max_part)
    return [Partition(p) for p in _partitions(n, bound, max_len)]


def parse_partition(text: str) -> Partition:
    """Parse "3,2,1"; "-" or "" is the empty partition."""
    text = text.strip()
    if text in ("", "-", "()", "[]"):
        return Partition()
    text = text.strip("()[]")
    return Partition(int(tok) for tok in text.split(",") if tok.strip())


def parse_index_set(text: str) -> IndexSet:
    """Parse "{1,4}/4" into the index set {1,4} inside {1,...,4}."""
    try:
        body, ambient = text.strip().rsplit("/", 1)
    except ValueError:
        raise BadIndexSet(f"expected '{{i,j,...}}/d', got {text!r}") from None
    body = body.strip().strip("{}")
    indices = tuple(int(tok) for tok in body.split(",") if tok.strip())
    return IndexSet(indices, int(ambient))
