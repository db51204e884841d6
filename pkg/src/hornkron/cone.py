"""Exact ranks of lattice-point sets: cone and face dimensions of the semigroups.

Dimensions are measured as the rank of the linear span of enumerated points,
so every number reported here is a lower bound that becomes exact once enough
points are enumerated. Reports always carry the ``nmax`` they were computed at.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .forms import LinearForm
from .kron import KronRecord, enumerate_kron
from .lr import lr_coefficient, lr_membership_system
from .partitions import bounded_partitions

__all__ = [
    "rank",
    "RankTracker",
    "kron_points",
    "cone_dimension",
    "ConeDimension",
    "face_dimension",
    "FaceReport",
    "lr_points",
    "lr_minimality_report",
]


def _integer_row(row: Sequence) -> list[int]:
    fracs = [Fraction(x) for x in row]
    scale = lcm(*(q.denominator for q in fracs)) if fracs else 1
    return [int(q * scale) for q in fracs]


class RankTracker:
    """Incremental exact rank over Q.

    Keeps an integer echelon basis; each new row is reduced against it with
    fraction-free steps (cross multiplication, then division by the gcd).
    """

    def __init__(self, width: int | None = None):
        self.width = width
        self.pivots: list[tuple[int, list[int]]] = []

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Sequence) -> bool:
        """Insert a row; True if it increased the rank."""
        vec = _integer_row(row)
        if self.width is None:
            self.width = len(vec)
        elif len(vec) != self.width:
            raise ValueError(f"row of length {len(vec)} in a rank computation of width {self.width}")
        if self.rank == self.width:
            return False
        for col, prow in self.pivots:
            c = vec[col]
            if c:
                p = prow[col]
                vec = [p * a - c * b for a, b in zip(vec, prow)]
                vec = _primitive(vec)
        for col, v in enumerate(vec):
            if v:
                self.pivots.append((col, vec))
                return True
        return False


def _primitive(vec: list[int]) -> list[int]:
    g = 0
    for v in vec:
        g = gcd(g, v)
    return [v // g for v in vec] if g > 1 else vec


def rank(points: Iterable[Sequence]) -> int:
    """Exact rank over the rationals of a list of coordinate vectors."""
    tracker = RankTracker()
    for p in points:
        tracker.add(p)
    return tracker.rank


def kron_points(records: Iterable[KronRecord], e: int, f: int) -> list[tuple[int, ...]]:
    """Embed records of Kron(e+1, f+1, e+f+1) into Q^(2e+2f+3)."""
    return [r.alpha.padded(e + 1) + r.beta.padded(f + 1) + r.gamma.padded(e + f + 1) for r in records]


@dataclass(frozen=True)
class ConeDimension:
    e: int
    f: int
    nmax: int
    rank: int
    grew_at_nmax: bool
    expected: int

    @property
    def stable(self) -> bool:
        return not self.grew_at_nmax

    def to_json(self) -> dict:
        return {
            "e": self.e,
            "f": self.f,
            "nmax": self.nmax,
            "rank": self.rank,
            "expected": self.expected,
            "grew_at_nmax": self.grew_at_nmax,
            "pass": self.rank == self.expected,
        }


def _rank_with_growth(records: list[KronRecord], e: int, f: int, nmax: int) -> tuple[int, bool]:
    tracker = RankTracker(2 * e + 2 * f + 3)
    grew = False
    for rec, point in zip(records, kron_points(records, e, f)):
        if tracker.add(point) and rec.n == nmax:
            grew = True
    return tracker.rank, grew


def cone_dimension(e: int, f: int, nmax: int) -> ConeDimension:
    """Rank of the points of Kron(e+1, f+1, e+f+1) of size <= nmax; 2e+2f+1 once enough are seen."""
    records = enumerate_kron(e + 1, f + 1, e + f + 1, nmax)
    r, grew = _rank_with_growth(records, e, f, nmax)
    return ConeDimension(e, f, nmax, r, grew, 2 * e + 2 * f + 1)


@dataclass(frozen=True)
class FaceReport:
    form_label: str
    saturated_count: int
    rank: int
    expected: int
    nmax: int

    @property
    def passed(self) -> bool:
        return self.rank == self.expected

    def to_json(self) -> dict:
        return {
            "form_label": self.form_label,
            "saturated_count": self.saturated_count,
            "rank": self.rank,
            "expected": self.expected,
            "nmax": self.nmax,
            "pass": self.passed,
        }


def face_dimension(form: LinearForm, e: int, f: int, nmax: int, expected: int | None = None) -> FaceReport:
    """Rank of the points of Kron(e+1, f+1, e+f+1) (size <= nmax) on which ``form`` vanishes.

    ``expected`` defaults to 2e+2f, the dimension of a facet.
    """
    records = enumerate_kron(e + 1, f + 1, e + f + 1, nmax)
    tracker = RankTracker(2 * e + 2 * f + 3)
    count = 0
    for rec in records:
        if form.slack(*rec.triple) == 0:
            count += 1
            tracker.add(form.embed(*rec.triple))
    target = 2 * e + 2 * f if expected is None else expected
    return FaceReport(form.label, count, tracker.rank, target, nmax)


def lr_points(e: int, f: int, nmax: int) -> list[tuple]:
    """All (alpha, beta, gamma) with c != 0, l(alpha)<=e, l(beta)<=f, l(gamma)<=e+f, 1 <= |gamma| <= nmax."""
    out = []
    for n in range(1, nmax + 1):
        for a_size in range(n + 1):
            for alpha in bounded_partitions(a_size, e):
                for beta in bounded_partitions(n - a_size, f):
                    for gamma in bounded_partitions(n, e + f):
                        if lr_coefficient(alpha, beta, gamma):
                            out.append((alpha, beta, gamma))
    return out


def lr_minimality_report(e: int, f: int, nmax: int) -> list[FaceReport]:
    """For every inequality describing LR(e, f, e+f): rank of its saturated points, expected 2e+2f-2."""
    system = lr_membership_system(e, f)
    points = lr_points(e, f, nmax)
    reports = []
    for form in system.inequalities:
        tracker = RankTracker(2 * (e + f))
        count = 0
        for triple in points:
            if form.slack(*triple) == 0:
                count += 1
                tracker.add(form.embed(*triple))
        reports.append(FaceReport(form.label, count, tracker.rank, 2 * e + 2 * f - 2, nmax))
    return reports
