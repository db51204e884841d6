"""Littlewood-Richardson coefficients, Horn triples and the description of LR(e, f, e+f)."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from itertools import product
from math import comb, factorial

from .characters import character_table, class_size
from .errors import BadRange, LengthBoundViolated, NonIntegerResult
from .forms import LinearForm
from .partitions import IndexSet, Partition, complement, subsets, tau

__all__ = [
    "lr_coefficient",
    "lr_oracle",
    "HornTriple",
    "horn_triples",
    "all_horn_triples",
    "LrMembershipSystem",
    "lr_membership_system",
    "lr_member",
    "stretched_lr",
    "interpolate",
    "fitted_degree",
    "degree_bound",
    "tilde_sets",
    "tilde_duality_check",
]


def lr_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """c_{alpha beta}^gamma: the number of LR tableaux of shape gamma/alpha and content beta."""
    return _lr(tuple(Partition(alpha)), tuple(Partition(beta)), tuple(Partition(gamma)))


@cache
def _lr(alpha: tuple[int, ...], beta: tuple[int, ...], gamma: tuple[int, ...]) -> int:
    if sum(alpha) + sum(beta) != sum(gamma):
        return 0
    if len(alpha) > len(gamma) or any(a > g for a, g in zip(alpha, gamma)):
        return 0
    if len(beta) > len(gamma) or any(b > g for b, g in zip(beta, gamma)):
        return 0
    if not beta:
        return 1
    rows = len(gamma)
    inner = alpha + (0,) * (rows - len(alpha))
    # filled[i][c] holds the entry of cell (i, c); cells of alpha are never read
    filled = [[0] * g for g in gamma]
    counts = [0] * (len(beta) + 1)
    cells = [(i, c) for i in range(rows) for c in range(gamma[i] - 1, inner[i] - 1, -1)]
    total = len(cells)

    def fill(pos: int) -> int:
        if pos == total:
            return 1
        i, c = cells[pos]
        hi = min(len(beta), i + 1)
        if c + 1 < gamma[i]:
            hi = min(hi, filled[i][c + 1])
        lo = 1
        if i > 0 and c >= inner[i - 1]:
            lo = filled[i - 1][c] + 1
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= beta[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            filled[i][c] = v
            found += fill(pos + 1)
            counts[v] -= 1
        return found

    return fill(0)


def lr_oracle(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """c_{alpha beta}^gamma from characters: restriction of chi^gamma to S_a x S_b."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    a, b = alpha.size, beta.size
    if a + b != gamma.size:
        return 0
    ta, tb, tg = character_table(a), character_table(b), character_table(a + b)
    row_a, row_b, row_g = ta.row(alpha), tb.row(beta), tg.row(gamma)
    index_g = {rho: i for i, rho in enumerate(tg.partitions)}
    total = 0
    for i, rho in enumerate(ta.partitions):
        if row_a[i] == 0:
            continue
        for j, sigma in enumerate(tb.partitions):
            if row_b[j] == 0:
                continue
            merged = Partition(sorted(rho + sigma, reverse=True))
            total += class_size(rho) * class_size(sigma) * row_a[i] * row_b[j] * row_g[index_g[merged]]
    q, rem = divmod(total, factorial(a) * factorial(b))
    if rem:
        raise NonIntegerResult(f"character sum for c({alpha.text()},{beta.text()};{gamma.text()}) is not integral")
    return q


@dataclass(frozen=True)
class HornTriple:
    I: IndexSet
    J: IndexSet
    K: IndexSet
    e: int
    f: int
    c: int = field(default=1, compare=False)

    @property
    def r(self) -> int:
        return self.I.r

    @property
    def s(self) -> int:
        return self.J.r

    def text(self) -> str:
        return f"I={self.I} J={self.J} K={self.K} r={self.r} s={self.s} c={self.c}"

    def to_json(self) -> dict:
        return {
            "I": list(self.I.indices),
            "J": list(self.J.indices),
            "K": list(self.K.indices),
            "e": self.e,
            "f": self.f,
            "r": self.r,
            "s": self.s,
            "c": self.c,
        }


def horn_triples(e: int, f: int, r: int, s: int, value: int = 1) -> list[HornTriple]:
    """All (I, J, K) in P(r,e) x P(s,f) x P(r+s,e+f) with c_{tau^I tau^J}^{tau^K} == value."""
    if not (0 < r < e and 0 < s < f):
        raise BadRange(f"need 0 < r < e and 0 < s < f, got e={e} f={f} r={r} s={s}")
    out = []
    for I, J, K in product(subsets(r, e), subsets(s, f), subsets(r + s, e + f)):
        c = lr_coefficient(tau(I), tau(J), tau(K))
        if c == value:
            out.append(HornTriple(I, J, K, e, f, c))
    return out


def all_horn_triples(e: int, f: int) -> list[HornTriple]:
    return [t for r in range(1, e) for s in range(1, f) for t in horn_triples(e, f, r, s)]


@dataclass(frozen=True)
class LrMembershipSystem:
    e: int
    f: int
    equality: LinearForm
    bounds: tuple[LinearForm, ...]
    horn: tuple[tuple[HornTriple, LinearForm], ...]

    @property
    def inequalities(self) -> list[LinearForm]:
        return list(self.bounds) + [form for _, form in self.horn]

    def holds(self, alpha: Partition, beta: Partition, gamma: Partition) -> bool:
        if self.equality.slack(alpha, beta, gamma) != 0:
            return False
        return all(form.slack(alpha, beta, gamma) >= 0 for form in self.inequalities)


def lr_membership_system(e: int, f: int) -> LrMembershipSystem:
    shape = (e, f, e + f)
    equality = LinearForm((1,) * e, (1,) * f, (-1,) * (e + f), "|alpha|+|beta|-|gamma|")
    bounds = []
    bounds += [LinearForm.from_terms(shape, {("alpha", i): 1, ("gamma", f + i): -1}, f"gamma_{f + i}<=alpha_{i}") for i in range(1, e + 1)]
    bounds += [LinearForm.from_terms(shape, {("gamma", i): 1, ("alpha", i): -1}, f"alpha_{i}<=gamma_{i}") for i in range(1, e + 1)]
    bounds += [LinearForm.from_terms(shape, {("beta", j): 1, ("gamma", e + j): -1}, f"gamma_{e + j}<=beta_{j}") for j in range(1, f + 1)]
    bounds += [LinearForm.from_terms(shape, {("gamma", j): 1, ("beta", j): -1}, f"beta_{j}<=gamma_{j}") for j in range(1, f + 1)]
    horn = []
    for t in all_horn_triples(e, f):
        terms: dict[tuple[str, int], int] = {}
        for i in t.I:
            terms[("alpha", i)] = 1
        for j in t.J:
            terms[("beta", j)] = 1
        for k in t.K:
            terms[("gamma", k)] = -1
        horn.append((t, LinearForm.from_terms(shape, terms, f"horn {t.I} {t.J} {t.K}")))
    return LrMembershipSystem(e, f, equality, tuple(bounds), tuple(horn))


def lr_member(alpha: Partition, beta: Partition, gamma: Partition, e: int, f: int) -> bool:
    """Decide c_{alpha beta}^gamma != 0 from the linear inequalities of LR(e, f, e+f)."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if len(alpha) > e or len(beta) > f or len(gamma) > e + f:
        raise LengthBoundViolated(
            f"need l(alpha)<={e}, l(beta)<={f}, l(gamma)<={e + f}; got {alpha.text()}, {beta.text()}, {gamma.text()}"
        )
    return _system(e, f).holds(alpha, beta, gamma)


@cache
def _system(e: int, f: int) -> LrMembershipSystem:
    return lr_membership_system(e, f)


def stretched_lr(alpha: Partition, beta: Partition, gamma: Partition, N: int) -> list[int]:
    """[c_{k alpha, k beta}^{k gamma} for k = 1..N]."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    return [lr_coefficient(alpha.scaled(k), beta.scaled(k), gamma.scaled(k)) for k in range(1, N + 1)]


def interpolate(values: list[int], start: int = 1) -> list[Fraction]:
    """Coefficients (constant term first) of the polynomial through (start+i, values[i])."""
    n = len(values)
    # Newton divided differences on equally spaced nodes
    diffs = [Fraction(v) for v in values]
    newton = []
    for k in range(n):
        newton.append(diffs[0] / factorial(k))
        diffs = [b - a for a, b in zip(diffs, diffs[1:])]
    coeffs = [Fraction(0)] * max(n, 1)
    basis = [Fraction(1)]  # prod_{m<k} (x - start - m)
    for k, a in enumerate(newton):
        for d, b in enumerate(basis):
            coeffs[d] += a * b
        shifted = [Fraction(0)] + basis
        node = start + k
        basis = [shifted[d] - node * (basis[d] if d < len(basis) else 0) for d in range(len(shifted))]
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def fitted_degree(values: list[int]) -> tuple[int, bool]:
    """Degree of the interpolating polynomial and whether N >= degree + 2 makes it a stable claim.

    The zero polynomial is reported with degree -1.
    """
    coeffs = interpolate(values)
    degree = -1 if coeffs == [0] else len(coeffs) - 1
    return degree, len(values) >= degree + 2


def degree_bound(e: int, f: int) -> int:
    """Upper bound on deg_k c_{k alpha, k beta}^{k gamma} when l(alpha)<=e, l(beta)<=f, l(gamma)<=e+f."""
    return comb(e, 2) + comb(f, 2) + comb(e + f, 2) - e * e - f * f + 1


def tilde_sets(t: HornTriple) -> tuple[IndexSet, IndexSet, IndexSet]:
    """(I~, J~, K_-) inside {1, ..., e+f}, each of size e+f-r-s."""
    e, f, r, s = t.e, t.f, t.r, t.s
    d = e + f
    i_tilde = IndexSet(complement(t.I).indices + tuple(range(e + s + 1, d + 1)), d)
    j_tilde = IndexSet(complement(t.J).indices + tuple(range(f + r + 1, d + 1)), d)
    return i_tilde, j_tilde, complement(t.K)


def tilde_duality_check(t: HornTriple) -> bool:
    i_tilde, j_tilde, k_minus = tilde_sets(t)
    left = lr_coefficient(tau(t.I), tau(t.J), tau(t.K))
    right = lr_coefficient(tau(i_tilde), tau(j_tilde), tau(k_minus))
    return left == right
