"""Kronecker coefficients and enumeration of the semigroups Kron(e, f, g)."""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from functools import cache
from math import factorial

import numpy as np

from .characters import character_table
from .errors import LengthBoundViolated, NonIntegerResult
from .partitions import Partition, bounded_partitions

__all__ = [
    "KronRecord",
    "kron_coefficient",
    "kron_oracle",
    "enumerate_kron",
    "kostka",
    "records_to_csv",
]


@dataclass(frozen=True)
class KronRecord:
    alpha: Partition
    beta: Partition
    gamma: Partition
    n: int
    g: int

    @property
    def triple(self) -> tuple[Partition, Partition, Partition]:
        return self.alpha, self.beta, self.gamma

    def to_json(self) -> dict:
        return {"alpha": list(self.alpha), "beta": list(self.beta), "gamma": list(self.gamma), "n": self.n, "g": self.g}

    @classmethod
    def from_json(cls, data: dict) -> "KronRecord":
        return cls(Partition(data["alpha"]), Partition(data["beta"]), Partition(data["gamma"]), data["n"], data["g"])


@cache
def _weighted_table(n: int):
    table = character_table(n)
    sizes = np.array(table.class_sizes, dtype=object)
    rows = {lam: np.array(table.row(lam), dtype=object) for lam in table.partitions}
    return sizes, rows


def kron_coefficient(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """Multiplicity of [gamma] in [alpha] (x) [beta]; zero when the sizes differ."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    n = alpha.size
    if beta.size != n or gamma.size != n:
        return 0
    return _kron(alpha, beta, gamma)


@cache
def _kron(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    n = alpha.size
    sizes, rows = _weighted_table(n)
    total = int(np.dot(sizes * rows[alpha] * rows[beta], rows[gamma]))
    q, rem = divmod(total, factorial(n))
    if rem:
        raise NonIntegerResult(f"character sum for g({alpha.text()},{beta.text()},{gamma.text()}) is not integral")
    return q


def enumerate_kron(e: int, f: int, g: int, nmax: int, nmin: int = 1) -> list[KronRecord]:
    """Every triple with l(alpha)<=e, l(beta)<=f, l(gamma)<=g, size in [nmin, nmax] and g_{alpha beta gamma} > 0.

    Records come out ordered by n, then alpha, beta, gamma lexicographically decreasing.
    """
    out = []
    for n in range(nmin, nmax + 1):
        out.extend(_kron_layer(e, f, g, n))
    return out


@cache
def _kron_layer(e: int, f: int, g: int, n: int) -> tuple[KronRecord, ...]:
    sizes, rows = _weighted_table(n)
    order = factorial(n)
    alphas = bounded_partitions(n, e)
    betas = bounded_partitions(n, f)
    gammas = bounded_partitions(n, g)
    if not gammas:
        return ()
    gamma_matrix = np.array([rows[c] for c in gammas], dtype=object)
    found = {}
    for a in alphas:
        weighted = sizes * rows[a]
        for b in betas:
            values = gamma_matrix.dot(weighted * rows[b])
            for c, total in zip(gammas, values):
                if total:
                    q, rem = divmod(int(total), order)
                    if rem:
                        raise NonIntegerResult(f"g({a.text()},{b.text()},{c.text()}) is not integral")
                    found[(a, b, c)] = q
    return tuple(KronRecord(a, b, c, n, found[(a, b, c)]) for a in alphas for b in betas for c in gammas if (a, b, c) in found)


# independent route: expand s_gamma(x_i y_j) into monomials, then peel off s_alpha(x) s_beta(y)


def _ssyt_contents(shape: tuple[int, ...], letters: int):
    """Yield the content vector (length ``letters``) of every SSYT of ``shape``."""
    cells = [(i, c) for i, row in enumerate(shape) for c in range(row)]
    grid = [[0] * row for row in shape]
    content = [0] * letters

    def fill(pos):
        if pos == len(cells):
            yield tuple(content)
            return
        i, c = cells[pos]
        lo = 0
        if c > 0:
            lo = grid[i][c - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][c] + 1)
        # the letters below row i in this column still need room
        hi = letters - 1 - sum(1 for k in range(i + 1, len(shape)) if shape[k] > c)
        for v in range(lo, hi + 1):
            grid[i][c] = v
            content[v] += 1
            yield from fill(pos + 1)
            content[v] -= 1

    yield from fill(0)


@cache
def kostka(shape: Partition, weight: tuple[int, ...]) -> int:
    """Number of SSYT of the given shape with content ``weight``."""
    shape = Partition(shape)
    if sum(shape) != sum(weight):
        return 0
    letters = len(weight)
    if len(shape) > letters:
        return 0
    return sum(1 for content in _ssyt_contents(tuple(shape), letters) if content == tuple(weight))


def kron_oracle(alpha: Partition, beta: Partition, gamma: Partition, e: int, f: int) -> int:
    """g as the multiplicity of s_alpha(x) s_beta(y) in s_gamma(x_i y_j), i <= e, j <= f."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if len(alpha) > e or len(beta) > f or len(gamma) > e * f:
        raise LengthBoundViolated(f"need l(alpha)<={e}, l(beta)<={f}, l(gamma)<={e * f}")
    n = gamma.size
    if alpha.size != n or beta.size != n:
        return 0
    return _schur_decomposition(gamma, e, f).get((alpha, beta), 0)


@cache
def _schur_decomposition(gamma: Partition, e: int, f: int) -> dict:
    # variables z_(i, j) = x_i y_j, ordered row-major
    pairs = [(i, j) for i in range(e) for j in range(f)]
    dominant: dict[tuple[tuple[int, ...], tuple[int, ...]], int] = defaultdict(int)
    for content in _ssyt_contents(tuple(gamma), len(pairs)):
        xs = [0] * e
        ys = [0] * f
        for (i, j), m in zip(pairs, content):
            xs[i] += m
            ys[j] += m
        if all(a >= b for a, b in zip(xs, xs[1:])) and all(a >= b for a, b in zip(ys, ys[1:])):
            dominant[(tuple(xs), tuple(ys))] += 1
    n = gamma.size
    alphas = bounded_partitions(n, e)
    betas = bounded_partitions(n, f)
    # dominance implies lex order, so lex-decreasing order is triangular
    result: dict[tuple[Partition, Partition], int] = {}
    for a in alphas:
        wa = a.padded(e)
        for b in betas:
            wb = b.padded(f)
            coeff = dominant.get((wa, wb), 0)
            for (a2, b2), g in result.items():
                coeff -= g * kostka(a2, wa) * kostka(b2, wb)
            if coeff:
                result[(a, b)] = coeff
    return result


def records_to_csv(records: list[KronRecord]) -> str:
    lines = ["alpha,beta,gamma,n,g"]
    for rec in records:
        lines.append(f'"{rec.alpha.text()}","{rec.beta.text()}","{rec.gamma.text()}",{rec.n},{rec.g}')
    return "\n".join(lines) + "\n"


def records_to_json(records: list[KronRecord]) -> str:
    return json.dumps([rec.to_json() for rec in records])
