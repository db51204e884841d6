"""Reduction formulas expressing g_{alpha beta gamma} on a face through smaller coefficients.

Every summation variable is a partition whose size is forced by the other
choices, so the sums iterate over partitions of fixed size within the length
bounds instead of over everything up to n.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import BadRange, EqualityNotSatisfied, LengthBoundViolated
from .kron import kron_coefficient
from .lr import HornTriple, lr_coefficient
from .partitions import IndexSet, Partition, bounded_partitions, complement, drop_first, select

__all__ = ["ReductionResult", "Term", "murnaghan_reduce", "weyl_reduce", "final_reduce", "horn_reduce"]


@dataclass(frozen=True)
class Term:
    indices: dict[str, Partition]
    factors: tuple[int, ...]

    @property
    def product(self) -> int:
        out = 1
        for v in self.factors:
            out *= v
        return out

    def to_json(self) -> dict:
        return {
            "indices": {k: list(v) for k, v in self.indices.items()},
            "factors": list(self.factors),
            "product": self.product,
        }


@dataclass(frozen=True)
class ReductionResult:
    value: int
    terms: tuple[Term, ...] = field(default=())

    def to_json(self, verbose: bool = False) -> dict:
        out = {"value": self.value}
        if verbose:
            out["terms"] = [t.to_json() for t in self.terms]
        return out


def _check_lengths(alpha, beta, gamma, e, f):
    if len(alpha) > e + 1 or len(beta) > f + 1 or len(gamma) > e + f + 1:
        raise LengthBoundViolated(
            f"need l(alpha)<={e + 1}, l(beta)<={f + 1}, l(gamma)<={e + f + 1}; "
            f"got {alpha.text()}, {beta.text()}, {gamma.text()}"
        )


def _parts(size: int, max_len: int, bounded: bool) -> list[Partition]:
    return bounded_partitions(size, max_len if bounded else size)


def murnaghan_reduce(alpha: Partition, beta: Partition, gamma: Partition) -> int:
    """On (n-a1)+(n-b1) = n-c1: g = c_{alpha-bar, beta-bar}^{gamma-bar}."""
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    n = alpha.size
    if beta.size != n or gamma.size != n:
        raise EqualityNotSatisfied("the three partitions must have the same size")
    if n + gamma.part(1) - alpha.part(1) - beta.part(1) != 0:
        raise EqualityNotSatisfied(
            f"(n-alpha_1)+(n-beta_1) != n-gamma_1 for {alpha.text()}, {beta.text()}, {gamma.text()}"
        )
    return lr_coefficient(drop_first(alpha), drop_first(beta), drop_first(gamma))


def weyl_reduce(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    e: int,
    f: int,
    j: int,
    *,
    reading: str = "six_fold",
    length_bounds: bool = True,
) -> ReductionResult:
    """g on the face of weyl_kron_form(e, f, j).

    ``reading="six_fold"`` (default) requires a zero slack for
    :func:`~hornkron.inequalities.weyl_kron_form`, i.e.
    n + gamma_1 - alpha_1 - beta_1 + beta_j - gamma_{e+j} = 0, and evaluates
    the six-fold product formula of :func:`horn_reduce` for the triple
    ({}, {j-1}, {e+j-1}).

    ``reading="two_factor"`` and ``reading="two_factor_gamma_j"`` evaluate

        sum over x, y of c(x, b_J; c_K) c((g1, low), y; (b1, bj)) g(a-bar, x, y)

    with J = {1..f} - {j-1}, K = {1..e+f} - {e+j-1}, low = gamma_{e+j} or gamma_j
    respectively, on the hyperplane n + g1 + g_{e+j} = a1 + b1 + bj. Neither
    equals g in general (for instance both give 0 at ((3,1),(2,2),(3,1)),
    where g = 1); they are kept for diagnostics.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not 2 <= j <= f + 1:
        raise BadRange(f"j must lie in 2..{f + 1}")
    if reading not in ("six_fold", "two_factor", "two_factor_gamma_j"):
        raise ValueError(f"unknown reading {reading!r}")
    _check_lengths(alpha, beta, gamma, e, f)
    if reading == "six_fold":
        t = HornTriple(IndexSet((), e), IndexSet((j - 1,), f), IndexSet((e + j - 1,), e + f), e, f)
        try:
            return horn_reduce(alpha, beta, gamma, t, length_bounds=length_bounds)
        except EqualityNotSatisfied:
            raise EqualityNotSatisfied(
                f"n + gamma_1 - alpha_1 - beta_1 + beta_{j} - gamma_{e + j} != 0 "
                f"for {alpha.text()}, {beta.text()}, {gamma.text()}"
            ) from None
    n = alpha.size
    if beta.size != n or gamma.size != n or n + gamma.part(1) + gamma.part(e + j) != alpha.part(1) + beta.part(1) + beta.part(j):
        raise EqualityNotSatisfied(f"n + gamma_1 + gamma_{e + j} != alpha_1 + beta_1 + beta_{j}")
    low = gamma.part(e + j) if reading == "two_factor" else gamma.part(j)
    return _two_factor(alpha, beta, gamma, e, f, j, e + j - 1, low, length_bounds)


def final_reduce(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    e: int,
    f: int,
    j: int,
    *,
    length_bounds: bool = True,
) -> ReductionResult:
    """g on the face of final_form(e, f, j) (side beta): n + gamma_1 + gamma_j = alpha_1 + beta_1 + beta_j.

        g = sum over x, y of c(x, b_J; c_K) c((g1, gj), y; (b1, bj)) g(a-bar, x, y)

    with J = {1..f} - {j-1} and K = {1..e+f} - {j-1}, over l(x) <= 2e, l(y) <= 2.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if not 2 <= j <= f + 1:
        raise BadRange(f"j must lie in 2..{f + 1}")
    _check_lengths(alpha, beta, gamma, e, f)
    n = alpha.size
    if beta.size != n or gamma.size != n or n + gamma.part(1) + gamma.part(j) != alpha.part(1) + beta.part(1) + beta.part(j):
        raise EqualityNotSatisfied(f"n + gamma_1 + gamma_{j} != alpha_1 + beta_1 + beta_{j}")
    return _two_factor(alpha, beta, gamma, e, f, j, j - 1, gamma.part(j), length_bounds)


def _two_factor(alpha, beta, gamma, e, f, j, k_out, low, length_bounds) -> ReductionResult:
    a_bar, b_bar, c_bar = drop_first(alpha), drop_first(beta), drop_first(gamma)
    J = IndexSet(tuple(i for i in range(1, f + 1) if i != j - 1), f)
    K = IndexSet(tuple(i for i in range(1, e + f + 1) if i != k_out), e + f)
    b_J, c_K = select(b_bar, J), select(c_bar, K)
    inner = Partition((gamma.part(1), low))
    outer = Partition((beta.part(1), beta.part(j)))

    terms = []
    total = 0
    for y in _parts(outer.size - inner.size, 2, length_bounds):
        c_mid = lr_coefficient(inner, y, outer)
        if not c_mid:
            continue
        for x in _parts(c_K.size - b_J.size, 2 * e, length_bounds):
            c_left = lr_coefficient(x, b_J, c_K)
            if not c_left:
                continue
            g = kron_coefficient(a_bar, x, y)
            if not g:
                continue
            assert x.size == y.size == a_bar.size, "size bookkeeping broken in the two-factor reduction"
            term = Term({"x": x, "y": y}, (c_left, c_mid, g))
            terms.append(term)
            total += term.product
    return ReductionResult(total, tuple(terms))


def horn_reduce(
    alpha: Partition,
    beta: Partition,
    gamma: Partition,
    t: HornTriple,
    *,
    reading: str = "default",
    length_bounds: bool = True,
) -> ReductionResult:
    """Six-fold product formula for g on the face where the Horn-Kronecker form vanishes.

    Default (``reading="default"``), with A = alpha-bar, B = beta-bar, C = gamma-bar:

        g = sum c(A_I, B_J; y) c(x, y; C_K) c(u, v; C_{K-}) c(a, u; A_{I-}) c(b, v; B_{J-}) g(a, b, x)

    over l(x) <= (e-r)(f-s), l(a), l(u) <= e-r, l(y) <= r+s, l(b), l(v) <= f-s.
    ``reading="swapped"`` exchanges I with I- and J with J- in the first,
    fourth and fifth factors; that variant does not equal g in general.
    """
    alpha, beta, gamma = Partition(alpha), Partition(beta), Partition(gamma)
    if reading not in ("default", "swapped"):
        raise ValueError(f"unknown reading {reading!r}")
    e, f, r, s = t.e, t.f, t.r, t.s
    _check_lengths(alpha, beta, gamma, e, f)
    n = alpha.size
    a_bar, b_bar, c_bar = drop_first(alpha), drop_first(beta), drop_first(gamma)
    if beta.size != n or gamma.size != n:
        raise EqualityNotSatisfied("the three partitions must have the same size")

    A_I, A_m = select(a_bar, t.I), select(a_bar, complement(t.I))
    B_J, B_m = select(b_bar, t.J), select(b_bar, complement(t.J))
    C_K, C_m = select(c_bar, t.K), select(c_bar, complement(t.K))
    if n + A_I.size - alpha.part(1) + B_J.size - beta.part(1) != C_K.size - gamma.part(1):
        raise EqualityNotSatisfied(f"Horn-Kronecker form for {t.text()} is not saturated")

    if reading == "default":
        y_left, y_right, a_target, b_target = A_I, B_J, A_m, B_m
    else:
        y_left, y_right, a_target, b_target = A_m, B_m, A_I, B_J
    len_x, len_y = (e - r) * (f - s), r + s
    len_a, len_b = e - r, f - s

    terms = []
    total = 0
    for y in _parts(y_left.size + y_right.size, len_y, length_bounds):
        c1 = lr_coefficient(y_left, y_right, y)
        if not c1:
            continue
        size_x = C_K.size - y.size
        size_u, size_v = a_target.size - size_x, b_target.size - size_x
        if size_x < 0 or size_u < 0 or size_v < 0 or size_u + size_v != C_m.size:
            continue
        for x in _parts(size_x, len_x, length_bounds):
            c2 = lr_coefficient(x, y, C_K)
            if not c2:
                continue
            for u in _parts(size_u, len_a, length_bounds):
                for v in _parts(size_v, len_b, length_bounds):
                    c3 = lr_coefficient(u, v, C_m)
                    if not c3:
                        continue
                    for a in _parts(size_x, len_a, length_bounds):
                        c4 = lr_coefficient(a, u, a_target)
                        if not c4:
                            continue
                        for b in _parts(size_x, len_b, length_bounds):
                            c5 = lr_coefficient(b, v, b_target)
                            if not c5:
                                continue
                            g = kron_coefficient(a, b, x)
                            if not g:
                                continue
                            assert a.size == b.size == x.size, "size bookkeeping broken in horn_reduce"
                            assert u.size + v.size == C_m.size
                            term = Term({"a": a, "b": b, "x": x, "y": y, "u": u, "v": v}, (c1, c2, c3, c4, c5, g))
                            terms.append(term)
                            total += term.product
    return ReductionResult(total, tuple(terms))
