"""Exact integer linear forms on triples of partitions."""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import AmbientTooSmall
from .partitions import Partition

__all__ = ["LinearForm"]


@dataclass(frozen=True)
class LinearForm:
    """An integer linear form on (alpha, beta, gamma), padded to fixed lengths.

    The slack ``sum(coeff * part)`` is the quantity an inequality asserts to be
    nonnegative. The label records the family and its parameters; it takes no
    part in equality of forms (compare :meth:`vector`).
    """

    coeff_alpha: tuple[int, ...]
    coeff_beta: tuple[int, ...]
    coeff_gamma: tuple[int, ...]
    label: str = field(default="", compare=False)

    def __post_init__(self):
        for name in ("coeff_alpha", "coeff_beta", "coeff_gamma"):
            object.__setattr__(self, name, tuple(int(c) for c in getattr(self, name)))

    @property
    def shape(self) -> tuple[int, int, int]:
        return len(self.coeff_alpha), len(self.coeff_beta), len(self.coeff_gamma)

    def vector(self) -> tuple[int, ...]:
        return self.coeff_alpha + self.coeff_beta + self.coeff_gamma

    def embed(self, alpha: Partition, beta: Partition, gamma: Partition) -> tuple[int, ...]:
        """The coordinate vector of a triple in this form's ambient space."""
        la, lb, lc = self.shape
        try:
            return Partition(alpha).padded(la) + Partition(beta).padded(lb) + Partition(gamma).padded(lc)
        except AmbientTooSmall as exc:
            raise AmbientTooSmall(f"{self.label or 'form'}: {exc}") from None

    def slack(self, alpha: Partition, beta: Partition, gamma: Partition) -> int:
        point = self.embed(alpha, beta, gamma)
        return sum(c * x for c, x in zip(self.vector(), point))

    def __add__(self, other: "LinearForm") -> "LinearForm":
        if self.shape != other.shape:
            raise ValueError("forms live on different ambient spaces")
        return LinearForm(
            tuple(a + b for a, b in zip(self.coeff_alpha, other.coeff_alpha)),
            tuple(a + b for a, b in zip(self.coeff_beta, other.coeff_beta)),
            tuple(a + b for a, b in zip(self.coeff_gamma, other.coeff_gamma)),
            label=f"({self.label})+({other.label})",
        )

    def __neg__(self) -> "LinearForm":
        return LinearForm(
            tuple(-c for c in self.coeff_alpha),
            tuple(-c for c in self.coeff_beta),
            tuple(-c for c in self.coeff_gamma),
            label=f"-({self.label})",
        )

    def __sub__(self, other: "LinearForm") -> "LinearForm":
        return self + (-other)

    def scaled(self, k: int) -> "LinearForm":
        return LinearForm(
            tuple(k * c for c in self.coeff_alpha),
            tuple(k * c for c in self.coeff_beta),
            tuple(k * c for c in self.coeff_gamma),
            label=f"{k}*({self.label})",
        )

    def relabel(self, label: str) -> "LinearForm":
        return LinearForm(self.coeff_alpha, self.coeff_beta, self.coeff_gamma, label)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "alpha": list(self.coeff_alpha),
            "beta": list(self.coeff_beta),
            "gamma": list(self.coeff_gamma),
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinearForm":
        return cls(tuple(data["alpha"]), tuple(data["beta"]), tuple(data["gamma"]), data.get("label", ""))

    @classmethod
    def from_terms(cls, shape: tuple[int, int, int], terms: dict[tuple[str, int], int], label: str = "") -> "LinearForm":
        """Build from {("alpha"|"beta"|"gamma", row): coefficient}; rows are 1-based."""
        vecs = {"alpha": [0] * shape[0], "beta": [0] * shape[1], "gamma": [0] * shape[2]}
        for (which, row), c in terms.items():
            vecs[which][row - 1] += c
        return cls(tuple(vecs["alpha"]), tuple(vecs["beta"]), tuple(vecs["gamma"]), label)
