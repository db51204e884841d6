"""Linear inequality families for nonzero Kronecker coefficients, as exact integer forms.

All forms live on Kron(e+1, f+1, e+f+1): alpha padded to e+1 parts, beta to
f+1, gamma to e+f+1. Here n is read off as the sum of the alpha coordinates.

Two of the families also come in a ``flipped`` variant, with one block of the
form negated. The flipped variants do not hold: each is violated by a small
nonzero triple, which :func:`verify_family` with ``flipped=True`` will find.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadRange
from .forms import LinearForm
from .kron import KronRecord, enumerate_kron
from .lr import HornTriple, all_horn_triples
from .partitions import IndexSet, Partition

__all__ = [
    "murnaghan_form",
    "weyl_kron_form",
    "weyl_kron_triple",
    "horn_kron_form",
    "final_form",
    "comparison_form",
    "comparison_triple",
    "family_forms",
    "Violation",
    "ViolationReport",
    "verify_forms",
    "verify_family",
    "saturated_triples",
    "CertificateResult",
    "redundancy_certificate",
    "canonical_vector",
    "distinct_vectors",
]


def _shape(e: int, f: int) -> tuple[int, int, int]:
    return e + 1, f + 1, e + f + 1


def _n_terms(e: int, k: int = 1) -> dict:
    return {("alpha", i): k for i in range(1, e + 2)}


def _add(terms: dict, key: tuple[str, int], c: int) -> dict:
    terms[key] = terms.get(key, 0) + c
    return terms


def murnaghan_form(e: int, f: int) -> LinearForm:
    """slack = n + gamma_1 - alpha_1 - beta_1."""
    terms = _n_terms(e)
    _add(terms, ("gamma", 1), 1)
    _add(terms, ("alpha", 1), -1)
    _add(terms, ("beta", 1), -1)
    return LinearForm.from_terms(_shape(e, f), terms, "murnaghan")


def _check_j(j: int, top: int, name: str = "j") -> None:
    if not 2 <= j <= top:
        raise BadRange(f"{name} must lie in 2..{top}, got {j}")


def weyl_kron_form(e: int, f: int, j: int, flipped: bool = False) -> LinearForm:
    """The extension of gamma_{e+j} <= beta_j off the Murnaghan face.

    Default: slack = n + gamma_1 - alpha_1 - beta_1 + beta_j - gamma_{e+j},
    i.e. the inequality n + gamma_1 + gamma_{e+j} <= alpha_1 + beta_1 + beta_j
    with the n, gamma_1 block on the side it appears in the Murnaghan form.
    ``flipped=True`` gives slack = alpha_1 + beta_1 + beta_j - n - gamma_1 - gamma_{e+j},
    which fails at ((1,1),(1,1),(2)) for e=f=1, j=2.
    """
    _check_j(j, f + 1)
    if flipped:
        terms = _n_terms(e, -1)
        for key, c in ((("alpha", 1), 1), (("beta", 1), 1), (("beta", j), 1), (("gamma", 1), -1), (("gamma", e + j), -1)):
            _add(terms, key, c)
        return LinearForm.from_terms(_shape(e, f), terms, f"weyl_kron flipped j={j}")
    form = murnaghan_form(e, f) + LinearForm.from_terms(_shape(e, f), {("beta", j): 1, ("gamma", e + j): -1})
    return form.relabel(f"weyl_kron j={j}")


def weyl_kron_triple(e: int, f: int, j: int) -> HornTriple:
    """The degenerate triple (I, J, K) = ({}, {j-1}, {e+j-1}) whose Horn-Kronecker form is weyl_kron_form."""
    _check_j(j, f + 1)
    return HornTriple(IndexSet((), e), IndexSet((j - 1,), f), IndexSet((e + j - 1,), e + f), e, f)


def horn_kron_form(t: HornTriple) -> LinearForm:
    """slack = n + |a_I| - alpha_1 + |b_J| - beta_1 - |c_K| + gamma_1 (bars drop the first row)."""
    e, f = t.e, t.f
    terms = _n_terms(e)
    _add(terms, ("alpha", 1), -1)
    _add(terms, ("beta", 1), -1)
    _add(terms, ("gamma", 1), 1)
    # the i-th row of alpha-bar is row i+1 of alpha
    for i in t.I:
        _add(terms, ("alpha", i + 1), 1)
    for j in t.J:
        _add(terms, ("beta", j + 1), 1)
    for k in t.K:
        _add(terms, ("gamma", k + 1), -1)
    return LinearForm.from_terms(_shape(e, f), terms, f"horn_kron I={t.I} J={t.J} K={t.K}")


def final_form(e: int, f: int, j: int, side: str = "beta", flipped: bool = False) -> LinearForm:
    """The extension of beta_j <= gamma_j (side beta) or alpha_j <= gamma_j (side alpha).

    Default: slack = n + gamma_1 - alpha_1 - beta_1 + gamma_j - beta_j (side beta).
    ``flipped=True`` gives slack = gamma_1 - gamma_j - alpha_1 - beta_1 + beta_j + n,
    which fails at ((1,1),(2),(1,1)) for e=f=1, j=2.
    """
    if side not in ("beta", "alpha"):
        raise ValueError(f"side must be 'beta' or 'alpha', got {side!r}")
    _check_j(j, f + 1 if side == "beta" else e + 1)
    shape = _shape(e, f)
    sign = -1 if flipped else 1
    extra = LinearForm.from_terms(shape, {("gamma", j): sign, (side, j): -sign})
    tag = "final flipped" if flipped else "final"
    return (murnaghan_form(e, f) + extra).relabel(f"{tag} {side} j={j}")


def comparison_form(e: int, f: int, j: int, row: str = "j") -> LinearForm:
    """slack = 2n + 2 gamma_1 + gamma_row - 2 alpha_1 - 2 beta_1 - beta_j, row being j or e+j.

    With ``row="j"`` this is the Horn-Kronecker form of :func:`comparison_triple`.
    """
    _check_j(j, f + 1)
    if row not in ("j", "e+j"):
        raise ValueError(f"row must be 'j' or 'e+j', got {row!r}")
    terms = _n_terms(e, 2)
    g = j if row == "j" else e + j
    for key, c in ((("gamma", 1), 2), (("gamma", g), 1), (("alpha", 1), -2), (("beta", 1), -2), (("beta", j), -1)):
        _add(terms, key, c)
    return LinearForm.from_terms(_shape(e, f), terms, f"comparison gamma_{row} j={j}")


def comparison_triple(e: int, f: int, j: int) -> HornTriple:
    """({1..e}, {1..f} - {j-1}, {1..e+f} - {j-1}); c_{tau^I tau^J}^{tau^K} = 1 for these."""
    _check_j(j, f + 1)
    return HornTriple(
        IndexSet(tuple(range(1, e + 1)), e),
        IndexSet(tuple(i for i in range(1, f + 1) if i != j - 1), f),
        IndexSet(tuple(i for i in range(1, e + f + 1) if i != j - 1), e + f),
        e,
        f,
    )


def family_forms(e: int, f: int, flipped: bool = False) -> list[LinearForm]:
    """Every form of the four families at (e, f), in a fixed order."""
    forms = [murnaghan_form(e, f)]
    forms += [weyl_kron_form(e, f, j, flipped) for j in range(2, f + 2)]
    forms += [horn_kron_form(t) for t in all_horn_triples(e, f)]
    forms += [final_form(e, f, j, "beta", flipped) for j in range(2, f + 2)]
    forms += [final_form(e, f, j, "alpha", flipped) for j in range(2, e + 2)]
    return forms


@dataclass(frozen=True)
class Violation:
    form_label: str
    triple: tuple[Partition, Partition, Partition]
    slack: int

    def to_json(self) -> dict:
        return {"form_label": self.form_label, "triple": [list(p) for p in self.triple], "slack": self.slack}


@dataclass(frozen=True)
class ViolationReport:
    violations: tuple[Violation, ...]
    checked_forms: int
    checked_records: int

    @property
    def empty(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"violations": [v.to_json() for v in self.violations]}


def verify_forms(forms: list[LinearForm], records: list[KronRecord]) -> ViolationReport:
    found = []
    for form in forms:
        for rec in records:
            s = form.slack(*rec.triple)
            if s < 0:
                found.append(Violation(form.label, rec.triple, s))
    return ViolationReport(tuple(found), len(forms), len(records))


def verify_family(e: int, f: int, nmax: int, flipped: bool = False) -> ViolationReport:
    """All (form, triple) pairs with negative slack over Kron(e+1, f+1, e+f+1) up to size nmax."""
    return verify_forms(family_forms(e, f, flipped), enumerate_kron(e + 1, f + 1, e + f + 1, nmax))


def saturated_triples(form: LinearForm, records: list[KronRecord]) -> list[KronRecord]:
    return [rec for rec in records if form.slack(*rec.triple) == 0]


@dataclass(frozen=True)
class CertificateResult:
    form: LinearForm
    summands: tuple[LinearForm, LinearForm]
    holds: bool

    @property
    def mismatches(self) -> list[int]:
        """Coordinates where the form and the sum of the summands disagree."""
        total = self.summands[0] + self.summands[1]
        return [i for i, (a, b) in enumerate(zip(self.form.vector(), total.vector())) if a != b]

    def to_json(self) -> dict:
        return {
            "form": self.form.to_json(),
            "summands": [s.to_json() for s in self.summands],
            "holds": self.holds,
            "mismatches": self.mismatches,
        }


def redundancy_certificate(e: int, f: int, j: int, row: str = "j", partner: str = "final", flipped: bool = False) -> CertificateResult:
    """Check comparison_form(e, f, j, row) == murnaghan_form + partner form, coefficientwise.

    ``partner`` is "final" (final_form side beta) or "weyl_kron". The default
    combination is the one that holds.
    """
    if partner == "final":
        second = final_form(e, f, j, "beta", flipped)
    elif partner == "weyl_kron":
        second = weyl_kron_form(e, f, j, flipped)
    else:
        raise ValueError(f"partner must be 'final' or 'weyl_kron', got {partner!r}")
    form = comparison_form(e, f, j, row)
    first = murnaghan_form(e, f)
    return CertificateResult(form, (first, second), form.vector() == (first + second).vector())


def canonical_vector(form: LinearForm) -> tuple[int, ...]:
    """Representative of the form modulo |alpha| = |beta| = |gamma|.

    Adds multiples of |alpha| - |beta| and |alpha| - |gamma| so that the last
    beta and last gamma coefficients become zero; two forms agree on every
    triple of equal sizes iff their canonical vectors are equal.
    """
    b, c = form.coeff_beta[-1], form.coeff_gamma[-1]
    return (
        tuple(x + b + c for x in form.coeff_alpha)
        + tuple(x - b for x in form.coeff_beta)
        + tuple(x - c for x in form.coeff_gamma)
    )


def distinct_vectors(forms: list[LinearForm]) -> bool:
    vectors = [canonical_vector(form) for form in forms]
    return len(set(vectors)) == len(vectors)
