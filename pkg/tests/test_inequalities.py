import json

import pytest
from hypothesis import given, settings, strategies as st

from hornkron.errors import AmbientTooSmall, BadRange
from hornkron.forms import LinearForm
from hornkron.inequalities import (
    comparison_form,
    canonical_vector,
    comparison_triple,
    distinct_vectors,
    family_forms,
    final_form,
    horn_kron_form,
    murnaghan_form,
    redundancy_certificate,
    saturated_triples,
    verify_family,
    verify_forms,
    weyl_kron_form,
    weyl_kron_triple,
)
from hornkron.kron import enumerate_kron, kron_coefficient
from hornkron.lr import HornTriple, all_horn_triples, lr_coefficient
from hornkron.partitions import IndexSet, Partition, drop_first, select, tau

from conftest import partitions


def P(*parts):
    return Partition(parts)


def T(I, J, K, e=2, f=2):
    return HornTriple(IndexSet(I, e), IndexSet(J, f), IndexSet(K, e + f), e, f)


def test_murnaghan_examples():
    m = murnaghan_form(1, 1)
    assert m.slack(P(2, 1), P(3), P(2, 1)) == 0
    assert m.slack(P(1, 1), P(1, 1), P(2)) == 2
    for n in range(1, 6):
        assert m.slack(P(n), P(n), P(n)) == 0


def test_weyl_kron_examples():
    w = weyl_kron_form(1, 1, 2)
    assert w.slack(P(2), P(2), P(2)) == 0
    assert weyl_kron_form(2, 2, 2).slack(P(3), P(3), P(3)) == 0
    assert w.slack(P(2, 1), P(2, 1), P(2, 1)) == 2
    flip = weyl_kron_form(1, 1, 2, flipped=True)
    assert flip.slack(P(2, 1), P(2, 1), P(2, 1)) == 0
    assert flip.slack(P(2), P(2), P(2)) == 0
    assert weyl_kron_form(2, 2, 2, flipped=True).slack(P(3), P(3), P(3)) == 0
    with pytest.raises(BadRange):
        weyl_kron_form(2, 2, 4)
    with pytest.raises(BadRange):
        weyl_kron_form(2, 2, 1)


def test_flipped_weyl_kron_is_violated():
    # [1,1] x [1,1] is the trivial representation
    triple = (P(1, 1), P(1, 1), P(2))
    assert kron_coefficient(*triple) == 1
    assert weyl_kron_form(1, 1, 2, flipped=True).slack(*triple) == -1
    assert weyl_kron_form(1, 1, 2).slack(*triple) == 3


def test_horn_kron_examples():
    assert horn_kron_form(T((1,), (1,), (2, 3))).slack(P(4), P(4), P(4)) == 0
    assert horn_kron_form(T((1,), (1,), (1, 4))).slack(P(2, 1), P(2, 1), P(2, 2)) == 1
    # gamma-bar = (1, 1) has no third or fourth row
    assert horn_kron_form(T((2,), (2,), (3, 4))).slack(P(2, 1), P(2, 1), P(2, 1, 1)) == 1
    assert horn_kron_form(T((2,), (2,), (3, 4))).slack(P(2, 1), P(2, 1), P(1, 1, 1)) == 0


def test_final_examples():
    for flipped in (False, True):
        f = final_form(1, 1, 2, flipped=flipped)
        assert f.slack(P(3), P(3), P(3)) == 0
        assert f.slack(P(2, 1), P(2, 1), P(2, 1)) == 1
        assert f.slack(P(2), P(1, 1), P(1, 1)) == 0
    with pytest.raises(BadRange):
        final_form(2, 1, 3)
    final_form(2, 1, 3, side="alpha")
    with pytest.raises(BadRange):
        final_form(1, 2, 3, side="alpha")


def test_flipped_final_is_violated():
    triple = (P(1, 1), P(2), P(1, 1))
    assert kron_coefficient(*triple) == 1
    assert final_form(1, 1, 2, flipped=True).slack(*triple) == -1
    assert final_form(1, 1, 2).slack(*triple) == 1


def test_side_alpha_mirrors_side_beta():
    for e, f in [(1, 2), (2, 1), (2, 2)]:
        for j in range(2, e + 2):
            fa = final_form(e, f, j, side="alpha")
            fb = final_form(f, e, j, side="beta")
            for rec in enumerate_kron(e + 1, f + 1, e + f + 1, 5):
                assert fa.slack(rec.alpha, rec.beta, rec.gamma) == fb.slack(rec.beta, rec.alpha, rec.gamma)


@settings(max_examples=80, deadline=None)
@given(partitions(6, 3), partitions(6, 3), partitions(6, 5), st.integers(1, 4))
def test_homogeneity(alpha, beta, gamma, k):
    for form in family_forms(2, 2) + family_forms(2, 2, flipped=True):
        assert form.slack(alpha.scaled(k), beta.scaled(k), gamma.scaled(k)) == k * form.slack(alpha, beta, gamma)


@settings(max_examples=80, deadline=None)
@given(partitions(6, 3), partitions(6, 3), partitions(6, 5))
def test_specialization_to_murnaghan_face(alpha, beta, gamma):
    e = f = 2
    m = murnaghan_form(e, f).slack(alpha, beta, gamma)
    for j in (2, 3):
        # on the face m = 0 the Weyl-type slack is beta_j - gamma_{e+j}
        assert weyl_kron_form(e, f, j).slack(alpha, beta, gamma) - m == beta.part(j) - gamma.part(e + j)
        assert weyl_kron_form(e, f, j, flipped=True).slack(alpha, beta, gamma) + m == beta.part(j) - gamma.part(e + j)
    for t in all_horn_triples(e, f):
        A, B, C = drop_first(alpha), drop_first(beta), drop_first(gamma)
        horn = select(A, t.I).size + select(B, t.J).size - select(C, t.K).size
        assert horn_kron_form(t).slack(alpha, beta, gamma) - m == horn


def test_weyl_kron_is_degenerate_horn():
    for e in (1, 2, 3):
        for f in (1, 2, 3):
            for j in range(2, f + 2):
                t = weyl_kron_triple(e, f, j)
                assert horn_kron_form(t).vector() == weyl_kron_form(e, f, j).vector()
                assert lr_coefficient(tau(t.I), tau(t.J), tau(t.K)) == 1


def test_comparison_triple():
    for e in (1, 2, 3):
        for f in (1, 2, 3):
            for j in range(2, f + 2):
                t = comparison_triple(e, f, j)
                assert canonical_vector(horn_kron_form(t)) == canonical_vector(comparison_form(e, f, j))
                assert lr_coefficient(tau(t.I), tau(t.J), tau(t.K)) == 1
                # removing e+j-1 from K instead of j-1 gives a zero coefficient
                K = IndexSet(tuple(k for k in range(1, e + f + 1) if k != e + j - 1), e + f)
                assert lr_coefficient(tau(t.I), tau(t.J), tau(K)) == 0


def test_verify_family():
    assert verify_family(1, 1, 6).empty
    assert verify_family(2, 2, 8).empty
    assert not verify_family(1, 1, 6, flipped=True).empty


def test_corrupted_form_is_caught():
    m = murnaghan_form(2, 2)
    bad = LinearForm(m.coeff_alpha, m.coeff_beta, (-1,) + m.coeff_gamma[1:], "corrupted")
    report = verify_forms([bad], enumerate_kron(3, 3, 5, 4))
    assert not report.empty
    assert all(v.form_label == "corrupted" and v.slack < 0 for v in report.violations)
    payload = json.loads(json.dumps(report.to_json()))
    assert set(payload) == {"violations"}
    assert set(payload["violations"][0]) == {"form_label", "triple", "slack"}


def test_saturated_triples():
    recs = enumerate_kron(2, 2, 3, 4)
    assert (P(2, 1), P(3), P(2, 1)) in [r.triple for r in saturated_triples(murnaghan_form(1, 1), recs)]
    assert saturated_triples(murnaghan_form(1, 1), []) == []
    sat = [r.triple for r in saturated_triples(weyl_kron_form(1, 1, 2, flipped=True), recs)]
    assert (P(2, 1), P(2, 1), P(2, 1)) in sat


def test_redundancy_certificate():
    for e in (1, 2, 3):
        for f in (1, 2, 3):
            for j in range(2, f + 2):
                res = redundancy_certificate(e, f, j)
                assert res.holds and not res.mismatches
                # the same comparison form against the Weyl-type form, in either reading
                assert not redundancy_certificate(e, f, j, partner="weyl_kron").holds
                assert not redundancy_certificate(e, f, j, partner="weyl_kron", flipped=True).holds
                assert not redundancy_certificate(e, f, j, row="e+j", partner="weyl_kron").holds
                assert not redundancy_certificate(e, f, j, row="e+j", partner="weyl_kron", flipped=True).holds


def test_comparison_row_e_plus_j_is_violated():
    triple = (P(2), P(1, 1), P(1, 1))
    assert kron_coefficient(*triple) == 1
    assert comparison_form(1, 1, 2, row="e+j").slack(*triple) < 0


def test_distinct_forms():
    for e, f in [(1, 1), (2, 2), (2, 3), (3, 3)]:
        forms = family_forms(e, f)
        assert distinct_vectors(forms)


@settings(max_examples=80, deadline=None)
@given(st.data())
def test_canonical_vector_is_a_class_invariant(data):
    e, f = 2, 2
    forms = family_forms(e, f) + [comparison_form(e, f, j) for j in (2, 3)]
    form = data.draw(st.sampled_from(forms))
    x, y = data.draw(st.integers(-3, 3)), data.draw(st.integers(-3, 3))
    shift = LinearForm((x + y,) * (e + 1), (-x,) * (f + 1), (-y,) * (e + f + 1))
    assert canonical_vector(form + shift) == canonical_vector(form)
    n = data.draw(st.integers(1, 6))
    alpha = data.draw(partitions(n, 3, min_size=n))
    beta = data.draw(partitions(n, 3, min_size=n))
    gamma = data.draw(partitions(n, 5, min_size=n))
    assert (form + shift).slack(alpha, beta, gamma) == form.slack(alpha, beta, gamma)


def test_form_ambient_and_json():
    m = murnaghan_form(1, 1)
    with pytest.raises(AmbientTooSmall):
        m.slack(P(1, 1, 1), P(3), P(1, 1, 1))
    f = weyl_kron_form(2, 2, 3)
    assert LinearForm.from_json(json.loads(json.dumps(f.to_json()))) == f
    assert f.to_json()["label"] == "weyl_kron j=3"
