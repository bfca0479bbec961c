import itertools
import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

import oracles
from thresholdlab.graphs import (
    NsgForm,
    adjacency_from_edges,
    build_adjacency,
    creation_to_nsg,
    enumerate_threshold,
    nsg_to_graph,
    parse_creation_sequence,
)
from thresholdlab.spectra import (
    EmptyNsgError,
    NonFiniteError,
    NotSymmetricError,
    Spectrum,
    TrivialMults,
    assemble_spectrum,
    count_eigs_leq,
    dense_spectrum,
    eta_extremes,
    quotient_matrix,
    symmetric_eigenvalues,
    tridiagonalize,
    trivial_multiplicities,
)

sequences = st.text(alphabet="01", min_size=1, max_size=12).map(parse_creation_sequence)

# dense-solver reference values for the paw graph (A_4, sequence 0101)
PAW_SPECTRUM = [2.170086486626034, 0.3111078174659816, -1.0, -1.4811943040920156]


def small_forms(max_order, min_h=0):
    for order in range(1, max_order + 1):
        for seq in enumerate_threshold(order):
            form = creation_to_nsg(seq)
            if form.h >= min_h:
                yield form


# ---------------------------------------------------------------- quotient


def test_quotient_nsg_3_2():
    pair = quotient_matrix(NsgForm([3], [2]))
    assert np.array_equal(pair.raw, [[1.0, 3.0], [2.0, 0.0]])
    assert pair.cell_sizes == (2, 3)
    root6 = math.sqrt(6.0)
    assert np.allclose(pair.symmetrized, [[1.0, root6], [root6, 0.0]], atol=1e-12)


def test_quotient_k2():
    pair = quotient_matrix(NsgForm([1], [1]))
    assert np.array_equal(pair.raw, [[0.0, 1.0], [1.0, 0.0]])
    assert np.array_equal(pair.raw, pair.symmetrized)


def test_quotient_paw():
    pair = quotient_matrix(NsgForm([1, 1], [1, 1]))
    expected = [
        [0, 1, 1, 1],
        [1, 0, 0, 1],
        [1, 0, 0, 0],
        [1, 1, 0, 0],
    ]
    assert np.array_equal(pair.raw, expected)
    assert symmetric_eigenvalues(pair.symmetrized) == pytest.approx(PAW_SPECTRUM, abs=1e-9)


def test_quotient_rejects_edgeless():
    with pytest.raises(EmptyNsgError):
        quotient_matrix(NsgForm([], [], 2))


def test_quotient_symmetrized_is_similar():
    # same eigenvalues as raw, checked through an independent nonsymmetric solve
    for h in (1, 2, 3):
        for m in itertools.product((1, 2, 3), repeat=h):
            for n in itertools.product((1, 2, 3), repeat=h):
                pair = quotient_matrix(NsgForm(m, n))
                raw_eigs = np.linalg.eigvals(pair.raw)
                assert np.max(np.abs(raw_eigs.imag)) < 1e-9
                assert np.allclose(
                    np.sort(raw_eigs.real),
                    np.sort(symmetric_eigenvalues(pair.symmetrized)),
                    atol=1e-9,
                )


def test_quotient_never_singular():
    # every 0 eigenvalue lives in the duplicate padding, never in the quotient
    for form in small_forms(12, min_h=1):
        eigs = symmetric_eigenvalues(quotient_matrix(form).symmetrized)
        assert np.min(np.abs(eigs)) > 1e-7, form


def test_quotient_minus_one_membership():
    # -1 appears in the quotient exactly once iff m_h = 1
    for form in small_forms(12, min_h=1):
        eigs = symmetric_eigenvalues(quotient_matrix(form).symmetrized)
        hits = int(np.count_nonzero(np.abs(eigs + 1.0) <= 1e-7))
        assert hits == (1 if form.m[-1] == 1 else 0), form


# ---------------------------------------------------------------- eigensolving


def test_symmetric_eigenvalues_k2():
    assert symmetric_eigenvalues([[0.0, 1.0], [1.0, 0.0]]) == pytest.approx([1.0, -1.0])


def test_symmetric_eigenvalues_quotient_by_charpoly():
    # characteristic polynomial of the nsg(3;2) quotient is x^2 - x - 6
    pair = quotient_matrix(NsgForm([3], [2]))
    assert symmetric_eigenvalues(pair.symmetrized) == pytest.approx([3.0, -2.0], abs=1e-12)


def test_symmetric_eigenvalues_c4():
    c4 = adjacency_from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert symmetric_eigenvalues(c4.astype(float)) == pytest.approx([2.0, 0.0, 0.0, -2.0])


def test_symmetric_eigenvalues_descending():
    rng = np.random.default_rng(7)
    for _ in range(20):
        a = rng.standard_normal((8, 8))
        vals = symmetric_eigenvalues(a + a.T)
        assert np.all(np.diff(vals) <= 0)


def test_symmetric_eigenvalues_rejects_bad_input():
    with pytest.raises(NotSymmetricError):
        symmetric_eigenvalues([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(NotSymmetricError):
        symmetric_eigenvalues(np.zeros((2, 3)))
    with pytest.raises(NonFiniteError):
        symmetric_eigenvalues([[np.nan, 0.0], [0.0, 0.0]])


# ---------------------------------------------------------------- multiplicities


def test_trivial_multiplicities_examples():
    assert trivial_multiplicities(NsgForm([3], [2])) == TrivialMults(2, 1)
    assert trivial_multiplicities(NsgForm([1, 3], [1, 1])) == TrivialMults(2, 0)
    assert trivial_multiplicities(NsgForm([1, 1], [1, 1])) == TrivialMults(0, 1)


def test_trivial_multiplicities_edgeless():
    assert trivial_multiplicities(NsgForm([], [], 3)) == TrivialMults(3, 0)


def test_trivial_multiplicities_match_dense_counts():
    for form in small_forms(10):
        mults = trivial_multiplicities(form)
        vals = dense_spectrum(nsg_to_graph(form).adjacency.astype(float)).values
        assert int(np.count_nonzero(np.abs(vals) <= 1e-7)) == mults.mult0
        assert int(np.count_nonzero(np.abs(vals + 1.0) <= 1e-7)) == mults.multm1


# ---------------------------------------------------------------- assembly


def test_assemble_nsg_3_2():
    spec = assemble_spectrum(NsgForm([3], [2]))
    assert spec.values == pytest.approx([3.0, 0.0, 0.0, -1.0, -2.0], abs=1e-9)
    assert spec.source == "quotient-assembled"


def test_assemble_k2():
    assert assemble_spectrum(NsgForm([1], [1])).values == pytest.approx([1.0, -1.0])


def test_assemble_paw():
    assert assemble_spectrum(NsgForm([1, 1], [1, 1])).values == pytest.approx(
        PAW_SPECTRUM, abs=1e-9
    )


def test_assemble_edgeless():
    spec = assemble_spectrum(NsgForm([], [], 3))
    assert spec.values.tolist() == [0.0, 0.0, 0.0]


def test_assemble_matches_dense_small():
    for form in small_forms(9):
        assembled = assemble_spectrum(form).values
        dense = dense_spectrum(nsg_to_graph(form).adjacency.astype(float)).values
        assert len(assembled) == form.order
        assert np.max(np.abs(assembled - dense), initial=0.0) < 1e-7


def test_assembled_trace_vanishes():
    for form in small_forms(10):
        spec = assemble_spectrum(form)
        assert abs(float(np.sum(spec.values))) <= 1e-8 * form.order


# ---------------------------------------------------------------- counting


def test_count_eigs_leq_examples():
    a = nsg_to_graph(NsgForm([3], [2])).adjacency.astype(float)
    # spectrum is [3, 0, 0, -1, -2]
    assert count_eigs_leq(a, -1.5) == 1
    assert count_eigs_leq(a, -1e-6) == 2
    assert count_eigs_leq(a, 1e-6) == 4
    assert count_eigs_leq(a, 0.5) == 4
    assert count_eigs_leq(a, -2.5) == 0
    gershgorin = 1.0 + float(a.sum(axis=1).max())
    assert count_eigs_leq(a, gershgorin) == 5


def test_count_eigs_leq_at_exact_eigenvalue_is_bracketed():
    # x = 0 sits on a double eigenvalue; the count may fall anywhere between
    # the strict and the inclusive answer, never outside
    a = nsg_to_graph(NsgForm([3], [2])).adjacency.astype(float)
    assert 2 <= count_eigs_leq(a, 0.0) <= 4


def test_count_eigs_leq_rejects_nonsymmetric():
    with pytest.raises(NotSymmetricError):
        count_eigs_leq([[0.0, 1.0], [2.0, 0.0]], 0.0)


def test_count_eigs_leq_clustered_spectrum():
    # 40 duplicated vertices force a 39-fold eigenvalue 0
    form = NsgForm([40], [2])
    a = nsg_to_graph(form).adjacency.astype(float)
    assert count_eigs_leq(a, 1e-9) - count_eigs_leq(a, -1e-9) == 39


@given(sequences, st.floats(min_value=-13.0, max_value=13.0))
@settings(max_examples=80)
def test_count_matches_dense_oracle(seq, x):
    a = build_adjacency(seq).adjacency.astype(float)
    vals = np.linalg.eigvalsh(a)
    assume(float(np.min(np.abs(vals - x))) > 1e-9)
    assert count_eigs_leq(a, x) == oracles.dense_count_leq(a, x)


# ---------------------------------------------------------------- tridiagonal


def test_tridiagonalize_preserves_spectrum():
    rng = np.random.default_rng(11)
    for n in (1, 2, 3, 5, 9, 14):
        a = rng.standard_normal((n, n))
        a = a + a.T
        d, e = tridiagonalize(a)
        assert d.shape == (n,) and e.shape == (max(n - 1, 0),)
        t = np.diag(d) + np.diag(e, 1) + np.diag(e, -1)
        assert np.allclose(np.linalg.eigvalsh(t), np.linalg.eigvalsh(a), atol=1e-9)


def test_tridiagonalize_keeps_tridiagonal_shape():
    # reflections may flip subdiagonal signs, which is a diagonal similarity
    t = np.diag([1.0, 2.0, 3.0]) + np.diag([0.5, -0.5], 1) + np.diag([0.5, -0.5], -1)
    d, e = tridiagonalize(t)
    assert d.tolist() == [1.0, 2.0, 3.0]
    assert np.abs(e).tolist() == [0.5, 0.5]


# ---------------------------------------------------------------- eta


def test_eta_extremes_examples():
    spec = assemble_spectrum(NsgForm([3], [2]))
    assert eta_extremes(spec) == (pytest.approx(3.0), pytest.approx(-2.0))
    assert eta_extremes(assemble_spectrum(NsgForm([1], [1]))) == (pytest.approx(1.0), None)
    plus, minus = eta_extremes(assemble_spectrum(NsgForm([1, 1], [1, 1])))
    assert plus == pytest.approx(PAW_SPECTRUM[1], abs=1e-9)
    assert minus == pytest.approx(PAW_SPECTRUM[3], abs=1e-9)


def test_eta_extremes_tolerance_policy():
    inside = Spectrum(np.array([0.5, -1.0 - 5e-9]), source="dense")
    assert eta_extremes(inside) == (0.5, None)
    outside = Spectrum(np.array([0.5, -1.0 - 5e-8]), source="dense")
    assert eta_extremes(outside) == (0.5, -1.0 - 5e-8)
    assert eta_extremes(Spectrum(np.zeros(3), source="dense")) == (None, None)
