import math

import numpy as np
import pytest

from tetramer.linalg import commutator
from tetramer.model import (LISTED_LABELS, LABEL_SWAPS, ClassificationError, ModelParams, StateLabel, analytic_energy,
                            analytic_spectrum, listed_eigenvector, build_hamiltonian, classify_state,
                            ground_state_manifold, hamiltonian_terms, magnetization, manifold_name,
                            phase_boundaries, product_index, symmetry_operators, total_spin_of,
                            zero_field_spectrum)


def test_params_validation():
    ModelParams(1, 0.5, 0.1)
    ModelParams(0, 45, 10, unit_mode="kelvin")
    with pytest.raises(ValueError):
        ModelParams(0, 1)
    with pytest.raises(ValueError):
        ModelParams(1, 1, g=0)
    with pytest.raises(ValueError):
        ModelParams(1, math.nan)
    with pytest.raises(ValueError):
        ModelParams(1, 1, unit_mode="si")


def test_terms_are_frozen():
    xj, _, _ = hamiltonian_terms()
    with pytest.raises(ValueError):
        xj[0, 0] = 1.0


def test_hamiltonian_symmetric_and_commutes():
    H = build_hamiltonian(1.3, -0.7, 0.4)
    assert np.allclose(H, H.T)
    for op in symmetry_operators():
        assert np.abs(commutator(H, op)).max() < 1e-12


@pytest.mark.parametrize("p", [(1, 0.5, 0.2), (-1, 2, 1.0), (0.3, -1.7, 3.0), (0, 1, 0.5)])
def test_spectrum_matches_multiplets(p):
    w = np.linalg.eigvalsh(build_hamiltonian(*p))
    assert np.allclose(w, analytic_spectrum(*p), atol=1e-12)


def test_product_index_layout():
    assert product_index(0.5, 1, 0.5, 1) == 0
    assert product_index(-0.5, -1, -0.5, -1) == 35
    assert product_index(0.5, 1, 0.5, 0) == 1
    assert magnetization()[0] == 3


@pytest.mark.parametrize("label", LISTED_LABELS, ids=str)
def test_listed_kets(label):
    v = listed_eigenvector(label)
    assert np.isclose(np.linalg.norm(v), 1.0)
    for J, J1, h in [(1, 0.5, 0.3), (-1, 2, 1.1), (0.7, -0.2, 2.0)]:
        H = build_hamiltonian(J, J1, h)
        e = analytic_energy(label, J, J1, h)
        assert np.linalg.norm(H @ v - e * v) < 1e-10
    got = classify_state(v)
    assert got.key == LABEL_SWAPS.get(label.key, label.key)
    assert total_spin_of(label) == label.sigma_t
    assert got.sigma_t == label.sigma_t


def test_classify_rejects_superposition():
    v = listed_eigenvector((0, 0.5, 0.5)) + listed_eigenvector((1, 0.5, 0.5))
    with pytest.raises(ClassificationError):
        classify_state(v / np.linalg.norm(v))


def test_label_str():
    assert str(StateLabel(2.0, 0.5, 1.5, 2.0)) == "|2,1/2,3/2>"


def test_total_spin_unknown():
    with pytest.raises(ValueError):
        total_spin_of((-1, 0.5, 0.5))


@pytest.mark.parametrize("p,name", [
    ((1, 0.5, 0.1), "|0,1/2,1/2>"),
    ((1, 2, 0.5), "|0,3/2,3/2>"),
    ((1, 0.5, 2.0), "|2,1/2,3/2>&|2,3/2,1/2>"),
    ((1, 2, 7), "|3,3/2,3/2>"),
    ((1, 1, 0.5), "|0,1/2,1/2>&|0,3/2,3/2>"),
])
def test_ground_manifold_names(p, name):
    assert manifold_name(ground_state_manifold(*p)) == name


def test_degenerate_manifold_size():
    man = ground_state_manifold(1, 1, 1.5)
    assert len(man) == 4 and len({m.label.key for m in man}) == 4


def test_phase_boundary_values():
    lines = phase_boundaries()
    assert len(lines) == 10
    b = next(x for x in lines if x.right == "|3,3/2,3/2>" and x.a_J1 == 3.0)
    assert b.field(1, 2) == 6.0
    with pytest.raises(ValueError):
        next(x for x in lines if x.kind == "coupling").field(1, 1)


def test_zero_field_spectrum_tracks_field():
    zf = zero_field_spectrum(1, 0.7)
    for h in (0.0, 0.9, 3.3):
        assert np.allclose(np.sort(zf.at_field(h)), np.linalg.eigvalsh(build_hamiltonian(1, 0.7, h)), atol=1e-12)
    H = build_hamiltonian(1, 0.7, 1.234)
    v = zf.vectors
    assert np.allclose(v.T @ H @ v, np.diag(zf.at_field(1.234)), atol=1e-12)
