import numpy as np
import pytest

from tetramer.linalg import (SITE_DIMS, ConvergenceError, commutator, jacobi_eigh, kron, partial_trace,
                             partial_transpose, resolve_mask, site_index, sym_eigen)


def random_sym(n, seed=0):
    a = np.random.default_rng(seed).normal(size=(n, n))
    return a + a.T


def test_site_aliases():
    assert site_index("mu1") == 0 and site_index("μ2") == 2 and site_index("s2") == 3 and site_index(1) == 1
    with pytest.raises(ValueError):
        site_index("x")
    with pytest.raises(ValueError):
        site_index(4)


@pytest.mark.parametrize("mask", [[], [0, 1, 2, 3], [5]])
def test_resolve_mask_rejects(mask):
    with pytest.raises(ValueError):
        resolve_mask(mask)


def test_resolve_mask_sorts():
    assert resolve_mask(["S2", "mu1"]) == (0, 3)


def test_kron_matches_numpy():
    a, b, c = np.eye(2), np.arange(9.0).reshape(3, 3), np.array([[0, 1], [1, 0]])
    assert np.array_equal(kron(a, b, c), np.kron(np.kron(a, b), c))
    assert kron().shape == (1, 1)


@pytest.mark.parametrize("n", [1, 2, 5, 36])
def test_jacobi_matches_lapack(n):
    m = random_sym(n, n)
    w, v = jacobi_eigh(m)
    assert np.allclose(w, np.linalg.eigvalsh(m), atol=1e-10)
    assert np.allclose(v @ np.diag(w) @ v.T, m, atol=1e-10)
    assert np.allclose(v.T @ v, np.eye(n), atol=1e-12)


def test_jacobi_sweep_cap():
    with pytest.raises(ConvergenceError):
        jacobi_eigh(random_sym(10), max_sweeps=1)


def test_sym_eigen_methods():
    m = random_sym(8)
    for method in ("lapack", "jacobi"):
        d = sym_eigen(m, method)
        assert np.allclose(d.reconstruct(), m, atol=1e-10)
    with pytest.raises(ValueError):
        sym_eigen(m, "qr")
    with pytest.raises(ValueError):
        sym_eigen(np.zeros((2, 3)))


def test_partial_transpose_product_state():
    a, b = random_sym(6, 1), random_sym(6, 2)
    full = np.kron(a, b)
    dims = (2, 3, 2, 3)
    # transposing the first two factors of a product transposes the first operand
    assert np.allclose(partial_transpose(full, [0, 1], dims), np.kron(a.T, b))


def test_partial_transpose_full_is_transpose():
    m = np.random.default_rng(3).normal(size=(36, 36))
    assert np.allclose(partial_transpose(partial_transpose(m, [0, 1]), [2, 3]), m.T)


def test_partial_trace_product():
    ops = [random_sym(d, i) for i, d in enumerate(SITE_DIMS)]
    full = kron(*ops)
    red = partial_trace(full, [1, 3])
    expect = np.trace(ops[0]) * np.trace(ops[2]) * np.kron(ops[1], ops[3])
    assert np.allclose(red, expect)


def test_dim_mismatch():
    with pytest.raises(ValueError):
        partial_transpose(np.eye(10), [0])


def test_commutator():
    a, b = random_sym(4, 1), random_sym(4, 2)
    assert np.allclose(commutator(a, b), -commutator(b, a))
