import io

import numpy as np
import pytest

from hypergauss.gaussian import (
    GaussianLaw,
    char_function,
    is_degenerate,
    is_narrow_sense,
    law_from_dict,
    law_to_dict,
    make_gaussian,
    sample,
)

# Frozen against a quadrature oracle: char values of the law with mean
# (1, 0) and shape I, where the marginals are N(1, 2) and N(0, 2), were
# integrated against the densities with scipy.integrate.quad.
QUAD_MEAN10_SHAPE_I = {
    (0.0, 1.0): 0.36787944117144233 + 0j,
    (1.0, 0.0): 0.19876611034641306 + 0.30955987565311227j,
    (0.0, 2.0): 0.018315638888734206 + 0j,
    (1.0, 1.0): 0.07312196559805965 + 0.11388071406436809j,
}
# Same oracle in dim 4: mean (1, 0, 0, 0), shape diag(2, 1, 1, 1).
QUAD_DIM4 = {(1.0, 1.0, 0.0, 0.0): 0.02690006784157163 + 0.04189437345020455j}


def test_make_gaussian_accepts_point_mass():
    law = make_gaussian([0, 0], np.zeros((2, 2)))
    assert is_degenerate(law)
    assert is_narrow_sense(law)


def test_make_gaussian_accepts_wide_sense_shape():
    law = make_gaussian([0, 0], [[2, 1], [1, 1]])
    assert not is_narrow_sense(law)
    assert not is_degenerate(law)


def test_make_gaussian_rejects_indefinite_shape():
    # eigenvalues of [[1, 2], [2, 1]] are 3 and -1
    with pytest.raises(ValueError, match="semidefinite"):
        make_gaussian([0, 0], [[1, 2], [2, 1]])


def test_make_gaussian_rejects_asymmetric_shape():
    with pytest.raises(ValueError, match="symmetric"):
        make_gaussian([0, 0], [[1, 0.5], [0.49, 1]])


def test_make_gaussian_rejects_bad_dims():
    with pytest.raises(ValueError):
        make_gaussian([0, 0, 0], np.eye(3))
    with pytest.raises(ValueError):
        make_gaussian([0, 0], np.eye(4))


def test_make_gaussian_tolerates_rounding_negatives():
    law = make_gaussian([0, 0], [[1, 1], [1, 1 - 1e-12]])
    assert law.dim == 2


def test_law_is_frozen():
    law = make_gaussian([0, 0], np.eye(2))
    with pytest.raises(ValueError):
        law.shape[0, 0] = 9.0


def test_char_function_frozen_values():
    law = make_gaussian([1, 0], np.eye(2))
    for y, expected in QUAD_MEAN10_SHAPE_I.items():
        assert char_function(law, y) == pytest.approx(expected, abs=1e-12)
    law4 = make_gaussian([1, 0, 0, 0], np.diag([2.0, 1, 1, 1]))
    for y, expected in QUAD_DIM4.items():
        assert char_function(law4, y) == pytest.approx(expected, abs=1e-12)


def test_char_function_spec_point():
    law = make_gaussian([0, 0], np.eye(2))
    assert char_function(law, [1, 0]) == pytest.approx(np.exp(-1.0), abs=1e-15)


def test_char_function_batch_matches_single():
    law = make_gaussian([1, -1], [[2, 1], [1, 1]])
    ys = np.array([[0.5, 0.5], [1, 0], [-1, 2]])
    batch = char_function(law, ys)
    singles = [char_function(law, y) for y in ys]
    assert np.allclose(batch, singles, rtol=0, atol=1e-15)


def test_char_function_modulus_and_symmetry():
    rng = np.random.default_rng(0)
    law = make_gaussian([1, -1], [[2, 1], [1, 1]])
    ys = rng.normal(size=(100, 2))
    vals = char_function(law, ys)
    assert np.all(np.abs(vals) <= 1 + 1e-15)
    assert np.allclose(char_function(law, -ys), np.conj(vals), rtol=0, atol=1e-15)


def test_degenerate_char_has_unit_modulus():
    law = make_gaussian([1, 2], np.zeros((2, 2)))
    ys = np.random.default_rng(1).normal(size=(50, 2))
    assert np.allclose(np.abs(char_function(law, ys)), 1.0, rtol=0, atol=1e-15)


def test_char_function_dim_mismatch():
    law = make_gaussian([0, 0], np.eye(2))
    with pytest.raises(ValueError):
        char_function(law, [1, 0, 0])


def test_is_narrow_sense_boundaries():
    assert is_narrow_sense(make_gaussian([0, 0], 3 * np.eye(2)))
    assert not is_narrow_sense(make_gaussian([0, 0], [[2, 1], [1, 1]]))
    near = make_gaussian([0, 0], np.diag([1.0, 1.0 + 5e-10]))
    assert is_narrow_sense(near, tol=1e-9)
    assert not is_narrow_sense(near, tol=1e-10)


def test_is_degenerate_tolerance():
    assert is_degenerate(make_gaussian([0, 0], 1e-15 * np.eye(2)))
    assert not is_degenerate(make_gaussian([0, 0], np.eye(2)))


def test_sample_point_mass_is_constant():
    law = make_gaussian([3, -2], np.zeros((2, 2)))
    batch = sample(law, 100, seed=5)
    assert np.array_equal(batch.rows, np.tile([3.0, -2.0], (100, 1)))


def test_sample_is_deterministic_in_seed():
    law = make_gaussian([0, 0], [[2, 1], [1, 1]])
    a = sample(law, 1000, seed=42)
    b = sample(law, 1000, seed=42)
    c = sample(law, 1000, seed=43)
    assert np.array_equal(a.rows, b.rows)
    assert not np.array_equal(a.rows, c.rows)


def test_sample_covariance_matches_twice_shape():
    # cov of the sampler output should approach 2A; allow 5 standard
    # errors on every entry
    shape = np.array([[2.0, 1.0], [1.0, 1.0]])
    law = make_gaussian([1.0, -1.0], shape)
    n = 100000
    batch = sample(law, n, seed=0)
    cov = np.cov(batch.rows.T)
    target = 2 * shape
    se = np.sqrt((np.outer(np.diag(target), np.diag(target)) + target**2) / n)
    assert np.all(np.abs(cov - target) < 5 * se)
    assert np.abs(batch.rows.mean(axis=0) - law.mean).max() < 5 * np.sqrt(4.0 / n)


def test_sample_covariance_dim4():
    shape = np.diag([2.0, 1.0, 1.0, 1.0])
    law = make_gaussian(np.zeros(4), shape)
    n = 50000
    cov = np.cov(sample(law, n, seed=3).rows.T)
    target = 2 * shape
    se = np.sqrt((np.outer(np.diag(target), np.diag(target)) + target**2) / n)
    assert np.all(np.abs(cov - target) < 5 * se)


def test_sample_singular_shape_stays_on_subspace():
    # rank-1 shape: all mass on the line spanned by (1, 1)
    shape = np.array([[1.0, 1.0], [1.0, 1.0]])
    law = make_gaussian([0.0, 0.0], shape)
    rows = sample(law, 10000, seed=7).rows
    residual = rows @ np.array([1.0, -1.0]) / np.sqrt(2)
    assert float(np.var(residual)) < 1e-20


def test_sample_rejects_bad_n():
    law = make_gaussian([0, 0], np.eye(2))
    with pytest.raises(ValueError):
        sample(law, 0, seed=0)


def test_sample_batch_shape_validated():
    from hypergauss.gaussian import SampleBatch

    with pytest.raises(ValueError):
        SampleBatch(dim=2, n=3, rows=np.zeros((2, 2)), seed=0)


def test_csv_export_header_and_round_trip():
    law = make_gaussian([0, 0, 0, 0], np.eye(4))
    batch = sample(law, 10, seed=1)
    text = batch.to_csv_text()
    lines = text.strip().split("\n")
    assert lines[0] == "x1,x2,x3,x4"
    parsed = np.loadtxt(io.StringIO(text), delimiter=",", skiprows=1)
    assert np.allclose(parsed, batch.rows, rtol=0, atol=1e-15)


def test_law_json_round_trip():
    law = make_gaussian([1, -1], [[2, 1], [1, 1]])
    d = law_to_dict(law)
    assert d["dim"] == 2
    back = law_from_dict(d)
    assert np.array_equal(back.mean, law.mean)
    assert np.array_equal(back.shape, law.shape)
    with pytest.raises(ValueError):
        law_from_dict({"dim": 4, "mean": [0, 0], "shape": [[1, 0], [0, 1]]})
