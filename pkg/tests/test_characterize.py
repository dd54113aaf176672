import numpy as np
import pytest

from hypergauss.algebra import (
    COMPLEX,
    QUATERNION,
    conjugate,
    cplx,
    embed,
    inverse,
    multiply,
    quat,
)
from hypergauss.characterize import (
    COUNTEREXAMPLE_EXISTS,
    DEGENERATE_FORCED,
    EXCLUDED,
    NEGATIVE_SCALING_FAMILY,
    ONLY_ZERO,
    LinearFormSpec,
    classify_heyde,
    classify_skitovich_darmois,
    construct_heyde_counterexample,
    construct_proposition1,
    construct_sd_counterexample,
    default_grid,
    default_nonscalar_shape,
    gaussian_independence_criterion,
    heyde_reduction,
    heyde_to_sd_forms,
    independence_residual,
    solve_psd_constraint,
    symmetry_residual,
)
from hypergauss.gaussian import is_narrow_sense, make_gaussian

B2 = np.array([[2.0, 1.0], [1.0, 1.0]])
B4 = np.diag([2.0, 1.0, 1.0, 1.0])


def random_psd(rng, dim):
    m = rng.normal(size=(dim, dim))
    return m @ m.T


def test_default_grid_shapes():
    u, v = default_grid(2)
    assert u.shape == v.shape == (625, 2)
    u4, v4 = default_grid(4)
    assert u4.shape == v4.shape == (500, 4)
    # deterministic
    u4b, _ = default_grid(4)
    assert np.array_equal(u4, u4b)


def test_linear_form_spec_validation():
    with pytest.raises(ValueError, match="at least two"):
        LinearFormSpec((cplx(1, 0),))
    with pytest.raises(ValueError, match="zero"):
        LinearFormSpec((cplx(1, 0), cplx(0, 0)))
    with pytest.raises(ValueError, match="mixed"):
        LinearFormSpec((cplx(1, 0), quat(1)))


def test_counterexample_forms_are_independent():
    law1, law2 = construct_sd_counterexample(-2, B2)
    residual = independence_residual([law1, law2], [1, 1], [1, -2])
    assert residual < 1e-12


def test_identity_laws_alpha_one_are_dependent():
    law = make_gaussian([0, 0], np.eye(2))
    residual = independence_residual([law, law], [1, 1], [1, 1])
    assert residual > 0.1


def test_degenerate_laws_always_factor():
    law1 = make_gaussian([1, 2], np.zeros((2, 2)))
    law2 = make_gaussian([-1, 0], np.zeros((2, 2)))
    residual = independence_residual([law1, law2], [1, 1], [1, cplx(1, 1)])
    assert residual < 1e-13


def test_independence_residual_quaternion_counterexample():
    law1, law2 = construct_sd_counterexample(-1, B4)
    residual = independence_residual([law1, law2], [1, 1], [1, -1])
    assert residual < 1e-12


def test_residual_accepts_callable_laws():
    from hypergauss.gaussian import char_function

    law1, law2 = construct_sd_counterexample(-2, B2)
    fns = [lambda y, l=l: char_function(l, y) for l in (law1, law2)]
    residual = independence_residual(fns, [1, 1], [1, -2])
    assert residual < 1e-12


def test_length_mismatch_raises():
    law = make_gaussian([0, 0], np.eye(2))
    with pytest.raises(ValueError, match="equal length"):
        independence_residual([law, law, law], [1, 1], [1, 1])


def test_symmetry_residual_counterexample_and_control():
    law1, law2 = construct_heyde_counterexample(-2, B2)
    assert symmetry_residual(law1, law2, -2) < 1e-12
    law = make_gaussian([0, 0], np.eye(2))
    assert symmetry_residual(law, law, 1) > 0.1


def test_symmetry_residual_mean_shift_breaks_symmetry():
    law1, law2 = construct_heyde_counterexample(-2, B2)
    shifted = make_gaussian([1.0, 0.0], law2.shape)
    assert symmetry_residual(law1, shifted, -2) > 1e-3


def test_criterion_matches_two_form_formula():
    # for forms (1, 1), (1, alpha) the criterion is A1 + A2 M(conj(alpha))
    rng = np.random.default_rng(10)
    for kind, dim in ((COMPLEX, 2), (QUATERNION, 4)):
        for _ in range(20):
            a1 = random_psd(rng, dim)
            a2 = random_psd(rng, dim)
            comps = rng.normal(size=dim)
            alpha = cplx(*comps) if kind == COMPLEX else quat(*comps)
            laws = [make_gaussian(np.zeros(dim), a1), make_gaussian(np.zeros(dim), a2)]
            got = gaussian_independence_criterion(laws, [1, 1], [1, alpha])
            want = a1 + a2 @ embed(conjugate(alpha))
            assert np.abs(got - want).max() < 1e-12 * max(1.0, np.abs(want).max())


def test_criterion_zero_iff_residual_zero():
    # dual route: the matrix criterion and the characteristic-function
    # residual must agree on a batch of random two-form configurations
    rng = np.random.default_rng(11)
    for dim in (2, 4):
        for _ in range(25):
            b = random_psd(rng, dim)
            if rng.random() < 0.5:
                # exact cancelling pair
                a_scale = float(rng.uniform(0.5, 3.0))
                laws = [
                    make_gaussian(np.zeros(dim), a_scale * b),
                    make_gaussian(np.zeros(dim), b),
                ]
                alpha = -a_scale
            else:
                laws = [
                    make_gaussian(np.zeros(dim), random_psd(rng, dim)),
                    make_gaussian(np.zeros(dim), b),
                ]
                alpha = float(rng.uniform(0.3, 2.0))
            criterion = gaussian_independence_criterion(laws, [1, 1], [1, alpha])
            residual = independence_residual(laws, [1, 1], [1, alpha])
            if np.linalg.norm(criterion) < 1e-10:
                assert residual < 1e-12
            else:
                assert residual > 1e-10


def test_solve_psd_constraint_examples():
    assert solve_psd_constraint(cplx(1, 1)).kind == ONLY_ZERO
    assert solve_psd_constraint(2).kind == ONLY_ZERO
    sol = solve_psd_constraint(-1)
    assert sol.kind == NEGATIVE_SCALING_FAMILY
    assert sol.scaling == 1.0
    assert solve_psd_constraint(-0.5).scaling == 0.5
    assert solve_psd_constraint(quat(0, 1, 1, 0)).kind == ONLY_ZERO
    with pytest.raises(ValueError):
        solve_psd_constraint(0)


def test_psd_constraint_only_zero_is_sound():
    # when the solver says OnlyZero, no nonzero PSD B may give a
    # symmetric PSD A = -B M(conj(alpha))
    rng = np.random.default_rng(12)
    for kind, dim in ((COMPLEX, 2), (QUATERNION, 4)):
        for _ in range(100):
            comps = rng.normal(size=dim)
            alpha = cplx(*comps) if kind == COMPLEX else quat(*comps)
            if solve_psd_constraint(alpha).kind != ONLY_ZERO:
                continue
            b = random_psd(rng, dim)
            a = -b @ embed(conjugate(alpha))
            asym = np.abs(a - a.T).max()
            min_eig = np.linalg.eigvalsh((a + a.T) / 2).min()
            assert asym > 1e-9 or min_eig < -1e-9


def test_psd_constraint_family_is_sound():
    rng = np.random.default_rng(13)
    for dim in (2, 4):
        for _ in range(50):
            a_val = -float(rng.uniform(0.1, 5.0))
            sol = solve_psd_constraint(a_val if dim == 2 else quat(a_val))
            assert sol.kind == NEGATIVE_SCALING_FAMILY
            b = random_psd(rng, dim)
            kind = COMPLEX if dim == 2 else QUATERNION
            from hypergauss.algebra import real_scalar

            alpha = real_scalar(a_val, kind)
            a = sol.scaling * b
            # A + B M(conj(alpha)) = 0 exactly in floats
            assert np.array_equal(a + b * (-a_val), a + a)
            assert np.abs(a + b @ embed(conjugate(alpha))).max() == 0.0


def test_classify_sd_examples():
    assert classify_skitovich_darmois(cplx(1, 1)).outcome == DEGENERATE_FORCED
    assert classify_skitovich_darmois(2).outcome == DEGENERATE_FORCED
    assert classify_skitovich_darmois(-3).outcome == COUNTEREXAMPLE_EXISTS
    assert classify_skitovich_darmois(1).outcome == DEGENERATE_FORCED
    assert classify_skitovich_darmois(quat(0, 0, 1, 0)).outcome == DEGENERATE_FORCED
    with pytest.raises(ValueError):
        classify_skitovich_darmois(0)
    with pytest.raises(ValueError):
        classify_skitovich_darmois(1e-13)


def test_classify_heyde_examples():
    assert classify_heyde(cplx(0, 1)).outcome == DEGENERATE_FORCED
    assert classify_heyde(-2).outcome == COUNTEREXAMPLE_EXISTS
    assert classify_heyde(-1).outcome == EXCLUDED
    assert classify_heyde(3).outcome == DEGENERATE_FORCED
    assert classify_heyde(quat(-1, 1e-6)).outcome == DEGENERATE_FORCED
    with pytest.raises(ValueError):
        classify_heyde(0)


def test_classify_verdicts_have_rationales():
    for alpha in (cplx(1, 1), cplx(-2, 0), cplx(2, 0)):
        assert classify_skitovich_darmois(alpha).rationale
        assert classify_heyde(alpha).rationale


def test_heyde_reduction_examples():
    r = heyde_reduction(cplx(0, 1))
    assert r.beta == cplx(0.5, 0)
    assert r.p == pytest.approx(0.5, abs=1e-15)
    assert r.q == pytest.approx(0.0, abs=1e-15)
    assert r.case == "B"

    r = heyde_reduction(1)
    assert r.beta == cplx(1, 0)
    assert r.case == "C"

    r = heyde_reduction(2)
    assert r.p == pytest.approx(9 / 8, abs=1e-15)
    assert r.case == "C"

    r = heyde_reduction(-2)
    assert r.p == pytest.approx(-1 / 8, abs=1e-15)
    assert r.case == "C"

    r = heyde_reduction(quat(0, 1, 1, 0))
    assert r.case == "A"
    assert r.p == pytest.approx(0.5, abs=1e-15)
    assert np.allclose(r.beta.components, (0.5, 0.125, 0.125, 0.0), atol=1e-15)

    with pytest.raises(ValueError):
        heyde_reduction(0)
    with pytest.raises(ValueError):
        heyde_reduction(-1)


def test_heyde_reduction_formula_consistency():
    # stored beta must equal (p, imag(alpha) * (1 - 1/|alpha|^2) / 4)
    rng = np.random.default_rng(14)
    for kind in (COMPLEX, QUATERNION):
        for _ in range(200):
            comps = rng.normal(size=2 if kind == COMPLEX else 4)
            alpha = cplx(*comps) if kind == COMPLEX else quat(*comps)
            from hypergauss.algebra import is_zero, norm_squared

            if is_zero(alpha, 1e-6):
                continue
            r = heyde_reduction(alpha)
            nsq = norm_squared(alpha)
            factor = 0.25 * (1.0 - 1.0 / nsq)
            expected = (r.p,) + tuple(factor * x for x in alpha.imag)
            assert np.allclose(r.beta.components, expected, rtol=0, atol=1e-12)


def test_heyde_to_sd_forms():
    m1, m2 = heyde_to_sd_forms(cplx(0, 1))
    assert m1.coefficients == (cplx(1, 1), cplx(0, 2))
    assert m2.coefficients == (cplx(2, 0), cplx(1, 1))
    with pytest.raises(ValueError):
        heyde_to_sd_forms(-1)


@pytest.mark.parametrize("alpha", [cplx(0, 1), cplx(-2, 0.5), quat(1, 1, 1, 0),
                                   quat(-0.3, 0, 0.7, 0)])
def test_substitution_reduces_to_beta_pair(alpha):
    # normalizing M2 = 2 xi1 + (1+alpha) xi2 against eta1 = (1+alpha) xi1,
    # eta2 = 2 alpha xi2 leaves coefficient pair (1, beta)
    m1, m2 = heyde_to_sd_forms(alpha)
    c1 = multiply(m2.coefficients[0], inverse(m1.coefficients[0]))
    c2 = multiply(m2.coefficients[1], inverse(m1.coefficients[1]))
    effective = multiply(inverse(c1), c2)
    beta = heyde_reduction(alpha).beta
    assert np.allclose(effective.components, beta.components, rtol=0, atol=1e-12)


def test_construct_sd_counterexample_values():
    law1, law2 = construct_sd_counterexample(-2, B2)
    assert np.array_equal(law1.shape, [[4, 2], [2, 2]])
    assert np.array_equal(law2.shape, B2)
    assert np.array_equal(law1.mean, [0, 0])
    criterion = gaussian_independence_criterion([law1, law2], [1, 1], [1, -2])
    assert np.abs(criterion).max() == 0.0
    assert not is_narrow_sense(law1)
    assert not is_narrow_sense(law2)


def test_construct_sd_counterexample_alpha_minus_one_shares_shape():
    law1, law2 = construct_sd_counterexample(-1, B2)
    assert np.array_equal(law1.shape, law2.shape)


def test_construct_sd_counterexample_quaternion():
    law1, law2 = construct_sd_counterexample(quat(-1), B4)
    criterion = gaussian_independence_criterion([law1, law2], [1, 1], [1, quat(-1)])
    assert np.abs(criterion).max() == 0.0


def test_construct_sd_counterexample_rejections():
    with pytest.raises(ValueError, match="imag"):
        construct_sd_counterexample(cplx(-1, 1), B2)
    with pytest.raises(ValueError, match="a > 0"):
        construct_sd_counterexample(2, B2)
    with pytest.raises(ValueError, match="nonzero"):
        construct_sd_counterexample(0, B2)
    with pytest.raises(ValueError, match="identity"):
        construct_sd_counterexample(-2, np.eye(2))
    with pytest.raises(ValueError, match="semidefinite"):
        construct_sd_counterexample(-2, [[1, 2], [2, 1]])
    with pytest.raises(ValueError, match="complex scalar"):
        construct_sd_counterexample(quat(-2), B2)


def test_construct_heyde_counterexample():
    law1, law2 = construct_heyde_counterexample(-2, B2)
    assert symmetry_residual(law1, law2, -2) < 1e-12
    law1q, law2q = construct_heyde_counterexample(quat(-2), B4)
    assert symmetry_residual(law1q, law2q, quat(-2)) < 1e-12
    with pytest.raises(ValueError, match="excluded"):
        construct_heyde_counterexample(-1, B2)


def test_construct_proposition1_two_terms():
    laws = construct_proposition1([1, 1], [1, -1], B2)
    assert len(laws) == 2
    assert np.array_equal(laws[0].shape, laws[1].shape)
    criterion = gaussian_independence_criterion(laws, [1, 1], [1, -1])
    assert np.abs(criterion).max() == 0.0
    assert independence_residual(laws, [1, 1], [1, -1]) < 1e-12


def test_construct_proposition1_three_terms():
    laws = construct_proposition1([1, 1, 2], [1, 1, -1], B2)
    assert len(laws) == 3
    ones = [1, 1, 1]
    betas = [1, 1, -1]
    criterion = gaussian_independence_criterion(laws, ones, betas)
    assert np.linalg.norm(criterion) < 1e-10
    assert independence_residual(laws, ones, betas) < 1e-12


def test_construct_proposition1_quaternion():
    betas = [quat(0, 1), quat(0, -1)]
    laws = construct_proposition1([1, 1], betas, B4)
    assert np.linalg.norm(
        gaussian_independence_criterion(laws, [1, 1], betas)) < 1e-10
    assert independence_residual(laws, [1, 1], betas) < 1e-12


def test_construct_proposition1_rejections():
    with pytest.raises(ValueError, match="vanish"):
        construct_proposition1([1, 1], [1, 1], B2)
    with pytest.raises(ValueError, match="positive"):
        construct_proposition1([1, -1], [1, 1], B2)
    with pytest.raises(ValueError, match="equal length"):
        construct_proposition1([1, 1, 1], [1, -1], B2)
    with pytest.raises(ValueError, match="identity"):
        construct_proposition1([1, 1], [1, -1], np.eye(2))


def test_classification_trichotomy():
    rng = np.random.default_rng(15)
    for _ in range(300):
        comps = rng.normal(size=2) * rng.choice([1.0, 1e-14], p=[0.9, 0.1], size=2)
        alpha = cplx(*comps)
        from hypergauss.algebra import is_zero

        if is_zero(alpha, 1e-12):
            continue
        sd = classify_skitovich_darmois(alpha).outcome
        assert sd in (DEGENERATE_FORCED, COUNTEREXAMPLE_EXISTS)
        heyde = classify_heyde(alpha).outcome
        assert heyde in (DEGENERATE_FORCED, COUNTEREXAMPLE_EXISTS, EXCLUDED)


def test_default_nonscalar_shape_presets():
    assert np.array_equal(default_nonscalar_shape(2), B2)
    assert np.array_equal(default_nonscalar_shape(4), B4)
    with pytest.raises(ValueError):
        default_nonscalar_shape(3)
