"""Correlation evaluation paths: cross-method agreement, exact
eigenvalue-space oracles, symmetries, generating function, and the
time-domain transform."""

import numpy as np
import pytest

from rmtcorr.ensembles import EnsembleSpec
from rmtcorr.engine import (CorrelationRequest, CorrelationResult, evaluate,
                            factorized_kernel, generating_function_value,
                            time_domain_transform, DELTA_X)
from rmtcorr.kernels import IncrementedPoint


def r1(spec, x, method, variant="R", side=1):
    req = CorrelationRequest(
        spec, 1, [IncrementedPoint(x, side=side)], variant, method)
    return evaluate(req).value


def r2(spec, x, y, method, variant="R", sides=(1, 1)):
    pts = [IncrementedPoint(x, side=sides[0]), IncrementedPoint(y, side=sides[1])]
    req = CorrelationRequest(spec, 2, pts, variant, method)
    return evaluate(req).value


def oracle_r1(weight_power, N, x, M1=None, M2=None):
    """Eigenvalue-representation density by product Gauss-Hermite grids:
    R1(x) = N e^(-x^2) E[Delta^2(x, rest) w(rest, x)] / Z."""
    u, w = np.polynomial.hermite.hermgauss(40)
    rest = N - 1
    grids = np.meshgrid(*([u] * rest), indexing="ij")
    lam = np.stack([g.ravel() for g in grids], axis=1)
    wt = np.ones(lam.shape[0])
    for j in range(rest):
        wt *= w[np.searchsorted(u, lam[:, j])]

    def vandermonde_sq(pts):
        d = 1.0
        for a in range(pts.shape[1]):
            for b in range(a + 1, pts.shape[1]):
                d = d * (pts[:, a] - pts[:, b]) ** 2
        return d

    full = np.concatenate([np.full((lam.shape[0], 1), x), lam], axis=1)
    num = vandermonde_sq(full)
    if weight_power:
        num = num * (x ** M1 + np.sum(lam ** M1, axis=1)) ** M2
    num = float(np.sum(wt * num)) * np.exp(-x * x)

    gz = np.meshgrid(*([u] * N), indexing="ij")
    lz = np.stack([g.ravel() for g in gz], axis=1)
    wz = np.ones(lz.shape[0])
    for j in range(N):
        wz *= w[np.searchsorted(u, lz[:, j])]
    den = vandermonde_sq(lz)
    if weight_power:
        den = den * np.sum(lz ** M1, axis=1) ** M2
    den = float(np.sum(wz * den))
    return N * num / den


# -- cross-method agreement ------------------------------------------------

GAUSS_METHODS = ("convolution", "eigenvalue_integral", "factorized",
                 "closed_form_gue", "closed_form_higher_trace")


@pytest.mark.parametrize("scale", [1.0, 0.7])
def test_gaussian_methods_agree(scale):
    spec = EnsembleSpec.gaussian(4, scale)
    for x in (-1.3, 0.0, 0.9):
        ref = r1(spec, x, "convolution", "Rhat")
        for method in GAUSS_METHODS[1:]:
            got = r1(spec, x, method, "Rhat")
            assert abs(got - ref) < 1e-5 * max(abs(ref), 1.0)


def test_spike_methods_agree():
    spec = EnsembleSpec.norm_dependent(4, ("spike", 0.4))
    for x in (-0.8, 0.5):
        a = r1(spec, x, "convolution", "Rhat")
        b = r1(spec, x, "eigenvalue_integral", "Rhat")
        c = r1(spec, x, "factorized", "Rhat")
        assert abs(a - b) < 1e-8 * max(abs(a), 1.0)
        assert abs(a - c) < 1e-8 * max(abs(a), 1.0)


@pytest.mark.parametrize("M1,M2", [(4, 1), (2, 2), (3, 2)])
def test_trace_power_methods_agree(M1, M2):
    spec = EnsembleSpec.higher_trace(4, M1, M2)
    for x in (-1.1, 0.4):
        a = r1(spec, x, "convolution", "Rhat")
        b = r1(spec, x, "eigenvalue_integral", "Rhat")
        c = r1(spec, x, "closed_form_higher_trace", "Rhat")
        assert abs(a - b) < 1e-8 * max(abs(a), 1.0)
        assert abs(a - c) < 1e-8 * max(abs(a), 1.0)


def test_k2_methods_agree():
    spec = EnsembleSpec.gaussian(4)
    for (x, y) in [(-0.7, 0.6), (0.2, 1.4)]:
        a = r2(spec, x, y, "convolution", "Rhat")
        b = r2(spec, x, y, "eigenvalue_integral", "Rhat")
        c = r2(spec, x, y, "closed_form_gue", "Rhat")
        assert abs(a - b) < 1e-7 * max(abs(a), 1.0)
        assert abs(a - c) < 1e-7 * max(abs(a), 1.0)


# -- exact oracles ---------------------------------------------------------

def test_gaussian_r1_against_eigenvalue_oracle():
    for N in (2, 3):
        spec = EnsembleSpec.gaussian(N)
        for x in (0.0, 0.8, -1.5):
            ref = oracle_r1(False, N, x)
            got = float(np.real(r1(spec, x, "convolution", "R")))
            assert abs(got - ref) < 1e-10 * max(abs(ref), 1.0)


def test_trace_power_r1_against_eigenvalue_oracle():
    for (N, M1, M2) in [(3, 4, 1), (3, 2, 2)]:
        spec = EnsembleSpec.higher_trace(N, M1, M2)
        for x in (0.0, 0.8, -1.5):
            ref = oracle_r1(True, N, x, M1, M2)
            got = float(np.real(r1(spec, x, "closed_form_higher_trace", "R")))
            assert abs(got - ref) < 1e-9 * max(abs(ref), 1.0)


def test_trace_power_41_reference_values():
    spec = EnsembleSpec.higher_trace(4, 4, 1)
    refs = {0.0: 0.801405658449, 0.7: 0.848490091572,
            1.2: 0.670338659289, 2.0: 0.676126166688}
    for x, ref in refs.items():
        got = float(np.real(r1(spec, x, "closed_form_higher_trace", "R")))
        assert abs(got - ref) < 1e-9


def test_r1_integrates_to_n():
    xs = np.linspace(-8, 8, 801)
    for spec in (EnsembleSpec.gaussian(4), EnsembleSpec.higher_trace(4, 2, 2)):
        method = ("closed_form_gue" if spec.family == "gaussian"
                  else "closed_form_higher_trace")
        vals = np.array([float(np.real(r1(spec, x, method, "R"))) for x in xs])
        total = np.trapezoid(vals, xs)
        assert abs(total - spec.N) < 1e-6


# -- symmetries ------------------------------------------------------------

def test_rhat_side_flip_conjugates():
    specs = [EnsembleSpec.gaussian(4), EnsembleSpec.higher_trace(4, 4, 1)]
    for spec in specs:
        for x in (0.3, -1.2):
            up = r1(spec, x, "convolution", "Rhat", side=1)
            dn = r1(spec, x, "convolution", "Rhat", side=-1)
            assert abs(up - np.conj(dn)) < 1e-8
    spec = EnsembleSpec.gaussian(4)
    a = r2(spec, 0.4, -0.9, "convolution", "Rhat", sides=(1, 1))
    b = r2(spec, 0.4, -0.9, "convolution", "Rhat", sides=(-1, -1))
    assert abs(a - np.conj(b)) < 1e-8


def test_k2_permutation_symmetric():
    for spec in (EnsembleSpec.gaussian(4), EnsembleSpec.higher_trace(4, 2, 2)):
        a = r2(spec, 0.3, -1.1, "convolution", "R")
        b = r2(spec, -1.1, 0.3, "convolution", "R")
        assert abs(a - b) < 1e-10 * max(abs(a), 1.0)


def test_r1_nonnegative():
    for spec in (EnsembleSpec.gaussian(5), EnsembleSpec.higher_trace(4, 4, 1)):
        method = ("closed_form_gue" if spec.family == "gaussian"
                  else "closed_form_higher_trace")
        for x in np.linspace(-3, 3, 25):
            req = CorrelationRequest(spec, 1, [IncrementedPoint(x)], "R", method)
            res = evaluate(req)
            assert float(np.real(res.value)) > -max(res.error_estimate, 1e-12)


def test_coincident_points_handled():
    spec = EnsembleSpec.gaussian(4)
    req = CorrelationRequest(spec, 2,
                             [IncrementedPoint(0.5), IncrementedPoint(0.5)],
                             "R", "closed_form_gue")
    res = evaluate(req)
    assert res.metadata.get("coincidence_split")
    # the two-level density vanishes at coincident arguments
    assert abs(res.value) < 1e-6
    near = r2(spec, 0.5, 0.5 + 1e-4, "closed_form_gue", "R")
    assert abs(res.value - near) < 1e-3


# -- factorized kernel -----------------------------------------------------

def test_factorized_kernel_matches_oscillator():
    from rmtcorr.special import OscillatorBasis, gue_kernel
    spec = EnsembleSpec.gaussian(5)
    basis = OscillatorBasis(5)
    rng = np.random.default_rng(9)
    for _ in range(20):
        xp, xq = rng.uniform(-2, 2, 2)
        a = factorized_kernel(spec, xp, xq)
        b = gue_kernel(basis, np.array(xp), np.array(xq), variant="full")
        assert abs(a - b) < 1e-8 * max(abs(b), 1.0)


def test_factorized_requires_factorizing_spec():
    t = np.linspace(0.2, 1.0, 101)
    f = np.ones_like(t)
    f /= np.trapezoid(f, t)
    spec = EnsembleSpec.norm_dependent(3, (t, f))
    with pytest.raises(ValueError):
        r1(spec, 0.0, "factorized", "Rhat")


# -- request validation ----------------------------------------------------

def test_request_validation():
    spec = EnsembleSpec.gaussian(4)
    with pytest.raises(ValueError):
        CorrelationRequest(spec, 1, [0.0], variant="bogus")
    with pytest.raises(ValueError):
        CorrelationRequest(spec, 1, [0.0], method="bogus")
    with pytest.raises(ValueError):
        CorrelationRequest(spec, 2, [0.0])
    with pytest.raises(ValueError):
        r1(EnsembleSpec.gaussian(1), 0.0, "convolution")
    with pytest.raises(ValueError):
        evaluate(CorrelationRequest(spec, 1, [0.0], "R", "eigenvalue_integral"))
    with pytest.raises(ValueError):
        r1(EnsembleSpec.higher_trace(4, 4, 1), 0.0, "closed_form_gue")


# -- generating function ---------------------------------------------------

def test_generating_function_unit_at_zero_source():
    for spec in (EnsembleSpec.gaussian(4), EnsembleSpec.higher_trace(4, 4, 1)):
        for x in np.linspace(-2, 2, 10):
            val = generating_function_value(spec, 1, x, 0.0)
            assert abs(val - 1.0) < 1e-8


def test_generating_function_derivative_is_rhat():
    h = 1e-5
    for spec in (EnsembleSpec.gaussian(4), EnsembleSpec.higher_trace(4, 2, 2)):
        for x in (0.0, 0.8):
            zp = generating_function_value(spec, 1, x, h)
            zm = generating_function_value(spec, 1, x, -h)
            deriv = (zp - zm) / (2 * h) / (2 * np.pi)
            ref = r1(spec, x, "convolution", "Rhat")
            assert abs(deriv - ref) < 1e-6 * max(abs(ref), 1.0)


# -- time domain -----------------------------------------------------------

def test_time_domain_gaussian_n1():
    # N = 1: R1(x) = e^(-x^2)/sqrt(pi), so r1(t) = e^(-t^2/4)/sqrt(2 pi)
    xs = np.linspace(-12, 12, 2401)
    f = np.exp(-xs * xs) / np.sqrt(np.pi)
    ts = np.linspace(-6, 6, 121)
    g = time_domain_transform(xs, f, ts, "to_time")
    ref = np.exp(-ts * ts / 4.0) / np.sqrt(2 * np.pi)
    assert np.max(np.abs(g - ref)) < 1e-8


def test_time_domain_roundtrip():
    xs = np.linspace(-12, 12, 2401)
    f = np.exp(-xs * xs) * (1.0 + 0.3 * xs * xs)
    ts = np.linspace(-40, 40, 4001)
    g = time_domain_transform(xs, f, ts, "to_time")
    back = time_domain_transform(ts, g, xs[::10], "to_energy")
    assert np.max(np.abs(back - f[::10])) < 1e-4


def test_time_domain_nyquist_guard():
    xs = np.linspace(-10, 10, 101)
    with pytest.raises(ValueError):
        time_domain_transform(xs, np.exp(-xs * xs), np.linspace(-50, 50, 11),
                              "to_time")
    with pytest.raises(ValueError):
        time_domain_transform(xs, np.exp(-xs * xs), np.linspace(-3, 3, 11),
                              "sideways")
    with pytest.raises(ValueError):
        time_domain_transform(xs, np.exp(-xs * xs), np.linspace(-3, 3, 11),
                              "to_energy", tail=(1.0, 0.0))


def test_time_domain_tail_subtraction():
    # principal-value samples of c1/(x - i0): transform sqrt(2 pi) i c1
    # on t > 0 and zero on t < 0, carried by the analytic restoration
    c1 = 0.7
    xs = np.linspace(-60, 60, 24001)
    with np.errstate(divide="ignore"):
        f = np.where(xs == 0.0, 0.0, c1 / xs)
    ts = np.array([-2.0, 0.5, 1.5, 3.0])
    g = time_domain_transform(xs, f, ts, "to_time", tail=(c1, 0.0))
    ref = np.sqrt(2 * np.pi) * 1j * c1 * (ts > 0)
    assert np.max(np.abs(g - ref)) < 1e-12
