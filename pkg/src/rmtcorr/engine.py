"""Correlation-function evaluation paths: determinant-factorized
convolution in the diagonal variables, the Fourier/jet eigenvalue
integral, the factorized-kernel route, trace-power closed forms, the
generating-function value, and time-domain transforms.

Both deterministic routes reduce to sums of k x k determinants
det[sum_{n<N} row_p(n) col_q(n)]: the convolution path builds row/col
from Cauchy transforms and moments of the reduced density in the
diagonal variables, the eigenvalue-integral path from half-line
oscillatory integrals and Taylor jets of the characteristic function.
"""

import math

import numpy as np
from numpy.polynomial import hermite as nph

from .ensembles import correlation_terms, slot_phi_jet, jet_mul, flat_gauss_norm
from .kernels import IncrementedPoint
from .special import (SQRT_PI, OscillatorBasis, gue_kernel, gauss_moments,
                      gauss_moment_cauchy, gauss_poly_derivatives,
                      polyval_ascending, half_gauss_oscillatory)

DELTA_X = 1e-9
GH_ORDER = 128
VARIANTS = ("Rhat", "R")
METHODS = ("convolution", "eigenvalue_integral", "factorized",
           "closed_form_gue", "closed_form_higher_trace")


class CorrelationRequest:
    """One correlation evaluation: ensemble, k points with increment
    sides, variant (Rhat keeps real parts, R takes imaginary parts),
    and the method to use."""

    def __init__(self, spec, k, points, variant="Rhat", method="convolution"):
        if variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}")
        if method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}")
        if len(points) != k or k < 1:
            raise ValueError("need exactly k points, k >= 1")
        self.spec = spec
        self.k = k
        self.points = [p if isinstance(p, IncrementedPoint) else IncrementedPoint(p)
                       for p in points]
        self.variant = variant
        self.method = method


class CorrelationResult:
    def __init__(self, value, error_estimate, metadata=None):
        self.value = value
        self.error_estimate = error_estimate
        self.metadata = metadata or {}

    def __repr__(self):
        return f"CorrelationResult({self.value}, err={self.error_estimate})"


def evaluate(req):
    fn = {"convolution": correlations_convolution,
          "eigenvalue_integral": correlations_eigenvalue_integral,
          "factorized": correlations_factorized,
          "closed_form_gue": correlations_closed_form_gue,
          "closed_form_higher_trace": correlations_higher_trace}[req.method]
    return fn(req)


def _coincidence_split(points):
    """If two points are closer than DELTA_X, return two shifted copies to
    evaluate and average (linear extrapolation through the midpoint)."""
    xs = np.array([p.value for p in points])
    k = len(xs)
    for p in range(k):
        for q in range(p + 1, k):
            if abs(xs[p] - xs[q]) < DELTA_X:
                lo = [IncrementedPoint(pt.value - 10 * DELTA_X * (i == p),
                                       pt.side, pt.epsilon)
                      for i, pt in enumerate(points)]
                hi = [IncrementedPoint(pt.value + 10 * DELTA_X * (i == p),
                                       pt.side, pt.epsilon)
                      for i, pt in enumerate(points)]
                return lo, hi
    return None


def _with_coincidence(req, fn):
    split = _coincidence_split(req.points)
    if split is None:
        return fn(req.points)
    lo = fn(split[0])
    hi = fn(split[1])
    value = 0.5 * (lo.value + hi.value)
    err = max(lo.error_estimate, hi.error_estimate, abs(hi.value - lo.value))
    return CorrelationResult(value, err, lo.metadata | {"coincidence_split": True})


# ---------------------------------------------------------------------------
# Row and column factors shared by the h-space determinant paths
# ---------------------------------------------------------------------------

def _row_rhat(N, x, L, v, m):
    """row_n = integral (pi v)^(-1/2) e^(-a^2/v) a^m / (x - a - i L 0)^(n+1) da,
    n = 0..N-1, via the scaled Gaussian Cauchy transforms."""
    F = gauss_moment_cauchy(N - 1, m, x / np.sqrt(v), side=-L)
    n = np.arange(N)
    return SQRT_PI ** -1 * v ** ((m - n - 1) / 2.0) * F[:, m]


def _row_r(N, x, L, v, m):
    """Imaginary-part rows: the distributional limit
    Im row_n = L * (-1)^n (pi/n!) d^n/dx^n [(pi v)^(-1/2) x^m e^(-x^2/v)]."""
    rows = gauss_poly_derivatives(m, N - 1)
    u = x / np.sqrt(v)
    e = np.exp(-u * u)
    out = np.empty(N, dtype=complex)
    f = 1.0
    for n in range(N):
        out[n] = L * (-1.0) ** n * np.pi / f * (np.pi * v) ** -0.5 \
            * v ** ((m - n) / 2.0) * polyval_ascending(rows[n], u) * e
        f *= n + 1
    return out


def _col_exact(N, x, v, m):
    """col_n = integral (pi v)^(-1/2) e^(-b^2/v) b^m (x - ib)^n db
    (the second kernel slot carries the i on the diagonal variable),
    by binomial expansion into Gaussian moments."""
    g = gauss_moments(N - 1 + m)
    out = np.empty(N, dtype=complex)
    for n in range(N):
        acc = 0j
        for j in range(n + 1):
            acc += (math.comb(n, j) * x ** (n - j) * (-1j) ** j
                    * v ** ((m + j) / 2.0) * g[m + j])
        out[n] = acc / SQRT_PI
    return out


def _col_gh(N, x, v, m, order):
    """Same column integrals by Gauss-Hermite quadrature (exact for these
    polynomial-times-Gaussian integrands at sufficient order)."""
    u, w = np.polynomial.hermite.hermgauss(order)
    b = np.sqrt(v) * u
    out = np.empty(N, dtype=complex)
    base = w * b ** m / SQRT_PI
    for n in range(N):
        out[n] = np.sum(base * (x - 1j * b) ** n)
    return out


def _det_sum(spec, k, points, variant, col_builder):
    """Sum over separable terms of det[(1/pi) sum_n row col]."""
    N = spec.N
    total = 0j
    for coef, slots in correlation_terms(spec, k):
        rows = []
        for p in range(k):
            v, m = slots[p]
            x, L = points[p].value, points[p].side
            if variant == "Rhat":
                rows.append(_row_rhat(N, x, L, v, m))
            else:
                rows.append(_row_r(N, x, L, v, m))
        cols = [col_builder(N, points[q].value, *slots[k + q]) for q in range(k)]
        D = np.empty((k, k), dtype=complex)
        for p in range(k):
            for q in range(k):
                D[p, q] = np.dot(rows[p], cols[q]) / np.pi
        total += coef * np.linalg.det(D)
    return total


def correlations_convolution(req):
    """Reduced-density convolution of the fundamental determinant kernel,
    carried out termwise exactly: sided factors through Faddeeva boundary
    values, moment factors through Gauss-Hermite quadrature."""
    spec, k = req.spec, req.k
    if 2 * k > spec.N:
        raise ValueError("need 2k <= N")

    def run(points):
        def col(N, x, v, m):
            return _col_gh(N, x, v, m, GH_ORDER)

        def col2(N, x, v, m):
            return _col_gh(N, x, v, m, 2 * GH_ORDER)

        val = _det_sum(spec, k, points, req.variant, col)
        check = _det_sum(spec, k, points, req.variant, col2)
        err = abs(val - check)
        val = check
        if req.variant == "R":
            val = complex(np.real(val))
        return CorrelationResult(val, err, {"quadrature": (GH_ORDER, 2 * GH_ORDER)})

    return _with_coincidence(req, run)


def correlations_higher_trace(req):
    """Trace-power closed form: the same determinant sum with every factor
    evaluated in closed form (moment columns exact)."""
    spec, k = req.spec, req.k
    if spec.family not in ("higher_trace", "gaussian"):
        raise ValueError("closed_form_higher_trace needs a trace-power or Gaussian spec")

    def run(points):
        val = _det_sum(spec, k, points, req.variant, _col_exact)
        if req.variant == "R":
            val = complex(np.real(val))
        return CorrelationResult(val, 0.0, {"path": "moment-determinant"})

    return _with_coincidence(req, run)


# ---------------------------------------------------------------------------
# Eigenvalue-integral (Fourier/jet) path
# ---------------------------------------------------------------------------

def _slot_poly(v, m):
    """Ascending coefficients a_j with slot Fourier factor
    sum_j a_j r^j e^(-v r^2/4)."""
    hc = nph.herm2poly([0.0] * m + [1.0]) if m else np.array([1.0])
    return np.array([v ** (m / 2.0) * (0.5j) ** m * hc[j] * (np.sqrt(v) / 2.0) ** j
                     for j in range(len(hc))], dtype=complex)


def _halfline_vec(N, x, L, v, m):
    """I_n = integral over the L r > 0 half-line of
    (-i r)^n e^(-i x r) (slot Fourier factor)(r) dr, n = 0..N-1."""
    a = _slot_poly(v, m)
    amax = N - 1 + len(a) - 1
    out = np.empty(N, dtype=complex)
    if L == 1:
        G = half_gauss_oscillatory(amax, np.array(float(x)), v / 4.0)
        for n in range(N):
            out[n] = (-1j) ** n * np.sum(a * G[n: n + len(a)])
    else:
        G = half_gauss_oscillatory(amax, np.array(-float(x)), v / 4.0)
        for n in range(N):
            acc = 0j
            for j in range(len(a)):
                acc += a[j] * (-1.0) ** (n + j) * G[n + j]
            out[n] = (-1j) ** n * acc
    return out


def _jet_vec(N, x, v, m):
    """J_n = order-n Taylor coefficient of e^(-x r) (slot factor)(r) at 0."""
    ex = np.array([(-x) ** j / math.factorial(j) for j in range(N)], dtype=complex)
    return jet_mul(ex, slot_phi_jet(v, m, N - 1), N - 1)


def _det_sum_ev(spec, k, points):
    N = spec.N
    total = 0j
    for coef, slots in correlation_terms(spec, k):
        rows = [_halfline_vec(N, points[p].value, points[p].side, *slots[p])
                for p in range(k)]
        cols = [_jet_vec(N, points[q].value, *slots[k + q]) for q in range(k)]
        D = np.empty((k, k), dtype=complex)
        for p in range(k):
            for q in range(k):
                D[p, q] = 1j / np.pi * np.dot(rows[p], cols[q])
        total += coef * np.linalg.det(D)
    return total


def correlations_eigenvalue_integral(req):
    """Fourier-side route: half-line r1 integrals against r2 jets of the
    characteristic function; k <= 2."""
    spec, k = req.spec, req.k
    if k > 2:
        raise ValueError("eigenvalue_integral is capped at k = 2")
    if req.variant != "Rhat":
        raise ValueError("eigenvalue_integral computes the Rhat variant")

    def run(points):
        val = _det_sum_ev(spec, k, points)
        return CorrelationResult(val, 0.0, {"path": "fourier-jet"})

    return _with_coincidence(req, run)


# ---------------------------------------------------------------------------
# Factorized-kernel and GUE closed-form paths
# ---------------------------------------------------------------------------

def _factorizing_scale(spec):
    if spec.family == "gaussian":
        return spec.params["scale"]
    if spec.family == "norm_dependent":
        sp = spec.params["spread"]
        if isinstance(sp, tuple) and isinstance(sp[0], str) and sp[0] == "spike":
            return 2.0 * sp[1]
    raise ValueError("factorized path needs a factorizing spec")


def factorized_kernel(spec, xp, xq, Lp=1):
    """Correlation kernel for factorizing characteristic functions,
    assembled from jet and half-line factors, in the determinant-equivalent
    gauge exp((xp^2 - xq^2)/(2v)) that matches the oscillator-basis kernel
    entrywise for the Gaussian case."""
    v = _factorizing_scale(spec)
    N = spec.N
    rows = _halfline_vec(N, xp, Lp, v, 0)
    cols = _jet_vec(N, xq, v, 0)
    val = 1j / np.pi * np.dot(rows, cols)
    return val * np.exp((xp * xp - xq * xq) / (2.0 * v))


def correlations_factorized(req):
    """Determinant of the factorized kernel; Gaussian and spike-spread
    variance-mixed specs only."""
    spec, k = req.spec, req.k

    def run(points):
        D = np.empty((k, k), dtype=complex)
        for p in range(k):
            for q in range(k):
                D[p, q] = factorized_kernel(
                    spec, points[p].value, points[q].value, points[p].side)
        if req.variant == "R":
            D = np.imag(D).astype(complex)
        val = complex(np.linalg.det(D))
        return CorrelationResult(val, 0.0, {"path": "factorized-kernel"})

    return _with_coincidence(req, run)


def correlations_closed_form_gue(req):
    """Oscillator-basis determinant for the Gaussian family, any scale."""
    spec, k = req.spec, req.k
    if spec.family != "gaussian":
        raise ValueError("closed_form_gue needs a Gaussian spec")
    v = spec.params["scale"]
    basis = OscillatorBasis(spec.N)

    def run(points):
        D = np.empty((k, k), dtype=complex)
        variant = "full" if req.variant == "Rhat" else "imaginary-part"
        for p in range(k):
            for q in range(k):
                u = points[p].value / np.sqrt(v)
                w = points[q].value / np.sqrt(v)
                val = gue_kernel(basis, np.array(u), np.array(w), variant=variant)
                if req.variant == "Rhat" and points[p].side == -1:
                    val = np.conj(gue_kernel(basis, np.array(u), np.array(w)))
                D[p, q] = val / np.sqrt(v)
        return CorrelationResult(complex(np.linalg.det(D)), 0.0,
                                 {"path": "oscillator-determinant"})

    return _with_coincidence(req, run)


# ---------------------------------------------------------------------------
# Generating function
# ---------------------------------------------------------------------------

def generating_function_value(spec, k, x, J, metric=None):
    """Z_k at source strengths J; k = 1 only.  Z_1(x, J) = 1 + 2 pi J
    M(x - J, x + J) with M the Fourier/jet kernel entry, so that
    (1/2pi) dZ/dJ at J = 0 equals Rhat_1(x)."""
    if k != 1:
        raise NotImplementedError("generating function implemented for k = 1")
    L = (metric or [1])[0]
    x1 = float(np.asarray(x).reshape(-1)[0])
    J1 = float(np.asarray(J).reshape(-1)[0])
    N = spec.N
    total = 0j
    for coef, slots in correlation_terms(spec, 1):
        row = _halfline_vec(N, x1 - J1, L, *slots[0])
        col = _jet_vec(N, x1 + J1, *slots[1])
        total += coef * (1j / np.pi) * np.dot(row, col)
    return 1.0 + 2.0 * np.pi * J1 * total


# ---------------------------------------------------------------------------
# Time domain
# ---------------------------------------------------------------------------

def _simpson_weights(n, dx):
    if n % 2 == 0:
        raise ValueError("Simpson rule needs an odd number of samples")
    w = np.ones(n)
    w[1:-1:2] = 4.0
    w[2:-1:2] = 2.0
    return w * dx / 3.0


def time_domain_transform(grid_in, samples, grid_out, direction, tail=None):
    """Unitary-convention Fourier pair between energy and time.

    direction 'to_time': g(t) = (2pi)^(-1/2) integral e^(itx) f(x) dx; an
    optional tail = (c1, c3) subtracts c1/(x - i0) + c3/(x - i0)^3 before
    quadrature and restores its transform sqrt(2pi) i (it)^n/n! Theta(t)
    analytically.  direction 'to_energy': the inverse sign convention.
    A Nyquist check rejects grids that cannot resolve the oscillation."""
    grid_in = np.asarray(grid_in, dtype=float)
    samples = np.asarray(samples, dtype=complex)
    grid_out = np.asarray(grid_out, dtype=float)
    dx = grid_in[1] - grid_in[0]
    if dx * np.max(np.abs(grid_out)) > np.pi:
        raise ValueError("output grid violates the Nyquist limit of the input grid")
    f = samples.copy()
    if direction == "to_time":
        sign = +1.0
    elif direction == "to_energy":
        sign = -1.0
    else:
        raise ValueError("direction must be to_time or to_energy")
    extra = 0.0
    if tail is not None:
        c1, c3 = tail
        # principal-value sampling of the sided tail; its delta part lives
        # in the analytic restoration below
        z = np.where(grid_in == 0.0, np.inf, grid_in)
        f = f - c1 / z - c3 / z ** 3
        tt = grid_out
        extra = np.sqrt(2 * np.pi) * (
            c1 * 1j + c3 * 1j * (1j * tt) ** 2 / 2.0) * (tt > 0)
        if sign < 0:
            raise ValueError("tail subtraction applies to the to_time direction")
    w = _simpson_weights(len(grid_in), dx)
    phase = np.exp(sign * 1j * np.outer(grid_out, grid_in))
    out = phase @ (w * f) / np.sqrt(2 * np.pi)
    return out + extra
