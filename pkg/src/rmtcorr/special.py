"""Hermite polynomials, oscillator wave functions, generalized Hermite
functions, the finite-N unitary-ensemble kernel, and Gaussian Cauchy
transform primitives built on the Faddeeva function.

Weight convention throughout: exp(-x^2), matching the density
P(H) ~ exp(-tr H^2).
"""

import math

import numpy as np
from scipy.special import wofz

SQRT_PI = np.sqrt(np.pi)
HERMITE_CAP = 64


class OscillatorBasis:
    """First N oscillator states for the exp(-x^2) weight."""

    def __init__(self, N):
        if N < 1:
            raise ValueError("N must be >= 1")
        self.N = N


def hermite_poly(n, x):
    """Physicists' Hermite polynomial H_n(x) by three-term recurrence."""
    x = np.asarray(x, dtype=float)
    h0 = np.ones_like(x)
    if n == 0:
        return h0
    h1 = 2.0 * x
    for j in range(1, n):
        h0, h1 = h1, 2.0 * x * h1 - 2.0 * j * h0
    return h1


def oscillator_wavefunction(n, x):
    """phi_n(x) = (2^n n! sqrt(pi))^(-1/2) exp(-x^2/2) H_n(x).

    Evaluated by the normalized recurrence to stay finite at large n."""
    return _osc_tower(n, x)[n]


def _osc_tower(nmax, x):
    """phi_0..phi_nmax stacked, via the normalized recurrence."""
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape, dtype=float)
    out[0] = np.pi ** -0.25 * np.exp(-0.5 * x * x)
    if nmax >= 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for n in range(1, nmax):
        out[n + 1] = x * np.sqrt(2.0 / (n + 1)) * out[n] - np.sqrt(n / (n + 1.0)) * out[n - 1]
    return out


def generalized_hermite(n, x):
    """Second-solution Hermite companion: a complex function whose
    imaginary part is H_n(x), defined by the half-line integral
    (i2)^(n+1) pi^(-1/2) exp(x^2) * integral_0^inf exp(-xi^2 - 2ix xi) xi^n dxi.

    Seeded in closed form through the Faddeeva function and grown by the
    recurrence F_{n+1} = 2x F_n - 2n F_{n-1} (valid from n = 1 up).
    Accuracy degrades and exp(x^2) overflows past |x| ~ 26; n is capped.
    """
    if n > HERMITE_CAP:
        raise ValueError(f"order {n} exceeds cap {HERMITE_CAP}")
    x = np.asarray(x, dtype=float)
    e = np.exp(x * x)
    f0 = 1j * e * wofz(-x)
    if n == 0:
        return f0
    f1 = 2.0 * x * f0 - (2.0 / SQRT_PI) * e
    for j in range(1, n):
        f0, f1 = f1, 2.0 * x * f1 - 2.0 * j * f0
    return f1


def _osc_hat_tower(nmax, x):
    """Normalized companions phi^_n = (2^n n! sqrt(pi))^(-1/2) e^(-x^2/2) F_n
    for n = 0..nmax, with F_n from generalized_hermite.  Im phi^_n = phi_n.

    The upward recurrence cancels severely at large |x|; there the tower
    is rebuilt from F_n(x) e^(-x^2) = (1/pi) integral e^(-u^2) H_n(u) /
    (x - u - i0) du (both sides share the recurrence and the n = 0, 1
    seeds), whose Cauchy transforms stay accurate in the far tail."""
    if nmax > HERMITE_CAP:
        raise ValueError(f"order {nmax} exceeds cap {HERMITE_CAP}")
    x = np.asarray(x, dtype=float)
    out = np.empty((nmax + 1,) + x.shape, dtype=complex)
    e = np.exp(0.5 * x * x)
    out[0] = np.pi ** -0.25 * 1j * e * wofz(-x)
    if nmax >= 1:
        out[1] = np.sqrt(2.0) * x * out[0] - np.sqrt(2.0) * np.pi ** -0.75 * e
    for n in range(1, nmax):
        out[n + 1] = x * np.sqrt(2.0 / (n + 1)) * out[n] - np.sqrt(n / (n + 1.0)) * out[n - 1]
    # far tail: principal value by the sign-definite asymptotic series
    # PV_n(x) = sum_t sqrt(pi) (n+2t)!/(2^(2t) t!) x^(-(n+2t+1)), using
    # the Hermite moments int u^(n+2t) H_n e^(-u^2) du; valid while the
    # t = 0 term ratio (n+1)(n+2)/(4x^2) stays well below 1
    far = (x * x >= CAUCHY_ASYMP ** 2) \
        & (2.0 * x * x >= (nmax + 1.0) * (nmax + 2.0))
    if np.any(far):
        flat = out.reshape(nmax + 1, -1)
        xf = x.reshape(-1)
        ph = _osc_tower(nmax, x).reshape(nmax + 1, -1)
        for i in np.nonzero(far.reshape(-1))[0]:
            xi = float(xf[i])
            ex = np.exp(0.5 * xi * xi) / np.pi
            norm = np.pi ** -0.25
            for n in range(nmax + 1):
                acc = 0.0
                t = SQRT_PI * math.factorial(n) * xi ** (-(n + 1))
                prev = np.inf
                for tt in range(200):
                    if abs(t) >= prev or abs(t) <= 1e-20 * abs(acc):
                        break
                    acc += t
                    prev = abs(t)
                    t *= (n + 2 * tt + 1) * (n + 2 * tt + 2) / (
                        4.0 * (tt + 1) * xi * xi)
                flat[n, i] = norm * ex * acc + 1j * ph[n, i]
                norm /= np.sqrt(2.0 * (n + 1))
    return out


def gue_kernel(basis, xp, xq, variant="full"):
    """Finite-N kernel of the Gaussian unitary ensemble.

    full: sum_{n<N} phi^_n(xp) phi_n(xq) (complex; imaginary part is the
    density kernel); imaginary-part: sum_{n<N} phi_n(xp) phi_n(xq)."""
    N = basis.N
    pq = _osc_tower(N - 1, xq)
    if variant == "imaginary-part":
        pp = _osc_tower(N - 1, xp)
        return np.sum(pp * pq, axis=0)
    if variant == "full":
        pp = _osc_hat_tower(N - 1, xp)
        return np.sum(pp * pq, axis=0)
    raise ValueError(f"unknown variant {variant!r}")


# ---------------------------------------------------------------------------
# Gaussian Cauchy transforms
# ---------------------------------------------------------------------------

def faddeeva_derivatives(z, nmax):
    """w(z), w'(z), ..., w^(nmax)(z) by the stable upward recurrence
    w^(j+1) = -2 z w^(j) - 2 j w^(j-1)."""
    z = np.asarray(z, dtype=complex)
    out = np.empty((nmax + 1,) + z.shape, dtype=complex)
    out[0] = wofz(z)
    if nmax >= 1:
        out[1] = -2.0 * z * out[0] + 2j / SQRT_PI
    for j in range(1, nmax):
        out[j + 1] = -2.0 * z * out[j] - 2.0 * j * out[j - 1]
    return out


def cauchy_gauss(n, z, side=-1):
    """C_n(z) = integral exp(-u^2) / (z - u)^(n+1) du over the real line.

    For Im z != 0 the value is unambiguous; for real z the `side` selects
    the boundary value from below (side=-1, z - i0) or above (side=+1).
    """
    return cauchy_gauss_tower(n, z, side)[n]


def cauchy_gauss_tower(nmax, z, side=-1):
    """C_0(z)..C_nmax(z) stacked.

    The Faddeeva-derivative route loses relative accuracy at large real
    |z| (the recurrence w' = -2zw + 2i/sqrt(pi) cancels severely there);
    boundary values with |Re z| beyond CAUCHY_ASYMP switch to the
    principal-value asymptotic series plus the exact sided delta part."""
    z = np.asarray(z, dtype=complex)
    upper = np.where(np.imag(z) != 0, np.imag(z) > 0, side > 0)
    fac = np.empty((nmax + 1,) + z.shape, dtype=complex)
    # lower half plane (or z - i0): C_n = (i pi / n!) w^(n)(-z)
    # upper half plane (or z + i0): C_n = (-i pi / n!) (-1)^n w^(n)(z)
    wl = faddeeva_derivatives(-z, nmax)
    wu = faddeeva_derivatives(z, nmax)
    f = 1.0
    for n in range(nmax + 1):
        lo = (1j * np.pi / f) * wl[n]
        hi = (-1j * np.pi / f) * ((-1.0) ** n) * wu[n]
        fac[n] = np.where(upper, hi, lo)
        f *= n + 1
    far = (np.abs(np.real(z)) >= CAUCHY_ASYMP) & (np.abs(np.imag(z)) <= 1e-8)
    if np.any(far):
        flat = fac.reshape(nmax + 1, -1)
        zf = z.reshape(-1)
        uf = np.asarray(upper).reshape(-1)
        for i in np.nonzero(far.reshape(-1))[0]:
            flat[:, i] = _cauchy_gauss_far(nmax, complex(zf[i]), bool(uf[i]))
    return fac


CAUCHY_ASYMP = 6.5


def _cauchy_gauss_far(nmax, z, upper):
    """Boundary values of C_n at large near-real z: principal value by the
    asymptotic series sum_m C(n+m, n) gamma_m / z^(n+m+1) (truncated at
    the first non-decreasing term), plus the sided distributional part
    +- i pi (-1)^n q_n(x) e^(-x^2) / n! from 1/(x -+ i0)^(n+1)."""
    x = np.real(z)
    g = gauss_moments(120)
    q = gauss_poly_derivatives(0, nmax)
    out = np.empty(nmax + 1, dtype=complex)
    e = np.exp(-x * x)
    f = 1.0
    for n in range(nmax + 1):
        acc = 0j
        prev = np.inf
        zp = z ** (-(n + 1))
        for m in range(0, 121, 2):
            t = math.comb(n + m, n) * g[m] * zp
            if abs(t) >= prev or abs(t) <= 1e-20 * abs(acc):
                break
            acc += t
            prev = abs(t)
            zp /= z * z
        sgn = -1.0 if upper else 1.0
        out[n] = acc + sgn * 1j * np.pi * ((-1.0) ** n) \
            * polyval_ascending(q[n], x) * e / f
        f *= n + 1
    return out


def gauss_moments(mmax):
    """gamma_m = integral u^m exp(-u^2) du for m = 0..mmax."""
    g = np.zeros(mmax + 1)
    g[0] = SQRT_PI
    for m in range(2, mmax + 1, 2):
        g[m] = g[m - 2] * (m - 1) / 2.0
    return g


def gauss_moment_cauchy(nmax, mmax, z, side=-1):
    """F[n, m] = integral exp(-u^2) u^m / (z - u)^(n+1) du for
    n = 0..nmax, m = 0..mmax, via F[n, m] = z F[n, m-1] - F[n-1, m-1]."""
    z = complex(z)
    C = cauchy_gauss_tower(nmax, z, side)
    g = gauss_moments(mmax)
    F = np.empty((nmax + 1, mmax + 1), dtype=complex)
    F[:, 0] = C
    for m in range(1, mmax + 1):
        F[0, m] = z * F[0, m - 1] - g[m - 1]
        for n in range(1, nmax + 1):
            F[n, m] = z * F[n, m - 1] - F[n - 1, m - 1]
    return F


def gauss_poly_derivatives(m, nmax):
    """Polynomial coefficient rows q_n with
    d^n/dx^n [x^m exp(-x^2)] = q_n(x) exp(-x^2), n = 0..nmax.

    Returned as a list of numpy coefficient arrays (ascending powers).
    Keeping the exp(-x^2) factor explicit preserves relative accuracy in
    the far tail."""
    q = np.zeros(m + 1)
    q[m] = 1.0
    rows = [q]
    for _ in range(nmax):
        p = rows[-1]
        dp = np.array([p[j] * j for j in range(1, len(p))]) if len(p) > 1 else np.zeros(0)
        new = np.zeros(len(p) + 1)
        new[: len(dp)] += dp
        new[1: len(p) + 1] -= 2.0 * p
        rows.append(new)
    return rows


def polyval_ascending(coeffs, x):
    acc = np.zeros_like(np.asarray(x, dtype=float))
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def half_gauss_oscillatory(amax, z, c):
    """G_a(z, c) = integral_0^inf r^a exp(-c r^2 - i z r) dr, a = 0..amax.

    G_0 through the Faddeeva function, then the stable forward relation
    G_{a+1} = (a G_{a-1} - i z G_a) / (2c), with G_1 from the boundary term.
    """
    sc = np.sqrt(c)
    z = np.asarray(z, dtype=complex)
    out = np.empty((amax + 1,) + z.shape, dtype=complex)
    out[0] = (SQRT_PI / (2.0 * sc)) * wofz(-z / (2.0 * sc))
    if amax >= 1:
        out[1] = (1.0 - 1j * z * out[0]) / (2.0 * c)
    for a in range(1, amax):
        out[a + 1] = (a * out[a - 1] - 1j * z * out[a]) / (2.0 * c)
    return out
