"""Rotation invariant matrix densities P(H), their reduced densities on
selected diagonal entries, and characteristic functions with derivative
jets at the origin.

Canonical weight convention: exp(-tr H^2 / scale) with scale = 1 as the
reference Gaussian.  The variance-mixed family uses the 1/(2t) form,
i.e. scale = 2t.
"""

import itertools
import json
import math

import numpy as np
from numpy.polynomial import hermite as nph

from .special import gauss_poly_derivatives

TRACE_POWER_CAP = 8
JET_ORDER_CAP = 64

FAMILIES = ("gaussian", "norm_dependent", "higher_trace")


def flat_gauss_norm(N, s):
    """Integral of exp(-tr H^2 / s) over Hermitean H with the flat
    Lebesgue measure on the independent real entries."""
    return (np.pi * s) ** (N * N / 2.0) / 2.0 ** (N * (N - 1) / 2.0)


class TaylorJet:
    """Truncated Taylor coefficients at the origin of one variable."""

    __slots__ = ("order", "coefficients")

    def __init__(self, coefficients):
        self.coefficients = np.asarray(coefficients, dtype=complex)
        self.order = len(self.coefficients) - 1

    def __getitem__(self, n):
        return self.coefficients[n]


class EnsembleSpec:
    """Declarative ensemble: dimension N plus one of the three families.

    gaussian: {scale}; norm_dependent: {spread}; higher_trace: {M1, M2, b}.
    The spread is a spike ("spike", t0), a table (t array, f array), or a
    callable with optional (lo, hi) support bounds.
    """

    def __init__(self, N, family, **params):
        if N < 1:
            raise ValueError("N must be >= 1")
        if family not in FAMILIES:
            raise ValueError(f"unknown family {family!r}")
        self.N = int(N)
        self.family = family
        self.params = params
        self._cache = {}
        if family == "higher_trace":
            M1, M2 = params["M1"], params["M2"]
            if M1 < 0 or M2 < 0:
                raise ValueError("trace powers must be nonnegative integers")
            if M1 == 1 and M2 == 1:
                raise ValueError("M1 = M2 = 1 makes the normalization vanish")
            if M1 % 2 == 1 and M2 % 2 == 1:
                raise ValueError("need M1 even or M2 even for a nonnegative weight")
        if family == "norm_dependent":
            total = self._spread_total()
            if abs(total - 1.0) > 1e-6:
                raise ValueError(f"spread integrates to {total}, not 1")

    # -- constructors -------------------------------------------------------

    @classmethod
    def gaussian(cls, N, scale=1.0):
        if scale <= 0:
            raise ValueError("scale must be positive")
        return cls(N, "gaussian", scale=float(scale))

    @classmethod
    def norm_dependent(cls, N, spread):
        return cls(N, "norm_dependent", spread=spread)

    @classmethod
    def higher_trace(cls, N, M1, M2, b="auto"):
        return cls(N, "higher_trace", M1=int(M1), M2=int(M2), b=b)

    # -- serialization ------------------------------------------------------

    def to_json(self):
        d = {"N": self.N, "family": self.family}
        if self.family == "gaussian":
            d["scale"] = self.params["scale"]
        elif self.family == "higher_trace":
            d["M1"] = self.params["M1"]
            d["M2"] = self.params["M2"]
            d["b"] = self.params["b"]
        else:
            sp = self.params["spread"]
            if isinstance(sp, tuple) and isinstance(sp[0], str) and sp[0] == "spike":
                d["spread"] = {"type": "spike", "t0": sp[1]}
            elif isinstance(sp, tuple) and len(sp) == 2:
                d["spread"] = {"type": "table",
                               "t": list(np.asarray(sp[0], float)),
                               "f": list(np.asarray(sp[1], float))}
            else:
                raise ValueError("callable spreads are not serializable")
        return json.dumps(d)

    @classmethod
    def from_json(cls, text):
        d = json.loads(text)
        fam = d["family"]
        if fam == "gaussian":
            return cls.gaussian(d["N"], d.get("scale", 1.0))
        if fam == "higher_trace":
            return cls.higher_trace(d["N"], d["M1"], d["M2"], d.get("b", "auto"))
        if fam == "norm_dependent":
            sp = d["spread"]
            if sp["type"] == "spike":
                return cls.norm_dependent(d["N"], ("spike", float(sp["t0"])))
            if sp["type"] == "table":
                return cls.norm_dependent(
                    d["N"], (np.asarray(sp["t"], float), np.asarray(sp["f"], float)))
            raise ValueError(f"unknown spread type {sp['type']!r}")
        raise ValueError(f"unknown family {fam!r}")

    # -- spread helpers -----------------------------------------------------

    def _spread_nodes(self):
        """Discrete (t, weight) nodes with sum(w) ~ integral f dt = 1."""
        sp = self.params["spread"]
        if isinstance(sp, tuple) and isinstance(sp[0], str) and sp[0] == "spike":
            return np.array([sp[1]]), np.array([1.0])
        if isinstance(sp, tuple) and len(sp) == 2 and not callable(sp[0]) \
                and not isinstance(sp[0], str):
            t = np.asarray(sp[0], float)
            f = np.asarray(sp[1], float)
            if np.any(f < 0):
                raise ValueError("spread must be nonnegative")
            w = np.zeros_like(t)
            dt = np.diff(t)
            w[:-1] += 0.5 * dt
            w[1:] += 0.5 * dt
            return t, w * f
        func = sp[0] if isinstance(sp, tuple) else sp
        lo, hi = sp[1] if isinstance(sp, tuple) else (0.0, _spread_reach(func))
        x, gw = np.polynomial.legendre.leggauss(256)
        t = 0.5 * (hi - lo) * (x + 1.0) + lo
        return t, 0.5 * (hi - lo) * gw * np.array([func(v) for v in t])

    def _spread_total(self):
        t, w = self._spread_nodes()
        return float(np.sum(w))

    # -- higher-trace moments ----------------------------------------------

    def trace_poly(self, k):
        """Expectation of (tr H^M1)^M2 over the exp(-tr H^2) Gaussian with
        the first 2k diagonal entries held symbolic: dict mapping length-2k
        exponent tuples to coefficients.  k = 0 gives the full expectation."""
        key = ("poly", k)
        if key not in self._cache:
            self._cache[key] = _trace_power_poly(
                self.N, k, self.params["M1"], self.params["M2"])
        return self._cache[key]

    def full_moment(self):
        """Full Gaussian expectation of (tr H^M1)^M2."""
        M1, M2 = self.params["M1"], self.params["M2"]
        if M1 * M2 <= TRACE_POWER_CAP:
            return float(np.real(self.trace_poly(0)[()]))
        key = "moment_mc"
        if key not in self._cache:
            from .mc import sample_batch
            batch = sample_batch(EnsembleSpec.gaussian(self.N), 200000, seed=20240817)
            p = np.sum(batch.eigenvalues ** M1, axis=1) ** M2
            self._cache[key] = float(np.mean(p))
        return self._cache[key]

    def normalization_b(self):
        b = self.params["b"]
        if b == "auto":
            return 1.0 / (self.full_moment() * flat_gauss_norm(self.N, 1.0))
        return float(b)


def _spread_reach(func):
    hi = 1.0
    while func(hi) > 1e-12 and hi < 1e6:
        hi *= 2.0
    return hi


def _trace_power_poly(N, k, M1, M2):
    """Wick-contracted expansion of (tr H^M1)^M2 under exp(-tr H^2), with
    diagonal entries h_1..h_2k symbolic.

    Entry moments for this weight: diagonal E[h^2j] = (2j-1)!!/2^j,
    off-diagonal E[|H_nm|^2a] = a!/2^a with E[H_nm^2] = 0.
    """
    if M1 * M2 > TRACE_POWER_CAP:
        raise ValueError(f"M1*M2 = {M1 * M2} exceeds cap {TRACE_POWER_CAP}")
    if M1 == 0 or M2 == 0:
        return {(0,) * (2 * k): float(N) ** M2 if M1 == 0 else 1.0}
    nsym = 2 * k
    out = {}
    for idx in itertools.product(range(N), repeat=M1 * M2):
        diag = {}
        offd = {}
        ok = True
        for c in range(M2):
            cyc = idx[c * M1: (c + 1) * M1]
            for t in range(M1):
                i, j = cyc[t], cyc[(t + 1) % M1]
                if i == j:
                    diag[i] = diag.get(i, 0) + 1
                else:
                    offd[(i, j)] = offd.get((i, j), 0) + 1
        coeff = 1.0
        for (i, j), a in offd.items():
            if i < j:
                b = offd.get((j, i), 0)
                if a != b:
                    ok = False
                    break
                coeff *= math.factorial(a) / 2.0 ** a
        if not ok:
            continue
        exps = [0] * nsym
        for i, m in diag.items():
            if i < nsym:
                exps[i] = m
            else:
                if m % 2 == 1:
                    ok = False
                    break
                coeff *= _double_factorial(m - 1) / 2.0 ** (m // 2)
        if not ok:
            continue
        key = tuple(exps) if nsym else ()
        out[key] = out.get(key, 0.0) + coeff
    return out


def _double_factorial(n):
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


# ---------------------------------------------------------------------------
# Densities
# ---------------------------------------------------------------------------

def evaluate_density(spec, H):
    """Pointwise P(H), normalized, for a Hermitean matrix H."""
    H = np.asarray(H, dtype=complex)
    if H.shape != (spec.N, spec.N) or np.max(np.abs(H - H.conj().T)) > 1e-12:
        raise ValueError("H must be Hermitean of dimension N")
    tr2 = float(np.real(np.trace(H @ H)))
    N = spec.N
    if spec.family == "gaussian":
        s = spec.params["scale"]
        return np.exp(-tr2 / s) / flat_gauss_norm(N, s)
    if spec.family == "norm_dependent":
        t, w = spec._spread_nodes()
        return float(np.sum(w * np.exp(-tr2 / (2 * t)) / flat_gauss_norm(N, 2 * t)))
    M1, M2 = spec.params["M1"], spec.params["M2"]
    ev = np.linalg.eigvalsh(H)
    return spec.normalization_b() * np.sum(ev ** M1) ** M2 * np.exp(-tr2)


def reduced_terms(spec, k):
    """Separable expansion of the reduced density on 2k diagonals:
    P^red(h) = sum_terms coef * prod_j (pi v_j)^(-1/2) e^(-h_j^2/v_j) h_j^(m_j),
    returned as a list of (coef, [(v_j, m_j)] * 2k)."""
    n = 2 * k
    if spec.family == "gaussian":
        s = spec.params["scale"]
        return [(1.0, [(s, 0)] * n)]
    if spec.family == "norm_dependent":
        t, w = spec._spread_nodes()
        return [(float(wi), [(2.0 * ti, 0)] * n) for ti, wi in zip(t, w)]
    poly = spec.trace_poly(k)
    full = spec.full_moment()
    return [(c / full, [(1.0, m) for m in e]) for e, c in poly.items()]


def _wick_trace_words(words, pref, out):
    """Contract all Gaussian letters 'H' inside a tuple of cyclic trace
    words over the alphabet {'H', 'S'}, using E[H_ab H_cd] = d_ad d_bc / 2.

    A same-trace pairing splits the word, tr(U H V H) -> (1/2) tr(U) tr(V);
    a cross-trace pairing merges, tr(U H) tr(V1 H V2) -> (1/2) tr(U V2 V1).
    Fully contracted states accumulate into out keyed by the sorted tuple
    of surviving (all-'S') word lengths."""
    for wi, wrd in enumerate(words):
        if "H" in wrd:
            break
    else:
        key = tuple(sorted(len(w) for w in words))
        out[key] = out.get(key, 0.0) + pref
        return
    w = list(words[wi])
    hpos = w.index("H")
    w = w[hpos + 1:] + w[:hpos]
    rest = [words[j] for j in range(len(words)) if j != wi]
    for p, ch in enumerate(w):
        if ch == "H":
            new = [tuple(w[:p]), tuple(w[p + 1:])] + rest
            _wick_trace_words(tuple(new), pref * 0.5, out)
    for rj, r in enumerate(rest):
        rl = list(r)
        for p, ch in enumerate(rl):
            if ch == "H":
                merged = tuple(w + rl[p + 1:] + rl[:p])
                new = [merged] + [rest[j] for j in range(len(rest)) if j != rj]
                _wick_trace_words(tuple(new), pref * 0.5, out)


def characteristic_invariants(spec):
    """Invariant expansion of the trace-power characteristic function.

    For the weight (tr H^M1)^M2 exp(-tr H^2) the characteristic function
    is exp(-tr K^2/4) times the shifted Gaussian average
    E[(tr (H + iK/2)^M1)^M2], a polynomial in the invariants tr K^j.
    Returns {sorted tuple of trace orders: complex coefficient}; empty
    traces contribute factors of N and each tr K^j carries (i/2)^j.
    The expansion is not normalized; the constant term is the full
    moment E[(tr H^M1)^M2]."""
    key = "char_inv"
    if key in spec._cache:
        return spec._cache[key]
    M1, M2 = spec.params["M1"], spec.params["M2"]
    if M1 * M2 > TRACE_POWER_CAP:
        raise ValueError(f"M1*M2 = {M1 * M2} exceeds cap {TRACE_POWER_CAP}")
    if M1 == 0 or M2 == 0:
        res = {(): complex(spec.N) ** M2 if M1 == 0 else 1.0 + 0j}
        spec._cache[key] = res
        return res
    raw = {}
    choices = list(itertools.product("HS", repeat=M1))
    for combo in itertools.product(choices, repeat=M2):
        _wick_trace_words(tuple(combo), 1.0, raw)
    res = {}
    for lens, c in raw.items():
        coef = complex(c)
        js = []
        for L in lens:
            if L == 0:
                coef *= spec.N
            else:
                coef *= (0.5j) ** L
                js.append(L)
        k2 = tuple(sorted(js))
        res[k2] = res.get(k2, 0.0) + coef
    spec._cache[key] = res
    return res


def correlation_terms(spec, k):
    """Separable slot expansion consumed by the correlation routes.

    For the Gaussian and variance-mixed families this coincides with
    reduced_terms.  For the trace-power family the plain diagonal
    marginal is not the right convolution partner: the routes need the
    graded-trace form of the characteristic function, in which each
    invariant tr K^j becomes sum_p r_{p1}^j - sum_p r_{p2}^j.  Carrying
    a slot monomial r^a back to the diagonal variable gives a phase
    times the a-th derivative of the unit Gaussian: i^a on first-block
    slots and (-1)^a on second-block slots.  The odd-derivative terms
    are exactly where this differs from the marginal; for densities even
    in every second-block diagonal the two expansions agree."""
    if spec.family != "higher_trace":
        return reduced_terms(spec, k)
    key = ("corr_terms", k)
    if key in spec._cache:
        return spec._cache[key]
    M1, M2 = spec.params["M1"], spec.params["M2"]
    if M1 == 0 or M2 == 0:
        res = [(1.0 + 0j, [(1.0, 0)] * (2 * k))]
        spec._cache[key] = res
        return res
    inv = characteristic_invariants(spec)
    pi0 = inv.get((), 0.0)
    nslots = 2 * k
    # distribute each trace order over the 2k slots with graded signs
    acc = {}
    for js, c in inv.items():
        cur = {(0,) * nslots: c / pi0}
        for j in js:
            nxt = {}
            for e, v in cur.items():
                for s in range(nslots):
                    e2 = list(e)
                    e2[s] += j
                    e2 = tuple(e2)
                    sign = 1.0 if s < k else -1.0
                    nxt[e2] = nxt.get(e2, 0j) + sign * v
            cur = nxt
        for e, v in cur.items():
            acc[e] = acc.get(e, 0j) + v
    # slot transform: exponent a -> phase * q_a(h) e^{-h^2}, with q_a the
    # polynomial part of the a-th Gaussian derivative
    qcache = {}

    def qpoly(a):
        if a not in qcache:
            qcache[a] = gauss_poly_derivatives(0, a)[a]
        return qcache[a]

    terms = {}
    for e, v in acc.items():
        if v == 0:
            continue
        options = []
        for s, a in enumerate(e):
            phase = (1j) ** a if s < k else (-1.0) ** a
            q = qpoly(a)
            options.append([(phase * q[m], m) for m in range(len(q)) if q[m] != 0.0])
        for pick in itertools.product(*options):
            coef = v
            ms = []
            for c2, m in pick:
                coef *= c2
                ms.append(m)
            keym = tuple(ms)
            terms[keym] = terms.get(keym, 0j) + coef
    res = [(c, [(1.0, m) for m in ms]) for ms, c in terms.items() if c != 0]
    spec._cache[key] = res
    return res


def reduced_density(spec, h, k, method="closed-form", samples=None, seed=0):
    """P^red on the 2k selected diagonal entries; returns (value, error)."""
    h = np.asarray(h, dtype=float)
    if len(h) != 2 * k:
        raise ValueError("h must have length 2k")
    if 2 * k > spec.N:
        raise ValueError("need 2k <= N")
    if method == "mc":
        return _reduced_density_mc(spec, h, k, samples, seed)
    if method != "closed-form":
        raise ValueError(f"unknown method {method!r}")
    if spec.family == "higher_trace" and spec.params["M1"] * spec.params["M2"] > TRACE_POWER_CAP:
        return _reduced_density_mc(spec, h, k, samples or 10 ** 5, seed)
    total = 0.0
    for coef, slots in reduced_terms(spec, k):
        p = coef
        for hj, (v, m) in zip(h, slots):
            p *= (np.pi * v) ** -0.5 * np.exp(-hj * hj / v) * hj ** m
        total += p
    return float(total), 0.0


def _reduced_density_mc(spec, h, k, samples, seed):
    """Integrate the complement variables by sampling them from the
    exp(-tr H^2) Gaussian and averaging the conditional weight."""
    if samples is None or samples < 10 ** 3:
        raise ValueError("mc needs at least 10^3 samples")
    gauss = np.prod(np.pi ** -0.5 * np.exp(-h * h))
    if spec.family == "gaussian":
        s = spec.params["scale"]
        return float(np.prod((np.pi * s) ** -0.5 * np.exp(-h * h / s))), 0.0
    if spec.family == "norm_dependent":
        t, w = spec._spread_nodes()
        val = float(sum(
            wi * np.prod((2 * np.pi * ti) ** -0.5 * np.exp(-h * h / (2 * ti)))
            for ti, wi in zip(t, w)))
        return val, 0.0
    from .mc import sample_batch
    M1, M2 = spec.params["M1"], spec.params["M2"]
    rng = np.random.default_rng(seed)
    vals = np.empty(samples)
    chunk = 20000
    done = 0
    N = spec.N
    while done < samples:
        c = min(chunk, samples - done)
        A = rng.standard_normal((c, N, N)) + 1j * rng.standard_normal((c, N, N))
        Hm = (A + np.transpose(A, (0, 2, 1)).conj()) / np.sqrt(8.0)
        d = rng.standard_normal((c, N)) * np.sqrt(0.5)
        ii = np.arange(N)
        Hm[:, ii, ii] = d
        Hm[:, ii[: 2 * k], ii[: 2 * k]] = h
        ev = np.linalg.eigvalsh(Hm)
        vals[done: done + c] = np.sum(ev ** M1, axis=1) ** M2
        done += c
    mean = float(np.mean(vals))
    err = float(np.std(vals) / np.sqrt(samples))
    full = spec.full_moment()
    return gauss * mean / full, gauss * err / full


# ---------------------------------------------------------------------------
# Characteristic function and jets
# ---------------------------------------------------------------------------

def jet_mul(a, b, order):
    """Truncated product of Taylor coefficient arrays."""
    out = np.zeros(order + 1, dtype=complex)
    for i, ai in enumerate(a[: order + 1]):
        if ai == 0:
            continue
        hi = min(len(b), order + 1 - i)
        out[i: i + hi] += ai * np.asarray(b[:hi], dtype=complex)
    return out


def slot_phi(v, m, r):
    """Fourier transform of the normalized slot weight:
    integral (pi v)^(-1/2) e^(-h^2/v) h^m e^(ihr) dh
    = v^(m/2) (i/2)^m H_m(sqrt(v) r / 2) e^(-v r^2 / 4)."""
    r = np.asarray(r, dtype=complex)
    u = np.sqrt(v) * r / 2.0
    c = np.zeros(m + 1)
    c[m] = 1.0
    hm = nph.hermval(u, c)
    return v ** (m / 2.0) * (0.5j) ** m * hm * np.exp(-v * r * r / 4.0)


def slot_phi_jet(v, m, order):
    """Taylor coefficients of slot_phi(v, m, r) in r at 0."""
    if order > JET_ORDER_CAP:
        raise ValueError(f"jet order {order} exceeds cap {JET_ORDER_CAP}")
    # H_m(sqrt(v) r / 2) as ascending powers of r
    hc = nph.herm2poly([0.0] * m + [1.0]) if m else np.array([1.0])
    poly = np.array([hc[j] * (np.sqrt(v) / 2.0) ** j for j in range(len(hc))],
                    dtype=complex)
    # e^(-v r^2/4) series
    g = np.zeros(order + 1, dtype=complex)
    for j in range(0, order + 1, 2):
        g[j] = (-v / 4.0) ** (j // 2) / math.factorial(j // 2)
    out = jet_mul(poly, g, order)
    return v ** (m / 2.0) * (0.5j) ** m * out


def characteristic_function(spec, r1, r2_jet_order):
    """Fourier transform of the reduced density, evaluated at the first-slot
    arguments r1 with all second-slot arguments at 0; returns
    (value, [TaylorJet per second-slot variable]).

    For the trace-power family the transform is assembled in its natural
    shape, a Gaussian factor times a symmetric polynomial in the source
    invariants sum_s r_s^j, with jets by truncated-series products."""
    r1 = np.asarray(r1, dtype=float)
    k = len(r1)
    order = r2_jet_order
    if spec.family == "higher_trace":
        return _characteristic_higher_trace(spec, r1, order)
    terms = reduced_terms(spec, k)
    value = 0j
    jets = [np.zeros(order + 1, dtype=complex) for _ in range(k)]
    for coef, slots in terms:
        first = [slot_phi(v, m, r1[p]) for p, (v, m) in enumerate(slots[:k])]
        second = [slot_phi_jet(v, m, order) for (v, m) in slots[k:]]
        base = coef * np.prod(first)
        zeros = np.array([s[0] for s in second])
        value += base * np.prod(zeros)
        for p in range(k):
            rest = np.prod(np.delete(zeros, p)) if k > 1 else 1.0
            jets[p] = jets[p] + base * rest * second[p]
    return complex(value), [TaylorJet(j) for j in jets]


def _characteristic_higher_trace(spec, r1, order):
    """Trace-power characteristic function on diagonal sources:
    e^(-sum r^2/4) times the invariant polynomial with tr K^j read as
    sum_s r_s^j over the 2k source slots.  The first k slots carry the
    values r1, the remaining k are expanded as jets at 0, one at a time."""
    inv = characteristic_invariants(spec)
    pi0 = inv.get((), 0.0)
    k = len(r1)
    pw = {}

    def power_sum(j):
        # sum_p r1_p^j; the active jet slot adds t^j on top
        if j not in pw:
            pw[j] = complex(np.sum(r1 ** float(j)))
        return pw[j]

    # polynomial part as a jet in the active second-slot variable t
    poly = np.zeros(order + 1, dtype=complex)
    for js, c in inv.items():
        term = np.zeros(order + 1, dtype=complex)
        term[0] = c / pi0
        for j in js:
            factor = np.zeros(order + 1, dtype=complex)
            factor[0] = power_sum(j)
            if j <= order:
                factor[j] += 1.0
            term = jet_mul(term, factor, order)
        poly += term
    # Gaussian factor: e^(-sum r1^2/4) times the e^(-t^2/4) series
    gauss = np.zeros(order + 1, dtype=complex)
    for j in range(0, order + 1, 2):
        gauss[j] = (-0.25) ** (j // 2) / math.factorial(j // 2)
    gauss *= np.exp(-np.sum(r1 * r1) / 4.0)
    jet = jet_mul(poly, gauss, order)
    value = complex(jet[0])
    return value, [TaylorJet(jet.copy()) for _ in range(k)]


def superspace_density_norm_dependent(spec, s):
    """Q(s) = integral f(t) 2^(k(k-1)) exp(-(1/2t) trg s^2) dt for the
    variance-mixed family, with trg s^2 = sum s1^2 + sum s2^2 under the
    rotated second-block convention.  s holds the 2k eigenvalues."""
    if spec.family != "norm_dependent":
        raise ValueError("spec must be norm_dependent")
    s = np.asarray(s, dtype=float)
    if len(s) % 2:
        raise ValueError("s must have even length 2k")
    k = len(s) // 2
    trg2 = float(np.sum(s * s))
    t, w = spec._spread_nodes()
    return float(2.0 ** (k * (k - 1)) * np.sum(w * np.exp(-trg2 / (2.0 * t))))
