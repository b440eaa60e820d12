"""Exact arithmetic in a finite exterior algebra with complex coefficients,
plus the dual matrix pair (K, B) and the trace identity tr K^m = trg B^m.

Generators are indexed 0..G-1.  For a dual pair with k source vectors and
dimension N there are G = 2*k*N generators: first all zeta_{p,n} (p outer,
n inner, index p*N + n), then all conjugate generators zeta*_{p,n} at
index k*N + p*N + n.  Monomials are stored as G-bit masks with the
generators in ascending index order; coefficients are complex floats.
"""

import numpy as np

GENERATOR_BUDGET = 24


class GrassmannElement:
    """Sparse element of the exterior algebra: dict {bitmask: coefficient}."""

    __slots__ = ("ngen", "terms")

    def __init__(self, ngen, terms=None):
        self.ngen = ngen
        self.terms = {}
        if terms:
            for mask, c in terms.items():
                if c != 0:
                    self.terms[mask] = complex(c)

    @classmethod
    def scalar(cls, ngen, value):
        return cls(ngen, {0: value} if value != 0 else {})

    @classmethod
    def generator(cls, ngen, index, coeff=1.0):
        return cls(ngen, {1 << index: coeff})

    def copy(self):
        e = GrassmannElement(self.ngen)
        e.terms = dict(self.terms)
        return e

    def scalar_part(self):
        return self.terms.get(0, 0j)

    def __add__(self, other):
        other = _coerce(other, self.ngen)
        out = dict(self.terms)
        for mask, c in other.terms.items():
            v = out.get(mask, 0j) + c
            if v == 0:
                out.pop(mask, None)
            else:
                out[mask] = v
        return GrassmannElement(self.ngen, out)

    __radd__ = __add__

    def __neg__(self):
        return GrassmannElement(self.ngen, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_coerce(other, self.ngen))

    def __mul__(self, other):
        if isinstance(other, (int, float, complex)):
            return GrassmannElement(self.ngen, {m: c * other for m, c in self.terms.items()})
        return ge_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, float, complex)):
            return self.__mul__(other)
        return ge_mul(_coerce(other, self.ngen), self)

    def max_abs_coeff(self):
        return max((abs(c) for c in self.terms.values()), default=0.0)

    def __repr__(self):
        return f"GrassmannElement({self.ngen}, {self.terms})"


def _coerce(x, ngen):
    if isinstance(x, GrassmannElement):
        return x
    return GrassmannElement.scalar(ngen, x)


def _merge_sign(m1, m2):
    """Koszul sign for multiplying ordered monomials m1 * m2 (disjoint masks).

    Each generator bit j of m2 must cross every generator of m1 with a
    higher index, picking up one transposition per crossing.
    """
    swaps = 0
    m = m2
    while m:
        j = (m & -m).bit_length() - 1
        swaps += (m1 >> (j + 1)).bit_count()
        m &= m - 1
    return -1 if swaps & 1 else 1


def ge_mul(a, b):
    """Product of two algebra elements with Koszul signs."""
    if a.ngen != b.ngen:
        raise ValueError("elements live over different generator universes")
    out = {}
    for m1, c1 in a.terms.items():
        for m2, c2 in b.terms.items():
            if m1 & m2:
                continue
            s = _merge_sign(m1, m2)
            mask = m1 | m2
            v = out.get(mask, 0j) + s * c1 * c2
            if v == 0:
                out.pop(mask, None)
            else:
                out[mask] = v
    return GrassmannElement(a.ngen, out)


def ge_conjugate(a):
    """Antilinear conjugation: reverse each monomial and swap every
    generator with its conjugate partner (index +- G/2).  Applied twice
    it is the identity."""
    g = a.ngen
    half = g // 2
    out = {}
    for mask, c in a.terms.items():
        bits = []
        m = mask
        while m:
            j = (m & -m).bit_length() - 1
            bits.append(j)
            m &= m - 1
        mapped = [(j + half) if j < half else (j - half) for j in reversed(bits)]
        # bubble sort to ascending order, tracking the permutation sign
        sign = 1
        for i in range(1, len(mapped)):
            j = i
            while j > 0 and mapped[j - 1] > mapped[j]:
                mapped[j - 1], mapped[j] = mapped[j], mapped[j - 1]
                sign = -sign
                j -= 1
        new_mask = 0
        for j in mapped:
            new_mask |= 1 << j
        v = out.get(new_mask, 0j) + sign * np.conj(c)
        if v == 0:
            out.pop(new_mask, None)
        else:
            out[new_mask] = v
    return GrassmannElement(g, out)


def _mat_mul(A, B, ngen):
    n = len(A)
    m = len(B[0])
    inner = len(B)
    out = [[GrassmannElement(ngen) for _ in range(m)] for _ in range(n)]
    for i in range(n):
        for j in range(m):
            acc = GrassmannElement(ngen)
            for l in range(inner):
                acc = acc + ge_mul(A[i][l], B[l][j])
            out[i][j] = acc
    return out


class AlgebraMatrix:
    """Square matrix with GrassmannElement entries (the ordinary-space K)."""

    def __init__(self, entries, ngen):
        self.entries = entries
        self.ngen = ngen
        self.dim = len(entries)

    def conjugate_transpose(self):
        n = self.dim
        out = [[ge_conjugate(self.entries[j][i]) for j in range(n)] for i in range(n)]
        return AlgebraMatrix(out, self.ngen)


class SuperMatrixAlg:
    """2k x 2k supermatrix in boson-fermion block order (the dual B)."""

    def __init__(self, entries, k, ngen):
        self.entries = entries
        self.k = k
        self.ngen = ngen
        self.dim = 2 * k


def build_dual_pair(zvals, k, N, L):
    """Build K = A L A^dagger and B = L^(1/2) A^dagger A L^(1/2).

    zvals: sequence of k length-N complex vectors; L: sequence of k signs.
    The square root of a -1 metric entry is taken as +i.
    """
    G = 2 * k * N
    if G > GENERATOR_BUDGET:
        raise ResourceWarning(f"generator count {G} exceeds budget {GENERATOR_BUDGET}")
    L = list(L)
    if len(L) != k or any(s not in (1, -1) for s in L):
        raise ValueError("metric must be k signs in {+1,-1}")
    z = [np.asarray(v, dtype=complex) for v in zvals]

    def zeta(p, n):
        return 1 << (p * N + n)

    def zetac(p, n):
        return 1 << (k * N + p * N + n)

    # K_{nm} = sum_p L_p z_{p,n} conj(z_{p,m}) - sum_p zeta_{p,n} zeta*_{p,m}
    K = []
    for n in range(N):
        row = []
        for m in range(N):
            terms = {}
            sc = sum(L[p] * z[p][n] * np.conj(z[p][m]) for p in range(k))
            if sc != 0:
                terms[0] = sc
            for p in range(k):
                mask = zeta(p, n) | zetac(p, m)
                s = _merge_sign(zeta(p, n), zetac(p, m))
                terms[mask] = terms.get(mask, 0j) - s * 1.0
            row.append(GrassmannElement(G, terms))
        K.append(row)

    # A^dagger A blocks, then sandwich with L^(1/2)
    sqrtL = [1.0 if s == 1 else 1j for s in L] + [1.0] * k
    B = [[None] * (2 * k) for _ in range(2 * k)]
    for p in range(k):
        for q in range(k):
            # boson-boson: z_p^dag z_q (scalar)
            B[p][q] = GrassmannElement.scalar(G, sqrtL[p] * np.vdot(z[p], z[q]) * sqrtL[q])
            # boson-fermion: z_p^dag zeta_q
            terms = {}
            for n in range(N):
                c = np.conj(z[p][n])
                if c != 0:
                    terms[zeta(q, n)] = terms.get(zeta(q, n), 0j) + c
            B[p][k + q] = GrassmannElement(G, terms) * (sqrtL[p] * sqrtL[k + q])
            # fermion-boson: -zeta_p^dag z_q
            terms = {}
            for n in range(N):
                c = z[q][n]
                if c != 0:
                    terms[zetac(p, n)] = terms.get(zetac(p, n), 0j) - c
            B[k + p][q] = GrassmannElement(G, terms) * (sqrtL[k + p] * sqrtL[q])
            # fermion-fermion: -zeta_p^dag zeta_q
            terms = {}
            for n in range(N):
                mask = zetac(p, n) | zeta(q, n)
                s = _merge_sign(zetac(p, n), zeta(q, n))
                terms[mask] = terms.get(mask, 0j) - s * 1.0
            B[k + p][k + q] = GrassmannElement(G, terms) * (sqrtL[k + p] * sqrtL[k + q])

    return AlgebraMatrix(K, G), SuperMatrixAlg(B, k, G)


def _power(entries, m, ngen):
    out = entries
    for _ in range(m - 1):
        out = _mat_mul(out, entries, ngen)
    return out


def tr_power(K, m):
    """Ordinary trace of K^m over the algebra."""
    if m < 1:
        raise ValueError("m must be >= 1")
    P = _power(K.entries, m, K.ngen)
    acc = GrassmannElement(K.ngen)
    for i in range(K.dim):
        acc = acc + P[i][i]
    return acc


def strg_power(B, m):
    """Supertrace of B^m: trace of the boson block minus the fermion block."""
    if m < 1:
        raise ValueError("m must be >= 1")
    P = _power(B.entries, m, B.ngen)
    acc = GrassmannElement(B.ngen)
    for p in range(B.k):
        acc = acc + P[p][p]
    for p in range(B.k):
        acc = acc - P[B.k + p][B.k + p]
    return acc


def verify_duality(k, N, m_max, seed):
    """Max coefficient deviation of tr K^m - trg B^m for m = 1..m_max."""
    rng = np.random.default_rng(seed)
    z = [rng.standard_normal(N) + 1j * rng.standard_normal(N) for _ in range(k)]
    L = [int(s) for s in rng.choice([1, -1], size=k)]
    K, B = build_dual_pair(z, k, N, L)
    report = {}
    for m in range(1, m_max + 1):
        diff = tr_power(K, m) - strg_power(B, m)
        report[m] = diff.max_abs_coeff()
    return report
