"""Anti-normal operator polynomials and displacement matrix elements.

Everything the diagonalization engine needs to write H in the Bogoliubov
mode c (a = c cosh r̄ + c† sinh r̄) is assembled here:

* ``OperatorPoly``: finite sums Σ coeff · c^m c†^n in anti-normal order
  (annihilators left of creators), with exact reordering products via
  [c, c†] = 1 and binomial displacement c → c + d.
* ``antinormal_coeffs``: the Hamiltonian (and the λ tilt) as such a
  polynomial, exact to the quartic degree of H.
* Displacement operator matrix elements ⟨p|D(α)|q⟩ in a Fock basis via
  the generalized-Laguerre closed form, evaluated with the three-term
  degree recurrence and log-space factorial ratios so that arbitrary
  index/argument combinations neither overflow nor lose the exponential
  prefactor.
"""

from __future__ import annotations

import math
from math import comb

import numpy as np
from scipy.special import gammaln

from .model import ModelParams

__all__ = [
    "OperatorPoly",
    "antinormal_coeffs",
    "number_poly",
    "quadrature_polys",
    "displacement_element",
    "displacement_matrix",
]

# factorials up to the largest degree appearing in products of quartics
_FACT = [math.factorial(k) for k in range(9)]


class OperatorPoly:
    """Polynomial Σ coeff · c^m c†^n in anti-normal order.

    Backed by a dict {(m, n): coeff} with real coefficients. Products are
    re-ordered exactly with c†^n c^m = Σ_k (−1)^k k! C(n,k) C(m,k) c^{m−k} c†^{n−k}.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms: dict = dict(terms) if terms else {}

    @classmethod
    def annihilator(cls) -> "OperatorPoly":
        return cls({(1, 0): 1.0})

    @classmethod
    def creator(cls) -> "OperatorPoly":
        return cls({(0, 1): 1.0})

    @classmethod
    def constant(cls, value: float) -> "OperatorPoly":
        return cls({(0, 0): float(value)})

    def copy(self) -> "OperatorPoly":
        return OperatorPoly(self.terms)

    def __add__(self, other: "OperatorPoly") -> "OperatorPoly":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0.0) + v
        return OperatorPoly({k: v for k, v in out.items() if v != 0.0})

    def __sub__(self, other: "OperatorPoly") -> "OperatorPoly":
        return self + other * (-1.0)

    def __mul__(self, other):
        if isinstance(other, OperatorPoly):
            out: dict = {}
            for (m1, n1), c1 in self.terms.items():
                for (m2, n2), c2 in other.terms.items():
                    for k in range(min(n1, m2) + 1):
                        key = (m1 + m2 - k, n1 + n2 - k)
                        val = c1 * c2 * ((-1) ** k) * _FACT[k] * comb(n1, k) * comb(m2, k)
                        out[key] = out.get(key, 0.0) + val
            return OperatorPoly({k: v for k, v in out.items() if v != 0.0})
        out = {k: v * other for k, v in self.terms.items()}
        return OperatorPoly(out)

    __rmul__ = __mul__

    def displaced(self, d, dtype=float) -> "OperatorPoly":
        """c → c + d, c† → c† + d (real d), re-expanded in anti-normal order.

        With dtype=np.longdouble the binomial accumulation runs in extended
        precision; this is where the classical-energy cancellation happens
        for macroscopic displacements.
        """
        d = dtype(d)
        out: dict = {}
        for (m, n), c in self.terms.items():
            c = dtype(c)
            for r in range(m + 1):
                wr = c * comb(m, r) * d ** (m - r)
                for s in range(n + 1):
                    key = (r, s)
                    out[key] = out.get(key, dtype(0.0)) + wr * comb(n, s) * d ** (n - s)
        return OperatorPoly(out)

    def two_sided_displaced(self, d_left, d_right, dtype=float) -> "OperatorPoly":
        """Displace the c factors by d_left and the c† factors by d_right.

        Needed for cross-sector elements, where the left and right basis
        states carry opposite displacements.
        """
        dl, dr = dtype(d_left), dtype(d_right)
        out: dict = {}
        for (m, n), c in self.terms.items():
            c = dtype(c)
            for r in range(m + 1):
                wr = c * comb(m, r) * dl ** (m - r)
                for s in range(n + 1):
                    key = (r, s)
                    out[key] = out.get(key, dtype(0.0)) + wr * comb(n, s) * dr ** (n - s)
        return OperatorPoly(out)

    def shifted_constant(self, delta, dtype=float) -> "OperatorPoly":
        """Return a copy with ``delta`` added to the (0, 0) coefficient."""
        out = dict(self.terms)
        out[(0, 0)] = dtype(out.get((0, 0), 0.0)) + dtype(delta)
        return OperatorPoly(out)

    def is_hermitian(self, tol: float = 1e-12) -> bool:
        """Term (m, n, c) must be mirrored by (n, m, c)."""
        scale = max((abs(v) for v in self.terms.values()), default=1.0)
        for (m, n), c in self.terms.items():
            if abs(c - self.terms.get((n, m), 0.0)) > tol * scale:
                return False
        return True

    def max_degree(self) -> int:
        return max((m + n for m in self.terms), default=0) if self.terms else 0

    def parity_even(self, tol: float = 0.0) -> bool:
        return all((m + n) % 2 == 0 for (m, n), c in self.terms.items() if abs(c) > tol)

    def __repr__(self):
        inner = ", ".join(f"c^{m} cd^{n}: {c:.6g}" for (m, n), c in sorted(self.terms.items()))
        return f"OperatorPoly({{{inner}}})"


def _mode_operators(r_bar: float):
    ch, sh = math.cosh(r_bar), math.sinh(r_bar)
    a = OperatorPoly({(1, 0): ch, (0, 1): sh})
    ad = OperatorPoly({(0, 1): ch, (1, 0): sh})
    return a, ad


def antinormal_coeffs(params: ModelParams, r_bar: float) -> OperatorPoly:
    """H (plus the λ tilt) in anti-normal order of c, with a = c cosh r̄ + c† sinh r̄.

    Exact finite table, maximum total degree 4. The quartic coefficient is
    1/2L, so L = inf drops it cleanly.
    """
    if not math.isfinite(r_bar):
        raise ValueError("r_bar must be finite")
    a, ad = _mode_operators(r_bar)
    H = ad * a - (params.epsilon / 2.0) * (ad * ad + a * a)
    quartic_coeff = 0.0 if math.isinf(params.L) else 1.0 / (2.0 * params.L)
    if quartic_coeff:
        H = H + quartic_coeff * (ad * (ad * (a * a)))
    if params.lam:
        # V = -(lam/2)(a + a†) = -(lam/2) e^{r̄} (c + c†)
        H = H - (params.lam / 2.0) * (a + ad)
    return H


def number_poly(r_bar: float) -> OperatorPoly:
    """a†a in anti-normal order of the Bogoliubov mode."""
    a, ad = _mode_operators(r_bar)
    return ad * a


def quadrature_polys(r_bar: float):
    """(x, x²) with x = a† + a = e^{r̄}(c + c†), in anti-normal order."""
    er = math.exp(r_bar)
    x = OperatorPoly({(1, 0): er, (0, 1): er})
    x2 = OperatorPoly({(2, 0): er * er, (0, 2): er * er,
                       (1, 1): 2.0 * er * er, (0, 0): -er * er})
    return x, x2


# ---------------------------------------------------------------------------
# displacement matrix elements
# ---------------------------------------------------------------------------

def _laguerre_log_table(z: float, n_deg: int, n_ord: int):
    """log|L_q^{(a)}(z)| and signs for q ≤ n_deg, a ≤ n_ord.

    Three-term recurrence in the degree q, run for all orders a at once.
    The two live rows are rescaled whenever they leave [1e-100, 1e100], so
    arbitrarily large indices and arguments neither overflow nor underflow;
    the rescaling is folded into the returned log magnitudes.
    """
    a = np.arange(n_ord + 1, dtype=float)
    vals = np.zeros((n_deg + 1, n_ord + 1))
    offs = np.zeros(n_deg + 1)
    vals[0] = 1.0
    if n_deg >= 1:
        vals[1] = 1.0 + a - z
    ln_renorm = 100.0 * math.log(10.0)
    for q in range(2, n_deg + 1):
        # consecutive rows always share the same offset (renorms touch both)
        vals[q] = ((2.0 * q - 1.0 + a - z) * vals[q - 1]
                   - (q - 1.0 + a) * vals[q - 2]) / q
        offs[q] = offs[q - 1]
        m = np.abs(vals[q]).max()
        if m > 1e100:
            vals[q] *= 1e-100
            vals[q - 1] *= 1e-100
            offs[q] += ln_renorm
            offs[q - 1] += ln_renorm
        elif 0.0 < m < 1e-100:
            vals[q] *= 1e100
            vals[q - 1] *= 1e100
            offs[q] -= ln_renorm
            offs[q - 1] -= ln_renorm
    with np.errstate(divide="ignore"):
        logmag = np.log(np.abs(vals)) + offs[:, None]
    return logmag, np.sign(vals)


def displacement_matrix(alpha_c: float, n_max: int) -> np.ndarray:
    """Matrix ⟨p|D(α)|q⟩, p, q ≤ n_max, for a real displacement amplitude.

    Closed form for p ≥ q: e^{−α²/2} sqrt(q!/p!) α^{p−q} L_q^{(p−q)}(α²);
    the p < q triangle follows from D(α)† = D(−α), i.e. a (−1)^{q−p} flip.
    All factors are combined in log space; entries whose true magnitude
    underflows double precision come out as exactly 0.
    """
    N = n_max
    if alpha_c == 0.0:
        return np.eye(N + 1)
    z = alpha_c * alpha_c
    logmag, sign = _laguerre_log_table(z, N, N)
    lg = gammaln(np.arange(N + 1) + 1.0)
    p = np.arange(N + 1)[:, None]
    q = np.arange(N + 1)[None, :]
    k = p - q
    upper = k >= 0
    kk = np.where(upper, k, 0)  # order index, junk on the lower triangle
    qq = np.broadcast_to(q, (N + 1, N + 1))
    # log|entry| = -z/2 + (log q! - log p!)/2 + k log|alpha| + log|L_q^{(k)}(z)|
    logS = -0.5 * z + 0.5 * (lg[q] - lg[p]) + kk * math.log(abs(alpha_c)) \
        + logmag[qq, kk]
    sgn = sign[qq, kk]
    if alpha_c < 0.0:
        sgn = sgn * np.where(kk % 2 == 0, 1.0, -1.0)
    with np.errstate(over="ignore"):
        D = np.where(upper, sgn * np.exp(np.where(upper, logS, -np.inf)), 0.0)
    flip = np.where((q - p) % 2 == 0, 1.0, -1.0)
    return np.where(upper, D, flip * D.T)


def displacement_element(p: int, q: int, alpha_c: float) -> float:
    """Single matrix element ⟨p|D(α)|q⟩ for real α (see displacement_matrix)."""
    if p < 0 or q < 0:
        raise ValueError("indices must be non-negative")
    if alpha_c == 0.0:
        return 1.0 if p == q else 0.0
    if p < q:
        return ((-1) ** (q - p)) * displacement_element(q, p, alpha_c)
    z = alpha_c * alpha_c
    logmag, sign = _laguerre_log_table(z, q, p - q)
    lgq = gammaln(q + 1.0)
    lgp = gammaln(p + 1.0)
    logS = -0.5 * z + 0.5 * (lgq - lgp) + (p - q) * math.log(abs(alpha_c)) \
        + logmag[q, p - q]
    s = sign[q, p - q]
    if alpha_c < 0.0 and (p - q) % 2 == 1:
        s = -s
    if logS < -745.0:
        return 0.0  # documented underflow to exactly 0
    return float(s * math.exp(logS))
