"""Truncated harmonic Fourier series on the circle.

A CoeffVector holds coefficients c_n for |n| <= N in the harmonic basis
e_n(z) = z^n (n >= 0), conj(z)^|n| (n < 0).  A GridFunction holds complex
samples at M equispaced boundary nodes theta_k = 2*pi*k/M with uniform
quadrature weight 2*pi/M.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .measures import RadialMeasure, log_moment_array, moment_array


@dataclass(frozen=True)
class CoeffVector:
    n_max: int
    coeffs: np.ndarray  # length 2*n_max+1, index n+n_max

    def __post_init__(self):
        c = np.asarray(self.coeffs, dtype=complex)
        if self.n_max < 0 or c.shape != (2 * self.n_max + 1,):
            raise ValueError("coeffs must have length 2*n_max+1")
        object.__setattr__(self, "coeffs", c)

    def __getitem__(self, n: int) -> complex:
        if abs(n) > self.n_max:
            return 0.0 + 0.0j
        return complex(self.coeffs[n + self.n_max])

    @property
    def ns(self) -> np.ndarray:
        return np.arange(-self.n_max, self.n_max + 1)

    @classmethod
    def zero(cls, n_max: int) -> "CoeffVector":
        return cls(n_max, np.zeros(2 * n_max + 1, dtype=complex))

    @classmethod
    def basis(cls, n: int, n_max: int | None = None) -> "CoeffVector":
        """The basis element e_n."""
        n_max = abs(n) if n_max is None else n_max
        c = np.zeros(2 * n_max + 1, dtype=complex)
        c[n + n_max] = 1.0
        return cls(n_max, c)

    @classmethod
    def from_map(cls, vals: dict, n_max: int) -> "CoeffVector":
        c = np.zeros(2 * n_max + 1, dtype=complex)
        for n, v in vals.items():
            if abs(n) > n_max:
                raise ValueError(f"index {n} outside [-{n_max}, {n_max}]")
            c[n + n_max] = v
        return cls(n_max, c)

    def pad_to(self, n_max: int) -> "CoeffVector":
        if n_max < self.n_max:
            raise ValueError("cannot shrink a coefficient vector")
        k = n_max - self.n_max
        return CoeffVector(n_max, np.pad(self.coeffs, (k, k)))

    def __add__(self, other: "CoeffVector") -> "CoeffVector":
        n = max(self.n_max, other.n_max)
        return CoeffVector(n, self.pad_to(n).coeffs + other.pad_to(n).coeffs)

    def __sub__(self, other: "CoeffVector") -> "CoeffVector":
        n = max(self.n_max, other.n_max)
        return CoeffVector(n, self.pad_to(n).coeffs - other.pad_to(n).coeffs)

    def __mul__(self, scalar: complex) -> "CoeffVector":
        return CoeffVector(self.n_max, self.coeffs * scalar)

    __rmul__ = __mul__

    def is_zero(self, tol: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.coeffs)) <= tol)

    def is_analytic(self, tol: float = 0.0) -> bool:
        return bool(np.max(np.abs(self.coeffs[: self.n_max]), initial=0.0) <= tol)

    def to_dict(self) -> dict:
        return {
            "n_max": self.n_max,
            "re": self.coeffs.real.tolist(),
            "im": self.coeffs.imag.tolist(),
        }

    @classmethod
    def from_dict(cls, doc: dict) -> "CoeffVector":
        return cls(int(doc["n_max"]), np.array(doc["re"]) + 1j * np.array(doc["im"]))


@dataclass(frozen=True)
class GridFunction:
    samples: np.ndarray  # complex values at theta_k = 2*pi*k/M

    def __post_init__(self):
        s = np.asarray(self.samples, dtype=complex)
        if s.ndim != 1 or s.size < 1:
            raise ValueError("samples must be a nonempty 1-d array")
        object.__setattr__(self, "samples", s)

    @property
    def m(self) -> int:
        return self.samples.size

    @property
    def thetas(self) -> np.ndarray:
        return 2.0 * math.pi * np.arange(self.m) / self.m


def synthesize(u: CoeffVector, m: int) -> GridFunction:
    """Samples of sum_n c_n e^{i n theta_k} at the M equispaced nodes."""
    if m < 2 * u.n_max + 1:
        raise ValueError(f"m={m} too small for degree {u.n_max}; need m >= {2 * u.n_max + 1}")
    spread = np.zeros(m, dtype=complex)
    for n, c in zip(u.ns, u.coeffs):
        spread[n % m] += c
    return GridFunction(np.fft.ifft(spread) * m)


def analyze(g: GridFunction, n_max: int) -> CoeffVector:
    """Trapezoidal-rule Fourier coefficients; exact for degree <= (m-1)/2."""
    if n_max > (g.m - 1) // 2:
        raise ValueError(f"n_max={n_max} too large for m={g.m} samples")
    hat = np.fft.fft(g.samples) / g.m
    ns = np.arange(-n_max, n_max + 1)
    return CoeffVector(n_max, hat[ns % g.m])


def _synthesize_direct(u: CoeffVector, m: int) -> GridFunction:
    """Direct-summation oracle for the fast transform."""
    theta = 2.0 * math.pi * np.arange(m) / m
    vals = np.zeros(m, dtype=complex)
    for n, c in zip(u.ns, u.coeffs):
        vals += c * np.exp(1j * n * theta)
    return GridFunction(vals)


def evaluate(u: CoeffVector, z: complex) -> complex:
    """sum c_n e_n(z) for |z| < 1."""
    if abs(z) >= 1.0:
        raise ValueError(f"evaluation point |z|={abs(z)} outside the open disk")
    val = 0.0 + 0.0j
    zb = np.conj(z)
    for n in range(u.n_max, 0, -1):
        val = (val + u[n]) * z
    val += u[0]
    neg = 0.0 + 0.0j
    for n in range(u.n_max, 0, -1):
        neg = (neg + u[-n]) * zb
    return complex(val + neg)


def poisson_dilate(u: CoeffVector, r: float) -> CoeffVector:
    """c_n -> r^{|n|} c_n (Poisson convolution with P_r)."""
    if not 0.0 <= r <= 1.0:
        raise ValueError("dilation radius must lie in [0, 1]")
    return CoeffVector(u.n_max, u.coeffs * np.power(r, np.abs(u.ns), dtype=float))


def hilbert(u: CoeffVector) -> CoeffVector:
    """Circular Hilbert transform: c_n -> sgn(n) c_n with sgn(0)=0."""
    return CoeffVector(u.n_max, u.coeffs * np.sign(u.ns))


def analytic_projection(u: CoeffVector) -> CoeffVector:
    """Zero out all negative-frequency coefficients."""
    c = u.coeffs.copy()
    c[: u.n_max] = 0.0
    return CoeffVector(u.n_max, c)


def multiplier(u: CoeffVector, symbol) -> CoeffVector:
    """Fourier multiplier: c_n -> a(n) c_n.

    The symbol may be a dict n -> complex (must cover [-N, N]) or a callable.
    """
    if callable(symbol):
        a = np.array([symbol(int(n)) for n in u.ns], dtype=complex)
    else:
        try:
            a = np.array([symbol[int(n)] for n in u.ns], dtype=complex)
        except KeyError as exc:
            raise ValueError(f"symbol missing index {exc.args[0]}") from exc
    return CoeffVector(u.n_max, u.coeffs * a)


def amu_symbol(mu: RadialMeasure, n_max: int) -> dict:
    """Symbol of the moment-normalizing multiplier: a(n) = (2*pi*sigma_|n|)^{-1/2},
    evaluated through log moments so strongly decaying measures stay finite."""
    ls = log_moment_array(mu, n_max)
    vals = np.exp(-0.5 * (math.log(2.0 * math.pi) + ls))
    return {n: float(vals[abs(n)]) for n in range(-n_max, n_max + 1)}


@dataclass(frozen=True)
class AdaptedPair:
    """Multiplier symbols (a, b) tied to the measure's moments, with the
    boundedness constant C_b of b."""

    a: dict
    b: dict
    c_b: float
    n_max: int


def adapted_pair(mu: RadialMeasure, n_max: int, b_choice=None) -> AdaptedPair:
    """Build a measure-adapted pair: |a(n)|^2 b(n) sgn(n) = (2*pi*sigma_n)^{-1}
    on nonzero modes, with b bounded away from 0 and infinity and a(0) != 0.

    b_choice maps nonzero n to a real value of the same sign as n; the
    default is b(n) = sgn(n).
    """
    ls = log_moment_array(mu, n_max)
    if not np.all(np.isfinite(ls)):
        raise ValueError("adapted pair requires strictly positive moments up to n_max")
    sig = moment_array(mu, n_max)
    b = {0: 0.0}
    for n in range(-n_max, n_max + 1):
        if n == 0:
            continue
        val = float(np.sign(n)) if b_choice is None else b_choice(n) if callable(b_choice) else b_choice[n]
        if val == 0:
            raise ValueError(f"b({n}) = 0 violates the two-sided bound on b")
        if complex(val).imag != 0.0 or float(np.real(val)) * np.sign(n) <= 0.0:
            raise ValueError(f"b({n}) must be real with the sign of n")
        b[n] = float(np.real(val))
    mags = [abs(b[n]) for n in b if n != 0]
    c_b = max(max(mags), 1.0 / min(mags))
    a = {0: 1.0 / math.sqrt(2.0 * math.pi * sig[0])}
    for n in range(-n_max, n_max + 1):
        if n == 0:
            continue
        a[n] = 1.0 / math.sqrt(2.0 * math.pi * sig[abs(n)] * b[n] * np.sign(n))
    # sanity: the defining product identity must hold on every nonzero mode
    for n in (1, -1, n_max, -n_max):
        if n == 0:
            continue
        lhs = abs(a[n]) ** 2 * b[n] * np.sign(n)
        rhs = 1.0 / (2.0 * math.pi * sig[abs(n)])
        if not math.isclose(lhs, rhs, rel_tol=1e-9):
            raise AssertionError("adapted pair identity violated")
    return AdaptedPair(a=a, b=b, c_b=float(c_b), n_max=n_max)
