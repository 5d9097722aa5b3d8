"""Experiment drivers: Bourgain-Brezis-type ratio checks, the embedding
sandwich, the Fejer partial-moment dichotomy, and deterministic random
corpora.

Ratio denominators use certified sum-norm upper bounds, so a reported
violation of an inequality is sound and a reported constant is
conservative.
"""

from __future__ import annotations

import csv
import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .fourier import AdaptedPair, CoeffVector, adapted_pair, amu_symbol, analytic_projection, \
    hilbert, multiplier, synthesize
from .measures import RadialMeasure, moment_array
from .norms import a2_norm, l1_norm, l2_norm
from .sumnorm import sum_norm


@dataclass(frozen=True)
class InequalityReport:
    ratios: tuple
    max_ratio: float
    seed: int
    corpus_size: int
    constant_reference: float | None = None
    gaps: tuple = ()

    def to_dict(self) -> dict:
        return {
            "ratios": list(self.ratios),
            "max_ratio": self.max_ratio,
            "seed": self.seed,
            "corpus_size": self.corpus_size,
            "constant_reference": self.constant_reference,
            "gaps": list(self.gaps),
        }

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["index", "ratio"])
        for i, r in enumerate(self.ratios):
            w.writerow([i, repr(r)])
        return buf.getvalue()


def _sum_upper(v: CoeffVector, mu: RadialMeasure, m: int, tol: float, max_iters: int) -> float:
    if v.is_zero():
        return 0.0
    return sum_norm(v, mu, m=m, tol=tol, max_iters=max_iters).upper


def _unit(u: CoeffVector) -> CoeffVector:
    """Rescale to unit l^2 norm so every ratio is exactly scale-invariant."""
    return CoeffVector(u.n_max, u.coeffs / l2_norm(u))


def bbb_ratio(u: CoeffVector, mu: RadialMeasure, m: int = 512, tol: float = 1e-3,
              max_iters: int = 40_000) -> float:
    """||u||_2 / (||A u||_{sum} + ||H A u||_{sum}) with the moment-normalizing
    multiplier A; scale-invariant by homogeneity."""
    if u.is_zero():
        raise ValueError("ratio undefined for u = 0")
    u = _unit(u)
    a = amu_symbol(mu, u.n_max)
    v = multiplier(u, a)
    den = _sum_upper(v, mu, m, tol, max_iters) + _sum_upper(hilbert(v), mu, m, tol, max_iters)
    return l2_norm(u) / den


def adapted_ineq_ratio(u: CoeffVector, mu: RadialMeasure, pair: AdaptedPair,
                       m: int = 512, tol: float = 1e-3, max_iters: int = 40_000) -> float:
    """As bbb_ratio, with a general adapted pair: denominator uses T_a u and T_b T_a u."""
    if u.is_zero():
        raise ValueError("ratio undefined for u = 0")
    if pair.n_max < u.n_max:
        raise ValueError("adapted pair degree too small for the input")
    u = _unit(u)
    v = multiplier(u, pair.a)
    w = multiplier(v, pair.b)
    den = _sum_upper(v, mu, m, tol, max_iters) + _sum_upper(w, mu, m, tol, max_iters)
    return l2_norm(u) / den


def embedding_ratio(f: CoeffVector, mu: RadialMeasure, m: int = 512, tol: float = 1e-3,
                    max_iters: int = 40_000) -> float:
    """||f||_{A^2(mu)} / ||f||_{sum} for analytic f; always >= 1 up to tol."""
    if f.is_zero():
        raise ValueError("ratio undefined for f = 0")
    if not f.is_analytic():
        raise ValueError("embedding ratio requires an analytic input")
    f = _unit(f)
    return a2_norm(f, mu) / _sum_upper(f, mu, m, tol, max_iters)


def fejer_kernel(n: int) -> CoeffVector:
    """Harmonic extension of the Fejer kernel: coefficients 1 - |j|/N."""
    if n < 1:
        raise ValueError("Fejer index must be >= 1")
    j = np.arange(-n, n + 1)
    return CoeffVector(n, (1.0 - np.abs(j) / n).astype(complex))


def fejer_experiment(mu: RadialMeasure, n_list) -> list[dict]:
    """Per N: the boundary L^1 norm (always 1), the squared weighted Bergman
    norm of the analytic projection 2*pi*sum (1-j/N)^2 sigma_j (both via the
    operator pipeline and the closed form), and the running moment sum."""
    if not n_list:
        raise ValueError("n_list must be nonempty")
    rows = []
    n_top = max(n_list)
    sig = moment_array(mu, n_top)
    for n in n_list:
        fk = fejer_kernel(n)
        m = 1 << int(math.ceil(math.log2(2 * n + 2)))
        h1 = l1_norm(synthesize(fk, m))
        proj = analytic_projection(fk)
        pipeline_sq = a2_norm(proj, mu) ** 2
        j = np.arange(0, n + 1)
        closed_sq = 2.0 * math.pi * float(np.sum((1.0 - j / n) ** 2 * sig[: n + 1]))
        rows.append({
            "n": int(n),
            "h1_norm": h1,
            "projection_sq_norm": pipeline_sq,
            "projection_sq_closed_form": closed_sq,
            "moment_partial_sum": float(np.sum(sig[: n + 1])),
        })
    return rows


def random_poly(seed: int, index: int, n_max: int, s: float = 1.0,
                analytic: bool = False) -> CoeffVector:
    """Deterministic random trigonometric polynomial: independent complex
    Gaussians with variance profile (1+|n|)^{-s}; per-sample stream derived
    from (seed, index)."""
    rng = np.random.default_rng([seed, index])
    ns = np.arange(-n_max, n_max + 1)
    std = (1.0 + np.abs(ns)) ** (-s / 2.0) / math.sqrt(2.0)
    c = std * (rng.standard_normal(2 * n_max + 1) + 1j * rng.standard_normal(2 * n_max + 1))
    if analytic:
        c[:n_max] = 0.0
    return CoeffVector(n_max, c)


def corpus_scan(mu: RadialMeasure, count: int, seed: int = 42, n_max: int = 64,
                s: float = 1.0, which: str = "bbb", m: int = 512, tol: float = 1e-3,
                max_iters: int = 40_000, pair: AdaptedPair | None = None) -> InequalityReport:
    """Run the selected ratio over a deterministic pseudo-random corpus."""
    if count < 1:
        raise ValueError("count must be >= 1")
    if which == "adapted" and pair is None:
        pair = adapted_pair(mu, n_max)
    if which not in ("bbb", "adapted", "embedding"):
        raise ValueError(f"unknown ratio kind {which!r}")

    def one(i: int) -> float:
        u = random_poly(seed, i, n_max, s=s, analytic=(which == "embedding"))
        if which == "bbb":
            return float(bbb_ratio(u, mu, m=m, tol=tol, max_iters=max_iters))
        if which == "adapted":
            return float(adapted_ineq_ratio(u, mu, pair, m=m, tol=tol, max_iters=max_iters))
        return float(embedding_ratio(u, mu, m=m, tol=tol, max_iters=max_iters))

    # per-sample RNG streams are independent, so the report does not depend
    # on scheduling; CARLESON_LAB_THREADS caps the worker pool (default 1)
    workers = max(1, int(os.environ.get("CARLESON_LAB_THREADS", "1")))
    if workers == 1:
        ratios = [one(i) for i in range(count)]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            ratios = list(pool.map(one, range(count)))
    return InequalityReport(
        ratios=tuple(ratios),
        max_ratio=max(ratios),
        seed=seed,
        corpus_size=count,
    )
