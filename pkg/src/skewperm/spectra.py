"""Numerical root multisets of exact polynomials.

Roots are found per squarefree factor (computed exactly), so repeated
roots come out with full float accuracy instead of the usual
``sqrt(eps)`` smearing.  Each factor is solved by Aberth-Ehrlich
simultaneous iteration from a deterministic start on a circle.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy.optimize import linear_sum_assignment

from .poly import Poly, squarefree_decomposition

DEFAULT_TOL = 1e-10
MAX_ITER = 200


class RootFindingError(ArithmeticError):
    def __init__(self, message: str, best: tuple[complex, ...]):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class RootMultiset:
    values: tuple[complex, ...]

    def __post_init__(self):
        vals = tuple(complex(z) for z in self.values)
        object.__setattr__(self, "values", tuple(sorted(vals, key=lambda z: (z.real, z.imag))))

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def to_json(self) -> list[dict[str, float]]:
        return [{"re": _clean(z.real), "im": _clean(z.imag)} for z in self.values]

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _clean(x: float) -> float:
    # avoid "-0.0" in serialized output
    return 0.0 if x == 0 else x


def _aberth(coeffs: np.ndarray, max_iter: int) -> np.ndarray:
    """Roots of a monic squarefree polynomial (descending float coefficients)."""
    n = len(coeffs) - 1
    radius = 1.0 + float(np.max(np.abs(coeffs[1:])))
    angles = 2 * np.pi * np.arange(n) / n + 0.4
    z = radius * np.exp(1j * angles)
    dcoeffs = np.polyder(coeffs)
    for _ in range(max_iter):
        p = np.polyval(coeffs, z)
        dp = np.polyval(dcoeffs, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            ratio = p / dp
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            inv = 1.0 / diff
            np.fill_diagonal(inv, 0.0)
            w = ratio / (1.0 - ratio * inv.sum(axis=1))
        w = np.where(np.isfinite(w), w, 0.0)
        z = z - w
        if np.all(np.abs(w) <= 1e-15 * (1.0 + np.abs(z))):
            break
    # a few Newton polishing steps; harmless at simple roots
    for _ in range(3):
        dp = np.polyval(dcoeffs, z)
        step = np.where(dp != 0, np.polyval(coeffs, z) / np.where(dp != 0, dp, 1), 0)
        z = z - step
    return z


def _exact_residual(p: Poly, z: complex) -> float:
    """|p(z)| with z taken as the exact binary value of its float parts."""
    zr, zi = Fraction(z.real), Fraction(z.imag)
    ar, ai = Fraction(0), Fraction(0)
    for c in p.coeffs:
        ar, ai = ar * zr - ai * zi + c, ar * zi + ai * zr
    return math.hypot(float(ar), float(ai))


def _symmetrize(zs: list[complex], eps: float) -> list[complex]:
    """Enforce exact conjugate pairs for a real polynomial's root list."""
    real = [z.real for z in zs if abs(z.imag) <= eps * (1 + abs(z))]
    upper = [z for z in zs if z.imag > eps * (1 + abs(z))]
    lower = [z for z in zs if z.imag < -eps * (1 + abs(z))]
    if len(upper) != len(lower):
        return zs
    return [complex(x, 0.0) for x in real] + [z for z in upper] + [z.conjugate() for z in upper]


def roots(p: Poly, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> RootMultiset:
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    return _roots_cached(p, tol, max_iter)


@lru_cache(maxsize=4096)
def _roots_cached(p: Poly, tol: float, max_iter: int) -> RootMultiset:
    if p[0] == 0:
        raise ValueError("leading coefficient a_0 must be nonzero")
    out: list[complex] = []
    for factor, mult in squarefree_decomposition(p):
        c = factor.coeffs
        if factor.degree == 1:
            zs = [complex(float(-c[1] / c[0]), 0.0)]
        elif factor.degree == 2 and c[1] == 0:
            # x^2 + q: closed form keeps purely imaginary/real pairs exact
            q = float(c[2] / c[0])
            r = math.sqrt(abs(q))
            zs = [complex(0, r), complex(0, -r)] if q > 0 else [complex(r, 0), complex(-r, 0)]
        else:
            arr = np.array([float(x) for x in c], dtype=float)
            zs = [complex(z) for z in _aberth(arr / arr[0], max_iter)]
            zs = _symmetrize(zs, 1e-12)
        out.extend(zs * mult)
    if len(out) != p.degree:
        raise RootFindingError(f"found {len(out)} roots for degree {p.degree}", tuple(out))
    scale = 1.0 + max(abs(float(c)) for c in p.coeffs)
    bad = [z for z in out if _exact_residual(p, z) > tol * scale]
    if bad:
        raise RootFindingError(
            f"{len(bad)} root(s) above residual bound {tol * scale:g} after {max_iter} iterations",
            tuple(out),
        )
    return RootMultiset(tuple(out))


def multiset_equal(a, b, tol: float) -> bool:
    """True iff a perfect pairing of ``a`` with ``b`` keeps every pair within ``tol``."""
    a = list(a)
    b = list(b)
    if len(a) != len(b):
        raise ValueError(f"multisets differ in size: {len(a)} vs {len(b)}")
    if not a:
        return True
    za = np.array(a, dtype=complex)
    zb = np.array(b, dtype=complex)
    far = (np.abs(za[:, None] - zb[None, :]) > tol).astype(float)
    rows, cols = linear_sum_assignment(far)
    return bool(far[rows, cols].sum() == 0)


def scale_spectrum_by_i(a) -> RootMultiset:
    return RootMultiset(tuple(1j * complex(z) for z in a))


def is_real_rooted(a, tol: float) -> bool:
    return all(abs(complex(z).imag) <= tol for z in a)
