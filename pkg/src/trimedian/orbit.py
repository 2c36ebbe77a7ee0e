"""Periodic operator families and their tracing orbits.

A family is t -> S[eta(t), eta'(t)](base), or the median version
t -> M^{wx/yz}[eta(t), eta'(t)](base), where eta and eta' are trigonometric
polynomials of period 1.  Restricting to trig polynomials makes the
functional equations for tracing orbits a question about frequency residues
mod 3, which is decided exactly.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .cevian import EtaPair, apply, from_eta
from .errors import BadGamma, BadGauge, GridNotDivisibleBy3
from .median import MedianLabel, median_eta
from .scalar import ONE, ZERO, ZETA, Cyc12, as_scalar, is_exact, omega_pow
from .shape import FourierTriple, ProjPoint, fourier, inverse_fourier, shape
from .triangle import Triangle

COEFF_TOL = 1e-12
TWO_PI = 2.0 * math.pi
SQRT3 = math.sqrt(3.0)


def _is_zero_coeff(c) -> bool:
    return not c if isinstance(c, Cyc12) else abs(c) <= COEFF_TOL


class TrigPoly:
    """t -> sum_k c_k exp(2 pi i k t), stored as a sparse frequency map."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for k, c in dict(coeffs or {}).items():
            c = as_scalar(c)
            if not (isinstance(c, Cyc12) and not c) and c != 0:
                clean[int(k)] = c
        self._coeffs = dict(sorted(clean.items()))

    @classmethod
    def constant(cls, c) -> "TrigPoly":
        return cls({0: c})

    @classmethod
    def monomial(cls, k: int, c=1) -> "TrigPoly":
        return cls({k: c})

    @property
    def coeffs(self) -> dict:
        return dict(self._coeffs)

    @property
    def exact(self) -> bool:
        return is_exact(*self._coeffs.values())

    def frequencies(self) -> list:
        """Frequencies with a coefficient that is nonzero (beyond COEFF_TOL if inexact)."""
        return [k for k, c in self._coeffs.items() if not _is_zero_coeff(c)]

    def residues(self) -> set:
        return {k % 3 for k in self.frequencies()}

    def is_zero(self) -> bool:
        return not self.frequencies()

    def __call__(self, t: float) -> complex:
        return eval_poly(self, t)

    def eval_many(self, ts) -> np.ndarray:
        ts = np.asarray(ts, dtype=float)
        out = np.zeros(ts.shape, dtype=complex)
        for k, c in self._coeffs.items():
            out += complex(c) * np.exp(1j * TWO_PI * k * ts)
        return out

    def eval_exact(self, j: int, n: int):
        """Exact value at t = j/n, for n dividing 12."""
        if 12 % n:
            raise ValueError(f"exact evaluation needs t in (1/12)Z, got denominator {n}")
        step = 12 // n
        total = ZERO
        for k, c in self._coeffs.items():
            total = total + c * ZETA ** ((k * j * step) % 12)
        return total

    def value_at_zero(self):
        total = ZERO if self.exact else 0j
        for c in self._coeffs.values():
            total = total + c
        return total

    def shift_third(self) -> "TrigPoly":
        return shift_third(self)

    def scale(self, c) -> "TrigPoly":
        c = as_scalar(c)
        return TrigPoly({k: c * v for k, v in self._coeffs.items()})

    def __add__(self, other) -> "TrigPoly":
        other = _as_poly(other)
        out = dict(self._coeffs)
        for k, c in other._coeffs.items():
            out[k] = out[k] + c if k in out else c
        return TrigPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "TrigPoly":
        return self.scale(-1)

    def __sub__(self, other) -> "TrigPoly":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "TrigPoly":
        return _as_poly(other) - self

    def __mul__(self, other) -> "TrigPoly":
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        out = {}
        for k1, c1 in self._coeffs.items():
            for k2, c2 in other._coeffs.items():
                k = k1 + k2
                out[k] = out[k] + c1 * c2 if k in out else c1 * c2
        return TrigPoly(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            return NotImplemented
        diff = self - other
        return diff.is_zero()

    __hash__ = None

    def __repr__(self):
        return f"TrigPoly({self._coeffs!r})"

    def __str__(self):
        if not self._coeffs:
            return "0:0"
        return "; ".join(f"{k}:{_fmt_coeff(c)}" for k, c in self._coeffs.items())


def _fmt_coeff(c) -> str:
    if isinstance(c, Cyc12):
        return c.to_text("auto")
    return f"{c.real:.15g}{c.imag:+.15g}i"


def _as_poly(x) -> TrigPoly:
    return x if isinstance(x, TrigPoly) else TrigPoly.constant(x)


def eval_poly(p: TrigPoly, t: float) -> complex:
    return complex(sum(complex(c) * np.exp(1j * TWO_PI * k * t) for k, c in p.coeffs.items()))


def shift_third(p: TrigPoly) -> TrigPoly:
    """The polynomial t -> p(t + 1/3): c_k picks up w^(k mod 3)."""
    return TrigPoly({k: c * omega_pow(k, isinstance(c, Cyc12)) for k, c in p.coeffs.items()})


# -- families -------------------------------------------------------------------


class TracingClass(enum.Enum):
    ASCENDING = "Ascending"
    DESCENDING = "Descending"
    NOT_TRACING = "NotTracing"


@dataclass(frozen=True)
class OrbitFamily:
    """t -> S[eta(t), eta'(t)](base), or M^{label}[eta(t), eta'(t)](base) when a label is set."""

    eta: TrigPoly
    eta_prime: TrigPoly
    base: Triangle
    label: MedianLabel | None = None

    @property
    def kind(self) -> str:
        return "Cevian" if self.label is None else f"Median({self.label})"

    def cevian_polys(self):
        """Multiplier polynomials of the equivalent cevian family."""
        if self.label is None:
            return self.eta, self.eta_prime
        exact = self.eta.exact and self.eta_prime.exact
        zero, one = (ZERO, ONE) if exact else (0j, 1 + 0j)
        b0, b1 = median_eta(self.label, EtaPair(zero, zero))
        s0, s1 = median_eta(self.label, EtaPair(one, one))
        return self.eta * (s0 - b0) + b0, self.eta_prime * (s1 - b1) + b1

    def operator_at(self, j: int, n: int):
        """Exact operator at t = j/n for n dividing 12."""
        e = EtaPair(self.eta.eval_exact(j, n), self.eta_prime.eval_exact(j, n))
        if self.label is not None:
            e = median_eta(self.label, e)
        return from_eta(e)

    def triangle_at(self, j: int, n: int) -> Triangle:
        return apply(self.operator_at(j, n), self.base)


@dataclass(frozen=True)
class OrbitSample:
    t: float
    triple: Triangle


def tracing_polys(f: OrbitFamily):
    """(eta, eta') for a cevian family; the shifted pair for a median family."""
    if f.label is None:
        return f.eta, f.eta_prime
    exact = f.eta.exact and f.eta_prime.exact
    w, x = f.label.w, f.label.x
    return f.eta - omega_pow(x - w, exact), f.eta_prime - omega_pow(w - x, exact)


def tracing_class(f: OrbitFamily) -> TracingClass:
    """Ascending iff eta frequencies are 2 mod 3 and eta' frequencies 1 mod 3; (1, 2) for Descending.

    A zero polynomial constrains nothing, so a family whose shifted pair is
    identically zero is reported Ascending.
    """
    eta, etap = tracing_polys(f)
    r, rp = eta.residues(), etap.residues()
    if r <= {2} and rp <= {1}:
        return TracingClass.ASCENDING
    if r <= {1} and rp <= {2}:
        return TracingClass.DESCENDING
    return TracingClass.NOT_TRACING


def sample_array(f: OrbitFamily, n: int):
    """Times t_j = j/n and an (n, 3) complex array of vertices."""
    if n < 3:
        raise ValueError(f"need at least 3 samples, got {n}")
    return _sample_at(f, np.arange(n) / n)


def _sample_at(f: OrbitFamily, ts: np.ndarray):
    eta, etap = f.cevian_polys()
    fb = fourier(f.base.approx())
    psi0, psi1, psi2 = (complex(v) for v in fb)
    e2 = eta.eval_many(ts) * psi2
    e1 = etap.eval_many(ts) * psi1
    k = np.arange(3)
    wk = np.exp(2j * math.pi * k / 3)
    verts = psi0 + np.outer(e1, wk) + np.outer(e2, wk.conj())
    return ts, verts


def sample(f: OrbitFamily, n: int) -> list:
    ts, verts = sample_array(f, n)
    return [OrbitSample(float(t), Triangle(*(complex(v) for v in row))) for t, row in zip(ts, verts)]


def _as_array(samples) -> np.ndarray:
    return np.array([[complex(v) for v in s.triple] for s in samples], dtype=complex)


def verify_tracing(samples, order: TracingClass) -> float:
    """Max vertex distance between J(D(t)) and D(t +- 1/3) over the grid."""
    n = len(samples)
    if n % 3:
        raise GridNotDivisibleBy3(f"grid of {n} samples is not divisible by 3")
    if order is TracingClass.NOT_TRACING:
        raise ValueError("order must be Ascending or Descending")
    verts = _as_array(samples)
    shift = n // 3 if order is TracingClass.ASCENDING else -(n // 3)
    rotated = np.roll(verts, -1, axis=1)  # J: (a0, a1, a2) -> (a1, a2, a0)
    target = np.roll(verts, -shift, axis=0)
    return float(np.max(np.abs(rotated - target)))


def tracing_residual(f: OrbitFamily, n: int, order: TracingClass) -> float:
    """Like :func:`verify_tracing`, evaluating D(t +- 1/3) from the family itself.

    Works on any grid size since no sample has to land on t +- 1/3.
    """
    if order is TracingClass.NOT_TRACING:
        raise ValueError("order must be Ascending or Descending")
    ts, verts = sample_array(f, n)
    shift = 1 / 3 if order is TracingClass.ASCENDING else -1 / 3
    _, shifted = _sample_at(f, ts + shift)
    return float(np.max(np.abs(np.roll(verts, -1, axis=1) - shifted)))


def collision_report(samples) -> float:
    verts = _as_array(samples)
    gaps = [np.abs(verts[:, i] - verts[:, j]) for i, j in ((0, 1), (1, 2), (2, 0))]
    return float(np.min(gaps))


def steiner_residual(u: float, v: float, samples) -> float:
    """Max deviation of the vertices from the Steiner circumellipse of (0, 1, u + vi)."""
    verts = _as_array(samples).ravel()
    X = verts.real - (1 + u) / 3
    Y = verts.imag - v / 3
    lhs = v * v * X * X + (v - 2 * u * v) * X * Y + (1 - u + u * u) * Y * Y
    return float(np.max(np.abs(lhs - v * v / 3)))


def figure8_vertex(t):
    """Closed form of the first vertex of the figure-eight orbit."""
    t = np.asarray(t, dtype=float)
    return (4 * SQRT3 / 3) * np.cos(TWO_PI * t) + 1j * (2 * SQRT3 / 3) * np.sin(2 * TWO_PI * t)


def figure8_check(samples) -> tuple:
    """(curve_residual, vertex_match_residual) for the figure-eight family."""
    verts = _as_array(samples)
    X, Y = verts.real, verts.imag
    curve = np.abs(X**2 - (3 / 16) * X**4 - Y**2)
    ts = np.array([s.t for s in samples])
    match = np.abs(verts[:, 0] - figure8_vertex(ts))
    return float(np.max(curve)), float(np.max(match))


def shape_trace(samples) -> list:
    """(t, psi, psi^3) per sample."""
    out = []
    for s in samples:
        psi = shape(s.triple)
        out.append((s.t, psi, psi.cube()))
    return out


def signed_areas(samples) -> np.ndarray:
    verts = _as_array(samples)
    a, b, c = verts[:, 0], verts[:, 1], verts[:, 2]
    return 0.5 * (np.conj(a) * b + np.conj(b) * c + np.conj(c) * a).imag


# -- built-in families --------------------------------------------------------

DEFAULT_BASE = Triangle(0, 1, Cyc12.parse("7/10 + 1/2*i"))


def smn_family(m: int, n: int, base: Triangle = DEFAULT_BASE) -> OrbitFamily:
    """S[e^{2 pi i m t}, e^{2 pi i n t}](base)."""
    return OrbitFamily(TrigPoly.monomial(m), TrigPoly.monomial(n), base)


def steiner_family(base: Triangle = DEFAULT_BASE) -> OrbitFamily:
    return smn_family(-1, 1, base)


def smn_law(m: int, n: int) -> TracingClass:
    """Tracing iff m + n = 0 mod 3; ascending iff m = 2 mod 3."""
    if (m + n) % 3:
        return TracingClass.NOT_TRACING
    return TracingClass.ASCENDING if m % 3 == 2 else TracingClass.DESCENDING


FIGURE8_ETA = TrigPoly({1: -2, -2: 1})
FIGURE8_ETA_PRIME = TrigPoly({-1: 2, 2: 1})


def figure8_family() -> OrbitFamily:
    return OrbitFamily(FIGURE8_ETA, FIGURE8_ETA_PRIME, Triangle(0, Cyc12.parse("i"), Cyc12.parse("-i")))


def median_figure8_family() -> OrbitFamily:
    w = omega_pow(1)
    return OrbitFamily(
        FIGURE8_ETA + w,
        FIGURE8_ETA_PRIME + w * w,
        Triangle(0, 4, Cyc12.parse("3 + i")),
        MedianLabel(0, 1, 0, 1),
    )


def median_smn_family(x: int = 0, m: int = -5, n: int = 2, base: Triangle = DEFAULT_BASE) -> OrbitFamily:
    """M^{0x/01}[e^{2 pi i m t} + w^x, e^{2 pi i n t} + w^-x](base)."""
    return OrbitFamily(
        TrigPoly({m: 1, 0: omega_pow(x)}),
        TrigPoly({n: 1, 0: omega_pow(-x)}),
        base,
        MedianLabel(0, x, 0, 1),
    )


# -- lifting a shape curve ------------------------------------------------------


def _same_poly(a: TrigPoly, b: TrigPoly) -> bool:
    return (a - b).is_zero()


def lift_shape_curve(gamma: TrigPoly, eps: int, mu: TrigPoly | None = None, base: Triangle | None = None) -> OrbitFamily:
    """A cevian family whose shape curve psi(D(t)) is gamma(t).

    The eta slot is e^{2 pi i eps t} gamma(t)/gamma(0) mu(t), the eta' slot
    e^{2 pi i eps t} mu(t), and the default base is the triple with Fourier
    components (0, 1, gamma(0)).  Any gauge mu of period 1/3 without zeros
    gives the same shape curve.
    """
    if eps not in (1, -1):
        raise BadGamma(f"eps must be +1 or -1, got {eps}")
    exact = gamma.exact
    if not _same_poly(shift_third(gamma), gamma.scale(omega_pow(eps, exact))):
        raise BadGamma(f"gamma(t + 1/3) != w^{eps} gamma(t) for gamma = {gamma}")
    g0 = gamma.value_at_zero()
    if _is_zero_coeff(g0):
        raise BadGamma("gamma(0) must not be 0")
    if mu is None:
        mu = TrigPoly.constant(1)
    if mu.is_zero() or any(k % 3 for k in mu.frequencies()):
        raise BadGauge(f"gauge must be nonzero with period 1/3, got {mu}")
    if base is None:
        base = inverse_fourier(FourierTriple(0, 1, g0))
    elif not shape(base).equals(ProjPoint(g0)):
        raise BadGamma(f"shape of base {base} is not gamma(0) = {g0}")
    phase = TrigPoly.monomial(eps)
    return OrbitFamily(phase * gamma.scale(1 / g0) * mu, phase * mu, base)


def tracing_law_suite(limit: int = 10, n: int = 300, tol: float = 1e-10) -> dict:
    """Classifier vs the m + n law vs a numeric tracing check, over coprime |m|, |n| <= limit."""
    base = DEFAULT_BASE
    rows, passed = [], True
    for m in range(-limit, limit + 1):
        for k in range(-limit, limit + 1):
            if math.gcd(m, k) != 1:
                continue
            fam = smn_family(m, k, base)
            cls = tracing_class(fam)
            pts = sample(fam, n)
            asc = verify_tracing(pts, TracingClass.ASCENDING)
            desc = verify_tracing(pts, TracingClass.DESCENDING)
            numeric = (
                TracingClass.ASCENDING if asc <= tol else TracingClass.DESCENDING if desc <= tol else TracingClass.NOT_TRACING
            )
            ok = cls == smn_law(m, k) == numeric
            passed = passed and ok
            rows.append({"m": m, "n": k, "class": cls.value, "numeric": numeric.value, "ok": ok})
    return {"passed": passed, "pairs": len(rows), "rows": rows}
