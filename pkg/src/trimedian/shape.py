"""Finite Fourier transform of triples, the shape function and the shape sphere.

A triple (a, b, c) has Fourier components

    psi0 = (a + b + c)/3,  psi1 = (a + b w^2 + c w)/3,  psi2 = (a + b w + c w^2)/3

and its shape is the point psi2 : psi1 of the projective line.  Circulant
operators S[eta, eta'] multiply (psi2, psi1) by (eta, eta'); the binary Ceva
operator additionally swaps the two components.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .cevian import CircOp, EtaPair, apply, compose, from_eta, to_eta
from .errors import PoleAtRho, TripleCollision
from .scalar import ONE, ZERO, Cyc12, as_scalar, is_exact, is_zero, omega
from .triangle import Triangle, swap_last

PROJ_TOL = 1e-9


@dataclass(frozen=True)
class FourierTriple:
    psi0: object
    psi1: object
    psi2: object

    def __iter__(self):
        return iter((self.psi0, self.psi1, self.psi2))


def fourier(d: Triangle) -> FourierTriple:
    a, b, c = d
    w = omega(d.exact)
    w2 = w * w
    return FourierTriple((a + b + c) / 3, (a + b * w2 + c * w) / 3, (a + b * w + c * w2) / 3)


def inverse_fourier(f: FourierTriple) -> Triangle:
    """a_k = psi0 + psi1 w^k + psi2 w^-k."""
    psi0, psi1, psi2 = (as_scalar(v) for v in f)
    w = omega(is_exact(psi0, psi1, psi2))
    w2 = w * w
    return Triangle(psi0 + psi1 + psi2, psi0 + psi1 * w + psi2 * w2, psi0 + psi1 * w2 + psi2 * w)


class ProjPoint:
    """A point num : den of the projective line; ``den == 0`` is infinity.

    Equality is cross-multiplication, so 0 and infinity are handled without
    division.  On the approximate backend both points are first normalised to
    unit length and compared with tolerance ``PROJ_TOL``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num, den = as_scalar(num), as_scalar(den)
        if is_zero(num, 0.0) and is_zero(den, 0.0):
            raise TripleCollision("0:0 is not a point of the projective line")
        self.num = num
        self.den = den

    @property
    def exact(self) -> bool:
        return is_exact(self.num, self.den)

    def is_infinity(self, tol: float = 0.0) -> bool:
        if self.exact:
            return not self.den
        return abs(self.den) <= tol * abs(self.num)

    def is_zero(self, tol: float = 0.0) -> bool:
        if self.exact:
            return not self.num
        return abs(self.num) <= tol * abs(self.den)

    def value(self):
        """Affine value; ``None`` stands for infinity."""
        if self.is_infinity():
            return None
        return self.num / self.den

    def cube(self) -> "ProjPoint":
        return ProjPoint(self.num * self.num * self.num, self.den * self.den * self.den)

    def scale(self, factor) -> "ProjPoint":
        return ProjPoint(self.num * factor, self.den)

    def cross(self, other: "ProjPoint"):
        return self.num * other.den - other.num * self.den

    def equals(self, other: "ProjPoint", tol: float = PROJ_TOL) -> bool:
        if self.exact and other.exact:
            return not self.cross(other)
        n1, n2 = _unit(self), _unit(other)
        return abs(n1[0] * n2[1] - n2[0] * n1[1]) <= tol

    def __eq__(self, other):
        if not isinstance(other, ProjPoint):
            return NotImplemented
        return self.equals(other)

    __hash__ = None

    def __repr__(self):
        return f"ProjPoint({self.num!r}, {self.den!r})"

    def __str__(self):
        if self.is_infinity():
            return "inf"
        v = self.value()
        if isinstance(v, Cyc12):
            return v.to_text("auto")
        return f"{v.real:.15g}{v.imag:+.15g}i"


def _unit(p: ProjPoint):
    n, d = complex(p.num), complex(p.den)
    r = (abs(n) ** 2 + abs(d) ** 2) ** 0.5
    return n / r, d / r


def shape(d: Triangle) -> ProjPoint:
    """psi2/psi1 as a projective point; infinity when psi1 = 0."""
    f = fourier(d)
    if is_zero(f.psi1, 0.0) and is_zero(f.psi2, 0.0):
        raise TripleCollision(f"shape of triple collision {d}")
    return ProjPoint(f.psi2, f.psi1)


def shape_cubed(d: Triangle) -> ProjPoint:
    return shape(d).cube()


def dr_similar(d1: Triangle, d2: Triangle, tol: float = PROJ_TOL) -> bool:
    """Directly similar as oriented, unlabelled triangles: psi^3 agree."""
    return shape_cubed(d1).equals(shape_cubed(d2), tol)


def rv_similar(d1: Triangle, d2: Triangle, tol: float = PROJ_TOL) -> bool:
    """Reversely similar: psi(d1)^3 * psi(d2)^3 = 1, with 0 * inf counted as 1."""
    s1, s2 = shape_cubed(d1), shape_cubed(d2)
    # n1 n2 = d1 d2, i.e. s1 equals the reciprocal of s2
    return s1.equals(ProjPoint(s2.den, s2.num), tol)


# -- Hajja and binary Ceva operators -------------------------------------------


@dataclass(frozen=True)
class ExtOp:
    """circ after an optional swap of the last two vertices."""

    pre_swap: bool
    circ: CircOp

    def __call__(self, d: Triangle) -> Triangle:
        return ext_apply(self, d)

    def __matmul__(self, other) -> "ExtOp":
        return ext_compose(self, other)

    def __str__(self):
        return f"{self.circ} o swap" if self.pre_swap else str(self.circ)


def as_ext(op) -> ExtOp:
    return op if isinstance(op, ExtOp) else ExtOp(False, op)


def ext_apply(op: ExtOp, d: Triangle) -> Triangle:
    return apply(op.circ, swap_last(d) if op.pre_swap else d)


def _swap_multipliers(op: CircOp) -> CircOp:
    # swap o S[eta, eta'] = S[eta', eta] o swap
    eta, etap = to_eta(op)
    return from_eta(EtaPair(etap, eta))


def ext_compose(a, b) -> ExtOp:
    """a o b for operators that may include a vertex swap."""
    a, b = as_ext(a), as_ext(b)
    inner = _swap_multipliers(b.circ) if a.pre_swap else b.circ
    return ExtOp(a.pre_swap != b.pre_swap, compose(a.circ, inner))


def hajja(s) -> CircOp:
    """The s-median operator S[s + w, s + w^2]; defined for every complex s."""
    s = as_scalar(s)
    w = omega(is_exact(s))
    return from_eta(EtaPair(s + w, s + w * w))


def ceva(s) -> ExtOp:
    """Binary Ceva operator: psi1 -> (s + w) psi2, psi2 -> (s + w^2) psi1."""
    s = as_scalar(s)
    w = omega(is_exact(s))
    return ExtOp(True, from_eta(EtaPair(s + w * w, s + w)))


def xi(s):
    """Shape multiplier (s + w)/(s + w^2) of the Hajja operator."""
    s = as_scalar(s)
    w = omega(is_exact(s))
    den = s + w * w
    if is_zero(den):
        raise PoleAtRho(f"xi has a pole at s = rho (s = {s})")
    return (s + w) / den


def s_from_xi(x):
    """Inverse of :func:`xi`: the s with xi(s) = x, for x not in {0, 1, inf}."""
    x = as_scalar(x)
    w = omega(is_exact(x))
    return (w - x * w * w) / (x - 1)


def reduced_action(op, pair):
    """Action of an operator on the translation class (psi2, psi1)."""
    op = as_ext(op)
    psi2, psi1 = pair
    if op.pre_swap:
        psi2, psi1 = psi1, psi2
    eta, etap = to_eta(op.circ)
    return (eta * psi2, etap * psi1)


# -- identity suite -----------------------------------------------------------

BCLIFT_NAMES = (
    "hajja_square",
    "ceva_square",
    "ceva_rv_hajja",
    "dr_criterion",
    "rv_criterion",
    "rv_transfer",
)


def _random_rational(rng: random.Random, bound: int = 12) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _random_triangle(rng: random.Random) -> Triangle:
    from .median import random_cyc12

    while True:
        d = Triangle(random_cyc12(rng, 6), random_cyc12(rng, 6), random_cyc12(rng, 6))
        f = fourier(d)
        if f.psi1 and f.psi2:
            return d


def _reduced_equal(lhs, rhs) -> bool:
    basis = ((ONE, ZERO), (ZERO, ONE))
    return all(lhs(v) == rhs(v) for v in basis)


def _draw_u(rng: random.Random, target_xi):
    """A parameter u with xi_u = target_xi, or a random one violating it when target_xi is None."""
    if target_xi is not None and target_xi != ONE:
        return s_from_xi(target_xi)
    return Cyc12(_random_rational(rng))


def _bclift_checks(rng: random.Random):
    s, r = Cyc12(_random_rational(rng)), Cyc12(_random_rational(rng))
    d = _random_triangle(rng)
    h = hajja(s)
    c_s, c_1s, c_r = ceva(s), ceva(1 - s), ceva(r)
    k = s * s - s + 1

    # (i) and (ii) as identities of the reduced action on (psi2, psi1)
    yield "hajja_square", _reduced_equal(
        lambda v: reduced_action(h, reduced_action(h, v)),
        lambda v: tuple(-x for x in reduced_action(c_1s, reduced_action(c_s, v))),
    )
    yield "ceva_square", _reduced_equal(
        lambda v: reduced_action(c_s, reduced_action(c_s, v)), lambda v: (k * v[0], k * v[1])
    )
    yield "ceva_rv_hajja", rv_similar(ext_apply(c_s, d), apply(h, d))

    psi_v = shape(d).value()
    xs, xr = xi(s), xi(r)
    lhs = ext_apply(ext_compose(c_s, c_r), d)

    # (iv): one u built to satisfy the criterion, one drawn to violate it
    for target in (xs / (xr * psi_v * psi_v), None):
        u = _draw_u(rng, target)
        criterion = (xr * xi(u)) ** 3 * psi_v**6 == xs**3
        if target is None and criterion:
            continue
        holds = dr_similar(lhs, ext_apply(ceva(u), d))
        yield "dr_criterion", holds == criterion and criterion == (target is not None)

    # (v): the criterion does not involve the triangle, so test several
    tris = (d, _random_triangle(rng), _random_triangle(rng))
    for target in (xr / xs, None):
        u = _draw_u(rng, target)
        criterion = (xs * xi(u)) ** 3 == xr**3
        if target is None and criterion:
            continue
        results = [rv_similar(ext_apply(ext_compose(c_s, c_r), t), ext_apply(ceva(u), t)) for t in tris]
        holds = all(results)
        yield "rv_criterion", holds == criterion and criterion == (target is not None)

    # (vi): a reversely similar partner is a relabelled similarity image
    lam = Cyc12(_random_rational(rng) or 1, 0, 0, _random_rational(rng))
    nu = Cyc12(_random_rational(rng), _random_rational(rng))
    d_rev = swap_last(d.map(lambda z: lam * z + nu))
    yield "rv_transfer", rv_similar(d, d_rev) and rv_similar(ext_apply(c_s, d), ext_apply(c_1s, d_rev))


def bclift_suite(seed: int = 0, count: int = 50) -> dict:
    """Exact check of the Hajja/Ceva shape identities at ``count`` random draws."""
    rng = random.Random(seed)
    report = {name: {"passed": True, "checks": 0} for name in BCLIFT_NAMES}
    for _ in range(count):
        for name, ok in _bclift_checks(rng):
            entry = report[name]
            entry["checks"] += 1
            entry["passed"] = entry["passed"] and bool(ok)
    return report
