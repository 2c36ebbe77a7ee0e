"""The monoid of centroid-preserving circulant operators alpha*I + beta*J + gamma*J^2.

An operator is stored by its circulant coefficients (alpha, beta, gamma).
The Fourier multipliers (eta, eta') and the cevian parameters (p, q) are
derived views:

* ``eta`` multiplies the second Fourier component psi2,
* ``eta'`` multiplies psi1,
* composition multiplies the multipliers componentwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .errors import InvalidPQ, NotInvertible, SingularParameter
from .scalar import ONE, ZERO, as_scalar, close, conj, is_exact, is_zero, omega
from .triangle import Triangle

SUM_TOL = 1e-12


@dataclass(frozen=True)
class EtaPair:
    eta: object
    eta_prime: object

    def __post_init__(self):
        object.__setattr__(self, "eta", as_scalar(self.eta))
        object.__setattr__(self, "eta_prime", as_scalar(self.eta_prime))

    def __iter__(self):
        return iter((self.eta, self.eta_prime))

    @property
    def exact(self) -> bool:
        return is_exact(self.eta, self.eta_prime)


@dataclass(frozen=True)
class PQPair:
    p: object
    q: object

    def __post_init__(self):
        object.__setattr__(self, "p", as_scalar(self.p))
        object.__setattr__(self, "q", as_scalar(self.q))

    def __iter__(self):
        return iter((self.p, self.q))

    @property
    def exact(self) -> bool:
        return is_exact(self.p, self.q)


@dataclass(frozen=True)
class CircOp:
    """alpha*I + beta*J + gamma*J^2 with alpha + beta + gamma = 1.

    Acting on a triple, a'_k = alpha*a_k + beta*a_{k+1} + gamma*a_{k+2}.
    """

    alpha: object
    beta: object
    gamma: object

    def __post_init__(self):
        a, b, g = (as_scalar(v) for v in (self.alpha, self.beta, self.gamma))
        object.__setattr__(self, "alpha", a)
        object.__setattr__(self, "beta", b)
        object.__setattr__(self, "gamma", g)
        total = a + b + g
        if is_exact(a, b, g):
            if total != ONE:
                raise ValueError(f"coefficients sum to {total}, not 1")
        elif abs(complex(total) - 1) > SUM_TOL * max(1.0, abs(a) + abs(b) + abs(g)):
            raise ValueError(f"coefficients sum to {complex(total)}, not 1")

    @property
    def exact(self) -> bool:
        return is_exact(self.alpha, self.beta, self.gamma)

    @property
    def coeffs(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)

    def matrix(self) -> list:
        a, b, g = self.coeffs
        return [[a, b, g], [g, a, b], [b, g, a]]

    def __call__(self, d: Triangle) -> Triangle:
        return apply(self, d)

    def __matmul__(self, other: "CircOp") -> "CircOp":
        return compose(self, other)

    def approx(self) -> "CircOp":
        return CircOp(*(complex(c) for c in self.coeffs))

    def __str__(self):
        return "S[a={}, b={}, g={}]".format(*(_fmt(c) for c in self.coeffs))


def _fmt(c) -> str:
    if hasattr(c, "to_text"):
        return c.to_text("auto")
    return f"{c.real:.15g}{c.imag:+.15g}i"


IDENTITY = CircOp(1, 0, 0)
J = CircOp(0, 1, 0)
J2 = CircOp(0, 0, 1)
CENTROID = CircOp(*(ONE / 3,) * 3)  # N = (I + J + J^2)/3


def j_power(k: int) -> CircOp:
    return (IDENTITY, J, J2)[k % 3]


def from_pq(pq: PQPair) -> CircOp:
    p, q = pq
    den = 1 - p * q
    if is_zero(den):
        raise InvalidPQ(f"p*q = 1 for (p, q) = ({p}, {q})")
    return CircOp(p * (1 - q) / den, q * (1 - p) / den, (1 - p) * (1 - q) / den)


def from_eta(e: EtaPair) -> CircOp:
    eta, etap = e
    w = omega(e.exact)
    w2 = w * w
    alpha = (1 + eta + etap) / 3
    beta = (1 + eta * w + etap * w2) / 3
    gamma = (1 + eta * w2 + etap * w) / 3
    if e.exact:
        return CircOp(alpha, beta, gamma)
    # restore the exact unit sum lost to rounding
    return CircOp(1 - beta - gamma, beta, gamma)


def to_eta(op: CircOp) -> EtaPair:
    a, b, g = op.coeffs
    w = omega(op.exact)
    w2 = w * w
    return EtaPair(a + b * w2 + g * w, a + b * w + g * w2)


def eta_from_pq(pq: PQPair) -> EtaPair:
    p, q = pq
    den = 1 - p * q
    if is_zero(den):
        raise InvalidPQ(f"p*q = 1 for (p, q) = ({p}, {q})")
    w = omega(pq.exact)
    base = (p - q) / den
    slope = (p - 1) * (2 * q - 1) / den
    return EtaPair(base + slope * w, base + slope * w * w)


def pq_from_eta(e: EtaPair) -> PQPair:
    eta, etap = e
    w = omega(e.exact)
    w2 = w * w
    den_p = 2 - w * eta - w2 * etap
    den_q = 2 - eta - etap
    if is_zero(den_q) and is_zero(1 + w * eta + w2 * etap) and not is_zero(den_p):
        # only (1, 1): the identity, whose p = 1 forces the limit q = 1
        raise InvalidPQ(f"(eta, eta') = ({eta}, {etap}) is the identity, p = q = 1")
    if is_zero(den_p) or is_zero(den_q):
        raise SingularParameter(f"(eta, eta') = ({eta}, {etap}) has no finite (p, q)")
    p = (1 + eta + etap) / den_p
    q = (1 + w * eta + w2 * etap) / den_q
    if is_zero(1 - p * q):
        raise InvalidPQ(f"(eta, eta') = ({eta}, {etap}) maps to p*q = 1")
    return PQPair(p, q)


def compose(a: CircOp, b: CircOp) -> CircOp:
    """Matrix product a @ b, computed as a cyclic convolution of coefficients."""
    x, y = a.coeffs, b.coeffs
    out = [x[0] * y[k] + x[1] * y[(k - 1) % 3] + x[2] * y[(k - 2) % 3] for k in range(3)]
    if not (a.exact and b.exact):
        out[0] = 1 - out[1] - out[2]
    return CircOp(*out)


def power(op: CircOp, k: int) -> CircOp:
    result = IDENTITY
    for _ in range(k):
        result = compose(result, op)
    return result


def apply(op: CircOp, d: Triangle) -> Triangle:
    a, b, g = op.coeffs
    return Triangle(*(a * d[k] + b * d[k + 1] + g * d[k + 2] for k in range(3)))


def inverse(op: CircOp) -> CircOp:
    eta, etap = to_eta(op)
    if is_zero(eta) or is_zero(etap):
        raise NotInvertible(f"{op} has a zero Fourier multiplier")
    return from_eta(EtaPair(1 / eta, 1 / etap))


def is_area_preserving(op: CircOp, tol: float = 1e-12) -> bool:
    eta, etap = to_eta(op)
    if op.exact:
        return eta * conj(eta) == ONE and etap * conj(etap) == ONE
    return abs(abs(eta) - 1) <= tol and abs(abs(etap) - 1) <= tol


def commutes_with_real_affine(op: CircOp, tol: float = 1e-12) -> bool:
    """True iff conj(eta) = eta', equivalently the circulant matrix is real."""
    eta, etap = to_eta(op)
    return close(conj(eta), etap, tol)


def find_affine_counterexample(op: CircOp, seed: int = 0, tries: int = 20, tol: float = 1e-9):
    """Search for a real affine map f(z) = lam z + mu conj(z) + nu with op(f(d)) != f(op(d)).

    Returns (d, (lam, mu, nu)) for the first failure found, else None.  Every
    draw has mu != 0, since maps with mu = 0 commute with every operator.
    """
    from .triangle import real_affine

    rng = random.Random(seed)
    op = op.approx()

    def draw():
        return complex(rng.uniform(-3, 3), rng.uniform(-3, 3))

    for _ in range(tries):
        d = Triangle(draw(), draw(), draw())
        lam, nu = draw(), draw()
        mu = draw() or 1 + 0j
        lhs = apply(op, real_affine(d, lam, mu, nu))
        rhs = real_affine(apply(op, d), lam, mu, nu)
        if max(abs(a - b) for a, b in zip(lhs, rhs)) > tol:
            return d, (lam, mu, nu)
    return None


def linear_combination(terms) -> CircOp:
    """sum c_i * op_i for an affine combination (sum c_i = 1) of operators."""
    acc = [ZERO, ZERO, ZERO]
    for c, op in terms:
        c = as_scalar(c)
        acc = [s + c * v for s, v in zip(acc, op.coeffs)]
    return CircOp(*acc)
