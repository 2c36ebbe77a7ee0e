"""Generalized median operators M^{wx/yz}[eta, eta'].

Given a triangle d and d' = S[eta, eta'](d), the median triangle d'' is the
triple sharing the centroid of d whose side a''_{y+k} -> a''_{z+k} equals the
bridge a_{w+k} -> a'_{x+k} for every k.  Every such operator is again a
circulant operator; :func:`median_eta` gives its Fourier multipliers in closed
form and :func:`median_oracle` solves the defining linear system directly.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .cevian import (
    CENTROID,
    CircOp,
    EtaPair,
    PQPair,
    apply,
    compose,
    eta_from_pq,
    from_eta,
    from_pq,
    j_power,
    linear_combination,
    pq_from_eta,
)
from .errors import InconsistentSystem, InvalidPQ, ParseError, SingularParameter
from .scalar import ONE, OMEGA, Cyc12, as_scalar, omega_pow
from .triangle import Triangle

_LABEL_RE = re.compile(r"^\s*([0-2])([0-2])\s*/\s*([0-2])([0-2])\s*$")


@dataclass(frozen=True, order=True)
class MedianLabel:
    w: int
    x: int
    y: int
    z: int

    def __post_init__(self):
        for name in "wxyz":
            object.__setattr__(self, name, getattr(self, name) % 3)
        if self.y == self.z:
            raise ValueError(f"median label needs y != z, got {self}")

    @classmethod
    def parse(cls, text: str) -> "MedianLabel":
        m = _LABEL_RE.match(text)
        if not m:
            raise ParseError("median label must look like 'wx/yz'", text, 0)
        try:
            return cls(*(int(g) for g in m.groups()))
        except ValueError as exc:
            raise ParseError(str(exc), text, 0) from None

    def shifted(self, dw=0, dx=0, dy=0, dz=0) -> "MedianLabel":
        return MedianLabel(self.w + dw, self.x + dx, self.y + dy, self.z + dz)

    def __str__(self):
        return f"{self.w}{self.x}/{self.y}{self.z}"


def all_labels() -> list:
    """All 54 labels (w, x, y, z) with y != z."""
    return [MedianLabel(*t) for t in product(range(3), repeat=4) if t[2] != t[3]]


def _denominators(label: MedianLabel, exact: bool):
    return (
        omega_pow(-label.z, exact) - omega_pow(-label.y, exact),
        omega_pow(label.z, exact) - omega_pow(label.y, exact),
    )


def median_eta(label: MedianLabel, e: EtaPair) -> EtaPair:
    """Multipliers (eta0, eta1) with M^{label}[eta, eta'] = S[eta0, eta1]."""
    exact = e.exact
    den0, den1 = _denominators(label, exact)
    eta0 = (e.eta * omega_pow(-label.x, exact) - omega_pow(-label.w, exact)) / den0
    eta1 = (e.eta_prime * omega_pow(label.x, exact) - omega_pow(label.w, exact)) / den1
    return EtaPair(eta0, eta1)


def median_op(label: MedianLabel, e: EtaPair) -> CircOp:
    return from_eta(median_eta(label, e))


def median_op_pq(label: MedianLabel, pq: PQPair) -> CircOp:
    return median_op(label, eta_from_pq(pq))


def median_apply(label: MedianLabel, e: EtaPair, d: Triangle) -> Triangle:
    return apply(median_op(label, e), d)


def median_oracle(label: MedianLabel, d: Triangle, d_prime: Triangle, tol: float = 1e-9) -> Triangle:
    """Solve the concentroid + vector-matching system for d'' by elimination.

    Unknowns u0, u1, u2.  Equations: u0 + u1 + u2 = sum(d) and
    u_{z+k} - u_{y+k} = d'_{x+k} - d_{w+k} for k in Z/3.  Coefficients are
    integers, so elimination stays exact on the exact backend.
    """
    rows = [[Fraction(1)] * 3 + [d.a0 + d.a1 + d.a2]]
    for k in range(3):
        coeffs = [Fraction(0)] * 3
        coeffs[(label.z + k) % 3] += 1
        coeffs[(label.y + k) % 3] -= 1
        rows.append(coeffs + [d_prime[label.x + k] - d[label.w + k]])
    exact = d.exact and d_prime.exact
    n_rows, n_cols = len(rows), 3
    r = 0
    for col in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        pv = rows[r][col]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        r += 1
    if r < n_cols:
        raise InconsistentSystem("median system is rank deficient")
    scale = max(1.0, max(abs(complex(v)) for v in d) + max(abs(complex(v)) for v in d_prime))
    for i in range(r, n_rows):
        rest = as_scalar(rows[i][n_cols])
        if (exact and rest) or (not exact and abs(complex(rest)) > tol * scale):
            raise InconsistentSystem("bridge vectors do not sum to zero; d' is not concentroid with d")
    return Triangle(*(rows[i][n_cols] for i in range(n_cols)))


# -- label reduction ---------------------------------------------------------


@dataclass(frozen=True)
class LabelTransform:
    """M^{label} = C @ J^j_power, or 2N - C @ J^j_power when point_symmetric,
    where C = M^{canonical} at the same (eta, eta')."""

    canonical: MedianLabel
    j_power: int
    point_symmetric: bool
    steps: tuple = field(default=())

    def rebuild(self, canonical_op: CircOp) -> CircOp:
        op = compose(canonical_op, j_power(self.j_power))
        if self.point_symmetric:
            op = linear_combination([(2, CENTROID), (-1, op)])
        return op


def canonical_label(label: MedianLabel) -> LabelTransform:
    """Reduce any label to one of 00/01, 01/01, 02/01."""
    steps = []
    sym = False
    w, x, y, z = label.w, label.x, label.y, label.z
    if (z - y) % 3 == 2:
        # point symmetry swaps y and z
        y, z = z, y
        sym = True
        steps.append("point_symmetry")
    d = (x - w) % 3
    k = (w + 2 * y) % 3
    if y:
        steps.append(f"right_J2 x{y}")
    if w:
        steps.append(f"right_J x{w}")
    return LabelTransform(MedianLabel(0, d, 0, 1), k, sym, tuple(steps))


# -- identity families -------------------------------------------------------

IDENTITY_NAMES = (
    "rotate_cevian",  # S[e,e'] = S[e w, e' w^-1] J = J S[e w, e' w^-1]
    "shift_all_labels",  # M^{wx/yz} = M^{w+1,x+1/y+1,z+1}
    "right_J",  # M^{wx/yz} J = M^{w+1,x+1/yz}
    "right_J2",  # M^{wx/yz} J^2 = M^{wx/y+1,z+1}
    "rotate_x",  # M^{wx/yz}[e,e'] = M^{w,x+1/yz}[e w, e' w^-1] = M^{w,x-1/yz}[e w^-1, e' w]
    "average_over_x",  # mean_x M^{wx/yz} = J^{w+y+z}/3 + 2 J^{w-y}/3
    "point_symmetry",  # (M^{wx/yz} + M^{wx/zy})/2 = (I + J + J^2)/3
    "constant_shift",  # M^{wx/yz}[w^{x-w}+e, w^{w-x}+e'] = J^x M^{00/yz}[1+e, 1+e']
)


def random_cyc12(rng: random.Random, bound: int = 9) -> Cyc12:
    return Cyc12(*(Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(4)))


def random_rational(rng: random.Random, bound: int = 20) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _identity_checks(label: MedianLabel, e: EtaPair):
    """Yield (identity name, holds) for one label and one parameter point."""
    eta, etap = e
    M = lambda lab, a=eta, b=etap: median_op(lab, EtaPair(a, b))  # noqa: E731
    J1, J2_ = j_power(1), j_power(2)
    w_, w2 = OMEGA, OMEGA * OMEGA
    base = M(label)

    s = from_eta(e)
    rotated = from_eta(EtaPair(eta * w_, etap * w2))
    yield "rotate_cevian", s == compose(rotated, J1) == compose(J1, rotated)

    yield "shift_all_labels", base == M(label.shifted(1, 1, 1, 1))
    yield "right_J", compose(base, J1) == M(label.shifted(dw=1, dx=1))
    yield "right_J2", compose(base, J2_) == M(label.shifted(dy=1, dz=1))
    yield "rotate_x", (
        base == M(label.shifted(dx=1), eta * w_, etap * w2) == M(label.shifted(dx=-1), eta * w2, etap * w_)
    )

    if label.x == 0:
        third = Fraction(1, 3)
        avg = linear_combination([(third, M(MedianLabel(label.w, xx, label.y, label.z))) for xx in range(3)])
        rhs = linear_combination(
            [(third, j_power(label.w + label.y + label.z)), (2 * third, j_power(label.w - label.y))]
        )
        yield "average_over_x", avg == rhs

    swapped = MedianLabel(label.w, label.x, label.z, label.y)
    half = Fraction(1, 2)
    yield "point_symmetry", linear_combination([(half, base), (half, M(swapped))]) == CENTROID
    yield "point_symmetry", from_pq(PQPair(half, half)) == CENTROID

    lhs = M(label, omega_pow(label.x - label.w) + eta, omega_pow(label.w - label.x) + etap)
    rhs = compose(j_power(label.x), M(MedianLabel(0, 0, label.y, label.z), 1 + eta, 1 + etap))
    yield "constant_shift", lhs == rhs


def identity_suite(seed: int = 0, count: int = 100, labels=None) -> dict:
    """Check every identity family exactly at ``count`` random points of Q(zeta12)^2.

    Returns {name: {"passed": bool, "checks": int, "failures": [...]}}.
    """
    rng = random.Random(seed)
    labels = all_labels() if labels is None else labels
    report = {name: {"passed": True, "checks": 0, "failures": []} for name in IDENTITY_NAMES}
    for _ in range(count):
        e = EtaPair(random_cyc12(rng), random_cyc12(rng))
        for label in labels:
            for name, ok in _identity_checks(label, e):
                entry = report[name]
                entry["checks"] += 1
                if not ok:
                    entry["passed"] = False
                    if len(entry["failures"]) < 5:
                        entry["failures"].append({"label": str(label), "eta": str(e.eta), "eta_prime": str(e.eta_prime)})
    return report


# -- (p, q) translation -------------------------------------------------------


def table1_pq(label: MedianLabel, pq: PQPair) -> PQPair:
    """(p1, q1) with M^{label}_{p,q} = S_{p1,q1}."""
    return pq_from_eta(median_eta(label, eta_from_pq(pq)))


# Published closed forms: label -> ((p, q) -> (p1, q1), (p1, q1) -> (p, q)).
TABLE1 = {
    MedianLabel(0, 0, 0, 1): (
        lambda p, q: ((2 * p * q + p - q - 2) / (4 * p * q - p - 2 * q - 1), -(p - 2) / (1 + p)),
        lambda p1, q1: (-(q1 - 2) / (q1 + 1), -(p1 - q1) / ((2 * p1 - 1) * (q1 - 1))),
    ),
    MedianLabel(0, 1, 0, 1): (
        lambda p, q: ((4 * p * q - 2 * p - q - 1) / (2 * p * q - p + q - 2), -(q + 1) / (q - 2)),
        lambda p1, q1: ((p1 - q1) / ((p1 - 2) * (q1 - 1)), (2 * q1 - 1) / (q1 + 1)),
    ),
    MedianLabel(0, 2, 0, 1): (
        lambda p, q: ((p + 2 * q - 3) / (2 * p + q - 3), (3 * p * q - 2 * p - q) / (3 * p * q - p - 2 * q)),
        lambda p1, q1: (
            (p1 - 1) * (2 * q1 - 1) / ((2 * p1 - 1) * (q1 - 1)),
            (p1 - 1) * (q1 - 2) / ((p1 - 2) * (q1 - 1)),
        ),
    ),
    MedianLabel(0, 0, 1, 2): (
        lambda p, q: (-(p - 2) * (q - 1) / (p * q + 2 * p + q - 4), (2 * p - 1) * (q - 1) / (4 * p * q - p - 2 * q - 1)),
        lambda p1, q1: (
            (3 * p1 * q1 - p1 - 2 * q1) / (3 * p1 * q1 - 2 * p1 - q1),
            (2 * p1 - 1) * (q1 - 1) / ((p1 - 1) * (2 * q1 - 1)),
        ),
    ),
    MedianLabel(0, 0, 2, 0): (
        lambda p, q: ((2 * p - 1) / (p + 1), (2 * p * q + p - q - 2) / (p * q + 2 * p + q - 4)),
        lambda p1, q1: (-(p1 + 1) / (p1 - 2), (p1 - 1) * (2 * q1 - 1) / (p1 - q1)),
    ),
}


# -- M = S fixed points ----------------------------------------------------------


def fixed_point_op(label: MedianLabel) -> CircOp:
    """The unique S in the monoid with M^{label}[S] = S, i.e. (J^x + J^y - J^z)^-1 J^w."""
    eta = omega_pow(-label.w) / (omega_pow(-label.x) + omega_pow(-label.y) - omega_pow(-label.z))
    etap = omega_pow(label.w) / (omega_pow(label.x) + omega_pow(label.y) - omega_pow(label.z))
    return from_eta(EtaPair(eta, etap))


ROUTH_PAIRS = tuple(
    PQPair(Fraction(a), Fraction(b))
    for a, b in (("4/5", "2/3"), ("1/5", "1/3"), ("2/3", "1/3"), ("1/3", "2/3"), ("1/3", "1/5"), ("2/3", "4/5"))
)


@dataclass(frozen=True)
class FixedPointPQ:
    """Solutions (p, q), pq != 1, of from_pq(p, q) = fixed_point_op(label).

    ``kind`` is 1 (a power of J), 2 (half sum of two powers of J) or 3 (Routh
    coefficients {1/7, 2/7, 4/7}).  ``free`` names a coordinate that may take
    any value != 1 when the solutions form a one-parameter family; ``pairs``
    then holds a representative.  Empty ``pairs`` means no valid (p, q).
    """

    kind: int
    pairs: tuple
    free: str | None = None

    @property
    def no_valid_pq(self) -> bool:
        return not self.pairs


def _op_kind(op: CircOp) -> int:
    coeffs = sorted(Fraction(c.coords[0]) for c in op.coeffs)
    if coeffs == [0, 0, 1]:
        return 1
    if coeffs == [0, Fraction(1, 2), Fraction(1, 2)]:
        return 2
    if coeffs == [Fraction(1, 7), Fraction(2, 7), Fraction(4, 7)]:
        return 3
    raise ValueError(f"unexpected fixed-point operator {op}")


def solve_pq(op: CircOp) -> tuple:
    """All (p, q) with from_pq(p, q) == op, as (pairs, free coordinate or None).

    Inverting the coefficient formulas gives p = alpha/(1 - beta) and
    q = beta/(1 - alpha); alpha = 1 forces p = 1 with q free, beta = 1 forces
    q = 1 with p free.  Every candidate is re-checked exactly.
    """
    a, b, g = op.coeffs
    if a == ONE:
        if b or g:
            return (), None
        return (PQPair(1, 0),), "q"
    if b == ONE:
        if a or g:
            return (), None
        return (PQPair(0, 1),), "p"
    cand = PQPair(a / (1 - b), b / (1 - a))
    try:
        if from_pq(cand) == op:
            return (cand,), None
    except InvalidPQ:
        pass
    return (), None


def fixed_point_pq_solutions(label: MedianLabel) -> FixedPointPQ:
    op = fixed_point_op(label)
    pairs, free = solve_pq(op)
    return FixedPointPQ(_op_kind(op), pairs, free)


def hajja_forms(s) -> dict:
    """Alternative median expressions of the s-median operator, keyed by label.

    Forms whose (p, q) hits a pole at this s are left out.
    """
    s = as_scalar(s)
    specs = {
        "00/01": lambda: PQPair((s - 2) / (s - 1), s / (s - 1)),
        "01/01": lambda: PQPair(s / 2, 1 / (s - 1)),
        "02/01": lambda: PQPair(1 / (1 - s), (2 - s) / 2),
    }
    out = {}
    for text, make in specs.items():
        try:
            out[text] = median_op_pq(MedianLabel.parse(text), make())
        except (ZeroDivisionError, InvalidPQ):
            continue
    return out


# -- suites used by the CLI and the acceptance tests ----------------------------

# Printed (alpha, beta, gamma) of the M = S fixed point for every label wx/yz with w = 0.
FIXED_POINT_TABLE = {
    label: tuple(Fraction(v) for v in coeffs.split())
    for label, coeffs in (
        ("00/01", "4/7 2/7 1/7"), ("01/01", "1 0 0"), ("02/01", "1/2 1/2 0"),
        ("00/10", "0 0 1"), ("01/10", "1/7 2/7 4/7"), ("02/10", "0 1/2 1/2"),
        ("00/02", "4/7 1/7 2/7"), ("01/02", "1/2 0 1/2"), ("02/02", "1 0 0"),
        ("00/20", "0 1 0"), ("01/20", "0 1/2 1/2"), ("02/20", "1/7 4/7 2/7"),
        ("00/12", "1/2 0 1/2"), ("01/12", "2/7 1/7 4/7"), ("02/12", "0 0 1"),
        ("00/21", "1/2 1/2 0"), ("01/21", "0 1 0"), ("02/21", "2/7 4/7 1/7"),
    )
}

# Printed kind of each fixed point: 1 = power of J, 2 = half sum, 3 = Routh.
FIXED_POINT_KINDS = {
    1: ("01/01", "00/10", "02/02", "00/20", "02/12", "01/21"),
    2: ("02/01", "02/10", "01/02", "01/20", "00/12", "00/21"),
    3: ("00/01", "01/10", "00/02", "02/20", "01/12", "02/21"),
}


def fixed_point_suite() -> dict:
    """Compare every fixed point with the printed table and its (p, q) classification."""
    rows = []
    for text, expected in FIXED_POINT_TABLE.items():
        label = MedianLabel.parse(text)
        op = fixed_point_op(label)
        sol = fixed_point_pq_solutions(label)
        kind_ok = text in FIXED_POINT_KINDS[sol.kind]
        pq_ok = True
        if sol.kind == 3:
            pq_ok = len(sol.pairs) == 1 and sol.pairs[0] in ROUTH_PAIRS
            pq_ok = pq_ok and median_op_pq(label, sol.pairs[0]) == from_pq(sol.pairs[0])
        rows.append(
            {
                "label": text,
                "coeffs": [str(c) for c in op.coeffs],
                "matches_table": op.coeffs == tuple(Cyc12(v) for v in expected),
                "kind": sol.kind,
                "kind_matches": kind_ok,
                "pq": [[str(v) for v in pair] for pair in sol.pairs],
                "free": sol.free,
                "pq_ok": pq_ok,
            }
        )
    routh_ok = from_pq(PQPair(Fraction(4, 5), Fraction(2, 3))) == CircOp(Fraction(4, 7), Fraction(2, 7), Fraction(1, 7))
    half_ij = CircOp(Fraction(1, 2), Fraction(1, 2), 0)
    never_half = all(not (fixed_point_op(MedianLabel.parse(t)) == half_ij and fixed_point_pq_solutions(MedianLabel.parse(t)).pairs) for t in FIXED_POINT_TABLE)
    passed = routh_ok and never_half and all(r["matches_table"] and r["kind_matches"] and r["pq_ok"] for r in rows)
    return {"passed": passed, "rows": rows, "from_pq_4/5_2/3": routh_ok, "half_I_plus_J_unsolvable": never_half}


def _both_sides(fn, *args):
    try:
        return fn(*args)
    except (ZeroDivisionError, InvalidPQ, SingularParameter):
        return None


def table1_suite(seed: int = 0, count: int = 20) -> dict:
    """Check each closed-form (p, q) row, both directions, at ``count`` random rational (p, q)."""
    rng = random.Random(seed)
    report = {}
    for label, (forward, backward) in TABLE1.items():
        checks, ok = 0, True
        attempts = 0
        while checks < count and attempts < 50 * count:
            attempts += 1
            pq = PQPair(random_rational(rng), random_rational(rng))
            computed = _both_sides(table1_pq, label, pq)
            printed = _both_sides(lambda p, q: tuple(as_scalar(v) for v in forward(p, q)), pq.p, pq.q)
            if computed is None or printed is None:
                continue
            back = _both_sides(lambda p, q: tuple(as_scalar(v) for v in backward(p, q)), *computed)
            checks += 1
            ok = ok and tuple(computed) == printed and (back is None or back == tuple(pq))
        report[str(label)] = {"passed": ok and checks == count, "checks": checks}
    return report
