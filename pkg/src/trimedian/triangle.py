"""Triangle triples and the elementary predicates on them."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .errors import DegenerateInput
from .scalar import Cyc12, as_scalar, conj, imag_sign, is_exact

# relative tolerance of the approximate backend, scaled by the vertex spread
APPROX_TOL = 1e-9


@dataclass(frozen=True)
class Triangle:
    """Ordered vertex triple (a0, a1, a2); indices are read modulo 3."""

    a0: object
    a1: object
    a2: object

    def __post_init__(self):
        for name in ("a0", "a1", "a2"):
            object.__setattr__(self, name, as_scalar(getattr(self, name)))

    @classmethod
    def of(cls, vertices) -> "Triangle":
        a0, a1, a2 = vertices
        return cls(a0, a1, a2)

    def __iter__(self):
        return iter((self.a0, self.a1, self.a2))

    def __getitem__(self, k: int):
        return (self.a0, self.a1, self.a2)[k % 3]

    def __len__(self):
        return 3

    @property
    def exact(self) -> bool:
        return is_exact(self.a0, self.a1, self.a2)

    def approx(self) -> "Triangle":
        return Triangle(complex(self.a0), complex(self.a1), complex(self.a2))

    def map(self, f) -> "Triangle":
        return Triangle(f(self.a0), f(self.a1), f(self.a2))

    def to_json(self) -> list:
        return [[complex(a).real, complex(a).imag] for a in self]

    @classmethod
    def from_json(cls, data) -> "Triangle":
        if len(data) != 3:
            raise ValueError("a triangle needs exactly three vertices")
        return cls(*(complex(float(re), float(im)) for re, im in data))

    def __str__(self):
        return "(" + ", ".join(_fmt(a) for a in self) + ")"


def _fmt(a) -> str:
    if isinstance(a, Cyc12):
        return a.to_text("auto")
    return f"{a.real:.15g}{a.imag:+.15g}i"


class TriangleClass(enum.Enum):
    TRIPLE_COLLISION = "TripleCollision"
    DOUBLE_COLLISION = "DoubleCollision"
    DEGENERATE_DISTINCT = "DegenerateDistinct"
    NON_DEGENERATE = "NonDegenerate"


def j_apply(d: Triangle, k: int = 1) -> Triangle:
    """J^k d, where (J d)_m = d_{m+1}; J(a0, a1, a2) = (a1, a2, a0)."""
    return Triangle(d[k], d[k + 1], d[k + 2])


def swap_last(d: Triangle) -> Triangle:
    return Triangle(d.a0, d.a2, d.a1)


def centroid(d: Triangle):
    return (d.a0 + d.a1 + d.a2) / 3 if d.exact else (d.a0 + d.a1 + d.a2) / 3.0


def _spread(d: Triangle) -> float:
    return max(abs(complex(d[k]) - complex(d[k + 1])) for k in range(3))


def classify(d: Triangle) -> TriangleClass:
    if d.exact:
        eq = [d[k] == d[k + 1] for k in range(3)]
        cross_sign = imag_sign((d.a1 - d.a0) * conj(d.a2 - d.a0))
    else:
        spread = _spread(d)
        tol = APPROX_TOL * spread
        eq = [abs(d[k] - d[k + 1]) <= tol for k in range(3)]
        cross_sign = imag_sign((d.a1 - d.a0) * conj(d.a2 - d.a0), tol * spread)
    if all(eq):
        return TriangleClass.TRIPLE_COLLISION
    if any(eq):
        return TriangleClass.DOUBLE_COLLISION
    if cross_sign == 0:
        return TriangleClass.DEGENERATE_DISTINCT
    return TriangleClass.NON_DEGENERATE


def orientation_positive(d: Triangle) -> bool:
    """True iff Im((a0 - a1)/(a2 - a1)) > 0, i.e. the triple runs counter-clockwise."""
    if classify(d) is not TriangleClass.NON_DEGENERATE:
        raise DegenerateInput(f"orientation of degenerate triangle {d}")
    # Im(u/v) has the sign of Im(u * conj(v))
    return imag_sign((d.a0 - d.a1) * conj(d.a2 - d.a1)) > 0


def squared_side_lengths(d: Triangle) -> tuple:
    """(|a1-a2|^2, |a2-a0|^2, |a0-a1|^2); exact (real Cyc12) on the exact backend."""
    out = []
    for k in (1, 2, 0):
        diff = d[k] - d[k + 1]
        out.append(diff * conj(diff) if d.exact else abs(diff) ** 2)
    return tuple(out)


def side_lengths(d: Triangle) -> tuple:
    """(|a1-a2|, |a2-a0|, |a0-a1|) in double precision."""
    return tuple(abs(complex(d[k]) - complex(d[k + 1])) for k in (1, 2, 0))


def signed_area(d: Triangle) -> float:
    """Shoelace area, positive for counter-clockwise triples."""
    a = [complex(v) for v in d]
    s = sum((a[k].conjugate() * a[(k + 1) % 3]) for k in range(3))
    return 0.5 * s.imag


def real_affine(d: Triangle, lam, mu, nu) -> Triangle:
    """Apply z -> lam*z + mu*conj(z) + nu to every vertex."""
    return d.map(lambda z: lam * z + mu * conj(z) + nu)


def euler_triangle() -> Triangle:
    """Euler's triangle with sides BC=174, CA=170, AB=136 placed as (0, 136, x+iy)."""
    ab, bc, ca = 136.0, 174.0, 170.0
    x = (ca**2 - bc**2 + ab**2) / (2 * ab)
    y = math.sqrt(ca**2 - x**2)
    return Triangle(0.0, ab, complex(x, y))
