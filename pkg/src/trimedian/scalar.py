"""Scalar backends.

Two kinds of scalars flow through the package:

* :class:`Cyc12`, an exact element of the cyclotomic field Q(zeta) with
  zeta = exp(2 pi i / 12).  Every constant the geometry needs (omega, rho, i)
  lives here together with all rationals.
* plain Python ``complex`` for double-precision work.

Both support ``+ - * /``, ``conjugate()`` and ``complex(x)``.  Mixing a
``Cyc12`` with a float or complex silently downcasts to ``complex``; mixing
with ``int``/``Fraction`` stays exact.  Public functions normalise their
inputs with :func:`as_scalar` so that ints never fall into float division.
"""

from __future__ import annotations

import functools
import math
import numbers
from fractions import Fraction

from .errors import DivisionByZero

SQRT3_2 = math.sqrt(3.0) / 2.0

# multiplication table helpers: zeta^4 = zeta^2 - 1 (minimal polynomial of zeta)
_DEGREE = 4


def _frac(value) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, numbers.Rational):
        raise TypeError(f"Cyc12 coordinates must be rational, got {type(value).__name__}")
    return Fraction(value)


def _reduce(coeffs: list) -> list:
    # fold zeta^k for k >= 4 using zeta^k = zeta^(k-2) - zeta^(k-4)
    for k in range(len(coeffs) - 1, _DEGREE - 1, -1):
        c = coeffs[k]
        if c:
            coeffs[k - 2] += c
            coeffs[k - 4] -= c
    return coeffs[:_DEGREE]


def _normalised(nums, den: int):
    g = math.gcd(den, *nums)
    if den < 0:
        g = -g
    if g != 1:
        return tuple(n // g for n in nums), den // g
    return tuple(nums), den


class Cyc12:
    """Exact element c0 + c1*z + c2*z^2 + c3*z^3 of Q(z), z a primitive 12th root of unity.

    Stored as four integer numerators over one positive common denominator.
    Instances are immutable and hashable; rational elements hash like the
    equal ``Fraction`` so ``Cyc12(2) == 2`` behaves inside sets and dicts.
    """

    __slots__ = ("_n", "_d")

    def __init__(self, c0=0, c1=0, c2=0, c3=0):
        cs = [_frac(c) for c in (c0, c1, c2, c3)]
        den = math.lcm(*(c.denominator for c in cs))
        nums, den = _normalised([c.numerator * (den // c.denominator) for c in cs], den)
        object.__setattr__(self, "_n", nums)
        object.__setattr__(self, "_d", den)

    @classmethod
    def _make(cls, nums, den: int) -> "Cyc12":
        nums, den = _normalised(nums, den)
        obj = object.__new__(cls)
        object.__setattr__(obj, "_n", nums)
        object.__setattr__(obj, "_d", den)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("Cyc12 is immutable")

    def __reduce__(self):
        return (Cyc12, self.coords)

    @property
    def coords(self) -> tuple:
        """The four rational coordinates on the power basis."""
        return tuple(Fraction(n, self._d) for n in self._n)

    # -- coercion ---------------------------------------------------------

    @staticmethod
    def _lift(other):
        """Return a Cyc12 for exact operands, a complex for inexact ones, else None."""
        if isinstance(other, Cyc12):
            return other
        if isinstance(other, bool):
            return None
        if isinstance(other, numbers.Rational):
            return Cyc12._make((other.numerator, 0, 0, 0), other.denominator)
        if isinstance(other, numbers.Complex):
            return complex(other)
        return None

    # -- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, complex):
            return complex(self) + o
        d1, d2 = self._d, o._d
        return Cyc12._make([a * d2 + b * d1 for a, b in zip(self._n, o._n)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        obj = object.__new__(Cyc12)
        object.__setattr__(obj, "_n", tuple(-a for a in self._n))
        object.__setattr__(obj, "_d", self._d)
        return obj

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, complex):
            return complex(self) - o
        d1, d2 = self._d, o._d
        return Cyc12._make([a * d2 - b * d1 for a, b in zip(self._n, o._n)], d1 * d2)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, complex):
            return o - complex(self)
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, complex):
            return complex(self) * o
        a, b = self._n, o._n
        den = self._d * o._d
        if not (b[1] or b[2] or b[3]):
            return Cyc12._make([x * b[0] for x in a], den)
        if not (a[1] or a[2] or a[3]):
            return Cyc12._make([a[0] * y for y in b], den)
        prod = [0] * 7
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return Cyc12._make(_reduce(prod), den)

    __rmul__ = __mul__

    def inverse(self) -> "Cyc12":
        """Multiplicative inverse, solving the 4x4 system of multiplication by self."""
        if not self:
            raise DivisionByZero("inverse of zero in Q(zeta12)")
        return _inverse(self)

    def _solve_inverse(self) -> "Cyc12":
        n = self._n
        if not (n[1] or n[2] or n[3]):
            return Cyc12._make((self._d, 0, 0, 0), n[0])
        # column j holds the coordinates of self * zeta^j
        cols = []
        power = self
        for _ in range(_DEGREE):
            cols.append(power.coords)
            power = power * ZETA
        rows = [[cols[j][i] for j in range(_DEGREE)] + [Fraction(int(i == 0))] for i in range(_DEGREE)]
        size = _DEGREE
        for col in range(size):
            piv = next(r for r in range(col, size) if rows[r][col])
            rows[col], rows[piv] = rows[piv], rows[col]
            pv = rows[col][col]
            rows[col] = [v / pv for v in rows[col]]
            for r in range(size):
                if r != col and rows[r][col]:
                    f = rows[r][col]
                    rows[r] = [v - f * w for v, w in zip(rows[r], rows[col])]
        return Cyc12(*(rows[i][size] for i in range(size)))

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, complex):
            if o == 0:
                raise DivisionByZero("complex division by zero")
            return complex(self) / o
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, complex):
            if not self:
                raise DivisionByZero("complex division by zero")
            return o / complex(self)
        return o * self.inverse()

    def __pow__(self, exponent):
        if isinstance(exponent, bool) or not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        e = abs(exponent)
        result = ONE
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- conjugation and real structure -------------------------------------

    def conjugate(self) -> "Cyc12":
        # zeta -> zeta^-1 = zeta - zeta^3 ; zeta^2 -> 1 - zeta^2 ; zeta^3 -> -zeta^3
        c0, c1, c2, c3 = self._n
        return Cyc12._make((c0 + c2, c1, -c2, -c1 - c3), self._d)

    def is_real(self) -> bool:
        c0, c1, c2, c3 = self._n
        return c2 == 0 and c1 == -2 * c3

    def real_part(self) -> "Cyc12":
        return (self + self.conjugate()) * Fraction(1, 2)

    def imag_part(self) -> "Cyc12":
        return (self - self.conjugate()) * (-I) * Fraction(1, 2)

    def abs2(self) -> "Cyc12":
        return self * self.conjugate()

    def sign(self) -> int:
        """Exact sign of a real element x + y*sqrt(3); raises for non-real input."""
        if not self.is_real():
            raise ValueError(f"sign() of non-real element {self}")
        x, y = self._n[0], -self._n[3]
        sx = (x > 0) - (x < 0)
        sy = (y > 0) - (y < 0)
        if sx == sy or sy == 0:
            return sx
        if sx == 0:
            return sy
        # opposite signs: compare x^2 with 3*y^2
        d = x * x - 3 * y * y  # common positive denominator cancels
        return sx if d > 0 else sy

    def is_rational(self) -> bool:
        return not (self._n[1] or self._n[2] or self._n[3])

    # -- conversions ------------------------------------------------------

    def __complex__(self) -> complex:
        c0, c1, c2, c3 = (float(c) for c in self.coords)
        return complex(c0 + c1 * SQRT3_2 + c2 * 0.5, c1 * 0.5 + c2 * SQRT3_2 + c3)

    def downcast(self) -> complex:
        return complex(self)

    def __bool__(self) -> bool:
        return any(self._n)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if isinstance(o, complex):
            return complex(self) == o
        return self._n == o._n and self._d == o._d

    def __hash__(self):
        if self.is_rational():
            return hash(Fraction(self._n[0], self._d))
        return hash((self._n, self._d))

    def __repr__(self):
        return f"Cyc12.parse({self.to_text('z')!r})"

    def __str__(self):
        return self.to_text("auto")

    def to_text(self, style: str = "z") -> str:
        """Render as ``c0 + c1*z + c2*z^2 + c3*z^3`` (style ``"z"``).

        Style ``"auto"`` prefers ``a + b*i`` for Gaussian rationals and
        ``a + b*w`` for elements of Q(omega); both forms parse back.
        """
        c0, c1, c2, c3 = self.coords
        if style == "auto":
            if not (c1 or c2):
                return _join_terms([(c0, ""), (c3, "i")])
            if not (c1 or c3):
                return _join_terms([(c0 + c2, ""), (c2, "w")])
        return _join_terms([(c0, ""), (c1, "z"), (c2, "z^2"), (c3, "z^3")])

    @classmethod
    def parse(cls, text: str) -> "Cyc12":
        from .literals import parse_scalar

        return parse_scalar(text)


def _fmt_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _join_terms(terms) -> str:
    out = []
    for coeff, sym in terms:
        if not coeff:
            continue
        neg = coeff < 0
        mag = -coeff if neg else coeff
        if sym:
            body = sym if mag == 1 else f"{_fmt_rational(mag)}*{sym}"
        else:
            body = _fmt_rational(mag)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out) if out else "0"


@functools.lru_cache(maxsize=4096)
def _inverse(a: Cyc12) -> Cyc12:
    return a._solve_inverse()


ZERO = Cyc12()
ONE = Cyc12(1)
ZETA = Cyc12(0, 1)
I = Cyc12(0, 0, 0, 1)
RHO = Cyc12(0, 0, 1)
OMEGA = Cyc12(-1, 0, 1)
OMEGA2 = OMEGA * OMEGA

OMEGA_C = complex(-0.5, SQRT3_2)
OMEGA2_C = complex(-0.5, -SQRT3_2)


# -- backend-generic helpers ---------------------------------------------------


def as_scalar(x):
    """Normalise an input number: exact numbers become Cyc12, inexact become complex."""
    if isinstance(x, Cyc12):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, numbers.Rational):
        return Cyc12(x)
    if isinstance(x, numbers.Complex):
        return complex(x)
    raise TypeError(f"not a scalar: {x!r}")


def is_exact(*xs) -> bool:
    return all(isinstance(x, (Cyc12, numbers.Rational)) and not isinstance(x, bool) for x in xs)


def omega(exact: bool = True):
    return OMEGA if exact else OMEGA_C


def omega_pow(k: int, exact: bool = True):
    k %= 3
    if exact:
        return (ONE, OMEGA, OMEGA2)[k]
    return (1 + 0j, OMEGA_C, OMEGA2_C)[k]


def conj(x):
    return x.conjugate()


def is_zero(x, tol: float = 1e-12) -> bool:
    """Exact zero test for Cyc12; absolute tolerance for complex."""
    if isinstance(x, Cyc12):
        return not x
    return abs(x) <= tol


def close(x, y, tol: float = 1e-12) -> bool:
    if isinstance(x, Cyc12) and isinstance(y, Cyc12):
        return x == y
    return abs(complex(x) - complex(y)) <= tol


def to_complex(x) -> complex:
    return complex(x)


def imag_sign(x, tol: float = 0.0) -> int:
    """Sign of Im(x): exact for Cyc12, with absolute tolerance for complex."""
    if isinstance(x, Cyc12):
        return x.imag_part().sign()
    im = complex(x).imag
    if abs(im) <= tol:
        return 0
    return 1 if im > 0 else -1
