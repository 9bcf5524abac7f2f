"""Exact arithmetic substrate: the golden ring Z[phi] and the order-10
cyclotomic integer lattice.

Every geometric predicate in this package reduces to integer arithmetic on
these two types, so there is no floating-point tolerance anywhere in the
decision paths.  Floats appear only in :meth:`GoldenInt.value` and
:meth:`LatticePoint.embed`, which exist for rendering and diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

PHI = (1.0 + math.sqrt(5.0)) / 2.0

_SQRT5 = math.sqrt(5.0)

# cos/sin of k*36 degrees, used only by embed().
_COS = tuple(math.cos(math.pi * k / 5.0) for k in range(10))
_SIN = tuple(math.sin(math.pi * k / 5.0) for k in range(10))


@dataclass(frozen=True, slots=True)
class GoldenInt:
    """An element a + b*phi of Z[phi], reduced by phi**2 = phi + 1.

    Python integers are unbounded, so products can never wrap around;
    "overflow" in the sense of silently losing precision cannot happen.
    """

    a: int = 0
    b: int = 0

    def __add__(self, other: GoldenInt | int) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self.a + other, self.b)
        if isinstance(other, GoldenInt):
            return GoldenInt(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other: GoldenInt | int) -> GoldenInt:
        return self + (-other if isinstance(other, GoldenInt) else GoldenInt(-other, 0))

    def __rsub__(self, other: int) -> GoldenInt:
        return (-self) + other

    def __neg__(self) -> GoldenInt:
        return GoldenInt(-self.a, -self.b)

    def __mul__(self, other: GoldenInt | int) -> GoldenInt:
        if isinstance(other, int):
            return GoldenInt(self.a * other, self.b * other)
        if isinstance(other, GoldenInt):
            # (a1 + b1 phi)(a2 + b2 phi), with phi^2 = phi + 1
            return GoldenInt(
                self.a * other.a + self.b * other.b,
                self.a * other.b + self.b * other.a + self.b * other.b,
            )
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GoldenInt:
        if n < 0:
            raise ValueError("negative powers leave Z[phi]")
        out = GoldenInt(1, 0)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def conj(self) -> GoldenInt:
        """Galois conjugate: phi -> 1 - phi."""
        return GoldenInt(self.a + self.b, -self.b)

    def norm(self) -> int:
        """Field norm a^2 + a*b - b^2 (self times conjugate)."""
        return self.a * self.a + self.a * self.b - self.b * self.b

    def sign(self) -> int:
        """Exact sign of a + b*phi as a real number."""
        # a + b*phi > 0  <=>  (2a + b) + b*sqrt(5) > 0
        u, v = 2 * self.a + self.b, self.b
        if v == 0:
            return (u > 0) - (u < 0)
        if v > 0:
            if u >= 0:
                return 1
            return 1 if 5 * v * v > u * u else (-1 if 5 * v * v < u * u else 0)
        if u <= 0:
            return -1
        return -1 if 5 * v * v > u * u else (1 if 5 * v * v < u * u else 0)

    def __lt__(self, other: GoldenInt | int) -> bool:
        o = other if isinstance(other, GoldenInt) else GoldenInt(other, 0)
        return (self - o).sign() < 0

    def __le__(self, other: GoldenInt | int) -> bool:
        o = other if isinstance(other, GoldenInt) else GoldenInt(other, 0)
        return (self - o).sign() <= 0

    def __gt__(self, other: GoldenInt | int) -> bool:
        return not self <= other

    def __ge__(self, other: GoldenInt | int) -> bool:
        return not self < other

    def divide_exact(self, k: int) -> GoldenInt:
        """Divide both coefficients by the integer k; error unless exact."""
        if k == 0 or self.a % k or self.b % k:
            raise ValueError(f"{self} is not divisible by {k}")
        return GoldenInt(self.a // k, self.b // k)

    def value(self) -> float:
        return self.a + self.b * PHI

    def __repr__(self) -> str:
        return f"GoldenInt({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a}{self.b:+d}φ"


GOLDEN_ZERO = GoldenInt(0, 0)
GOLDEN_ONE = GoldenInt(1, 0)
GOLDEN_PHI = GoldenInt(0, 1)


def gmul(x: GoldenInt, y: GoldenInt) -> GoldenInt:
    """Exact product in Z[phi]."""
    return x * y


def phi_power(n: int) -> GoldenInt:
    """phi**n for n >= 0 (Fibonacci coefficients)."""
    return GOLDEN_PHI**n


@dataclass(frozen=True, slots=True)
class LatticePoint:
    """A point of the plane with exact coordinates sum(c_i * zeta^i),
    where zeta = exp(i*pi/5), reduced by zeta^4 - zeta^3 + zeta^2 - zeta + 1 = 0.

    The lattice is closed under 36-degree rotation (multiplication by zeta),
    reflection in the x axis, translation, and scaling by elements of Z[phi],
    which is exactly the rigid-motion vocabulary the tilings need.
    """

    c0: int = 0
    c1: int = 0
    c2: int = 0
    c3: int = 0

    def coords(self) -> tuple[int, int, int, int]:
        return (self.c0, self.c1, self.c2, self.c3)

    def __add__(self, other: LatticePoint) -> LatticePoint:
        return LatticePoint(
            self.c0 + other.c0, self.c1 + other.c1, self.c2 + other.c2, self.c3 + other.c3
        )

    def __sub__(self, other: LatticePoint) -> LatticePoint:
        return LatticePoint(
            self.c0 - other.c0, self.c1 - other.c1, self.c2 - other.c2, self.c3 - other.c3
        )

    def __neg__(self) -> LatticePoint:
        return LatticePoint(-self.c0, -self.c1, -self.c2, -self.c3)

    def __bool__(self) -> bool:
        return any(self.coords())

    def rotate(self, k: int) -> LatticePoint:
        """Rotate by k*36 degrees about the origin (k taken mod 10)."""
        p = self
        for _ in range(k % 10):
            # multiply by zeta: zeta^4 = -1 + zeta - zeta^2 + zeta^3
            p = LatticePoint(-p.c3, p.c0 + p.c3, p.c1 - p.c3, p.c2 + p.c3)
        return p

    def conj(self) -> LatticePoint:
        """Reflect in the x axis (complex conjugation)."""
        return LatticePoint(
            self.c0 + self.c1, -self.c1, self.c1 - self.c3, -self.c1 - self.c2
        )

    def __mul__(self, other: LatticePoint) -> LatticePoint:
        """Ring product in Z[zeta]."""
        a = self.coords()
        b = other.coords()
        raw = [0] * 7
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    raw[i + j] += ai * bj
        # reduce degrees 6, 5, 4:  zeta^5 = -1, zeta^4 = -1 + z - z^2 + z^3
        raw[1] -= raw[6]
        raw[0] -= raw[5]
        d4 = raw[4]
        return LatticePoint(
            raw[0] - d4, raw[1] + d4, raw[2] - d4, raw[3] + d4
        )

    def scale(self, g: GoldenInt | int) -> LatticePoint:
        """Multiply by a real scalar from Z[phi] (phi = 1 + zeta^2 - zeta^3)."""
        if isinstance(g, int):
            return LatticePoint(g * self.c0, g * self.c1, g * self.c2, g * self.c3)
        return self * LatticePoint(g.a + g.b, 0, g.b, -g.b)

    def norm_sq(self) -> GoldenInt:
        """Exact squared length, an element of Z[phi]."""
        return golden_part(self * self.conj())

    def embed(self) -> tuple[float, float]:
        """Float coordinates for rendering only; never used in predicates."""
        x = y = 0.0
        for k, c in enumerate(self.coords()):
            if c:
                x += c * _COS[k]
                y += c * _SIN[k]
        return (x, y)

    def __repr__(self) -> str:
        return f"LatticePoint{self.coords()}"


ORIGIN = LatticePoint(0, 0, 0, 0)
ZETA = LatticePoint(0, 1, 0, 0)

# phi as a lattice element: 2*cos(36deg) = zeta + zeta^-1 = 1 + zeta^2 - zeta^3
PHI_POINT = LatticePoint(1, 0, 1, -1)


def unit(k: int) -> LatticePoint:
    """The unit vector zeta^k (direction k*36 degrees)."""
    return LatticePoint(1, 0, 0, 0).rotate(k)


def golden_part(p: LatticePoint) -> GoldenInt:
    """Convert a real lattice element x + y*phi to a GoldenInt.

    Raises if p has a nonzero imaginary part.
    """
    if p.c1 != 0 or p.c2 != -p.c3:
        raise ValueError(f"{p} is not a real element")
    return GoldenInt(p.c0 - p.c2, p.c2)


def cross_units(p: LatticePoint, q: LatticePoint) -> GoldenInt:
    """Exact cross product p x q in units of sin(36 degrees).

    This is the currency for all signed areas: a unit thin rhomb spanned by
    zeta^0 and zeta^1 has cross 1.
    """
    r = p.conj() * q
    return GoldenInt(r.c1, r.c2 + r.c3)


def dot2(p: LatticePoint, q: LatticePoint) -> GoldenInt:
    """Twice the exact dot product of p and q, an element of Z[phi]."""
    r = p.conj() * q
    return GoldenInt(2 * r.c0 - r.c2 + r.c3, r.c1 + r.c2 - r.c3)


def orient(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> int:
    """Exact orientation of the triangle a, b, c: +1 ccw, -1 cw, 0 collinear."""
    return cross_units(b - a, c - a).sign()


@dataclass(frozen=True, slots=True)
class Placement:
    """A rigid motion: optional reflection in the x axis, then rotation by
    rot*36 degrees, then translation by t."""

    rot: int = 0
    refl: bool = False
    t: LatticePoint = ORIGIN

    def __post_init__(self) -> None:
        if not 0 <= self.rot <= 9:
            raise ValueError(f"rot must be in 0..9, got {self.rot}")

    def apply(self, p: LatticePoint) -> LatticePoint:
        if self.refl:
            p = p.conj()
        return p.rotate(self.rot) + self.t

    def compose(self, inner: Placement) -> Placement:
        """The placement equivalent to applying `inner` first, then self."""
        rot = (self.rot - inner.rot) % 10 if self.refl else (self.rot + inner.rot) % 10
        return Placement(rot, self.refl != inner.refl, self.apply(inner.t))

    def inverse(self) -> Placement:
        if self.refl:
            # a reflection placement is an involution up to translation:
            # the inverse keeps (rot, refl) and maps t to -R(rot)conj(t)
            return Placement(self.rot, True, (-self.t).conj().rotate(self.rot))
        return Placement((-self.rot) % 10, False, (-self.t).rotate((-self.rot) % 10))

    def is_identity(self) -> bool:
        return self.rot == 0 and not self.refl and not self.t

    def key(self) -> tuple[int, int, int, int, int, int]:
        """Canonical sort/equality key."""
        return (self.rot, int(self.refl), *self.t.coords())


IDENTITY = Placement()


def apply(pl: Placement, p: LatticePoint) -> LatticePoint:
    """Apply a placement to a point (function form of Placement.apply)."""
    return pl.apply(p)


def rotate(p: LatticePoint, k: int) -> LatticePoint:
    """Rotate p by k*36 degrees about the origin."""
    return p.rotate(k)


def embed(p: LatticePoint) -> tuple[float, float]:
    """Float embedding of a lattice point (rendering only)."""
    return p.embed()
