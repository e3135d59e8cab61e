"""Intersection theory on the Picard lattices of the smooth quadric and cubic surfaces.

Quadric classes are bidegrees ``(a, b)`` on P^1 x P^1. Cubic classes are written
``(a; m1, ..., m6)`` and stand for ``a*L - sum(mi*Ei)``, where ``L`` is the pullback
of a plane line and ``Ei`` are the six exceptional curves of the blowup of P^2.
The pairing is therefore ``a1*a2 - sum(m1i*m2i)``.

All arithmetic is on Python integers, so nothing can overflow or wrap.
"""
from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Union

from .errors import InvalidCurveClass, ParityError, UnsupportedSurface


class SurfaceKind(enum.Enum):
    PLANE = "plane"
    QUADRIC = "quadric"
    CUBIC = "cubic"


def _as_int(value, name: str) -> int:
    # bool is an int subclass; reject it along with floats and strings
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"{name} must be an int, got {type(value).__name__}")
    return value


@dataclass(frozen=True)
class QuadricClass:
    """Bidegree ``(a, b)``: ``a`` times the first ruling plus ``b`` times the second."""

    a: int
    b: int

    def __post_init__(self):
        _as_int(self.a, "a")
        _as_int(self.b, "b")

    def __add__(self, other: QuadricClass) -> QuadricClass:
        return QuadricClass(self.a + other.a, self.b + other.b)

    def __sub__(self, other: QuadricClass) -> QuadricClass:
        return QuadricClass(self.a - other.a, self.b - other.b)

    def __neg__(self) -> QuadricClass:
        return QuadricClass(-self.a, -self.b)

    def __mul__(self, n: int) -> QuadricClass:
        return QuadricClass(n * self.a, n * self.b)

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[int, int]:
        return (self.a, self.b)

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


@dataclass(frozen=True)
class CubicClass:
    """Divisor class ``(a; m1..m6)`` on a smooth cubic surface, stored exactly as given."""

    a: int
    m: tuple[int, ...]

    def __post_init__(self):
        _as_int(self.a, "a")
        m = tuple(self.m)
        if len(m) != 6:
            raise ValueError(f"cubic class needs 6 multiplicities, got {len(m)}")
        for i, mi in enumerate(m):
            _as_int(mi, f"m{i + 1}")
        object.__setattr__(self, "m", m)

    @classmethod
    def of(cls, a: int, *m: int) -> CubicClass:
        if len(m) == 1 and isinstance(m[0], (tuple, list)):
            m = tuple(m[0])
        return cls(a, tuple(m))

    def __add__(self, other: CubicClass) -> CubicClass:
        return CubicClass(self.a + other.a, tuple(x + y for x, y in zip(self.m, other.m)))

    def __sub__(self, other: CubicClass) -> CubicClass:
        return CubicClass(self.a - other.a, tuple(x - y for x, y in zip(self.m, other.m)))

    def __neg__(self) -> CubicClass:
        return CubicClass(-self.a, tuple(-x for x in self.m))

    def __mul__(self, n: int) -> CubicClass:
        return CubicClass(n * self.a, tuple(n * x for x in self.m))

    __rmul__ = __mul__

    def as_tuple(self) -> tuple[int, ...]:
        return (self.a, *self.m)

    def __str__(self) -> str:
        return f"({self.a};{','.join(str(x) for x in self.m)})"


SurfaceClass = Union[QuadricClass, CubicClass]


@dataclass(frozen=True)
class LineClass:
    """One of the 27 lines: ``kind`` is ``"E"``, ``"F"`` or ``"G"``, ``indices`` are 1-based."""

    kind: str
    indices: tuple[int, ...]
    cls: CubicClass

    @property
    def name(self) -> str:
        return self.kind + "".join(str(i) for i in self.indices)

    def __str__(self) -> str:
        return self.name


def pair_quadric(d1: QuadricClass, d2: QuadricClass) -> int:
    return d1.a * d2.b + d2.a * d1.b


def pair_cubic(d1: CubicClass, d2: CubicClass) -> int:
    return d1.a * d2.a - sum(x * y for x, y in zip(d1.m, d2.m))


def _surface_of(cls: SurfaceClass) -> SurfaceKind:
    if isinstance(cls, CubicClass):
        return SurfaceKind.CUBIC
    if isinstance(cls, QuadricClass):
        return SurfaceKind.QUADRIC
    raise TypeError(f"not a surface class: {cls!r}")


def _check_surface(cls: SurfaceClass, s: SurfaceKind | None) -> SurfaceKind:
    kind = _surface_of(cls)
    if s is not None and s is not kind:
        if s is SurfaceKind.PLANE:
            raise UnsupportedSurface("plane curves carry no Picard-lattice class")
        raise TypeError(f"{type(cls).__name__} does not live on the {s.value} surface")
    return kind


def pair(d1: SurfaceClass, d2: SurfaceClass) -> int:
    """Intersection number of two classes on the same surface."""
    if isinstance(d1, CubicClass) and isinstance(d2, CubicClass):
        return pair_cubic(d1, d2)
    if isinstance(d1, QuadricClass) and isinstance(d2, QuadricClass):
        return pair_quadric(d1, d2)
    raise TypeError("classes live on different surfaces")


def hyperplane_class(s: SurfaceKind) -> SurfaceClass:
    if s is SurfaceKind.CUBIC:
        return CubicClass(3, (1,) * 6)
    if s is SurfaceKind.QUADRIC:
        return QuadricClass(1, 1)
    raise UnsupportedSurface(f"no hyperplane class for surface {s.value!r}")


def canonical_class(s: SurfaceKind) -> SurfaceClass:
    if s is SurfaceKind.CUBIC:
        return CubicClass(-3, (-1,) * 6)
    if s is SurfaceKind.QUADRIC:
        return QuadricClass(-2, -2)
    raise UnsupportedSurface(f"no canonical class for surface {s.value!r}")


def degree(d: SurfaceClass, s: SurfaceKind | None = None) -> int:
    kind = _check_surface(d, s)
    return pair(d, hyperplane_class(kind))


def genus(d: SurfaceClass, s: SurfaceKind | None = None) -> int:
    """Arithmetic genus by adjunction, ``(D.D + D.K)/2 + 1``."""
    kind = _check_surface(d, s)
    num = pair(d, d) + pair(d, canonical_class(kind))
    if num % 2:
        raise ParityError(f"D.D + D.K = {num} is odd for {d}")
    return num // 2 + 1


@lru_cache(maxsize=None)
def _lines() -> tuple[LineClass, ...]:
    out = []
    for i in range(6):
        m = [0] * 6
        m[i] = -1
        out.append(LineClass("E", (i + 1,), CubicClass(0, tuple(m))))
    for i, j in itertools.combinations(range(6), 2):
        m = [0] * 6
        m[i] = m[j] = 1
        out.append(LineClass("F", (i + 1, j + 1), CubicClass(1, tuple(m))))
    for i in range(6):
        m = [1] * 6
        m[i] = 0
        out.append(LineClass("G", (i + 1,), CubicClass(2, tuple(m))))
    return tuple(out)


def lines_on_cubic() -> list[LineClass]:
    """The 27 lines in the order E1..E6, F12..F56, G1..G6."""
    return list(_lines())


def line_by_name(name: str) -> LineClass:
    for line in _lines():
        if line.name == name:
            return line
    raise KeyError(name)


RULINGS = (QuadricClass(1, 0), QuadricClass(0, 1))


@dataclass(frozen=True)
class SecantResult:
    k: int
    witnesses: tuple[str, ...]


def ruling_name(r: QuadricClass) -> str:
    return f"ruling{r}"


def max_secant_on_surface(c: SurfaceClass, s: SurfaceKind | None = None) -> SecantResult:
    """Highest intersection of ``c`` with a line lying on the surface, with every maximiser.

    On the quadric a line of class (1,0) meets ``(a,b)`` in ``b`` points.
    """
    kind = _check_surface(c, s)
    if degree(c, kind) <= 0:
        raise InvalidCurveClass(f"{c} has non-positive degree")
    if kind is SurfaceKind.CUBIC:
        candidates = [(pair_cubic(c, line.cls), line.name) for line in _lines()]
    else:
        candidates = [(pair_quadric(c, r), ruling_name(r)) for r in RULINGS]
    k = max(v for v, _ in candidates)
    return SecantResult(k, tuple(name for v, name in candidates if v == k))


def biliaison_up(c: SurfaceClass, s: SurfaceKind | None = None) -> SurfaceClass:
    return c + hyperplane_class(_check_surface(c, s))


def biliaison_down(c: SurfaceClass, s: SurfaceKind | None = None) -> SurfaceClass:
    return c - hyperplane_class(_check_surface(c, s))


def parse_cubic(values) -> CubicClass:
    values = [int(v) for v in values]
    if len(values) != 7:
        raise InvalidCurveClass(f"cubic class needs 7 integers (a m1..m6), got {len(values)}")
    return CubicClass(values[0], tuple(values[1:]))
