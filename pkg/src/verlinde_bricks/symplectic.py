"""Torsion classes on a closed genus-g surface and their Weil pairings.

Coordinates are taken in a symplectic basis ordered ``(e1, f1, ..., eg, fg)``
with ``e_i . f_i = +1``.  Internally a class is also packed into an integer
whose bit ``j`` holds coordinate ``j`` (mod-2 classes) so that the hot
pairings can be computed with a handful of bit operations.

Values in mu_4 are returned as exponents of ``i`` in Z/4; values in mu_2 are
returned as the integers ``+1`` / ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterator, Sequence


class DimensionError(ValueError):
    """Raised when classes of different genus are combined."""


@dataclass(frozen=True)
class SignConvention:
    """The global sign in ``lambda_4(a, b) = (epsilon i)^(a.b)``."""

    epsilon: int = 1

    def __post_init__(self) -> None:
        if self.epsilon not in (1, -1):
            raise ValueError(f"epsilon must be +1 or -1, got {self.epsilon!r}")

    def flipped(self) -> SignConvention:
        return SignConvention(-self.epsilon)


PLUS = SignConvention(1)
MINUS = SignConvention(-1)


def _check_coords(genus: int, coords: Sequence[int], modulus: int) -> None:
    if genus < 1:
        raise ValueError(f"genus must be positive, got {genus}")
    if len(coords) != 2 * genus:
        raise DimensionError(f"expected {2 * genus} coordinates, got {len(coords)}")
    for c in coords:
        if not 0 <= c < modulus:
            raise ValueError(f"coordinate {c} out of range for Z/{modulus}")


@dataclass(frozen=True)
class Mod2Class:
    genus: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))
        _check_coords(self.genus, self.coords, 2)

    @classmethod
    def from_bits(cls, genus: int, bits: int) -> Mod2Class:
        return cls(genus, tuple((bits >> j) & 1 for j in range(2 * genus)))

    @classmethod
    def zero(cls, genus: int) -> Mod2Class:
        return cls(genus, (0,) * (2 * genus))

    @property
    def bits(self) -> int:
        return sum(c << j for j, c in enumerate(self.coords))

    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: Mod2Class) -> Mod2Class:
        _same_genus(self, other)
        return Mod2Class(self.genus, tuple(x ^ y for x, y in zip(self.coords, other.coords)))

    __sub__ = __add__


@dataclass(frozen=True)
class Mod4Class:
    genus: int
    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) % 4 for c in self.coords))
        _check_coords(self.genus, self.coords, 4)

    @classmethod
    def zero(cls, genus: int) -> Mod4Class:
        return cls(genus, (0,) * (2 * genus))

    def __add__(self, other: Mod4Class) -> Mod4Class:
        _same_genus(self, other)
        return Mod4Class(self.genus, tuple(x + y for x, y in zip(self.coords, other.coords)))

    def __neg__(self) -> Mod4Class:
        return Mod4Class(self.genus, tuple(-x for x in self.coords))

    def __sub__(self, other: Mod4Class) -> Mod4Class:
        return self + (-other)

    def reduce(self) -> Mod2Class:
        """The mod-2 reduction ``a mod 2``."""
        return Mod2Class(self.genus, tuple(c & 1 for c in self.coords))

    def split(self) -> tuple[Mod2Class, Mod2Class]:
        """Write ``a = abar + 2x`` with ``abar`` in {0,1}^2g; return ``(abar, x)``."""
        return (
            Mod2Class(self.genus, tuple(c & 1 for c in self.coords)),
            Mod2Class(self.genus, tuple(c >> 1 for c in self.coords)),
        )

    def halve(self) -> Mod2Class:
        """For ``a`` in 2*(Z/4)^2g, the mod-2 class ``x`` with ``a = 2x``."""
        if any(c & 1 for c in self.coords):
            raise ValueError(f"{self.coords} is not divisible by 2")
        return Mod2Class(self.genus, tuple(c >> 1 for c in self.coords))


def _same_genus(x, y) -> None:
    if x.genus != y.genus:
        raise DimensionError(f"genus mismatch: {x.genus} vs {y.genus}")


# -- packed helpers ---------------------------------------------------------

@lru_cache(maxsize=None)
def even_mask(genus: int) -> int:
    """Bits of the ``e_i`` coordinates."""
    return sum(1 << (2 * i) for i in range(genus))


def swap_pairs(bits: int, genus: int) -> int:
    """Exchange the ``e_i`` and ``f_i`` bits of a packed class."""
    e = even_mask(genus)
    return ((bits & e) << 1) | ((bits >> 1) & e)


def dot2_bits(x: int, y: int, genus: int) -> int:
    """Mod-2 intersection number of packed classes, as 0 or 1."""
    return (x & swap_pairs(y, genus)).bit_count() & 1


def dot4_bits(x: int, y: int, genus: int) -> int:
    """Mod-4 intersection of packed {0,1}-vectors viewed as mod-4 classes."""
    e = even_mask(genus)
    xe, xf = x & e, (x >> 1) & e
    ye, yf = y & e, (y >> 1) & e
    return ((xe & yf).bit_count() - (xf & ye).bit_count()) % 4


# -- pairings ---------------------------------------------------------------

def intersect4(a: Mod4Class, b: Mod4Class) -> int:
    _same_genus(a, b)
    total = 0
    for i in range(a.genus):
        total += a.coords[2 * i] * b.coords[2 * i + 1] - a.coords[2 * i + 1] * b.coords[2 * i]
    return total % 4


def intersect2(alpha: Mod2Class, beta: Mod2Class) -> int:
    _same_genus(alpha, beta)
    return dot2_bits(alpha.bits, beta.bits, alpha.genus)


def weil4(a: Mod4Class, b: Mod4Class, s: SignConvention = PLUS) -> int:
    """``(epsilon i)^(a.b)`` as an exponent of ``i`` mod 4."""
    return (s.epsilon * intersect4(a, b)) % 4


def weil2(alpha: Mod2Class, beta: Mod2Class) -> int:
    """``(-1)^(alpha.beta)``; does not depend on the sign convention."""
    return -1 if intersect2(alpha, beta) else 1


def mu4_square(e: int) -> int:
    """Square of ``i^e`` as an element of mu_2."""
    return -1 if (2 * e) % 4 else 1


# -- enumeration -------------------------------------------------------------

def all_mod2(genus: int) -> Iterator[Mod2Class]:
    for bits in range(1 << (2 * genus)):
        yield Mod2Class.from_bits(genus, bits)


def all_mod4(genus: int) -> Iterator[Mod4Class]:
    for coords in product(range(4), repeat=2 * genus):
        yield Mod4Class(genus, coords)


def lifts_of(alpha: Mod2Class) -> list[Mod4Class]:
    """All ``2^(2g)`` mod-4 classes reducing to ``alpha``, ordered by the added ``2x``."""
    out = []
    for xbits in range(1 << (2 * alpha.genus)):
        out.append(
            Mod4Class(
                alpha.genus,
                tuple(c + 2 * ((xbits >> j) & 1) for j, c in enumerate(alpha.coords)),
            )
        )
    return out


def canonical_lift(alpha: Mod2Class) -> Mod4Class:
    """The lift with every coordinate in {0, 1}."""
    return Mod4Class(alpha.genus, alpha.coords)


def transvection(v: Mod2Class):
    """The symplectic transvection ``x -> x + (x.v) v`` of (Z/2)^2g."""

    def apply(x: Mod2Class) -> Mod2Class:
        return x + v if intersect2(x, v) else x

    return apply
