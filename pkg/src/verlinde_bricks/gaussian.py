from __future__ import annotations

from typing import NamedTuple


class GaussianInt(NamedTuple):
    """An element ``re + im*i`` of Z[i] with unbounded parts."""

    re: int
    im: int = 0

    @classmethod
    def unit(cls, e: int) -> GaussianInt:
        """``i^e``."""
        return _UNITS[e % 4]

    def __add__(self, other):  # type: ignore[override]
        if isinstance(other, int):
            return GaussianInt(self.re + other, self.im)
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __sub__(self, other) -> GaussianInt:
        return self + (-other)

    def __mul__(self, other):  # type: ignore[override]
        if isinstance(other, int):
            return GaussianInt(self.re * other, self.im * other)
        return GaussianInt(
            self.re * other.re - self.im * other.im, self.re * other.im + self.im * other.re
        )

    __rmul__ = __mul__

    def conj(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}i"
        return f"{self.re}{self.im:+d}i"


_UNITS = (GaussianInt(1, 0), GaussianInt(0, 1), GaussianInt(-1, 0), GaussianInt(0, -1))
