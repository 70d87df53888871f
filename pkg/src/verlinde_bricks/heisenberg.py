"""The finite groups E (= Gamma(Sigma)) and E', and the component calculus.

E is built from its presentation: generators ``rho_a`` for mod-4 classes
``a`` and a central ``u`` of order 4, subject to

    rho_a rho_b = u^(a.b) rho_(a+b),     rho_a^2 = 1.

Under the sign convention ``u`` is the scalar ``epsilon*i``, so the group law
itself is convention free; only the embedding of the centre into C moves.

Normal form: every element is ``u^t rho_abar`` with ``abar`` in {0,1}^2g.
A general lift is brought to normal form with
``rho_(abar + 2x) = (-1)^(abar.x) rho_abar``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

from . import kernels
from .symplectic import (
    PLUS,
    DimensionError,
    Mod2Class,
    Mod4Class,
    SignConvention,
    all_mod2,
    dot2_bits,
    weil2,
    weil4,
)


class PreconditionError(ValueError):
    """An operation was called outside its domain."""


@dataclass(frozen=True)
class EElement:
    genus: int
    phase: int
    rep: Mod4Class
    _code: int = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", self.phase % 4)
        if self.rep.genus != self.genus:
            raise DimensionError("rep genus does not match element genus")
        if any(c > 1 for c in self.rep.coords):
            raise ValueError(f"rep {self.rep.coords} is not normalized")
        bits = sum(c << j for j, c in enumerate(self.rep.coords))
        object.__setattr__(self, "_code", self.phase | (bits << 2))

    @classmethod
    def from_code(cls, genus: int, code: int) -> EElement:
        return _element_from_code(genus, code)

    @classmethod
    def identity(cls, genus: int) -> EElement:
        return cls(genus, 0, Mod4Class.zero(genus))

    @classmethod
    def central(cls, genus: int, t: int) -> EElement:
        """``u^t``."""
        return cls(genus, t, Mod4Class.zero(genus))

    @classmethod
    def rho(cls, a: Mod4Class) -> EElement:
        """The involution ``rho_a`` for an arbitrary lift ``a``, in normal form."""
        abar, x = a.split()
        t = 2 * dot2_bits(abar.bits, x.bits, a.genus)
        return cls(a.genus, t, Mod4Class(a.genus, abar.coords))

    @property
    def code(self) -> int:
        return self._code

    @property
    def alpha(self) -> Mod2Class:
        """Image in ``J^(2)``."""
        return self.rep.reduce()

    def is_central(self) -> bool:
        return not any(self.rep.coords)

    def scalar_exponent(self, s: SignConvention = PLUS) -> int:
        """For a central element ``u^t``, the exponent ``e`` with ``u^t = i^e``."""
        if not self.is_central():
            raise PreconditionError("element is not central")
        return (s.epsilon * self.phase) % 4

    def __mul__(self, other: EElement) -> EElement:
        return e_mul(self, other)


@lru_cache(maxsize=1 << 16)
def _element_from_code(genus: int, code: int) -> EElement:
    # Elements are immutable, so small-genus loops can share instances.
    alpha = Mod2Class.from_bits(genus, code >> 2)
    return EElement(genus, code & 3, Mod4Class(genus, alpha.coords))


def e_mul(x: EElement, y: EElement) -> EElement:
    if x.genus != y.genus:
        raise DimensionError(f"genus mismatch: {x.genus} vs {y.genus}")
    return EElement.from_code(x.genus, kernels.e_mul_packed(x.code, y.code, x.genus))


def e_inverse(x: EElement) -> EElement:
    # (u^t rho)^-1 = rho u^-t, and rho is an involution.
    return EElement(x.genus, -x.phase, x.rep)


def e_commutator(x: EElement, y: EElement) -> EElement:
    return e_mul(e_mul(x, y), e_mul(e_inverse(x), e_inverse(y)))


def group_order(genus: int) -> int:
    return 4 << (2 * genus)


def all_elements(genus: int) -> Iterator[EElement]:
    for code in range(group_order(genus)):
        yield EElement.from_code(genus, code)


def class_id(x: EElement) -> tuple:
    """Label of the conjugacy class of ``x``.

    Central elements are singletons ``("z", t)``; over ``alpha != 0`` the class
    is ``{u^t rho, u^(t+2) rho}``, labelled ``("n", t mod 2, alpha bits)``.
    """
    if x.is_central():
        return ("z", x.phase)
    return ("n", x.phase & 1, x.alpha.bits)


def class_representatives(genus: int) -> list[tuple[tuple, EElement, int]]:
    """``(class id, representative, class size)`` for every conjugacy class."""
    out = [(("z", t), EElement.central(genus, t), 1) for t in range(4)]
    for bits in range(1, 1 << (2 * genus)):
        for t in (0, 1):
            rep = Mod4Class(genus, Mod2Class.from_bits(genus, bits).coords)
            out.append((("n", t, bits), EElement(genus, t, rep), 2))
    return out


def e_conjugacy_classes(genus: int) -> list[tuple[EElement, ...]]:
    """Partition of E into conjugacy classes by brute-force conjugation.

    Classes are ordered by their smallest packed code, elements within a class
    by code.
    """
    order = group_order(genus)
    mul = kernels.e_mul_packed
    inverse = [((-c) & 3) | (c & ~3) for c in range(order)]
    seen = [False] * order
    classes = []
    for x in range(order):
        if seen[x]:
            continue
        orbit = {mul(mul(y, x, genus), inverse[y], genus) for y in range(order)}
        for c in orbit:
            seen[c] = True
        classes.append(tuple(EElement.from_code(genus, c) for c in sorted(orbit)))
    return classes


# -- E' -----------------------------------------------------------------------

@dataclass(frozen=True)
class EPrimeElement:
    genus: int
    sign: int
    cls: Mod2Class

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign!r}")
        if self.cls.genus != self.genus:
            raise DimensionError("class genus does not match element genus")

    @classmethod
    def identity(cls, genus: int) -> EPrimeElement:
        return cls(genus, 1, Mod2Class.zero(genus))

    @classmethod
    def rho(cls, alpha: Mod2Class) -> EPrimeElement:
        return cls(alpha.genus, 1, alpha)

    def __mul__(self, other: EPrimeElement) -> EPrimeElement:
        return eprime_mul(self, other)


def eprime_mul(x: EPrimeElement, y: EPrimeElement) -> EPrimeElement:
    if x.genus != y.genus:
        raise DimensionError(f"genus mismatch: {x.genus} vs {y.genus}")
    return EPrimeElement(x.genus, x.sign * y.sign * weil2(x.cls, y.cls), x.cls + y.cls)


def all_eprime_elements(genus: int) -> Iterator[EPrimeElement]:
    for sign in (1, -1):
        for alpha in all_mod2(genus):
            yield EPrimeElement(genus, sign, alpha)


def to_eprime(x: EElement) -> EPrimeElement:
    """The quotient ``u^t rho_a -> (-1)^t rho'_alpha`` through which even levels act."""
    return EPrimeElement(x.genus, -1 if x.phase & 1 else 1, x.alpha)


# -- fixed-point components -------------------------------------------------

@dataclass(frozen=True)
class ComponentLabel:
    """The component ``|M|_lift^sign`` with ``lift`` in {0,1}^2g."""

    lift: Mod4Class
    sign: int


def _check_lift(a: Mod4Class) -> Mod2Class:
    alpha = a.reduce()
    if alpha.is_zero():
        raise PreconditionError("component labels need a lift of a non-zero class")
    return alpha


def canonical_component(a: Mod4Class, sign: int = 1) -> ComponentLabel:
    """Rewrite ``|M|_a^sign`` relative to the normalized lift of ``a mod 2``."""
    alpha = _check_lift(a)
    abar, x = a.split()
    return ComponentLabel(Mod4Class(a.genus, abar.coords), sign * weil2(x, alpha))


def same_component(a1: Mod4Class, a2: Mod4Class) -> bool:
    """Whether ``|M|_a1^+ = |M|_a2^+`` for two lifts of the same class."""
    alpha = _check_lift(a1)
    if a2.genus != a1.genus:
        raise DimensionError("genus mismatch")
    if a2.reduce() != alpha:
        raise PreconditionError("a1 and a2 lift different mod-2 classes")
    return weil2((a1 - a2).halve(), alpha) == 1


def beta_swaps_components(alpha: Mod2Class, beta: Mod2Class) -> bool:
    """Whether translation by ``beta`` exchanges the two components over ``alpha``.

    Decided in E: conjugating ``rho_a`` by a lift of ``beta`` gives ``-rho_a``
    exactly when the two fixed components are exchanged.
    """
    if alpha.is_zero():
        raise PreconditionError("alpha must be non-zero")
    ra = EElement.rho(Mod4Class(alpha.genus, alpha.coords))
    rb = EElement.rho(Mod4Class(beta.genus, beta.coords))
    conj = e_mul(e_mul(rb, ra), e_inverse(rb))
    return conj != ra


def _lambda4_sign(a: Mod4Class, b: Mod4Class, s: SignConvention) -> int:
    e = weil4(a, b, s)
    if e % 2:
        raise PreconditionError("lambda_4(a, b) is not real; fixed sets are disjoint")
    return 1 if e == 0 else -1


def _check_pair(alpha: Mod2Class, beta: Mod2Class) -> None:
    if alpha.genus != beta.genus:
        raise DimensionError("genus mismatch")
    if alpha.is_zero() or beta.is_zero() or alpha == beta:
        raise PreconditionError("need distinct non-zero classes")


def triple_intersection_sign(
    a: Mod4Class, b: Mod4Class, s: SignConvention = PLUS
) -> frozenset[tuple[int, int, int]]:
    """The sign triples ``(e, m, n)`` with ``|M|_a^e, |M|_b^m, |M|_(a+b)^n`` meeting.

    These are exactly the triples with ``e*m*n = lambda_4(a, b)``.
    """
    alpha, beta = a.reduce(), b.reduce()
    _check_pair(alpha, beta)
    if weil2(alpha, beta) != 1:
        raise PreconditionError("lambda_2(alpha, beta) = -1: the fixed sets do not meet")
    lam = _lambda4_sign(a, b, s)
    return frozenset(t for t in product((1, -1), repeat=3) if t[0] * t[1] * t[2] == lam)


def _coset_rep(gamma: int, alpha: int, beta: int) -> int:
    return min(gamma, gamma ^ alpha, gamma ^ beta, gamma ^ alpha ^ beta)


def intersection_torsor(
    alpha: Mod2Class, beta: Mod2Class, signed: bool = True
) -> dict[int, tuple[int, int] | None]:
    """Model of ``|M|_alpha cap |M|_beta`` as a torsor over ``J^(2)/<alpha, beta>``.

    Points are cosets (keyed by their smallest packed representative).  A base
    point is placed on ``|M|_a^+ cap |M|_b^+`` for the normalized lifts; the
    point ``gamma + base`` then lies on the components with signs
    ``(lambda_2(alpha, gamma), lambda_2(beta, gamma))``.  Only cardinalities and
    equivariance are meaningful here.  With ``signed=False`` (the M' case) the
    values are None.
    """
    _check_pair(alpha, beta)
    g = alpha.genus
    ab, bb = alpha.bits, beta.bits
    points: dict[int, tuple[int, int] | None] = {}
    for gamma in range(1 << (2 * g)):
        rep = _coset_rep(gamma, ab, bb)
        if not signed:
            points[rep] = None
            continue
        signs = (
            -1 if dot2_bits(ab, gamma, g) else 1,
            -1 if dot2_bits(bb, gamma, g) else 1,
        )
        if points.setdefault(rep, signs) != signs:
            raise AssertionError("component signs are not constant on a coset")
    return points


def intersection_cardinalities(
    genus: int, alpha: Mod2Class, beta: Mod2Class, twisted: bool = False
) -> tuple[int, int | None]:
    """``(#(|M|_alpha cap |M|_beta), #(|M|_a^e cap |M|_b^m))`` from the torsor model.

    For ``twisted=True`` the moduli space is M' (needs ``lambda_2 = -1``), whose
    fixed sets are not split into signed components; the second entry is None.
    """
    if alpha.genus != genus or beta.genus != genus:
        raise DimensionError("genus mismatch")
    _check_pair(alpha, beta)
    want = -1 if twisted else 1
    if weil2(alpha, beta) != want:
        raise PreconditionError(
            f"the {'twisted' if twisted else 'untwisted'} fixed sets over alpha and beta are disjoint"
        )
    points = intersection_torsor(alpha, beta, signed=not twisted)
    if twisted:
        return len(points), None
    per_pair: dict[tuple[int, int], int] = {}
    for signs in points.values():
        per_pair[signs] = per_pair.get(signs, 0) + 1
    sizes = set(per_pair.values())
    if len(per_pair) != 4 or len(sizes) != 1:
        raise AssertionError(f"unbalanced component pairs: {per_pair}")
    return len(points), sizes.pop()
