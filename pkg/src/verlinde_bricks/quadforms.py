"""mu_2-valued quadratic forms polarizing lambda_2, and their Arf invariants.

A form is ``q = (-1)^qt`` with ``qt(a + b) = qt(a) + qt(b) + a.b`` (mod 2).  It
is fixed by its values on the symplectic basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from . import kernels
from .heisenberg import EPrimeElement, PreconditionError
from .symplectic import DimensionError, Mod2Class, even_mask, intersect2


@dataclass(frozen=True)
class QuadraticForm:
    genus: int
    basis_values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis_values", tuple(int(v) for v in self.basis_values))
        if len(self.basis_values) != 2 * self.genus:
            raise DimensionError(
                f"expected {2 * self.genus} basis values, got {len(self.basis_values)}"
            )
        if any(v not in (0, 1) for v in self.basis_values):
            raise ValueError("basis values must be bits")

    @classmethod
    def from_bits(cls, genus: int, bits: int) -> QuadraticForm:
        return cls(genus, tuple((bits >> j) & 1 for j in range(2 * genus)))

    @property
    def bits(self) -> int:
        return sum(v << j for j, v in enumerate(self.basis_values))

    def __call__(self, alpha: Mod2Class) -> int:
        return evaluate(self, alpha)


def evaluate(q: QuadraticForm, alpha: Mod2Class, order: Sequence[int] | None = None) -> int:
    """``q(alpha)`` by adding the basis vectors of ``alpha`` one at a time.

    ``order`` permutes the basis indices used in the expansion; the result must
    not depend on it.
    """
    if alpha.genus != q.genus:
        raise DimensionError(f"genus mismatch: {alpha.genus} vs {q.genus}")
    g = q.genus
    idx = range(2 * g) if order is None else order
    acc = Mod2Class.zero(g)
    value = 0
    for j in idx:
        if not alpha.coords[j]:
            continue
        basis = Mod2Class.from_bits(g, 1 << j)
        value ^= q.basis_values[j] ^ intersect2(acc, basis)
        acc = acc + basis
    return -1 if value else 1


def evaluate_bits(q_bits: int, alpha_bits: int, genus: int) -> int:
    """Closed-form ``qt(alpha)`` in packed form, as 0 or 1."""
    e = even_mask(genus)
    return ((q_bits & alpha_bits).bit_count() + (alpha_bits & e & (alpha_bits >> 1)).bit_count()) & 1


def arf(q: QuadraticForm) -> int:
    v = q.basis_values
    return sum(v[2 * i] * v[2 * i + 1] for i in range(q.genus)) % 2


def all_forms(genus: int) -> Iterator[QuadraticForm]:
    for bits in range(1 << (2 * genus)):
        yield QuadraticForm.from_bits(genus, bits)


def count_by_arf(genus: int) -> tuple[int, int]:
    """Number of forms with Arf invariant 0 and 1, by enumeration."""
    if genus < 1:
        raise ValueError("genus must be positive")
    counts = [0, 0]
    for q in all_forms(genus):
        counts[arf(q)] += 1
    return counts[0], counts[1]


def count_value_constrained(genus: int, alpha: Mod2Class) -> tuple[int, int]:
    """Number of forms with ``q(alpha) = -1``, split by Arf invariant."""
    if alpha.genus != genus:
        raise DimensionError("genus mismatch")
    if alpha.is_zero():
        raise PreconditionError("alpha must be non-zero")
    counts = [0, 0]
    for q in all_forms(genus):
        if evaluate_bits(q.bits, alpha.bits, genus):
            counts[arf(q)] += 1
    return counts[0], counts[1]


def arf_closed_form(genus: int) -> tuple[int, int]:
    return 2 ** (genus - 1) * (2**genus + 1), 2 ** (genus - 1) * (2**genus - 1)


def arf_census(genus: int) -> tuple[tuple[int, int], dict[int, tuple[int, int]]]:
    """Arf statistics with the Arf invariant read off from value sums.

    Independent of :func:`arf`: a form is even iff it takes the value ``+1``
    more often than ``-1`` (``sum q = (-1)^Arf 2^g``).  Returns the counts by
    Arf class and, for every non-zero ``alpha``, the value-constrained counts.
    """
    sums, c0, c1 = kernels.form_census(genus)
    by_arf = (sum(1 for s in sums if s > 0), sum(1 for s in sums if s < 0))
    constrained = {a: (c0[a], c1[a]) for a in range(1, 1 << (2 * genus))}
    return by_arf, constrained


def translate(q: QuadraticForm, gamma: Mod2Class) -> QuadraticForm:
    """The form ``alpha -> q(alpha) lambda_2(gamma, alpha)``."""
    if gamma.genus != q.genus:
        raise DimensionError("genus mismatch")
    g = q.genus
    shift = [intersect2(gamma, Mod2Class.from_bits(g, 1 << j)) for j in range(2 * g)]
    return QuadraticForm(g, tuple(v ^ s for v, s in zip(q.basis_values, shift)))


def pullback(q: QuadraticForm, f) -> QuadraticForm:
    """``q o f`` for a symplectic automorphism ``f`` of (Z/2)^2g."""
    g = q.genus
    values = []
    for j in range(2 * g):
        values.append(0 if evaluate(q, f(Mod2Class.from_bits(g, 1 << j))) == 1 else 1)
    return QuadraticForm(g, tuple(values))


def eprime_character(q: QuadraticForm, x: EPrimeElement) -> int:
    """The character of E' attached to ``q``: ``s rho'_alpha -> s q(alpha)``."""
    return x.sign * evaluate(q, x.cls)
