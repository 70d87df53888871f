"""Characters of E and E', the Verlinde spaces as class functions, and bricks.

The irreducibles of E are

* ``("h", gamma)``: ``u -> 1``, ``rho_a -> lambda_2(gamma, alpha)`` (characters of J^(2));
* ``("q", q)``: ``u -> -1``, ``u^t rho_a -> (-1)^t q(alpha)`` (quadratic forms);
* ``("svn", sigma)``: dimension ``2^g``, ``u^t -> 2^g (sigma i)^t``, zero off the centre.

Forms and classes are keyed by their packed bits.  E' is abelian and has only
the ``h`` and ``q`` families, with ``s rho'_alpha -> lambda_2(gamma, alpha)``
resp. ``s q(alpha)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Hashable

from .gaussian import GaussianInt
from .heisenberg import class_representatives, group_order
from .quadforms import arf, evaluate_bits, QuadraticForm
from .symplectic import PLUS, SignConvention, dot2_bits
from .verlinde import (
    trace_twisted,
    trace_untwisted,
    verlinde_dim,
    verlinde_dim_twisted,
)

E = "E"
E_PRIME = "E'"

MOD4_ZERO = "mod4-zero"
MOD4_TWO = "mod4-two"
ODD = "odd"

_ZERO = GaussianInt(0, 0)


class InconsistencyError(ArithmeticError):
    """A computed multiplicity or brick dimension is not a non-negative integer."""


@dataclass(frozen=True)
class ClassFunction:
    genus: int
    group: str
    values: dict[Hashable, GaussianInt] = field(hash=False)

    def __call__(self, cid: Hashable) -> GaussianInt:
        return self.values.get(cid, _ZERO)

    def conj(self) -> ClassFunction:
        return ClassFunction(self.genus, self.group, {c: v.conj() for c, v in self.values.items()})


@dataclass(frozen=True)
class Irreducible:
    label: tuple
    dim: int
    character: ClassFunction


@dataclass(frozen=True)
class IrreducibleTable:
    genus: int
    group: str
    class_sizes: dict[Hashable, int] = field(hash=False)
    irreducibles: tuple[Irreducible, ...]

    @property
    def order(self) -> int:
        return sum(self.class_sizes.values())

    def by_label(self, label: tuple) -> Irreducible:
        for irr in self.irreducibles:
            if irr.label == label:
                return irr
        raise KeyError(label)


def _lam2(x: int, y: int, g: int) -> int:
    return -1 if dot2_bits(x, y, g) else 1


def e_class_sizes(g: int) -> dict[Hashable, int]:
    return {cid: size for cid, _, size in class_representatives(g)}


def eprime_class_ids(g: int) -> list[tuple[int, int]]:
    return [(s, a) for s in (1, -1) for a in range(1 << (2 * g))]


@lru_cache(maxsize=8)
def irreducible_table(g: int) -> IrreducibleTable:
    """Character table of E.  The table itself does not depend on epsilon."""
    n = 1 << (2 * g)
    sizes = e_class_sizes(g)
    irr = []
    for gamma in range(n):
        vals = {("z", t): GaussianInt(1) for t in range(4)}
        for p in (0, 1):
            for a in range(1, n):
                vals[("n", p, a)] = GaussianInt(_lam2(gamma, a, g))
        irr.append(Irreducible(("h", gamma), 1, ClassFunction(g, E, vals)))
    for qb in range(n):
        vals = {("z", t): GaussianInt(-1 if t % 2 else 1) for t in range(4)}
        for p in (0, 1):
            for a in range(1, n):
                qa = -1 if evaluate_bits(qb, a, g) else 1
                vals[("n", p, a)] = GaussianInt(-qa if p else qa)
        irr.append(Irreducible(("q", qb), 1, ClassFunction(g, E, vals)))
    dim = 1 << g
    for sigma in (1, -1):
        vals = {("z", t): GaussianInt.unit(sigma * t) * dim for t in range(4)}
        irr.append(Irreducible(("svn", sigma), dim, ClassFunction(g, E, vals)))
    return IrreducibleTable(g, E, sizes, tuple(irr))


@lru_cache(maxsize=8)
def eprime_irreducible_table(g: int) -> IrreducibleTable:
    """Character table of the abelian group E'."""
    n = 1 << (2 * g)
    cids = eprime_class_ids(g)
    irr = []
    for gamma in range(n):
        vals = {(s, a): GaussianInt(_lam2(gamma, a, g)) for s, a in cids}
        irr.append(Irreducible(("h", gamma), 1, ClassFunction(g, E_PRIME, vals)))
    for qb in range(n):
        vals = {}
        for s, a in cids:
            qa = -1 if evaluate_bits(qb, a, g) else 1
            vals[(s, a)] = GaussianInt(s * qa)
        irr.append(Irreducible(("q", qb), 1, ClassFunction(g, E_PRIME, vals)))
    return IrreducibleTable(g, E_PRIME, {c: 1 for c in cids}, tuple(irr))


def table_for(chi: ClassFunction) -> IrreducibleTable:
    return irreducible_table(chi.genus) if chi.group == E else eprime_irreducible_table(chi.genus)


def inner_product(chi: ClassFunction, psi: ClassFunction, sizes: dict[Hashable, int]) -> Fraction | complex:
    """``(1/|G|) sum_x chi(x) conj(psi(x))``, exact.

    Returns a Fraction when the imaginary part vanishes, otherwise a complex
    number made of the two exact fractions (for diagnostics only).
    """
    re = im = 0
    for cid, b in psi.values.items():
        if not (b.re or b.im):
            continue
        a = chi.values.get(cid)
        if a is None:
            continue
        size = sizes[cid]
        re += size * (a.re * b.re + a.im * b.im)
        im += size * (a.im * b.re - a.re * b.im)
    order = sum(sizes.values())
    if im:
        return complex(Fraction(re, order), Fraction(im, order))
    return Fraction(re, order)


def decompose(chi: ClassFunction, table: IrreducibleTable | None = None) -> dict[tuple, int]:
    """Multiplicities of every irreducible in ``chi``.

    Raises :class:`InconsistencyError` naming the offending irreducible when a
    multiplicity is not a non-negative integer.
    """
    table = table or table_for(chi)
    out = {}
    for irr in table.irreducibles:
        m = inner_product(chi, irr.character, table.class_sizes)
        if not isinstance(m, Fraction) or m.denominator != 1 or m < 0:
            raise InconsistencyError(f"multiplicity of {irr.label} is {m}")
        out[irr.label] = int(m)
    return out


# -- the characters of Z_k and Z'_k ----------------------------------------------

def character_of_Zk(g: int, k: int, s: SignConvention = PLUS) -> ClassFunction:
    """Character of Z_k(Sigma_g) on E, from the trace formulas and d_g(k)."""
    d = verlinde_dim(g, k)
    tr = trace_untwisted(g, k)
    vals = {}
    for cid, rep, _ in class_representatives(g):
        scalar = GaussianInt.unit(s.epsilon * rep.phase * k)
        vals[cid] = scalar * (d if rep.is_central() else tr)
    return ClassFunction(g, E, vals)


def character_of_Zk_twisted(g: int, k: int) -> ClassFunction:
    """Character of Z'_k(Sigma_g) on E'; even levels only."""
    if k % 2:
        raise ValueError(f"Z'_k is only considered for even k, got k={k}")
    d = verlinde_dim_twisted(g, k)
    tr = trace_twisted(g, k)
    half_odd = (k // 2) % 2
    vals = {}
    for sgn, a in eprime_class_ids(g):
        scalar = sgn if half_odd else 1
        vals[(sgn, a)] = GaussianInt(scalar * (tr if a else d))
    return ClassFunction(g, E_PRIME, vals)


def regular_character(g: int, group: str = E) -> ClassFunction:
    if group == E:
        cid, order = ("z", 0), group_order(g)
    else:
        cid, order = (1, 0), 2 << (2 * g)
    return ClassFunction(g, group, {cid: GaussianInt(order)})


# -- bricks -----------------------------------------------------------------------

def brick_mode(k: int) -> str:
    if k % 2:
        return ODD
    return MOD4_ZERO if k % 4 == 0 else MOD4_TWO


@dataclass(frozen=True)
class BrickTable:
    genus: int
    level: int
    mode: str
    twisted: bool
    entries: dict[tuple, int] = field(hash=False)

    def total(self) -> int:
        """Dimension of the whole space, reassembled from the bricks."""
        svn = 1 << self.genus
        return sum(m * (svn if label[0] == "svn" else 1) for label, m in self.entries.items())

    def grouped(self) -> dict[str, tuple[int, int]]:
        """``{index class: (number of indices, common dimension)}``."""
        groups: dict[str, list[int]] = {}
        for label, dim in self.entries.items():
            groups.setdefault(_index_class(self.genus, label), []).append(dim)
        out = {}
        for name, dims in groups.items():
            if len(set(dims)) != 1:
                raise InconsistencyError(f"brick dimensions differ within {name}: {sorted(set(dims))}")
            out[name] = (len(dims), dims[0])
        return out


def _index_class(g: int, label: tuple) -> str:
    kind, key = label
    if kind == "h":
        return "h=0" if key == 0 else "h!=0"
    if kind == "q":
        return f"Arf={arf(QuadraticForm.from_bits(g, key))}"
    return f"svn{key:+d}"


def brick_table(g: int, k: int, s: SignConvention = PLUS, twisted: bool = False) -> BrickTable:
    """Bricks read off from the character decomposition.

    Checks that only the family allowed by ``k mod 4`` occurs.
    """
    mode = brick_mode(k)
    if twisted:
        mult = decompose(character_of_Zk_twisted(g, k))
    else:
        mult = decompose(character_of_Zk(g, k, s))
    family = {MOD4_ZERO: "h", MOD4_TWO: "q", ODD: "svn"}[mode]
    stray = {lab: m for lab, m in mult.items() if m and lab[0] != family}
    if stray:
        raise InconsistencyError(f"level {k} character has off-family constituents {stray}")
    entries = {lab: m for lab, m in mult.items() if lab[0] == family}
    return BrickTable(g, k, mode, twisted, entries)


def _exact_div(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r or q < 0:
        raise InconsistencyError(f"{what}: {num}/{den} is not a non-negative integer")
    return q


def brick_dims_mod4zero(g: int, k: int, twisted: bool = False) -> tuple[int, int]:
    """Closed-form ``(d^(0), d^(1))``: trivial resp. any non-trivial character of J^(2)."""
    d = verlinde_dim_twisted(g, k) if twisted else verlinde_dim(g, k)
    tr = trace_twisted(g, k) if twisted else trace_untwisted(g, k)
    n = 1 << (2 * g)
    d0 = _exact_div(d + (n - 1) * tr, n, f"d^(0)_{g}({k})")
    d1 = _exact_div(d - tr, n, f"d^(1)_{g}({k})")
    return d0, d1


def brick_dims_mod4two(g: int, k: int, twisted: bool = False) -> tuple[int, int]:
    """Closed-form brick dimensions for an even resp. odd quadratic form."""
    if k % 2:
        raise ValueError("k must be even")
    pre = ((k + 2) // 2) ** (g - 1)
    n = 1 << (2 * g)
    out = []
    for parity in (0, 1):
        sign = -1 if parity else 1
        if twisted:
            num = verlinde_dim_twisted(g, k) + pre * (1 - sign * 2**g)
        else:
            num = verlinde_dim(g, k) + pre * (sign * 2**g - 1)
        out.append(_exact_div(num, n, f"brick Arf={parity}, g={g}, k={k}"))
    return out[0], out[1]


def odd_level_factor(g: int, k: int) -> tuple[int, bool]:
    """``(m, conjugate)`` with ``Z_k = m Z_1`` or ``m conj(Z_1)``; conjugate iff k = 3 mod 4."""
    if k % 2 == 0:
        raise ValueError("k must be odd")
    m = _exact_div(verlinde_dim(g, k), 1 << g, f"d_{g}({k})/2^{g}")
    return m, k % 4 == 3


def z1_label(s: SignConvention = PLUS) -> tuple:
    """The Stone-von Neumann irreducible realised by Z_1 under the convention."""
    return ("svn", s.epsilon)


def grouped_from_decomposition(g: int, k: int, s: SignConvention = PLUS, twisted: bool = False):
    """``(d^(0), d^(1))`` for even ``k`` as seen by the decomposition."""
    table = brick_table(g, k, s, twisted).grouped()
    if k % 4 == 0:
        return table["h=0"][1], table["h!=0"][1]
    return table.get("Arf=0", (0, 0))[1], table.get("Arf=1", (0, 0))[1]
