"""Verification suites behind ``verlinde-bricks verify``.

Each check returns a short detail string on success and raises
:class:`CheckFailed` carrying the first counterexample otherwise.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterable

from . import characters as ch
from . import heisenberg as hz
from . import kernels
from . import quadforms as qf
from . import symplectic as sp
from . import verlinde as vl

SUITES = ("pairing", "group", "quadforms", "verlinde", "characters")

RANDOM_TRIPLES = 100_000


class CheckFailed(AssertionError):
    pass


@dataclass
class CheckConfig:
    genera: list[int]
    levels: list[int]
    sign: sp.SignConvention = sp.PLUS
    seed: int = 0
    check_oracle: bool = False
    precision_bits: int | None = None


@dataclass
class CheckResult:
    suite: str
    name: str
    passed: bool
    detail: str


def _fail(msg: str):
    raise CheckFailed(msg)


def _pairs(g: int, rng: random.Random, samples: int = 2000) -> Iterable[tuple[sp.Mod4Class, sp.Mod4Class]]:
    if g <= 2:
        classes = list(sp.all_mod4(g))
        yield from product(classes, repeat=2)
        return
    for _ in range(samples):
        yield _random_mod4(g, rng), _random_mod4(g, rng)


def _random_mod4(g: int, rng: random.Random) -> sp.Mod4Class:
    return sp.Mod4Class(g, [rng.randrange(4) for _ in range(2 * g)])


# -- pairing ---------------------------------------------------------------------

def check_pairing(g: int, cfg: CheckConfig) -> str:
    rng = random.Random(cfg.seed)
    s = cfg.sign
    n = 0
    for a, b in _pairs(g, rng):
        w = sp.weil4(a, b, s)
        if (w + sp.weil4(b, a, s)) % 4:
            _fail(f"antisymmetry fails at a={a.coords}, b={b.coords}")
        if sp.weil4(a, a, s):
            _fail(f"weil4(a, a) != 1 at a={a.coords}")
        if sp.mu4_square(w) != sp.weil2(a.reduce(), b.reduce()):
            _fail(f"weil4^2 != weil2 at a={a.coords}, b={b.coords}")
        if (sp.weil4(a, b, s.flipped()) + w) % 4:
            _fail(f"flipping epsilon does not conjugate at a={a.coords}, b={b.coords}")
        n += 1
    triples = 0
    if g == 1:
        classes = list(sp.all_mod4(g))
        for a, b, c in product(classes, repeat=3):
            if sp.weil4(a + b, c, s) != (sp.weil4(a, c, s) + sp.weil4(b, c, s)) % 4:
                _fail(f"bilinearity fails at {a.coords}, {b.coords}, {c.coords}")
            triples += 1
    else:
        for _ in range(5000):
            a, b, c = (_random_mod4(g, rng) for _ in range(3))
            if sp.weil4(a + b, c, s) != (sp.weil4(a, c, s) + sp.weil4(b, c, s)) % 4:
                _fail(f"bilinearity fails at {a.coords}, {b.coords}, {c.coords}")
            triples += 1
    if g <= 2:
        classes = list(sp.all_mod4(g))
        for a in classes[1:]:
            if all(sp.weil4(a, b, s) == 0 for b in classes):
                _fail(f"weil4 degenerate at a={a.coords}")
    return f"g={g}: {n} pairs, {triples} bilinearity triples"


# -- group -----------------------------------------------------------------------

def check_associativity(g: int, cfg: CheckConfig) -> str:
    if g == 1:
        bad = kernels.exhaustive_associativity(1)
        if bad:
            _fail(f"{bad} non-associative triples at g=1")
        return "g=1: all 4096 triples"
    rng = random.Random(cfg.seed)
    order = hz.group_order(g)
    xs, ys, zs = ([rng.randrange(order) for _ in range(RANDOM_TRIPLES)] for _ in range(3))
    i = kernels.associativity_failure(xs, ys, zs, g)
    if i >= 0:
        _fail(f"non-associative triple codes {(xs[i], ys[i], zs[i])} at g={g}")
    return f"g={g}: {RANDOM_TRIPLES} random triples (seed {cfg.seed})"


def check_group_structure(g: int, cfg: CheckConfig) -> str:
    if g > 3:
        return f"g={g}: skipped (brute force limited to g <= 3)"
    elements = list(hz.all_elements(g))
    order = len(set(x.code for x in elements))
    if order != 4 << (2 * g):
        _fail(f"group order {order}")
    center = [z for z in elements if all(z * x == x * z for x in elements)]
    if sorted(z.phase for z in center) != [0, 1, 2, 3] or not all(z.is_central() for z in center):
        _fail(f"centre is {[z.code for z in center]}")
    comms = {hz.e_commutator(x, y).code for x in elements for y in elements}
    if comms != {0, 2}:
        _fail(f"commutators {sorted(comms)}")
    for x in elements:
        sq = x * x
        if not sq.is_central():
            _fail(f"square of {x.code} is not central")
        if x.phase == 0 and sq != hz.EElement.identity(g):
            _fail(f"rho with code {x.code} is not an involution")
    return f"g={g}: order {order}, centre mu_4, commutators {{+-1}}"


def check_commutator_relation(g: int, cfg: CheckConfig) -> str:
    rng = random.Random(cfg.seed)
    n = 0
    for a, b in _pairs(g, rng):
        ra, rb = hz.EElement.rho(a), hz.EElement.rho(b)
        sq = (ra * rb) * (ra * rb)
        want = 0 if sp.weil2(a.reduce(), b.reduce()) == 1 else 2
        if sq != hz.EElement.central(g, want):
            _fail(f"(rho_a rho_b)^2 != lambda_2 at a={a.coords}, b={b.coords}")
        if hz.e_commutator(ra, rb) != sq:
            _fail(f"commutator != (rho_a rho_b)^2 at a={a.coords}, b={b.coords}")
        rel = hz.EElement.central(g, sp.intersect4(a, b)) * hz.EElement.rho(a + b)
        if ra * rb != rel:
            _fail(f"rho_a rho_b != u^(a.b) rho_(a+b) at a={a.coords}, b={b.coords}")
        n += 1
    return f"g={g}: {n} pairs"


def check_eprime(g: int, cfg: CheckConfig) -> str:
    if g > 2:
        return f"g={g}: skipped (exhaustive check limited to g <= 2)"
    els = list(hz.all_eprime_elements(g))
    for x, y in product(els, repeat=2):
        if x * y != y * x:
            _fail("E' is not abelian")
    for x, y in product(list(hz.all_elements(g)), repeat=2):
        if hz.to_eprime(x * y) != hz.to_eprime(x) * hz.to_eprime(y):
            _fail(f"reduction E -> E' is not a homomorphism at {x.code}, {y.code}")
    return f"g={g}: {len(els)} elements, abelian, reduction is a homomorphism"


def check_components(g: int, cfg: CheckConfig) -> str:
    rng = random.Random(cfg.seed)
    alphas = [sp.Mod2Class.from_bits(g, b) for b in range(1, 1 << (2 * g))]
    if g > 2:
        alphas = rng.sample(alphas, 8)
    for alpha in alphas:
        lifts = sp.lifts_of(alpha)
        base = lifts[0]
        side = [hz.same_component(base, a) for a in lifts]
        half = 1 << (2 * g - 1)
        if side.count(True) != half:
            _fail(f"lifts of {alpha.coords} split {side.count(True)}/{len(lifts) - side.count(True)}")
        for a, same in zip(lifts, side):
            if same != (hz.EElement.rho(a) == hz.EElement.rho(base)):
                _fail(f"component criterion disagrees with E at {a.coords}")
        for beta in sp.all_mod2(g) if g <= 2 else alphas:
            if hz.beta_swaps_components(alpha, beta) != (sp.weil2(alpha, beta) == -1):
                _fail(f"swap rule fails at alpha={alpha.coords}, beta={beta.coords}")
    return f"g={g}: {len(alphas)} classes"


def check_triples(g: int, cfg: CheckConfig) -> str:
    if g < 2:
        return "g=1: no commuting pairs of distinct non-zero classes"
    rng = random.Random(cfg.seed)
    n = 0
    for a, b in _pairs(g, rng, samples=500):
        alpha, beta = a.reduce(), b.reduce()
        if alpha.is_zero() or beta.is_zero() or alpha == beta or sp.weil2(alpha, beta) != 1:
            continue
        triples = hz.triple_intersection_sign(a, b, cfg.sign)
        if len(triples) != 4:
            _fail(f"{len(triples)} non-empty triples at a={a.coords}, b={b.coords}")
        for e, m, v in triples:
            for flip in ((-1, -1, 1), (-1, 1, -1), (1, -1, -1)):
                if (e * flip[0], m * flip[1], v * flip[2]) not in triples:
                    _fail("non-empty triples are not closed under double flips")
        # On a common fixed point rho_a rho_b rho_(a+b) acts by e*m*v.
        prod_ = hz.EElement.rho(a) * hz.EElement.rho(b) * hz.EElement.rho(a + b)
        lam = 1 if prod_.phase == 0 else -1
        if not prod_.is_central() or prod_.phase % 2 or any(e * m * v != lam for e, m, v in triples):
            _fail(f"triple signs disagree with rho_a rho_b rho_(a+b) at a={a.coords}, b={b.coords}")
        if triples != hz.triple_intersection_sign(b, a, cfg.sign):
            _fail("triple predicate is not symmetric in a, b")
        n += 1
    return f"g={g}: {n} commuting pairs"


def check_cardinalities(g: int, cfg: CheckConfig) -> str:
    if g < 2:
        return "g=1: no admissible pairs"
    rng = random.Random(cfg.seed)
    done = 0
    for _ in range(200):
        alpha = sp.Mod2Class.from_bits(g, rng.randrange(1, 1 << (2 * g)))
        beta = sp.Mod2Class.from_bits(g, rng.randrange(1, 1 << (2 * g)))
        if alpha == beta:
            continue
        twisted = sp.weil2(alpha, beta) == -1
        got = hz.intersection_cardinalities(g, alpha, beta, twisted=twisted)
        want = (2 ** (2 * g - 2), None if twisted else 2 ** (2 * g - 4))
        if got != want:
            _fail(f"cardinalities {got} != {want} at alpha={alpha.coords}, beta={beta.coords}")
        done += 1
        if done >= 20:
            break
    return f"g={g}: {done} pairs"


def check_conjugacy(g: int, cfg: CheckConfig) -> str:
    if g > 2:
        return f"g={g}: skipped (brute force limited to g <= 2)"
    classes = hz.e_conjugacy_classes(g)
    want = 4 + 2 * (2 ** (2 * g) - 1)
    if len(classes) != want:
        _fail(f"{len(classes)} classes, expected {want}")
    for cls in classes:
        ids = {hz.class_id(x) for x in cls}
        if len(ids) != 1:
            _fail(f"class_id not constant on a class: {ids}")
    return f"g={g}: {len(classes)} classes"


# -- quadratic forms --------------------------------------------------------------

def check_arf_counts(g: int, cfg: CheckConfig) -> str:
    want = qf.arf_closed_form(g)
    got = qf.count_by_arf(g)
    if got != want:
        _fail(f"count_by_arf({g}) = {got}, expected {want}")
    by_arf, constrained = qf.arf_census(g)
    if by_arf != want:
        _fail(f"value-sum census gives {by_arf}, expected {want}")
    quarter = 2 ** (2 * g - 2)
    for a, counts in constrained.items():
        if counts != (quarter, quarter):
            _fail(f"constrained counts {counts} at alpha bits {a}")
    alpha = sp.Mod2Class.from_bits(g, 1)
    if qf.count_value_constrained(g, alpha) != (quarter, quarter):
        _fail("count_value_constrained disagrees with the census")
    return f"g={g}: {want}, constrained {quarter} each"


def check_polarization(g: int, cfg: CheckConfig) -> str:
    rng = random.Random(cfg.seed)
    if g <= 2:
        cases = product(qf.all_forms(g), sp.all_mod2(g), sp.all_mod2(g))
    else:
        cases = (
            (
                qf.QuadraticForm.from_bits(g, rng.randrange(1 << (2 * g))),
                sp.Mod2Class.from_bits(g, rng.randrange(1 << (2 * g))),
                sp.Mod2Class.from_bits(g, rng.randrange(1 << (2 * g))),
            )
            for _ in range(3000)
        )
    n = 0
    for q, a, b in cases:
        if qf.evaluate(q, a + b) != qf.evaluate(q, a) * qf.evaluate(q, b) * sp.weil2(a, b):
            _fail(f"polarization fails for q={q.basis_values}, a={a.coords}, b={b.coords}")
        n += 1
    return f"g={g}: {n} cases"


# -- verlinde --------------------------------------------------------------------------

def check_fusion_ring(k: int, cfg: CheckConfig) -> str:
    fd = vl.fusion_data(k)
    n = k + 1
    for i in range(n):
        m = fd.fusion[i]
        if m != vl._transpose(m):
            _fail(f"N_{i} is not symmetric at level {k}")
        for j in range(i + 1, n):
            if vl._matmul(m, fd.fusion[j]) != vl._matmul(fd.fusion[j], m):
                _fail(f"N_{i} N_{j} != N_{j} N_{i} at level {k}")
    if fd.fusion[0] != vl._identity(n):
        _fail("N_0 is not the identity")
    return f"k={k}"


def check_verlinde(g: int, k: int, cfg: CheckConfig) -> str:
    d, dt = vl.verlinde_dim(g, k), vl.verlinde_dim_twisted(g, k)
    if g == 1 and (d != k + 1 or dt != (1 - k % 2)):
        _fail(f"genus one dimensions ({d}, {dt}) at k={k}")
    if not d >= dt >= 0:
        _fail(f"d={d}, d'={dt} violate d >= d' >= 0 at g={g}, k={k}")
    if abs(vl.trace_untwisted(g, k)) > d:
        _fail("untwisted trace exceeds the dimension")
    if k % 2 == 0 and abs(vl.trace_twisted(g, k)) > dt:
        _fail("twisted trace exceeds the twisted dimension")
    detail = f"g={g}, k={k}: d={d}, d'={dt}"
    if cfg.check_oracle:
        for twisted, exact in ((False, d), (True, dt)):
            got = vl.float_oracle(g, k, twisted, cfg.precision_bits)
            if got != exact:
                _fail(f"oracle {got} != exact {exact} at g={g}, k={k}, twisted={twisted}")
        detail += ", oracle agrees"
    return detail


def check_root_identity(k: int, cfg: CheckConfig) -> str:
    for s in (sp.PLUS, sp.MINUS):
        if not vl.root_identity_check(k, s):
            _fail(f"root-of-unity identity fails at k={k}, epsilon={s.epsilon}")
    return f"k={k}"


# -- characters --------------------------------------------------------------------------

def check_orthogonality(g: int, cfg: CheckConfig) -> str:
    if g > 3:
        return f"g={g}: skipped (full table check limited to g <= 3)"
    for table in (ch.irreducible_table(g), ch.eprime_irreducible_table(g)):
        irr = table.irreducibles
        if len(irr) != len(table.class_sizes):
            _fail(f"{len(irr)} irreducibles for {len(table.class_sizes)} classes")
        if sum(x.dim**2 for x in irr) != table.order:
            _fail("sum of squared dimensions != group order")
        for i, x in enumerate(irr):
            for j, y in enumerate(irr):
                ip = ch.inner_product(x.character, y.character, table.class_sizes)
                if ip != (1 if i == j else 0):
                    _fail(f"<{x.label}, {y.label}> = {ip}")
    return f"g={g}"


def check_decomposition(g: int, k: int, cfg: CheckConfig) -> str:
    table = ch.brick_table(g, k, cfg.sign)
    if table.total() != vl.verlinde_dim(g, k):
        _fail(f"bricks reassemble to {table.total()} at g={g}, k={k}")
    if k % 2:
        m, conj = ch.odd_level_factor(g, k)
        label = ("svn", -cfg.sign.epsilon if conj else cfg.sign.epsilon)
        nonzero = {lab: v for lab, v in table.entries.items() if v}
        if nonzero != {label: m}:
            _fail(f"odd level decomposition {nonzero}, expected {{{label}: {m}}}")
        return f"g={g}, k={k}: {m} x {'conj ' if conj else ''}Z_1"
    closed = ch.brick_dims_mod4zero if k % 4 == 0 else ch.brick_dims_mod4two
    for twisted in (False, True):
        got = ch.grouped_from_decomposition(g, k, cfg.sign, twisted)
        want = closed(g, k, twisted)
        if got != want:
            _fail(f"decomposition {got} != closed form {want} at g={g}, k={k}, twisted={twisted}")
    if ch.brick_table(g, k, cfg.sign.flipped()).entries != table.entries:
        _fail("brick multiplicities depend on epsilon")
    return f"g={g}, k={k}: {closed(g, k)} / {closed(g, k, True)}"


# -- driver ---------------------------------------------------------------------------

def _suite_checks(suite: str, cfg: CheckConfig) -> list[tuple[str, Callable[[], str]]]:
    out: list[tuple[str, Callable[[], str]]] = []
    G, K = cfg.genera, cfg.levels

    def per_genus(name, fn, gs=G):
        for g in gs:
            out.append((name, lambda g=g: fn(g, cfg)))

    def per_level(name, fn):
        for k in K:
            out.append((name, lambda k=k: fn(k, cfg)))

    if suite == "pairing":
        per_genus("weil pairing laws", check_pairing)
    elif suite == "group":
        per_genus("associativity", check_associativity)
        per_genus("order, centre, commutators", check_group_structure)
        per_genus("(rho_a rho_b)^2 = lambda_2", check_commutator_relation)
        per_genus("conjugacy classes", check_conjugacy)
        per_genus("E' and the reduction E -> E'", check_eprime)
        per_genus("component calculus", check_components)
        per_genus("triple intersections", check_triples)
        per_genus("intersection cardinalities", check_cardinalities)
    elif suite == "quadforms":
        per_genus("Arf counts", check_arf_counts, [g for g in G if g <= 8])
        per_genus("polarization", check_polarization)
    elif suite == "verlinde":
        per_level("fusion ring", check_fusion_ring)
        for g in G:
            for k in K:
                out.append(("verlinde dimensions", lambda g=g, k=k: check_verlinde(g, k, cfg)))
        per_level("root-of-unity identity", check_root_identity)
    elif suite == "characters":
        per_genus("orthogonality", check_orthogonality)
        for g in G:
            for k in K:
                out.append(("decomposition", lambda g=g, k=k: check_decomposition(g, k, cfg)))
    else:
        raise ValueError(f"unknown suite {suite!r}")
    return out


def run_suites(suites: Iterable[str], cfg: CheckConfig, stop_at_first: bool = True) -> list[CheckResult]:
    results = []
    for suite in suites:
        for name, fn in _suite_checks(suite, cfg):
            try:
                detail = fn()
            except (CheckFailed, ch.InconsistencyError, vl.OraclePrecisionError) as exc:
                results.append(CheckResult(suite, name, False, str(exc)))
                if stop_at_first:
                    return results
            else:
                results.append(CheckResult(suite, name, True, detail))
    return results
