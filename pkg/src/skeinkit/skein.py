"""
Skein-theoretic evaluators on Morse diagrams.

Two families live here.

The two-term family replaces a positive crossing by ``a*Id + b*CupCap`` and a
negative one by ``a^-1*Id + b^-1*CupCap``; a closed loop is worth
``delta = -(a/b + b/a)``. With ``b = A^-1`` this is the Kauffman bracket, and
with ``b = -A^-1`` it is the twin bracket whose loop value is ``A^2 + A^-2``.
All 2^n states are enumerated by a compiled kernel (see ``kernels``).

The four-term family (Dubrovnik, Kauffman and their twins) is computed by the
usual switch-and-smooth recursion towards a descending diagram. A descending
diagram is a stack of framed unknots, so it is worth ``a^w * delta^c`` with
``w`` the writhe of the self-crossings and ``c`` the number of components.

The twin relations are reduced to the untwinned ones by the substitution
``T(D) = (-1)^s(D) F(D)|_{a -> -a}`` where ``s(D)`` counts the loops left when
every crossing is given its identity smoothing. The parity of ``s`` is
unchanged by switching or by the identity smoothing and flips under the
cup-cap smoothing, which is exactly the sign change in the twin relations.
"""

from __future__ import annotations

import enum
import random
import zlib
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import kernels
from .diagram import (
    NEG, POS, BraidWord, MorseDiagram, Resolution, StrandGraph,
    braid_closure, component_count, local_writhe, resolve_crossing, writhe,
)
from .laurent import GaussInt, I, LaurentPoly, substitute, substitute_scaled
from .report import Report

__all__ = [
    "BracketParams",
    "KauffmanVariant",
    "CrossingCapExceeded",
    "two_term_state_sum",
    "bracket",
    "twin_bracket",
    "trivial_eval",
    "loop_value",
    "kauffman_poly",
    "lickorish_check",
    "kauffman_bracket_check",
    "normalize_writhe",
    "twin_sign_check",
    "RandomCrossingOrder",
    "VERTICAL_KINK",
    "HORIZONTAL_KINK",
    "HOPF",
]

_a = LaurentPoly.var("a")
_z = LaurentPoly.var("z")
_ONE = LaurentPoly.const(1)

VERTICAL_KINK = MorseDiagram.parse("cup@1 cup@2 x+@1 cap@2 cap@1")
HORIZONTAL_KINK = MorseDiagram.parse("cup@1 cup@2 x-@2 cap@1 cap@1")
HOPF = braid_closure(BraidWord(2, (1, 1)))


class CrossingCapExceeded(ValueError):
    """The diagram has more crossings than the recursion budget allows."""


@dataclass(frozen=True)
class BracketParams:
    a: LaurentPoly
    b: LaurentPoly

    def __post_init__(self):
        a = LaurentPoly.coerce(self.a)
        b = LaurentPoly.coerce(self.b)
        for name, u in (("a", a), ("b", b)):
            if not u.is_unit_monomial():
                raise ValueError(f"smoothing weight {name}={u} is not invertible")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def delta(self) -> LaurentPoly:
        return -(self.a * self.b.inverse() + self.a.inverse() * self.b)

    @classmethod
    def bracket(cls, var: str = "A") -> "BracketParams":
        A = LaurentPoly.var(var)
        return cls(A, A ** -1)

    @classmethod
    def twin(cls, var: str = "A") -> "BracketParams":
        A = LaurentPoly.var(var)
        return cls(A, -(A ** -1))

    @classmethod
    def homfly(cls) -> "BracketParams":
        return cls(LaurentPoly.var("a"), LaurentPoly.var("b"))


def state_sum_inputs(d: MorseDiagram):
    """Arc structure of ``d`` for the state-sum kernel.

    Returns ``(ends, signs, n_arcs, free_loops)``: arcs are the pieces of
    strand between crossings, numbered ``0..n_arcs-1``, and ``free_loops``
    counts the components that meet no crossing.
    """
    graph = StrandGraph(d)
    parent = {u: u for u in graph.adj}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in graph.plain_edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
    ids: dict = {}
    keys = sorted(graph.crossing_ends)
    ends = np.zeros((len(keys), 4), dtype=np.int32)
    signs = np.zeros(len(keys), dtype=np.int32)
    for c, k in enumerate(keys):
        for e, node in enumerate(graph.crossing_ends[k]):
            ends[c, e] = ids.setdefault(find(node), len(ids))
        signs[c] = d.slices[k].sign
    roots = {find(u) for u in graph.adj}
    return ends, signs, len(ids), len(roots) - len(ids)


def two_term_state_sum(d: MorseDiagram, params: BracketParams | None = None,
                       a: LaurentPoly | None = None, b: LaurentPoly | None = None) -> LaurentPoly:
    """Sum over all smoothings; a closed loop is worth ``params.delta``."""
    if params is None:
        if a is None or b is None:
            raise TypeError("give either params or both a and b")
        params = BracketParams(a, b)
    ends, signs, n_arcs, free = state_sum_inputs(d)
    hist = kernels.state_histogram(ends, signs, n_arcs)
    n = len(signs)
    delta = params.delta
    total = LaurentPoly()
    cache: dict = {}

    def power(base, tag, k):
        key = (tag, k)
        if key not in cache:
            cache[key] = base ** k
        return cache[key]

    for ea, eb, loops in zip(*np.nonzero(hist)):
        count = int(hist[ea, eb, loops])
        term = (power(params.a, "a", int(ea) - n) * power(params.b, "b", int(eb) - n)
                * power(delta, "d", int(loops) + free))
        total = total + term * count
    return total


def bracket(d: MorseDiagram, var: str = "A") -> LaurentPoly:
    return two_term_state_sum(d, BracketParams.bracket(var))


def twin_bracket(d: MorseDiagram, var: str = "A") -> LaurentPoly:
    return two_term_state_sum(d, BracketParams.twin(var))


def trivial_eval(d: MorseDiagram, alpha) -> GaussInt:
    """``alpha ** local_writhe(d)`` for a fourth root of unity ``alpha``."""
    alpha = GaussInt.coerce(alpha)
    if not alpha.is_unit():
        raise ValueError(f"{alpha} is not a fourth root of unity")
    return alpha ** local_writhe(d)


class KauffmanVariant(enum.Enum):
    DUBROVNIK = "dubrovnik"
    KAUFFMAN = "kauffman"
    DUBROVNIK_TWIN = "dubrovnik-twin"
    KAUFFMAN_TWIN = "kauffman-twin"

    @property
    def is_twin(self) -> bool:
        return self in (KauffmanVariant.DUBROVNIK_TWIN, KauffmanVariant.KAUFFMAN_TWIN)

    @property
    def untwinned(self) -> "KauffmanVariant":
        if self is KauffmanVariant.DUBROVNIK_TWIN:
            return KauffmanVariant.DUBROVNIK
        if self is KauffmanVariant.KAUFFMAN_TWIN:
            return KauffmanVariant.KAUFFMAN
        return self


def loop_value(v: KauffmanVariant) -> LaurentPoly:
    zi = _z ** -1
    ai = _a ** -1
    if v is KauffmanVariant.DUBROVNIK:
        return (_a - ai) * zi + 1
    if v is KauffmanVariant.KAUFFMAN:
        return (_a + ai) * zi - 1
    if v is KauffmanVariant.DUBROVNIK_TWIN:
        return (_a - ai) * zi - 1
    return (_a + ai) * zi + 1


class RandomCrossingOrder:
    """Randomised component order, basepoints and directions for the descending walk.

    The choice depends only on the seed and the diagram's projection, so the
    recursion still terminates.
    """

    def __init__(self, seed: int):
        self.seed = seed

    def __call__(self, d: MorseDiagram, cycles: list[list]) -> list[list]:
        rng = random.Random((self.seed << 32) ^ zlib.crc32(d.projection_key().encode()))
        out = []
        for cyc in cycles:
            k = rng.randrange(len(cyc))
            cyc = cyc[k:] + cyc[:k]
            if rng.random() < 0.5:
                cyc = cyc[:1] + cyc[:0:-1]
            out.append(cyc)
        rng.shuffle(out)
        return out


def _first_undercrossing(d: MorseDiagram, graph: StrandGraph, walks: list[list]) -> int | None:
    """Slice index of the first crossing whose first visit is on its under strand."""
    seen = set()
    for cyc in walks:
        for u, v in zip(cyc, cyc[1:] + cyc[:1]):
            if u[0] == v[0]:
                continue
            t = min(u[0], v[0])
            if t not in graph.crossing_ends or u[1] == v[1]:
                continue
            if t in seen:
                continue
            seen.add(t)
            tl, tr, bl, br = graph.crossing_ends[t]
            over = {tr, bl} if d.slices[t].kind == POS else {tl, br}
            if u not in over:
                return t
    return None


def _identity_loops(d: MorseDiagram) -> int:
    return component_count(MorseDiagram([s for s in d.slices if not s.is_crossing]))


def kauffman_poly(d: MorseDiagram, variant: KauffmanVariant = KauffmanVariant.DUBROVNIK,
                  cap: int = 16,
                  strategy: Callable[[MorseDiagram, list], list] | None = None) -> LaurentPoly:
    """Framed four-term skein invariant in the variables ``a`` and ``z``."""
    variant = KauffmanVariant(variant)
    n = d.crossing_count()
    if n > cap:
        raise CrossingCapExceeded(f"{n} crossings exceed the cap of {cap}")
    twin = variant.is_twin
    base = variant.untwinned
    dub = base is KauffmanVariant.DUBROVNIK
    a = -_a if twin else _a
    delta = loop_value(base)
    if twin:
        delta = substitute_scaled(delta, "a", -1, "a")
    memo: dict[str, LaurentPoly] = {}

    def value(g: MorseDiagram) -> LaurentPoly:
        key = g.to_text()
        hit = memo.get(key)
        if hit is not None:
            return hit
        graph = StrandGraph(g)
        cycles = graph.cycles()
        walks = cycles if strategy is None else strategy(g, cycles)
        k = _first_undercrossing(g, graph, walks) if g.crossing_count() else None
        if k is None:
            out = a ** writhe(g, self_only=True) * delta ** len(cycles)
        else:
            sw = value(resolve_crossing(g, k, Resolution.SWITCH))
            i_ = value(resolve_crossing(g, k, Resolution.SMOOTH_ID))
            c_ = value(resolve_crossing(g, k, Resolution.SMOOTH_CUPCAP))
            if dub:
                # P - N = z (I - C)
                sign = 1 if g.slices[k].kind == POS else -1
                out = sw + _z * (i_ - c_) * sign
            else:
                # P + N = z (I + C)
                out = -sw + _z * (i_ + c_)
        memo[key] = out
        return out

    out = value(d)
    if twin and _identity_loops(d) % 2:
        out = -out
    return out


def normalize_writhe(val: LaurentPoly, w: int) -> LaurentPoly:
    return val * _a ** (-w)


def lickorish_check(d: MorseDiagram, cap: int = 16) -> Report:
    """Compare Dubrovnik(a, z) with i^-w (-1)^c Kauffman(ia, -iz)."""
    dub = kauffman_poly(d, KauffmanVariant.DUBROVNIK, cap)
    kauf = kauffman_poly(d, KauffmanVariant.KAUFFMAN, cap)
    w = writhe(d)
    c = component_count(d)
    image = substitute_scaled(substitute_scaled(kauf, "a", I, "a"), "z", -I, "z")
    rhs = image * (I ** (-w)) * ((-1) ** c)
    rep = Report(f"lickorish {d}")
    rep.add("dubrovnik = i^-w (-1)^c kauffman(ia,-iz)", dub == rhs,
            detail=f"w={w} c={c}")
    return rep


def kauffman_bracket_check(d: MorseDiagram, cap: int = 16) -> bool:
    """Kauffman polynomial at a=-A^3, z=A+A^-1 against the bracket state sum.

    Negative powers of z are cleared by a common factor (A+A^-1)^N first.
    """
    A = LaurentPoly.var("A")
    kauf = kauffman_poly(d, KauffmanVariant.KAUFFMAN, cap)
    lo, _ = kauf.degree_range("z")
    shift = max(0, -lo)
    cleared = kauf * _z ** shift
    image = substitute(substitute(cleared, "a", -(A ** 3)), "z", A + A ** -1)
    return image == bracket(d) * (A + A ** -1) ** shift


def twin_sign_check(pairs: Iterable[tuple[MorseDiagram, MorseDiagram, int]]) -> Report:
    """Twin bracket values of framed-isotopic pairs differ by (-1)^k."""
    rep = Report("twin sign rule")
    for k_pair, (d1, d2, k) in enumerate(pairs):
        v1 = twin_bracket(d1)
        v2 = twin_bracket(d2)
        rep.add(f"pair {k_pair} (k={k})", v2 == v1 * (-1) ** k, detail=f"{d1} ~ {d2}")
    return rep


def evaluator_names() -> list[str]:
    return ["bracket", "bracket-twin", "homfly-framed", "dubrovnik", "kauffman",
            "dubrovnik-twin", "kauffman-twin", "trivial:+1", "trivial:-1",
            "trivial:+i", "trivial:-i"]


_TRIVIAL = {"+1": GaussInt(1), "1": GaussInt(1), "-1": GaussInt(-1),
            "+i": I, "i": I, "-i": -I}


def evaluate(name: str, d: MorseDiagram, cap: int = 16) -> LaurentPoly:
    """Dispatch on an evaluator name from :func:`evaluator_names`."""
    if name == "bracket":
        return bracket(d)
    if name == "bracket-twin":
        return twin_bracket(d)
    if name == "homfly-framed":
        return two_term_state_sum(d, BracketParams.homfly())
    if name.startswith("trivial:"):
        alpha = _TRIVIAL.get(name.split(":", 1)[1])
        if alpha is None:
            raise ValueError(f"unknown trivial evaluator {name!r}")
        return LaurentPoly.const(trivial_eval(d, alpha))
    try:
        variant = KauffmanVariant(name)
    except ValueError:
        raise ValueError(f"unknown evaluator {name!r}") from None
    return kauffman_poly(d, variant, cap)


def is_experimental(name: str) -> bool:
    return name in ("dubrovnik-twin", "kauffman-twin")
