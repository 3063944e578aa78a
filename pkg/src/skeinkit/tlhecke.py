"""
Temperley-Lieb algebras on the planar-pairing basis and the braid map into them.

Boundary points of an n-strand diagram are labelled cyclically around the
disk: the top points are 1..n from left to right and the bottom points are
n+1..2n from right to left, so the bottom point in column ``k`` has label
``2n+1-k``. With this labelling the identity of TL_2 is ``[[1, 4], [2, 3]]``
and a pairing is planar exactly when no two pairs interleave.

``tl_mul(x, y)`` stacks ``x`` on top of ``y``.
"""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping

from .diagram import BraidWord
from .laurent import LaurentPoly
from .report import Report

__all__ = [
    "PlanarPairing",
    "TLElement",
    "tl_mul",
    "tl_dim",
    "enumerate_pairings",
    "zeta",
    "trace_closure",
    "braid_relation_check",
    "homfly_delta",
]


class PlanarPairing:
    """A noncrossing perfect matching of the 2n boundary points."""

    __slots__ = ("n", "pairs", "_partner")

    def __init__(self, n: int, pairs: Iterable[tuple[int, int]]):
        pairs = tuple(sorted(tuple(sorted((int(u), int(v)))) for u, v in pairs))
        if n < 1:
            raise ValueError("need at least one strand")
        flat = [u for p in pairs for u in p]
        if len(pairs) != n or sorted(flat) != list(range(1, 2 * n + 1)):
            raise ValueError(f"{pairs} is not a perfect matching of 1..{2 * n}")
        for i, j in pairs:
            for k, l in pairs:
                if i < k < j < l:
                    raise ValueError(f"pairs {(i, j)} and {(k, l)} cross")
        partner = [0] * (2 * n + 1)
        for u, v in pairs:
            partner[u], partner[v] = v, u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", pairs)
        object.__setattr__(self, "_partner", tuple(partner))

    def __setattr__(self, name, value):
        raise AttributeError("PlanarPairing is immutable")

    @classmethod
    def identity(cls, n: int) -> "PlanarPairing":
        return cls(n, [(i, 2 * n + 1 - i) for i in range(1, n + 1)])

    @classmethod
    def generator(cls, n: int, i: int) -> "PlanarPairing":
        """The diagram U_i: a cap on top columns i, i+1 over a cup on the same bottom columns."""
        if not 1 <= i < n:
            raise ValueError(f"U_{i} does not exist in TL_{n}")
        pairs = [(k, 2 * n + 1 - k) for k in range(1, n + 1) if k not in (i, i + 1)]
        pairs += [(i, i + 1), (2 * n - i, 2 * n + 1 - i)]
        return cls(n, pairs)

    def partner(self, label: int) -> int:
        return self._partner[label]

    def __eq__(self, other):
        return isinstance(other, PlanarPairing) and self.pairs == other.pairs

    def __lt__(self, other):
        return self.pairs < other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        return f"PlanarPairing({self.n}, {list(map(list, self.pairs))})"


@lru_cache(maxsize=None)
def _stack(x: PlanarPairing, y: PlanarPairing) -> tuple[PlanarPairing, int]:
    """Pairing and number of closed loops when x sits on top of y."""
    n = x.n
    # nodes: ("t", k) top of x, ("m", k) middle, ("b", k) bottom of y; k is a column
    def x_node(label):
        return ("t", label) if label <= n else ("m", 2 * n + 1 - label)

    def y_node(label):
        return ("m", label) if label <= n else ("b", 2 * n + 1 - label)

    adj: dict = {}
    for pairing, node in ((x, x_node), (y, y_node)):
        for u, v in pairing.pairs:
            adj.setdefault(node(u), []).append(node(v))
            adj.setdefault(node(v), []).append(node(u))
    seen = set()
    pairs = []
    for start in [("t", k) for k in range(1, n + 1)] + [("b", k) for k in range(1, n + 1)]:
        if start in seen:
            continue
        prev, cur = None, start
        seen.add(cur)
        while True:
            nxt = [v for v in adj[cur] if v != prev] if prev is not None else adj[cur]
            prev, cur = cur, nxt[0]
            seen.add(cur)
            if cur[0] != "m":
                break
        pairs.append((start, cur))
    loops = 0
    for k in range(1, n + 1):
        node = ("m", k)
        if node in seen:
            continue
        loops += 1
        stack = [node]
        while stack:
            u = stack.pop()
            if u in seen:
                continue
            seen.add(u)
            stack.extend(adj[u])

    def label(node):
        return node[1] if node[0] == "t" else 2 * n + 1 - node[1]

    return PlanarPairing(n, [(label(u), label(v)) for u, v in pairs]), loops


class TLElement:
    """A linear combination of planar pairings with Laurent-polynomial coefficients."""

    __slots__ = ("n", "combo")

    def __init__(self, n: int, combo: Mapping[PlanarPairing, LaurentPoly] | None = None):
        clean = {}
        for p, c in (combo or {}).items():
            if p.n != n:
                raise ValueError("pairings must share the strand count")
            c = LaurentPoly.coerce(c)
            if not c.is_zero():
                clean[p] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "combo", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TLElement is immutable")

    @classmethod
    def identity(cls, n: int) -> "TLElement":
        return cls(n, {PlanarPairing.identity(n): LaurentPoly.const(1)})

    @classmethod
    def generator(cls, n: int, i: int) -> "TLElement":
        return cls(n, {PlanarPairing.generator(n, i): LaurentPoly.const(1)})

    def __add__(self, other: "TLElement") -> "TLElement":
        if other.n != self.n:
            raise ValueError("strand-count mismatch")
        out = dict(self.combo)
        for p, c in other.combo.items():
            out[p] = out[p] + c if p in out else c
        return TLElement(self.n, out)

    def __neg__(self):
        return TLElement(self.n, {p: -c for p, c in self.combo.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "TLElement":
        c = LaurentPoly.coerce(c)
        return TLElement(self.n, {p: v * c for p, v in self.combo.items()})

    def is_zero(self) -> bool:
        return not self.combo

    def coefficient(self, p: PlanarPairing) -> LaurentPoly:
        return self.combo.get(p, LaurentPoly())

    def __eq__(self, other):
        return isinstance(other, TLElement) and self.n == other.n and self.combo == other.combo

    def __hash__(self):
        return hash((self.n, frozenset(self.combo.items())))

    def __repr__(self):
        terms = ", ".join(f"{list(map(list, p.pairs))}: {c}" for p, c in sorted(self.combo.items()))
        return f"TLElement({self.n}, {{{terms}}})"

    def to_json_obj(self) -> list:
        return [{"pairing": [list(pr) for pr in p.pairs], "coeff": c.to_json_obj()}
                for p, c in sorted(self.combo.items())]

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json_obj(cls, obj) -> "TLElement":
        if not obj:
            raise ValueError("cannot infer the strand count of an empty element")
        combo = {}
        n = None
        for term in obj:
            pairs = [tuple(p) for p in term["pairing"]]
            n = len(pairs)
            p = PlanarPairing(n, pairs)
            combo[p] = combo.get(p, LaurentPoly()) + LaurentPoly.from_json_obj(term["coeff"])
        return cls(n, combo)


def tl_mul(x: TLElement, y: TLElement, delta: LaurentPoly) -> TLElement:
    """Bilinear stacking product, ``x`` above ``y``; each closed loop contributes ``delta``."""
    if x.n != y.n:
        raise ValueError(f"strand-count mismatch: {x.n} vs {y.n}")
    delta = LaurentPoly.coerce(delta)
    powers = {0: LaurentPoly.const(1)}
    out: dict = {}
    for p, c in x.combo.items():
        for q, e in y.combo.items():
            r, loops = _stack(p, q)
            if loops not in powers:
                powers[loops] = delta ** loops
            term = c * e * powers[loops]
            out[r] = out[r] + term if r in out else term
    return TLElement(x.n, out)


def enumerate_pairings(n: int) -> list[PlanarPairing]:
    """All noncrossing matchings of the 2n boundary points."""

    def matchings(points):
        if not points:
            yield []
            return
        first = points[0]
        # the partner of the first point must leave an even block inside
        for k in range(1, len(points), 2):
            inside, outside = points[1:k], points[k + 1:]
            for left in matchings(inside):
                for right in matchings(outside):
                    yield [(first, points[k])] + left + right

    return sorted(PlanarPairing(n, m) for m in matchings(list(range(1, 2 * n + 1))))


def tl_dim(n: int) -> int:
    if n < 1:
        raise ValueError("n must be positive")
    return len(enumerate_pairings(n))


def homfly_delta(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Loop value that makes the braid map a homomorphism."""
    a, b = LaurentPoly.coerce(a), LaurentPoly.coerce(b)
    return -(a * b.inverse() + a.inverse() * b)


def _letter_image(n, g, a, b, ainv, binv) -> TLElement:
    i = abs(g)
    if g > 0:
        return TLElement.identity(n).scale(a) + TLElement.generator(n, i).scale(b)
    return TLElement.identity(n).scale(ainv) + TLElement.generator(n, i).scale(binv)


def zeta(word: BraidWord, a: LaurentPoly, bb: LaurentPoly, delta: LaurentPoly) -> TLElement:
    """Image of a braid under sigma_i -> a + bb*U_i, sigma_i^-1 -> a^-1 + bb^-1*U_i."""
    a, bb = LaurentPoly.coerce(a), LaurentPoly.coerce(bb)
    try:
        ainv, binv = a.inverse(), bb.inverse()
    except ZeroDivisionError as exc:
        raise ValueError(f"braid weights must be invertible: {exc}") from None
    n = word.strands
    out = TLElement.identity(n)
    for g in word.word:
        out = tl_mul(out, _letter_image(n, g, a, bb, ainv, binv), delta)
    return out


def trace_closure(x: TLElement, delta: LaurentPoly) -> LaurentPoly:
    """Join top column i to bottom column i and count loops."""
    delta = LaurentPoly.coerce(delta)
    total = LaurentPoly()
    for p, c in x.combo.items():
        n = p.n
        parent = list(range(2 * n + 1))

        def find(u):
            while parent[u] != u:
                parent[u] = parent[parent[u]]
                u = parent[u]
            return u

        for u, v in list(p.pairs) + [(i, 2 * n + 1 - i) for i in range(1, n + 1)]:
            ru, rv = find(u), find(v)
            if ru != rv:
                parent[ru] = rv
        loops = len({find(u) for u in range(1, 2 * n + 1)})
        total = total + c * delta ** loops
    return total


def braid_relation_check(n: int, a, bb, delta) -> Report:
    """Braid, inverse and Hecke relations for the images of the generators of B_n."""
    a, bb, delta = (LaurentPoly.coerce(v) for v in (a, bb, delta))
    rep = Report(f"braid relations in TL_{n}")
    ident = TLElement.identity(n)

    def z(*letters):
        return zeta(BraidWord(n, letters), a, bb, delta)

    braid_ok = all(z(i, i + 1, i) == z(i + 1, i, i + 1) for i in range(1, n - 1))
    rep.add("braid relation", braid_ok)
    inverse_ok = all(z(i, -i) == ident and z(-i, i) == ident for i in range(1, n))
    rep.add("inverse relation", inverse_ok)
    shift = a.inverse() * bb * bb
    hecke_ok = True
    for i in range(1, n):
        s = z(i)
        lhs = tl_mul(s + ident.scale(shift), s - ident.scale(a), delta)
        hecke_ok &= lhs.is_zero()
    rep.add("hecke relation", hecke_ok)
    return rep
