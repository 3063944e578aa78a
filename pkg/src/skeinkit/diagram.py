"""
Closed unoriented link diagrams as top-to-bottom words of elementary slices.

A slice acts on adjacent strands at a 1-based position ``p``:

* ``cup@p``  creates a pair of strands at ``p, p+1`` (width grows by 2),
* ``cap@p``  joins the strands at ``p, p+1`` (width shrinks by 2),
* ``x+@p`` / ``x-@p``  crosses the strands at ``p, p+1``.

In a positive slice the strand running from the top-right to the bottom-left
is the over strand; in a negative slice it is the other one. With both strands
oriented downwards ``x+`` is a positive crossing, so braid letters map to
crossings of the same sign.

Strands are traced through a graph whose nodes are ``(level, position)``;
level ``t`` sits between slice ``t-1`` and slice ``t``.
"""

from __future__ import annotations

import enum
import json
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "CUP", "CAP", "POS", "NEG",
    "DiagramError",
    "Slice",
    "BraidWord",
    "MorseDiagram",
    "Resolution",
    "braid_closure",
    "local_writhe",
    "writhe",
    "component_count",
    "resolve_crossing",
    "braid_permutation",
    "iter_braids",
    "StrandGraph",
    "parse_diagram",
]

CUP, CAP, POS, NEG = "cup", "cap", "x+", "x-"
_KINDS = (CUP, CAP, POS, NEG)


class DiagramError(ValueError):
    """Malformed braid word or Morse diagram."""


class Slice(NamedTuple):
    kind: str
    pos: int

    @property
    def is_crossing(self) -> bool:
        return self.kind == POS or self.kind == NEG

    @property
    def sign(self) -> int:
        return 1 if self.kind == POS else -1 if self.kind == NEG else 0

    def __str__(self):
        return f"{self.kind}@{self.pos}"


@dataclass(frozen=True)
class BraidWord:
    strands: int
    word: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.strands, int) or self.strands < 1:
            raise DiagramError("a braid needs at least one strand")
        object.__setattr__(self, "word", tuple(self.word))
        for g in self.word:
            if not isinstance(g, int) or g == 0 or abs(g) > self.strands - 1:
                raise DiagramError(f"letter {g} is out of range for {self.strands} strands")

    @classmethod
    def parse(cls, text: str) -> "BraidWord":
        mt = re.fullmatch(r"\s*B(\d+)\s*:(.*)", text, re.S)
        if mt is None:
            raise DiagramError(f"braid text must look like 'B<n>: g1 g2 ...', got {text!r}")
        letters = []
        for tok in mt.group(2).split():
            try:
                letters.append(int(tok))
            except ValueError:
                raise DiagramError(f"bad braid letter {tok!r}") from None
        return cls(int(mt.group(1)), tuple(letters))

    def to_text(self) -> str:
        return f"B{self.strands}:" + "".join(f" {g}" for g in self.word)

    def to_json_obj(self) -> dict:
        return {"type": "braid", "strands": self.strands, "word": list(self.word)}

    @classmethod
    def from_json_obj(cls, obj) -> "BraidWord":
        try:
            return cls(int(obj["strands"]), tuple(int(g) for g in obj["word"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError(f"bad braid JSON: {exc}") from exc

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-g for g in reversed(self.word)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if other.strands != self.strands:
            raise DiagramError("strand counts differ")
        return BraidWord(self.strands, self.word + other.word)

    def __str__(self):
        return self.to_text()


class MorseDiagram:
    """An immutable closed diagram given by its slices, read top to bottom."""

    __slots__ = ("slices", "widths", "_text")

    def __init__(self, slices: Sequence[Slice] = (), closed: bool = True):
        slices = tuple(Slice(*s) for s in slices)
        widths = [0]
        for k, s in enumerate(slices):
            if s.kind not in _KINDS:
                raise DiagramError(f"unknown slice kind {s.kind!r}")
            if not isinstance(s.pos, int) or s.pos < 1:
                raise DiagramError(f"slice {k} ({s}) has a bad position")
            w = widths[-1]
            if s.kind == CUP:
                if s.pos > w + 1:
                    raise DiagramError(f"slice {k} ({s}) is beyond width {w}")
                widths.append(w + 2)
            else:
                if s.pos + 1 > w:
                    raise DiagramError(f"slice {k} ({s}) needs two strands, width is {w}")
                widths.append(w - 2 if s.kind == CAP else w)
        if closed and widths[-1] != 0:
            raise DiagramError(f"diagram ends at width {widths[-1]}, not 0")
        object.__setattr__(self, "slices", slices)
        object.__setattr__(self, "widths", tuple(widths))
        object.__setattr__(self, "_text", None)

    def __setattr__(self, name, value):
        raise AttributeError("MorseDiagram is immutable")

    @classmethod
    def parse(cls, text: str) -> "MorseDiagram":
        slices = []
        for tok in text.split():
            mt = re.fullmatch(r"(cup|cap|x\+|x-)@(\d+)", tok)
            if mt is None:
                raise DiagramError(f"bad Morse token {tok!r}")
            slices.append(Slice(mt.group(1), int(mt.group(2))))
        return cls(slices)

    def to_text(self) -> str:
        if self._text is None:
            object.__setattr__(self, "_text", " ".join(map(str, self.slices)))
        return self._text

    def to_json_obj(self) -> dict:
        return {"type": "morse", "slices": [[s.kind, s.pos] for s in self.slices]}

    @classmethod
    def from_json_obj(cls, obj) -> "MorseDiagram":
        try:
            return cls([Slice(str(k), int(p)) for k, p in obj["slices"]])
        except (KeyError, TypeError, ValueError) as exc:
            raise DiagramError(f"bad Morse JSON: {exc}") from exc

    def crossings(self) -> list[int]:
        """Indices of the crossing slices."""
        return [k for k, s in enumerate(self.slices) if s.is_crossing]

    def crossing_count(self) -> int:
        return sum(1 for s in self.slices if s.is_crossing)

    def projection_key(self) -> str:
        """Text of the diagram with crossing signs forgotten."""
        return " ".join("x@%d" % s.pos if s.is_crossing else str(s) for s in self.slices)

    def replace(self, start: int, stop: int, new: Sequence[Slice]) -> "MorseDiagram":
        return MorseDiagram(self.slices[:start] + tuple(new) + self.slices[stop:])

    def __len__(self):
        return len(self.slices)

    def __eq__(self, other):
        return isinstance(other, MorseDiagram) and self.slices == other.slices

    def __hash__(self):
        return hash(self.slices)

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"MorseDiagram({self.to_text()!r})"


def parse_diagram(text: str) -> MorseDiagram:
    """Accept either braid text (closed up) or Morse text."""
    if text.lstrip().startswith("B"):
        return braid_closure(BraidWord.parse(text))
    return MorseDiagram.parse(text)


def braid_closure(b: BraidWord) -> MorseDiagram:
    n = b.strands
    slices = [Slice(CUP, k) for k in range(1, n + 1)]
    slices += [Slice(POS if g > 0 else NEG, abs(g)) for g in b.word]
    slices += [Slice(CAP, k) for k in range(n, 0, -1)]
    return MorseDiagram(slices)


def braid_permutation(b: BraidWord) -> list[int]:
    """Image of ``b`` in the symmetric group, as a list ``perm[start] = end`` (0-based)."""
    pos = list(range(b.strands))
    for g in b.word:
        i = abs(g) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    perm = [0] * b.strands
    for end, start in enumerate(pos):
        perm[start] = end
    return perm


def local_writhe(d: MorseDiagram) -> int:
    return sum(s.sign for s in d.slices)


class StrandGraph:
    """Strand connectivity of a diagram.

    ``adj`` maps each node to its two neighbours, ``plain_edges`` lists the
    edges that do not pass through a crossing, and ``crossing_ends[k]`` gives
    the nodes ``(top-left, top-right, bottom-left, bottom-right)`` of crossing
    slice ``k``.
    """

    def __init__(self, d: MorseDiagram):
        self.diagram = d
        adj: dict[tuple[int, int], list[tuple[int, int]]] = {}
        crossing_ends = {}
        plain = []

        def link(u, v, through_crossing=False):
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
            if not through_crossing:
                plain.append((u, v))

        for t, s in enumerate(d.slices):
            w = d.widths[t]
            p = s.pos
            if s.kind == CUP:
                for j in range(1, w + 1):
                    link((t, j), (t + 1, j if j < p else j + 2))
                link((t + 1, p), (t + 1, p + 1))
            elif s.kind == CAP:
                link((t, p), (t, p + 1))
                for j in range(1, w + 1):
                    if j < p:
                        link((t, j), (t + 1, j))
                    elif j > p + 1:
                        link((t, j), (t + 1, j - 2))
            else:
                for j in range(1, w + 1):
                    if j != p and j != p + 1:
                        link((t, j), (t + 1, j))
                link((t, p), (t + 1, p + 1), True)
                link((t, p + 1), (t + 1, p), True)
                crossing_ends[t] = ((t, p), (t, p + 1), (t + 1, p), (t + 1, p + 1))
        self.adj = adj
        self.crossing_ends = crossing_ends
        self.plain_edges = plain

    def cycles(self) -> list[list[tuple[int, int]]]:
        """Each component as a cyclic node list, started at its smallest node
        and continued towards the smaller neighbour."""
        seen = set()
        out = []
        for start in sorted(self.adj):
            if start in seen:
                continue
            a, b = self.adj[start]
            cyc = walk_cycle(self.adj, start, min(a, b))
            seen.update(cyc)
            out.append(cyc)
        return out


def walk_cycle(adj, start, nxt) -> list:
    cyc = [start]
    prev, cur = start, nxt
    while cur != start:
        cyc.append(cur)
        a, b = adj[cur]
        # a cap/cup arc plus its through-edge can give a node the same neighbour twice
        prev, cur = cur, (b if a == prev else a)
    return cyc


def component_count(d: MorseDiagram) -> int:
    return len(StrandGraph(d).cycles())


def crossing_directions(d: MorseDiagram, graph: StrandGraph | None = None):
    """Trace every component once with an arbitrary orientation.

    Returns ``(info, cycles)`` where ``info[k] = (over_dir, under_dir,
    over_comp, under_comp)`` for crossing slice ``k``; a direction is +1 when
    the strand is traversed downwards.
    """
    graph = graph or StrandGraph(d)
    cycles = graph.cycles()
    step = {}
    comp = {}
    for c, cyc in enumerate(cycles):
        for u, v in zip(cyc, cyc[1:] + cyc[:1]):
            step[u] = v
            comp[u] = c
    info = {}
    for k, (tl, tr, bl, br) in graph.crossing_ends.items():
        if d.slices[k].kind == POS:
            over, under = (tr, bl), (tl, br)
        else:
            over, under = (tl, br), (tr, bl)

        def direction(top, bottom):
            if step.get(top) == bottom:
                return 1
            return -1

        info[k] = (direction(*over), direction(*under), comp[over[0]], comp[under[0]])
    return info, cycles


def writhe(d: MorseDiagram, self_only: bool = False) -> int:
    """Oriented writhe for an arbitrary orientation of each component.

    With ``self_only`` only crossings of a component with itself count, which
    makes the result independent of the orientation.
    """
    info, _ = crossing_directions(d)
    total = 0
    for k, (do, du, co, cu) in info.items():
        if self_only and co != cu:
            continue
        total += d.slices[k].sign * do * du
    return total


class Resolution(enum.Enum):
    SWITCH = "switch"
    SMOOTH_ID = "id"
    SMOOTH_CUPCAP = "cupcap"


def resolve_crossing(d: MorseDiagram, index: int, mode: Resolution) -> MorseDiagram:
    if not 0 <= index < len(d.slices):
        raise IndexError(f"slice index {index} out of range")
    s = d.slices[index]
    if not s.is_crossing:
        raise DiagramError(f"slice {index} ({s}) is not a crossing")
    if mode is Resolution.SWITCH:
        new = [Slice(NEG if s.kind == POS else POS, s.pos)]
    elif mode is Resolution.SMOOTH_ID:
        new = []
    else:
        new = [Slice(CAP, s.pos), Slice(CUP, s.pos)]
    return d.replace(index, index + 1, new)


def iter_braids(strands: int, max_len: int) -> Iterator[BraidWord]:
    """Every braid word on ``strands`` strands with length up to ``max_len``."""
    letters = [g for g in range(-(strands - 1), strands) if g]
    words: list[tuple[int, ...]] = [()]
    yield BraidWord(strands, ())
    for _ in range(max_len):
        words = [w + (g,) for w in words for g in letters]
        for w in words:
            yield BraidWord(strands, w)


def dumps(d) -> str:
    return json.dumps(d.to_json_obj())


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(str(exc)) from exc
    if not isinstance(obj, dict):
        raise DiagramError("diagram JSON must be an object")
    if obj.get("type") == "braid":
        return BraidWord.from_json_obj(obj)
    if obj.get("type") == "morse":
        return MorseDiagram.from_json_obj(obj)
    raise DiagramError("diagram JSON needs type 'braid' or 'morse'")
