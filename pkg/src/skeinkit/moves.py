"""
Local moves that turn a Morse diagram into a framed-isotopic one.

These are used to generate test pairs; nothing here tries to decide isotopy.
Crossing rotation changes the local writhe by 2 and the other moves leave it
alone, so the number of rotations applied is half the local-writhe change.
"""

from __future__ import annotations

import random

from .diagram import CAP, CUP, NEG, POS, MorseDiagram, Slice, local_writhe

__all__ = [
    "rotate_crossing",
    "insert_r2",
    "r3_rewrite",
    "far_commute",
    "insert_zigzag",
    "random_isotopic",
]

_FLIP = {POS: NEG, NEG: POS}

# braid relations on generators i (lower) and j (upper) with signs
_R3 = {
    (("i", 1), ("j", 1), ("i", 1)): (("j", 1), ("i", 1), ("j", 1)),
    (("i", -1), ("j", -1), ("i", -1)): (("j", -1), ("i", -1), ("j", -1)),
    (("i", 1), ("j", 1), ("i", -1)): (("j", -1), ("i", 1), ("j", 1)),
    (("i", -1), ("j", 1), ("i", 1)): (("j", 1), ("i", 1), ("j", -1)),
}
_R3.update({v: k for k, v in list(_R3.items())})


def rotate_crossing(d: MorseDiagram, index: int, clockwise: bool = False) -> MorseDiagram:
    """Replace a crossing by its quarter-turned copy wrapped in a cup and a cap."""
    s = d.slices[index]
    if not s.is_crossing:
        raise ValueError("not a crossing")
    p = s.pos
    flipped = _FLIP[s.kind]
    if clockwise:
        new = [Slice(CUP, p + 2), Slice(flipped, p + 1), Slice(CAP, p)]
    else:
        new = [Slice(CUP, p), Slice(flipped, p + 1), Slice(CAP, p + 2)]
    return d.replace(index, index + 1, new)


def insert_r2(d: MorseDiagram, level: int, p: int, first: str = POS) -> MorseDiagram:
    """Insert a cancelling pair of crossings on strands ``p, p+1`` at ``level``."""
    if p + 1 > d.widths[level]:
        raise ValueError("not enough strands")
    return d.replace(level, level, [Slice(first, p), Slice(_FLIP[first], p)])


def r3_rewrite(d: MorseDiagram, index: int) -> MorseDiagram | None:
    """Apply a braid relation to three consecutive crossings, if they form one."""
    window = d.slices[index:index + 3]
    if len(window) < 3 or not all(s.is_crossing for s in window):
        return None
    low = min(s.pos for s in window)
    if max(s.pos for s in window) != low + 1:
        return None
    pattern = tuple(("i" if s.pos == low else "j", s.sign) for s in window)
    image = _R3.get(pattern)
    if image is None:
        return None
    new = [Slice(POS if sg > 0 else NEG, low if g == "i" else low + 1) for g, sg in image]
    return d.replace(index, index + 3, new)


def far_commute(d: MorseDiagram, index: int) -> MorseDiagram | None:
    """Swap two adjacent crossings acting on disjoint strand pairs."""
    window = d.slices[index:index + 2]
    if len(window) < 2 or not all(s.is_crossing for s in window):
        return None
    if abs(window[0].pos - window[1].pos) < 2:
        return None
    return d.replace(index, index + 2, [window[1], window[0]])


def insert_zigzag(d: MorseDiagram, level: int, p: int, right: bool = True) -> MorseDiagram:
    """Put a snake on the strand at position ``p`` of ``level``."""
    if p > d.widths[level]:
        raise ValueError("no strand there")
    new = [Slice(CUP, p), Slice(CAP, p + 1)] if right else [Slice(CUP, p + 1), Slice(CAP, p)]
    return d.replace(level, level, new)


def random_isotopic(d: MorseDiagram, rng: random.Random, steps: int = 3,
                    rotations: int | None = None) -> tuple[MorseDiagram, int]:
    """Apply ``steps`` random moves; return the new diagram and k = |Δ local writhe| / 2."""
    start = local_writhe(d)
    for _ in range(steps):
        d = _one_move(d, rng, rotations)
    return d, abs(local_writhe(d) - start) // 2


def _one_move(d: MorseDiagram, rng: random.Random, rotations) -> MorseDiagram:
    moves = ["rotate", "r2", "r3", "commute", "zigzag"]
    rng.shuffle(moves)
    for move in moves:
        if move == "rotate":
            xs = d.crossings()
            if xs:
                return rotate_crossing(d, rng.choice(xs), rng.random() < 0.5)
        elif move == "r2":
            levels = [t for t, w in enumerate(d.widths) if w >= 2]
            if levels:
                t = rng.choice(levels)
                return insert_r2(d, t, rng.randint(1, d.widths[t] - 1), rng.choice((POS, NEG)))
        elif move == "r3":
            spots = [k for k in range(len(d)) if r3_rewrite(d, k) is not None]
            if spots:
                return r3_rewrite(d, rng.choice(spots))
        elif move == "commute":
            spots = [k for k in range(len(d)) if far_commute(d, k) is not None]
            if spots:
                return far_commute(d, rng.choice(spots))
        else:
            levels = [t for t, w in enumerate(d.widths) if w >= 1]
            if levels:
                t = rng.choice(levels)
                return insert_zigzag(d, t, rng.randint(1, d.widths[t]), rng.random() < 0.5)
    return d
