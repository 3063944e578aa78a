import json
import random

import pytest
from hypothesis import given, strategies as st

from skeinkit.diagram import (
    BraidWord, DiagramError, MorseDiagram, Resolution, braid_closure, braid_permutation,
    component_count, dumps, iter_braids, loads, local_writhe, parse_diagram, resolve_crossing,
    writhe,
)


def braids(max_strands=4, max_len=8):
    return st.integers(1, max_strands).flatmap(lambda n: st.builds(
        BraidWord, st.just(n),
        st.lists(st.sampled_from([g for g in range(-(n - 1), n) if g] or [0]), max_size=max_len)
        .map(lambda w: tuple(g for g in w if g))))


class TestParsing:
    def test_braid(self):
        b = BraidWord.parse("B3: 1 -2 1")
        assert b.strands == 3 and b.word == (1, -2, 1)
        assert b.to_text() == "B3: 1 -2 1"
        assert BraidWord.parse("B1:").word == ()

    @pytest.mark.parametrize("bad", ["B0: 1", "B2: 2", "B2: 0", "B2 1", "B2: x", "C2: 1"])
    def test_bad_braids(self, bad):
        with pytest.raises(DiagramError):
            BraidWord.parse(bad)

    def test_morse(self):
        d = MorseDiagram.parse("cup@1 cup@2 x+@1 cap@2 cap@1")
        assert d.crossing_count() == 1
        assert d.widths == (0, 2, 4, 4, 2, 0)

    @pytest.mark.parametrize("bad", [
        "cup@1 cap@2",          # position out of range
        "cup@1",                # not closed
        "x+@1",                 # crossing on no strands
        "cup@1 y@1 cap@1",      # unknown slice
        "cup@1 cap@one",
    ])
    def test_bad_morse(self, bad):
        with pytest.raises(DiagramError):
            MorseDiagram.parse(bad)

    def test_parse_diagram_dispatch(self):
        assert parse_diagram("B1:") == braid_closure(BraidWord(1, ()))
        assert parse_diagram("cup@1 cap@1") == MorseDiagram.parse("cup@1 cap@1")

    @given(braids())
    def test_json_round_trip(self, b):
        assert BraidWord.from_json_obj(json.loads(json.dumps(b.to_json_obj()))) == b
        d = braid_closure(b)
        assert loads(dumps(d)) == d
        assert MorseDiagram.parse(d.to_text()) == d


class TestTopology:
    @given(braids())
    def test_components_are_permutation_cycles(self, b):
        perm = braid_permutation(b)
        seen, cycles = set(), 0
        for s in range(b.strands):
            if s not in seen:
                cycles += 1
                while s not in seen:
                    seen.add(s)
                    s = perm[s]
        assert component_count(braid_closure(b)) == cycles

    @given(braids())
    def test_writhe_of_closure_is_exponent_sum(self, b):
        d = braid_closure(b)
        assert writhe(d) == sum(1 if g > 0 else -1 for g in b.word)
        assert local_writhe(d) == writhe(d)

    def test_self_writhe_of_hopf(self):
        d = braid_closure(BraidWord(2, (1, 1)))
        assert writhe(d) == 2
        assert writhe(d, self_only=True) == 0

    def test_kinks(self):
        vertical = MorseDiagram.parse("cup@1 cup@2 x+@1 cap@2 cap@1")
        horizontal = MorseDiagram.parse("cup@1 cup@2 x-@2 cap@1 cap@1")
        assert component_count(vertical) == component_count(horizontal) == 1
        # a horizontal kink is unchanged in writhe but opposite in local sign
        assert local_writhe(vertical) == 1 and local_writhe(horizontal) == -1
        assert writhe(vertical) == writhe(horizontal) == 1

    def test_resolutions(self):
        d = braid_closure(BraidWord(2, (1,)))
        k = d.crossings()[0]
        assert resolve_crossing(d, k, Resolution.SWITCH) == braid_closure(BraidWord(2, (-1,)))
        assert component_count(resolve_crossing(d, k, Resolution.SMOOTH_ID)) == 2
        assert component_count(resolve_crossing(d, k, Resolution.SMOOTH_CUPCAP)) == 1

    def test_iter_braids_counts(self):
        assert sum(1 for _ in iter_braids(2, 3)) == 1 + 2 + 4 + 8
        assert sum(1 for _ in iter_braids(3, 2)) == 1 + 4 + 16

    def test_braid_group_ops(self):
        b = BraidWord(3, (1, -2))
        assert (b * b.inverse()).word == (1, -2, 2, -1)
        with pytest.raises(DiagramError):
            b * BraidWord(2, (1,))


def test_random_morse_round_trip():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(1, 4)
        b = BraidWord(n, tuple(rng.choice([g for g in range(-(n - 1), n) if g] or [1]) for _ in range(rng.randint(0, 6)))
                      if n > 1 else ())
        d = braid_closure(b)
        assert MorseDiagram.from_json_obj(d.to_json_obj()) == d
