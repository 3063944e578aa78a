"""
Verification suites shared by ``skeinkit verify`` and the acceptance tests.

Each function returns a :class:`~skeinkit.report.Report`. Sizes default to
values that finish in seconds; the acceptance tests pass larger ones.
"""

from __future__ import annotations

import cmath
import math
import random
import time
from typing import Iterable

import numpy as np

from . import fusion
from .diagram import (
    BraidWord, MorseDiagram, braid_closure, braid_permutation, component_count,
    iter_braids, local_writhe,
)
from .laurent import I, LaurentPoly, eval_complex, parse_poly, poly_add, poly_mul, substitute_scaled
from .moves import random_isotopic, rotate_crossing
from .report import Report
from .skein import (
    HOPF, HORIZONTAL_KINK, VERTICAL_KINK, BracketParams, KauffmanVariant, RandomCrossingOrder,
    bracket, kauffman_bracket_check, kauffman_poly, lickorish_check, twin_bracket,
    two_term_state_sum,
)
from .tlhecke import (
    TLElement, braid_relation_check, homfly_delta, tl_dim, tl_mul, trace_closure, zeta,
)

A = LaurentPoly.var("A")
_a = LaurentPoly.var("a")
_b = LaurentPoly.var("b")


def random_braid(rng: random.Random, strands: int, length: int) -> BraidWord:
    letters = [g for g in range(-(strands - 1), strands) if g]
    if not letters:
        return BraidWord(strands, ())
    return BraidWord(strands, tuple(rng.choice(letters) for _ in range(length)))


def braid_suite(max_strands: int = 3, max_len: int = 7, exhaustive_len: int = 4,
                samples: int = 200, seed: int = 2024) -> list[BraidWord]:
    """Every word up to ``exhaustive_len`` plus seeded random longer words."""
    out = []
    for n in range(1, max_strands + 1):
        out.extend(iter_braids(n, exhaustive_len if n > 2 else max_len))
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(2, max_strands)
        out.append(random_braid(rng, n, rng.randint(exhaustive_len + 1, max_len)))
    return out


def _random_poly(rng: random.Random, variables=("a", "z"), terms=4, span=2) -> LaurentPoly:
    p = LaurentPoly()
    for _ in range(rng.randint(0, terms)):
        exps = {v: rng.randint(-span, span) for v in variables}
        p = p + LaurentPoly.monomial(complex(rng.randint(-3, 3), rng.randint(-3, 3)), exps)
    return p


# laurent

def laurent_suite(samples: int = 1000, seed: int = 7) -> Report:
    rng = random.Random(seed)
    rep = Report("laurent")
    assoc = dist = comm = hom = text = json_ok = True
    worst = 0.0
    for _ in range(samples):
        p, q, r = (_random_poly(rng) for _ in range(3))
        assoc &= (p * q) * r == p * (q * r) and (p + q) + r == p + (q + r)
        dist &= p * (q + r) == p * q + p * r
        comm &= p * q == q * p and p + q == q + p
        scale = rng.choice((1, -1, I, -I))

        def sub(x):
            return substitute_scaled(x, "a", scale, "a", rng_power)

        rng_power = rng.choice((1, -1))
        hom &= sub(p * q) == sub(p) * sub(q)
        text &= parse_poly(p.to_text()) == p
        json_ok &= LaurentPoly.from_json(p.to_json()) == p and LaurentPoly.from_json(p.to_json()).to_json() == p.to_json()
        point = {"a": cmath.exp(1j * rng.uniform(0, 6.3)) * rng.uniform(0.5, 2),
                 "z": cmath.exp(1j * rng.uniform(0, 6.3)) * rng.uniform(0.5, 2)}
        lhs = eval_complex(p * q, point)
        rhs = eval_complex(p, point) * eval_complex(q, point)
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    rep.add("associativity", assoc)
    rep.add("distributivity", dist)
    rep.add("commutativity", comm)
    rep.add("substitute_scaled is multiplicative", hom)
    rep.add("text round trip", text)
    rep.add("JSON round trip", json_ok)
    rep.tolerance("evaluation is multiplicative", worst, 1e-10)
    dub = parse_poly("(a - a^-1)*z^-1 + 1")
    kauf = parse_poly("(a + a^-1)*z^-1 - 1")
    rep.add("loop values add to 2a/z", poly_add(dub, kauf) == 2 * _a * LaurentPoly.var("z") ** -1)
    rep.add("(iA)(iA) = -A^2", poly_mul(I * A, I * A) == -(A ** 2))
    golden = eval_complex(-(A ** 2 + A ** -2), {"A": cmath.exp(2j * math.pi / 5)})
    rep.tolerance("loop at A = exp(2 pi i/5) is golden", abs(golden - (1 + 5 ** 0.5) / 2), 1e-12)
    return rep


# temperley-lieb

def tl_oracle(braids: Iterable[BraidWord]) -> tuple[int, int]:
    """Count (agreements, total) of the TL trace against the two-term state sum."""
    delta = homfly_delta(_a, _b)
    ok = total = 0
    for b in braids:
        total += 1
        lhs = trace_closure(zeta(b, _a, _b, delta), delta)
        ok += lhs == two_term_state_sum(braid_closure(b), a=_a, b=_b)
    return ok, total


def tl_oracle_exhaustive(max_strands: int = 4, max_len: int = 6) -> tuple[int, int]:
    """TL trace against the state sum for every braid word, sharing prefixes."""
    delta = homfly_delta(_a, _b)
    ok = total = 0
    for n in range(1, max_strands + 1):
        letters = [g for g in range(-(n - 1), n) if g]
        ident = TLElement.identity(n)
        gens = {}
        for g in letters:
            i = abs(g)
            u = TLElement.generator(n, i)
            if g > 0:
                gens[g] = ident.scale(_a) + u.scale(_b)
            else:
                gens[g] = ident.scale(_a ** -1) + u.scale(_b ** -1)
        stack = [((), ident)]
        while stack:
            word, elem = stack.pop()
            total += 1
            b = BraidWord(n, word)
            ok += trace_closure(elem, delta) == two_term_state_sum(braid_closure(b), a=_a, b=_b)
            if len(word) < max_len:
                for g in letters:
                    stack.append((word + (g,), tl_mul(elem, gens[g], delta)))
    return ok, total


def zeta_iff_check(max_strands: int = 5) -> Report:
    """Braid and inverse relations hold exactly when delta = -(a/b + b/a)."""
    rep = Report("zeta relations versus delta")
    d = LaurentPoly.var("d")
    obstruction = d + _a * _b ** -1 + _a ** -1 * _b
    for n in range(2, max_strands + 1):
        good = braid_relation_check(n, _a, _b, homfly_delta(_a, _b))
        rep.add(f"n={n} relations at the critical delta", good.passed,
                detail=", ".join(c.name for c in good.checks if not c.passed))
        # symbolic delta: the failures are exact multiples of the obstruction
        ident = TLElement.identity(n)
        fine = True
        for i in range(1, n):
            diff = zeta(BraidWord(n, (i, -i)), _a, _b, d) - ident
            fine &= diff == TLElement.generator(n, i).scale(obstruction)
        for i in range(1, n - 1):
            diff = zeta(BraidWord(n, (i, i + 1, i)), _a, _b, d) - zeta(BraidWord(n, (i + 1, i, i + 1)), _a, _b, d)
            want = (TLElement.generator(n, i) - TLElement.generator(n, i + 1)).scale(_a * _b * _b * obstruction)
            fine &= diff == want
        rep.add(f"n={n} symbolic delta leaves exactly the obstruction", fine)
        for wrong in (LaurentPoly(), homfly_delta(_a, _b) + 1):
            bad = braid_relation_check(n, _a, _b, wrong)
            rep.add(f"n={n} delta={wrong} breaks the inverse relation", not bad["inverse relation"].passed)
    return rep


def tl_suite(seed: int = 11) -> Report:
    rep = Report("temperley-lieb")
    catalan = [1, 1, 2, 5, 14, 42, 132, 429]
    rep.add("basis sizes are Catalan numbers", all(tl_dim(n) == catalan[n] for n in range(1, 8)))
    d = LaurentPoly.var("d")
    U1, U2 = TLElement.generator(3, 1), TLElement.generator(3, 2)
    rep.add("U1 U1 = d U1", tl_mul(U1, U1, d) == U1.scale(d))
    rep.add("U1 U2 U1 = U1", tl_mul(tl_mul(U1, U2, d), U1, d) == U1)
    rep.extend(zeta_iff_check(5))
    rng = random.Random(seed)
    delta = homfly_delta(_a, _b)
    mult = True
    for _ in range(30):
        n = rng.randint(2, 4)
        x = random_braid(rng, n, rng.randint(0, 6))
        y = random_braid(rng, n, rng.randint(0, 6))
        mult &= zeta(x * y, _a, _b, delta) == tl_mul(zeta(x, _a, _b, delta), zeta(y, _a, _b, delta), delta)
    rep.add("zeta is multiplicative", mult)
    rep.extend(braid_relation_check(2, _a, _a ** -1, -(_a ** 2 + _a ** -2)))
    ok, total = tl_oracle(braid_suite(4, 6, 3, 60, seed))
    rep.add("trace of zeta equals the state sum", ok == total, detail=f"{ok}/{total}")
    return rep


# skein

def worked_example() -> tuple[bool, float]:
    t0 = time.perf_counter()
    d = A ** 2 + A ** -2
    value = twin_bracket(HOPF)
    ok = value == A ** 2 * d ** 2 - 2 * d + A ** -2 * d ** 2
    return ok, time.perf_counter() - t0


def kink_values() -> tuple[bool, bool]:
    d = A ** 2 + A ** -2
    return (twin_bracket(VERTICAL_KINK) == A ** 3 * d,
            twin_bracket(HORIZONTAL_KINK) == -(A ** 3) * d)


def isotopy_pairs(count: int = 60, seed: int = 5, max_crossings: int = 9):
    """Framed-isotopic pairs with k = half the local-writhe change."""
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < count:
        n = rng.randint(1, 3)
        base = braid_closure(random_braid(rng, n, rng.randint(0, 4)))
        steps = rng.randint(1, 3)
        other, k = random_isotopic(base, rng, steps)
        if other.crossing_count() > max_crossings or other == base:
            continue
        pairs.append((base, other, k))
    # make sure single rotations (k = 1) are represented
    for d in (VERTICAL_KINK, HOPF, braid_closure(BraidWord(3, (1, -2, 1)))):
        for idx in d.crossings()[:1]:
            pairs.append((d, rotate_crossing(d, idx), 1))
    return pairs


def markov_check(braids: Iterable[BraidWord], variant=KauffmanVariant.DUBROVNIK) -> tuple[bool, bool]:
    conj_ok = stab_ok = True
    for b in braids:
        if not b.word:
            continue
        base = kauffman_poly(braid_closure(b), variant)
        g = b.word[0]
        conj = BraidWord(b.strands, b.word[1:] + (g,))
        conj_ok &= kauffman_poly(braid_closure(conj), variant) == base
        for s in (1, -1):
            stab = BraidWord(b.strands + 1, b.word + (s * b.strands,))
            stab_ok &= kauffman_poly(braid_closure(stab), variant) == base * _a ** s
    return conj_ok, stab_ok


def determinism_check(diagrams: Iterable[MorseDiagram], orders: int = 20,
                      variants=tuple(KauffmanVariant)) -> tuple[int, int]:
    ok = total = 0
    for d in diagrams:
        for v in variants:
            ref = kauffman_poly(d, v)
            total += 1
            ok += all(kauffman_poly(d, v, strategy=RandomCrossingOrder(s)) == ref
                      for s in range(orders))
    return ok, total


def skein_suite() -> Report:
    rep = Report("skein")
    ok, secs = worked_example()
    rep.add("two-kink worked example", ok, detail=f"{secs:.3f}s")
    v, h = kink_values()
    rep.add("vertical kink is A^3 times the loop", v)
    rep.add("horizontal kink is -A^3 times the loop", h)
    unknot = MorseDiagram.parse("cup@1 cap@1")
    rep.add("kink over unknot is -A^3 for the bracket", bracket(VERTICAL_KINK) == -(A ** 3) * bracket(unknot))
    suite = [braid_closure(b) for b in braid_suite(3, 5, 3, 40)]
    good = sum(kauffman_bracket_check(d) for d in suite)
    rep.add("kauffman polynomial specialises to the bracket", good == len(suite), detail=f"{good}/{len(suite)}")
    conj, stab = markov_check(braid_suite(3, 5, 2, 20, seed=3))
    rep.add("conjugation invariance", conj)
    rep.add("stabilisation multiplies by a^(+-1)", stab)
    pairs = isotopy_pairs(50)
    plain = all(bracket(p) == bracket(q) for p, q, _ in pairs)
    rep.add("bracket agrees on isotopic pairs", plain)
    twin = twin_sign_check_counts(pairs)
    rep.add("twin bracket changes by (-1)^k", twin[0] == twin[1], detail=f"{twin[0]}/{twin[1]}")
    ok, total = determinism_check([HOPF, braid_closure(BraidWord(3, (1, -2, 1, -2)))], orders=5)
    rep.add("crossing order does not matter", ok == total, detail=f"{ok}/{total}")
    return rep


def twin_sign_check_counts(pairs) -> tuple[int, int]:
    ok = 0
    for d1, d2, k in pairs:
        ok += twin_bracket(d2) == twin_bracket(d1) * (-1) ** k
    return ok, len(pairs)


def lickorish_suite(braids: Iterable[BraidWord] | None = None) -> Report:
    braids = list(braid_suite() if braids is None else braids)
    rep = Report("lickorish")
    t0 = time.perf_counter()
    failures = [b for b in braids if not lickorish_check(braid_closure(b)).passed]
    secs = time.perf_counter() - t0
    rep.add("dubrovnik(a,z) = i^-w (-1)^c kauffman(ia,-iz)", not failures,
            detail=f"{len(braids) - len(failures)}/{len(braids)} closures in {secs:.1f}s"
            + (f"; first failure {failures[0]}" if failures else ""))
    return rep


# fusion

def random_k2_dims(rng: np.random.Generator) -> tuple[float, float, float]:
    def pick():
        return 1.0 if rng.random() < 0.2 else float(rng.uniform(math.sqrt(2), 12))
    dx, dy = pick(), pick()
    return math.sqrt(1 + dx + dy), dx, dy


def f_battery(samples: int = 1000, seed: int = 3) -> tuple[int, int, float]:
    """(passed, total, worst residual) over random k=1 and k=2 F-matrices."""
    rng = np.random.default_rng(seed)
    passed = 0
    worst = 0.0
    for t in range(samples):
        if t % 2:
            d = float(rng.uniform(math.sqrt(2), 12))
            F = fusion.f_matrix([d], int(rng.choice((1, -1))))
        else:
            F = fusion.f_matrix(random_k2_dims(rng), 1, ("dubrovnik", "kauffman")[t % 4 // 2])
        rep = fusion.verify_f_identities(F)
        passed += rep.passed
        worst = max([worst] + [c.residual for c in rep.checks
                               if c.residual is not None and c.name not in ("trace bound",)])
    return passed, samples, worst


PHI = (1 + 5 ** 0.5) / 2

CONCRETE = {
    "ising": ((math.sqrt(2),), None, np.array([[1, 1], [1, -1]]) / math.sqrt(2)),
    "fibonacci": ((PHI,), None, np.array([[1 / PHI, PHI ** -0.5], [PHI ** -0.5, -1 / PHI]])),
    "(2,2,1) dubrovnik": ((2.0, 2.0, 1.0), "dubrovnik",
                          np.array([[0.5, math.sqrt(2) / 2, 0.5],
                                    [math.sqrt(2) / 2, 0.0, -math.sqrt(2) / 2],
                                    [0.5, -math.sqrt(2) / 2, 0.5]])),
}


def concrete_matrices() -> dict[str, float]:
    return {name: float(np.max(np.abs(fusion.f_matrix(dims, 1, variant).M - want)))
            for name, (dims, variant, want) in CONCRETE.items()}


def k2_consistency_samples(count: int = 100, seed: int = 17, kappa: int = 1):
    """Admissible (alpha, beta, gamma) triples with both classifications."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        beta = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        alpha = cmath.exp(1j * rng.uniform(0, 2 * math.pi))
        gamma = -1 / beta if len(out) % 2 == 0 else 1 / beta
        if abs(beta + gamma) < 1e-3 or abs(beta - gamma) < 1e-3:
            continue
        try:
            res = fusion.skein_consistency_k2(alpha, beta, gamma, kappa)
        except fusion.Inadmissible:
            continue
        except fusion.RouteDisagreement as exc:
            res = exc.result
        out.append(((alpha, beta, gamma), res))
    return out


def fusion_suite() -> Report:
    rep = Report("fusion")
    for name, ring, q, want in (
        ("fibonacci", fusion.fibonacci_ring(), "t", [1, PHI]),
        ("ising", fusion.ising_ring(), "s", [1, math.sqrt(2), 1]),
        ("rep(S3)", fusion.rep_s3_ring(), "q", [1, 1, 2]),
    ):
        qd = fusion.qdims(ring, q)
        rep.tolerance(f"{name} dimensions", float(np.max(np.abs(qd.d - want))), 1e-12)
        rep.tolerance(f"{name} dimension equation", qd.residual, 1e-9)
    passed, total, worst = f_battery(1000)
    rep.add("random F-matrix battery", passed == total, worst, f"{passed}/{total}")
    for name, err in concrete_matrices().items():
        rep.tolerance(f"concrete {name}", err, 1e-12)
    for variant in ("dubrovnik", "kauffman"):
        sub, _ = fusion.new_bases(fusion.f_matrix([2, 2, 1], 1, variant))
        rep.extend(sub)
        swapped, _ = fusion.new_bases(fusion.f_matrix([2, 1, 2], 1, variant))
        rep.add(f"{variant} label swap keeps eigenspace dims", swapped["eigenspace dimensions"].passed)
    F = fusion.f_matrix([2, 2, 1], 1, "dubrovnik")
    ident = fusion.EndQ2Element.identity(F.dims)
    rng = np.random.default_rng(1)
    x = fusion.EndQ2Element(F.dims, rng.normal(size=3) + 1j * rng.normal(size=3))
    rep.tolerance("identity decomposition", fusion.compose(ident, x).distance(x), 1e-10)
    rep.tolerance("rotation is an involution", fusion.rotate(fusion.rotate(x, F), F).distance(x), 1e-10)
    pretzel = max(abs(fusion.qtrace(fusion.compose(fusion.bone_in_jacks(j, F), fusion.EndQ2Element.jack(F.dims, i)))
                      - F.kappa * F.d_q ** 2 * F.M[i, j]) for i in range(3) for j in range(3))
    rep.tolerance("pretzel trace", pretzel, 1e-10)
    for beta, want in ((cmath.exp(2j * math.pi / 5), PHI), (cmath.exp(3j * math.pi / 8), math.sqrt(2))):
        res = fusion.skein_consistency_k1(beta, 1)
        rep.tolerance(f"k=1 dimension at beta={beta:.3f}", abs(res.d_q - want), 1e-12)
        rep.tolerance(f"k=1 twist at beta={beta:.3f}", res.twist_residual, 1e-12)
    samples = k2_consistency_samples(100)
    spread = max(r.spread for _, r in samples)
    rep.tolerance("k=2 dimension routes agree", spread, 1e-9, f"{len(samples)} samples")
    nu = fusion.normalization_factor(2.0, PHI, 3.0)
    rep.tolerance("nu^2 theta = d_z", abs(nu ** 2 * fusion.theta_net(2.0, PHI, 3.0) - 3.0), 1e-12)
    return rep


SUITES = {
    "laurent": lambda: laurent_suite(300),
    "tl": tl_suite,
    "skein": skein_suite,
    "fusion": fusion_suite,
    "lickorish": lickorish_suite,
}


def run_suite(name: str) -> list[Report]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(name)
    return [SUITES[name]()]


def permutation_cycles(b: BraidWord) -> int:
    perm = braid_permutation(b)
    seen = set()
    cycles = 0
    for s in range(len(perm)):
        if s in seen:
            continue
        cycles += 1
        while s not in seen:
            seen.add(s)
            s = perm[s]
    return cycles
