"""
Acceptance suite: twelve end-to-end criteria, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines, or
directly with ``python tests/test_acceptance.py``.
"""

import cmath
import math
import sys
import time

import numpy as np
import pytest

from skeinkit import fusion, suites
from skeinkit.diagram import BraidWord, braid_closure
from skeinkit.skein import (
    KauffmanVariant, bracket, kauffman_bracket_check, lickorish_check, twin_bracket,
)

LICKORISH_BRAIDS = suites.braid_suite(max_strands=3, max_len=7, exhaustive_len=4, samples=200)


def c01_worked_example():
    ok, secs = suites.worked_example()
    return ok and secs < 1.0, f"exact={ok} in {secs:.3f}s"


def c02_kinks():
    vertical, horizontal = suites.kink_values()
    return vertical and horizontal, f"vertical={vertical} horizontal={horizontal}"


def c03_lickorish():
    t0 = time.perf_counter()
    bad = [b for b in LICKORISH_BRAIDS if not lickorish_check(braid_closure(b)).passed]
    secs = time.perf_counter() - t0
    n = len(LICKORISH_BRAIDS)
    return not bad and n >= 100 and secs < 60, f"{n - len(bad)}/{n} closures in {secs:.1f}s"


def c04_bracket_oracle():
    bad = [b for b in LICKORISH_BRAIDS if not kauffman_bracket_check(braid_closure(b))]
    n = len(LICKORISH_BRAIDS)
    return not bad, f"{n - len(bad)}/{n} closures"


def c05_tl_oracle():
    t0 = time.perf_counter()
    ok, total = suites.tl_oracle_exhaustive(4, 6)
    return ok == total, f"{ok}/{total} braids in {time.perf_counter() - t0:.0f}s"


def c06_zeta():
    rep = suites.zeta_iff_check(5)
    failed = [c.name for c in rep.checks if not c.passed]
    return rep.passed, f"{len(rep.checks)} checks" + (f"; failed: {failed}" if failed else "")


def c07_f_battery():
    t0 = time.perf_counter()
    passed, total, worst = suites.f_battery(1000)
    secs = time.perf_counter() - t0
    return passed == total and worst < 1e-10 and secs < 5, f"{passed}/{total}, worst {worst:.1e}, {secs:.2f}s"


def c08_concrete():
    errs = suites.concrete_matrices()
    worst = max(errs.values())
    return worst < 1e-12, ", ".join(f"{k}: {v:.1e}" for k, v in errs.items())


def c09_bases():
    lines, ok = [], True
    for variant in ("dubrovnik", "kauffman"):
        rep, _ = fusion.new_bases(fusion.f_matrix([2, 2, 1], 1, variant))
        ok &= rep.passed
        lines.append(f"{variant}: {rep['eigenspace dimensions'].detail}")
    return ok, "; ".join(lines)


def c10_twin_sign():
    pairs = suites.isotopy_pairs(60)
    ok, total = suites.twin_sign_check_counts(pairs)
    plain = all(bracket(p) == bracket(q) for p, q, _ in pairs)
    odd = sum(k % 2 for _, _, k in pairs)
    return ok == total and total >= 50 and plain, f"{ok}/{total} pairs, {odd} with odd k"


def c11_consistency():
    worst_k1 = 0.0
    for t in np.linspace(0.05, 0.45, 15):
        for kappa in (1, -1):
            beta = cmath.exp(1j * math.pi * (t if kappa == 1 else t + 0.5))
            try:
                res = fusion.skein_consistency_k1(beta, kappa)
            except fusion.FusionError:
                continue
            worst_k1 = max(worst_k1, abs(res.alpha + beta ** -3),
                           abs(res.d_q + kappa * (beta ** 2 + beta ** -2)))
    samples = suites.k2_consistency_samples(100)
    spread = max(r.spread for _, r in samples)
    ok = worst_k1 < 1e-12 and spread < 1e-9 and len(samples) == 100
    return ok, f"k=1 residual {worst_k1:.1e}; k=2 spread {spread:.1e} over {len(samples)} pairs"


def c12_determinism():
    words = ["B2: 1 1", "B2: 1 1 1", "B3: 1 -2 1 -2", "B3: 1 1 2 -1", "B3: 1 2 1 2 -1", "B2: 1 -1 1 1"]
    diagrams = [braid_closure(BraidWord.parse(w)) for w in words]
    t0 = time.perf_counter()
    ok, total = suites.determinism_check(diagrams, orders=20)
    return ok == total, f"{ok}/{total} (diagram, variant) cases x 20 orders in {time.perf_counter() - t0:.0f}s"


CRITERIA = [
    ("1 worked example", c01_worked_example),
    ("2 kink values", c02_kinks),
    ("3 lickorish relation", c03_lickorish),
    ("4 kauffman vs bracket", c04_bracket_oracle),
    ("5 TL oracle", c05_tl_oracle),
    ("6 zeta homomorphism", c06_zeta),
    ("7 F-matrix battery", c07_f_battery),
    ("8 concrete F-matrices", c08_concrete),
    ("9 rotation bases", c09_bases),
    ("10 twin sign", c10_twin_sign),
    ("11 R-matrix relations", c11_consistency),
    ("12 determinism", c12_determinism),
]


def run_one(name, fn):
    ok, detail = fn()
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {name}: {detail}"
    print(line)
    return ok, line


@pytest.mark.parametrize("name, fn", CRITERIA, ids=[n for n, _ in CRITERIA])
def test_criterion(name, fn, capsys):
    ok, line = run_one(name, fn)
    with capsys.disabled():
        print("\n" + line)
    assert ok, line


if __name__ == "__main__":
    results = [run_one(name, fn)[0] for name, fn in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
    sys.exit(0 if all(results) else 1)
