"""Acceptance gate: one pass/fail line per criterion, with its time limit.

Run ``pytest tests/test_acceptance.py -s`` or ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from itertools import product

import pytest

from quiverstab import census, presets
from quiverstab.errors import ZeroNorm
from quiverstab.ktheory import GClass, dual_basis_matrix, g_class, pairing, pairing_object
from quiverstab.linalg import FieldSpec
from quiverstab.sampling import random_filtration, random_representation
from quiverstab.stability import (
    StabilityData,
    _mu_parts,
    filtration_enumerate_max,
    hn_filtration,
    is_semistable,
    mu_beta,
    slope,
)
from quiverstab.structure import gr, is_semisimple, length

F2, F3 = FieldSpec(2), FieldSpec(3)


def canonical(v, beta):
    return StabilityData.canonical(v.algebra, beta, g_class(v))


def c1_sl2_slopes():
    obj = presets.objects("sl2block", F2)
    for b1, b2 in [(3, 1), (1, 2)]:
        b1, b2 = Fraction(b1), Fraction(b2)
        want = {"L0": b1, "L-2": b2, "M0": (b1 + b2) / 2, "P2": (b1 + 2 * b2) / 3}
        for name, value in want.items():
            v = obj[name]
            got = slope(canonical(v, (b1, b2)), v)
            if got != value:
                return False, f"sigma({name}) at beta=({b1},{b2}) is {got}, expected {value}"
    return True, "8 slopes exact"


def c2_sl2_walls():
    n = 0
    for field in (F2, F3):
        obj = presets.objects("sl2block", field)
        for b1, b2 in product(range(-2, 3), repeat=2):
            for name, rule in (("M0", b1 >= b2), ("M0dual", b2 >= b1), ("P2", b1 == b2)):
                n += 1
                if is_semistable(canonical(obj[name], (b1, b2)), obj[name])[0] != rule:
                    return False, f"{name} over {field} at beta=({b1},{b2})"
    return True, f"{n} checks agree"


def c3_dual_bases():
    for name in presets.PRESETS:
        pm = dual_basis_matrix(presets.algebra(name))
        if not pm.is_diagonal() or any(t != 1 for t in pm.tau):
            return False, f"{name}: {pm.entries}"
    return True, f"{len(presets.PRESETS)} presets diagonal, tau = 1"


def c4_a2_census():
    alg = presets.algebra("a2")
    cat = census.enumerate_reps(alg, (1, 1), F2)
    report = census.theta_strata(cat, StabilityData.canonical(alg, (1, 0), (1, 1)))
    ss = report.semistable_stratum
    unstable = [s for s in report.strata if not s.semistable]
    p1 = presets.objects("a2", F2)["P1"]
    ok = (len(cat) == 2 and ss is not None and len(ss.representatives) == 1
          and census.is_isomorphic(ss.representatives[0], p1)
          and len(unstable) == 1 and unstable[0].hn_type == ((GClass((1, 0)), 1), (GClass((0, 1)), 0)))
    return ok, f"{len(cat)} classes, {len(report.strata)} strata"


def c5_mu_oracle():
    # both sides are isomorphism invariants, so one representative per class
    # covers every representation; orbit sizes certify the catalogs are complete
    checks = 0
    for name in ("a2", "kronecker", "sl2block"):
        alg = presets.algebra(name)
        for alpha in census.effective_classes(alg.n, 4, include_zero=False):
            cat = census.enumerate_reps(alg, alpha, F2, orbit_sizes=True)
            if not cat.completeness_certified():
                return False, f"{name} {list(alpha)}: catalog not certified complete"
            for v in cat.representatives:
                for beta in product((-1, 0, 1), repeat=alg.n):
                    sd = StabilityData.canonical(alg, beta, alpha)
                    _, mu = filtration_enumerate_max(sd, v, weight_bound=2)
                    checks += 1
                    if is_semistable(sd, v)[0] != (mu.numerator <= 0):
                        return False, f"{name} {list(alpha)} beta={beta}"
    return True, f"{checks} (object, beta) pairs, 0 exceptions"


def c6_hn_suite():
    rng = random.Random(6)
    n = 0
    for name in presets.PRESETS:
        alg = presets.algebra(name)
        for _ in range(200):
            v = random_representation(alg, rng.choice([F2, F3]), rng, max_total=4)
            sd = canonical(v, [rng.randint(-3, 3) for _ in range(alg.n)])
            f = hn_filtration(sd, v)
            if any(a <= b for a, b in zip(f.slopes, f.slopes[1:])):
                return False, f"{name}: slopes {f.slopes}"
            if sum(f.classes, GClass.zero(alg.n)) != g_class(v):
                return False, f"{name}: classes do not add up"
            for piece in f.graded_pieces():
                if not is_semistable(sd.with_alpha(g_class(piece)), piece)[0]:
                    return False, f"{name}: unstable graded piece"
            c = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            if hn_filtration(sd.shifted(c), v).steps != f.steps or hn_filtration(sd.scaled(2), v).steps != f.steps:
                return False, f"{name}: filtration moved under beta + c gamma or 2 beta"
            n += 1
    return True, f"{n} random representations"


def c7_mu_equivariance():
    rng = random.Random(7)
    names = list(presets.PRESETS)
    done = 0
    while done < 100:
        alg = presets.algebra(rng.choice(names))
        v = random_representation(alg, rng.choice([F2, F3]), rng, max_total=4)
        sd = canonical(v, [rng.randint(-3, 3) for _ in range(alg.n)])
        f, g = random_filtration(v, rng), random_filtration(v, rng)
        shift = rng.randint(-5, 5)
        moved = f.translated(shift)
        if _mu_parts(sd, moved.graded_classes(), moved.weights)[0] != _mu_parts(sd, f.graded_classes(), f.weights)[0]:
            return False, "numerator moved under translation"
        try:
            mf, mg = mu_beta(sd, f), mu_beta(sd, g)
        except ZeroNorm:
            continue
        a, b = rng.randint(1, 5), rng.randint(1, 5)
        sf, sg = mu_beta(sd, f.scaled(a)), mu_beta(sd, g.scaled(b))
        if (mf < mg, mf == mg) != (sf < sg, sf == sg):
            return False, "comparison changed under positive scaling"
        done += 1
    return True, f"{done} random filtrations"


def _catalogs():
    out = []
    for name in presets.PRESETS:
        alg = presets.algebra(name)
        for alpha in census.effective_classes(alg.n, 3):
            out.append((name, census.enumerate_reps(alg, alpha, F2)))
    return out


_CATALOGS: list = []


def c8_closed_points():
    _CATALOGS[:] = _catalogs()
    seen = {}
    for name, cat in _CATALOGS:
        semis = [v for v in cat.representatives if is_semisimple(v)]
        if len(semis) != 1:
            return False, f"{name} {list(cat.alpha)}: {len(semis)} semisimple representatives"
        seen.setdefault(name, []).append(g_class(semis[0]))
    for name, classes in seen.items():
        if len(set(classes)) != len(classes):
            return False, f"{name}: two classes share a closed point"
    return True, f"{len(_CATALOGS)} catalogs, one closed point each"


def c9_cover_check():
    cats = _CATALOGS or _catalogs()
    bad = [(n, list(c.alpha)) for n, c in cats if not census.cover_check(c)]
    return not bad, f"{len(cats)} catalogs" if not bad else f"failed on {bad}"


def c10_dual_numbers():
    obj = presets.objects("dualnumbers", F2)
    p, s = obj["P"], obj["S"]
    cat = census.enumerate_reps(presets.algebra("dualnumbers"), (2,), F2)
    ok = (length(p) == 2 and gr(p) == GClass((2,)) and pairing((1,), g_class(s)) == 1
          and pairing_object((1,), s) == 1
          and len(cat) == 2)
    return ok, f"length {length(p)}, gr {list(gr(p))}, {len(cat)} classes at alpha = 2"


CRITERIA = [
    (1, "sl2-block slope table", 1, c1_sl2_slopes),
    (2, "sl2-block semistability walls", 5, c2_sl2_walls),
    (3, "dual bases", 1, c3_dual_bases),
    (4, "A2 census and strata", 1, c4_a2_census),
    (5, "mu oracle equivalence", 300, c5_mu_oracle),
    (6, "HN invariant suite", 300, c6_hn_suite),
    (7, "mu weight equivariance", 10, c7_mu_equivariance),
    (8, "closed-point census", 60, c8_closed_points),
    (9, "Quot-cover check", 60, c9_cover_check),
    (10, "dual-numbers preset", 1, c10_dual_numbers),
]


def evaluate(number, title, limit, fn):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    passed = bool(ok) and elapsed < limit
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {title} - {detail} ({elapsed:.2f}s, limit {limit}s)"
    return passed, line


@pytest.mark.parametrize("number,title,limit,fn", CRITERIA, ids=[f"c{c[0]}" for c in CRITERIA])
def test_criterion(number, title, limit, fn, capsys):
    passed, line = evaluate(number, title, limit, fn)
    with capsys.disabled():
        print("\n" + line)
    assert passed, line


if __name__ == "__main__":
    results = [evaluate(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(p for p, _ in results) else 1)
