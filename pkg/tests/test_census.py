from fractions import Fraction
from itertools import product

import pytest

from quiverstab import census, presets
from quiverstab.errors import IsoTestBudgetExceeded, NotPrimeField, SearchBudgetExceeded
from quiverstab.ktheory import GClass
from quiverstab.linalg import QQ, FieldSpec, Matrix, rank
from quiverstab.quiver import Representation, direct_sum
from quiverstab.stability import StabilityData
from quiverstab.structure import is_semisimple

from conftest import PRESET_NAMES

F2, F3 = FieldSpec(2), FieldSpec(3)


def _matrices(r, c, f):
    return [Matrix(r, c, tuple(tuple(vals[i * c:(i + 1) * c]) for i in range(r)), f)
            for vals in product(range(f.p), repeat=r * c)]


def _burnside_orbits(alg, alpha, f):
    # orbits of prod GL(alpha_i) on valid tuples = average number of fixed points
    shapes = [(alpha[alg.index(a.target)], alpha[alg.index(a.source)]) for a in alg.arrows]
    tuples = []
    for maps in product(*[_matrices(r, c, f) for r, c in shapes]):
        try:
            Representation(alg, f, alpha, list(maps))
        except Exception:
            continue
        tuples.append(maps)
    groups = [[g for g in _matrices(d, d, f) if rank(g) == d] for d in alpha]
    order, fixed = 0, 0
    for gs in product(*groups):
        order += 1
        for maps in tuples:
            if all(gs[alg.index(a.target)] @ m == m @ gs[alg.index(a.source)] for a, m in zip(alg.arrows, maps)):
                fixed += 1
    return Fraction(fixed, order), len(tuples)


CASES = [("a2", (1, 1)), ("a2", (2, 1)), ("a2", (2, 2)), ("kronecker", (1, 1)), ("kronecker", (1, 2)),
         ("dualnumbers", (2,)), ("sl2block", (1, 1)), ("sl2block", (2, 1)), ("sl2block", (1, 2))]
# GL_3(F_3) has 11232 elements; that case is only run over F_2
CASES = [(n, a, f) for n, a in CASES for f in (F2, F3)] + [("dualnumbers", (3,), F2)]


@pytest.mark.parametrize("name,alpha,field", CASES)
def test_class_count_matches_burnside(name, alpha, field):
    alg = presets.algebra(name)
    orbits, n_tuples = _burnside_orbits(alg, alpha, field)
    cat = census.enumerate_reps(alg, alpha, field, orbit_sizes=True)
    assert len(cat) == orbits
    assert cat.tuple_count == n_tuples
    assert cat.completeness_certified()
    for i, v in enumerate(cat.representatives):
        for w in cat.representatives[i + 1:]:
            assert not census.is_isomorphic(v, w)


def test_kronecker_11_is_projective_line_plus_zero():
    for p in (2, 3, 5):
        cat = census.enumerate_reps(presets.algebra("kronecker"), (1, 1), FieldSpec(p))
        assert len(cat) == 1 + (p + 1)


def test_a2_census_and_strata():
    alg = presets.algebra("a2")
    cat = census.enumerate_reps(alg, (1, 1), F2)
    assert len(cat) == 2 and cat.orbit_sizes == (1, 1)
    sd = StabilityData.canonical(alg, (1, 0), (1, 1))
    rep = census.theta_strata(cat, sd)
    ss = rep.semistable_stratum
    assert [v.maps[0].entries for v in ss.representatives] == [((1,),)]
    unstable = [s for s in rep.strata if not s.semistable]
    assert len(unstable) == 1
    assert unstable[0].hn_type == ((GClass((1, 0)), 1), (GClass((0, 1)), 0))
    assert is_semisimple(rep.closed_point)


def test_dual_numbers_census():
    cat = census.enumerate_reps(presets.algebra("dualnumbers"), (2,), F2)
    assert len(cat) == 2
    assert cat.tuple_count == 4 and sorted(cat.orbit_sizes) == [1, 3]


def test_worker_count_does_not_change_catalog():
    alg = presets.algebra("sl2block")
    one = census.enumerate_reps(alg, (2, 2), F2, workers=1)
    three = census.enumerate_reps(alg, (2, 2), F2, workers=3)
    assert one.representatives == three.representatives
    assert one.tuple_count == three.tuple_count


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_closed_points_and_covers(name):
    alg = presets.algebra(name)
    alphas = census.effective_classes(alg.n, 3)
    points = census.closed_points(alg, alphas + alphas[:2], F2)
    assert [a for a, _ in points] == sorted(set(alphas))
    for a, v in points:
        assert list(v.dims) == list(a) and is_semisimple(v)
        if a.is_zero():
            continue
        cat = census.enumerate_reps(alg, a, F2)
        semis = [w for w in cat.representatives if is_semisimple(w)]
        assert len(semis) == 1 and census.is_isomorphic(semis[0], v)
        assert census.cover_check(cat)


def test_isomorphism_and_automorphisms():
    obj = presets.objects("sl2block", F3)
    assert census.automorphism_count(obj["M0"]) == 2  # scalars in F_3^*
    v = direct_sum(obj["L0"], obj["L0"])
    assert census.automorphism_count(v) == census.gl_order(2, 3)
    iso = census.find_isomorphism(obj["P2"], obj["P2"])
    assert iso is not None and iso.is_intertwining()
    assert census.find_isomorphism(obj["M0"], obj["M0dual"]) is None


def test_budgets_and_fields():
    alg = presets.algebra("kronecker")
    with pytest.raises(SearchBudgetExceeded) as exc:
        census.enumerate_reps(alg, (3, 3), F2, budget=100)
    assert exc.value.required == 2**18
    with pytest.raises(NotPrimeField):
        census.enumerate_reps(alg, (1, 1), QQ)
    v = presets.objects("kronecker", F2)["P1"]
    with pytest.raises(IsoTestBudgetExceeded):
        census.is_isomorphic(v, v, budget=1)
    with pytest.raises(ValueError):
        census.enumerate_reps(alg, (1,), F2)


def test_gl_order():
    assert [census.gl_order(d, 2) for d in range(4)] == [1, 1, 6, 168]
    assert census.gl_order(2, 3) == 48
