import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverstab import presets
from quiverstab.errors import (
    ClassMismatch,
    DegenerateGamma,
    InvalidFiltration,
    NegativeGamma,
    ZeroGammaLength,
    ZeroNorm,
)
from quiverstab.ktheory import GClass, g_class
from quiverstab.linalg import FieldSpec
from quiverstab.quiver import Subrepresentation, direct_sum
from quiverstab.sampling import random_filtration, random_representation
from quiverstab.stability import (
    MuValue,
    _mu_parts,
    StabilityData,
    WeightedFiltration,
    b_gamma,
    destabilizer_search,
    filtration_enumerate_max,
    hn_filtration,
    is_semistable,
    mu_beta,
    semistable_shift_check,
    slope,
    subquotient,
)
from quiverstab.subreps import subrepresentations

from conftest import PRESET_NAMES

F2, F3 = FieldSpec(2), FieldSpec(3)
SL2 = presets.algebra("sl2block")
rationals = st.fractions(min_value=-6, max_value=6, max_denominator=5)


def sd_for(v, beta):
    return StabilityData.canonical(v.algebra, beta, g_class(v))


@given(rationals, rationals)
def test_sl2_slope_formulas(b1, b2):
    obj = presets.objects("sl2block", F2)
    expected = {"L0": b1, "L-2": b2, "M0": (b1 + b2) / 2, "M0dual": (b1 + b2) / 2, "P2": (b1 + 2 * b2) / 3}
    for name, value in expected.items():
        v = obj[name]
        assert slope(sd_for(v, (b1, b2)), v) == value


@pytest.mark.parametrize("field", [F2, F3])
def test_sl2_semistability_walls(field):
    obj = presets.objects("sl2block", field)
    for b1 in range(-2, 3):
        for b2 in range(-2, 3):
            beta = (b1, b2)
            assert is_semistable(sd_for(obj["M0"], beta), obj["M0"])[0] == (b1 >= b2)
            assert is_semistable(sd_for(obj["M0dual"], beta), obj["M0dual"])[0] == (b2 >= b1)
            assert is_semistable(sd_for(obj["P2"], beta), obj["P2"])[0] == (b1 == b2)
            for s in ("L0", "L-2"):
                assert is_semistable(sd_for(obj[s], beta), obj[s])[0]


def test_destabilizer_certificate():
    m0 = presets.objects("sl2block", F2)["M0"]
    sd = sd_for(m0, (0, 1))
    ok, cert = is_semistable(sd, m0)
    assert not ok and cert.dims == (0, 1)
    assert slope(sd, cert) > slope(sd, m0)
    assert destabilizer_search(sd_for(m0, (1, 0)), m0) is None


def _rand(name, seed, max_total=4):
    rng = random.Random(seed)
    return random_representation(presets.algebra(name), FieldSpec(rng.choice([2, 3])), rng, max_total=max_total)


def _brute_semistable(sd, v):
    s = slope(sd, v)
    return all(slope(sd, e) <= s for e in subrepresentations(v) if not e.is_zero())


def _brute_hn_chains(sd, v):
    # every chain 0 < E_1 < ... < E_m = V with semistable pieces of strictly decreasing slope
    subs = [e for e in subrepresentations(v) if not e.is_zero() and not e.is_full()]
    full = Subrepresentation.full(v)
    out = []
    for k in range(len(subs) + 1):
        for chain in combinations(subs, k):
            steps = sorted(chain, key=lambda e: e.total_dim) + [full]
            if any(not b.contains(a) or a == b for a, b in zip(steps, steps[1:])):
                continue
            lower = [Subrepresentation.zero(v)] + steps[:-1]
            pieces = [subquotient(u, lo) for u, lo in zip(steps, lower)]
            slopes = [slope(sd, g_class(p)) for p in pieces]
            if all(a > b for a, b in zip(slopes, slopes[1:])) and \
                    all(_brute_semistable(sd.with_alpha(g_class(p)), p) for p in pieces):
                out.append(tuple(steps))
        if k >= 3:
            break
    return out


@given(st.sampled_from(["a2", "kronecker", "sl2block"]), st.integers(0, 10**6),
       st.tuples(st.integers(-2, 2), st.integers(-2, 2)))
def test_hn_filtration_is_the_unique_brute_force_chain(name, seed, beta):
    v = _rand(name, seed, max_total=3)
    sd = sd_for(v, beta)
    f = hn_filtration(sd, v)
    assert _brute_hn_chains(sd, v) == [f.steps]


@given(st.sampled_from(PRESET_NAMES), st.integers(0, 10**6), st.data())
def test_hn_properties(name, seed, data):
    v = _rand(name, seed)
    beta = data.draw(st.lists(st.integers(-3, 3), min_size=v.algebra.n, max_size=v.algebra.n))
    sd = sd_for(v, beta)
    f = hn_filtration(sd, v)
    assert all(a > b for a, b in zip(f.slopes, f.slopes[1:]))
    assert sum(f.classes, GClass.zero(v.algebra.n)) == g_class(v)
    for piece in f.graded_pieces():
        assert is_semistable(sd.with_alpha(g_class(piece)), piece)[0]
    c = data.draw(rationals)
    assert hn_filtration(sd.shifted(c), v).steps == f.steps
    assert hn_filtration(sd.scaled(2), v).steps == f.steps
    assert hn_filtration(sd, v, order_seed=seed).steps == f.steps
    assert semistable_shift_check(sd, v, c)
    assert is_semistable(sd, v)[0] == (len(f.steps) == 1) == _brute_semistable(sd, v)


def test_hn_of_m0():
    m0 = presets.objects("sl2block", F2)["M0"]
    f = hn_filtration(sd_for(m0, (0, 1)), m0)
    assert f.hn_type == ((GClass((0, 1)), 1), (GClass((1, 0)), 0))


def test_mu_of_two_step_filtration_on_m0():
    m0 = presets.objects("sl2block", F2)["M0"]
    sd = sd_for(m0, (0, 1))
    soc = [e for e in subrepresentations(m0) if e.dims == (0, 1)][0]
    full = Subrepresentation.full(m0)
    mu = mu_beta(sd, WeightedFiltration((1, 0), (soc, full)))
    assert (mu.numerator, mu.norm_sq) == (1, 1)
    # the maximum over weights in [-2, 2]: (1, -1) gives 2 / sqrt(2)
    f, best = filtration_enumerate_max(sd, m0, weight_bound=2)
    assert f.weights == (1, -1) and best.signed_square == 2
    assert (best.numerator, best.norm_sq) == (2, 2)


def _brute_max_mu(sd, v, bound):
    # independent: every chain of subobjects, every strictly decreasing weight vector
    subs = [e for e in subrepresentations(v) if not e.is_zero() and not e.is_full()]
    full = Subrepresentation.full(v)
    best = None
    for k in range(len(subs) + 1):
        for chain in combinations(subs, k):
            steps = sorted(chain, key=lambda e: e.total_dim) + [full]
            if any(not b.contains(a) or a.dims == b.dims for a, b in zip(steps, steps[1:])):
                continue
            for w in combinations(range(bound, -bound - 1, -1), len(steps)):
                f = WeightedFiltration(w, steps)
                try:
                    mu = mu_beta(sd, f)
                except ZeroNorm:
                    continue
                if best is None or mu > best:
                    best = mu
        if k >= 2:
            break
    return best


@given(st.sampled_from(["a2", "kronecker", "sl2block"]), st.integers(0, 10**6),
       st.tuples(st.integers(-1, 1), st.integers(-1, 1)))
def test_mu_max_matches_brute_force_and_criterion(name, seed, beta):
    v = _rand(name, seed, max_total=3)
    sd = sd_for(v, beta)
    f, mu = filtration_enumerate_max(sd, v, 2)
    assert mu == mu_beta(sd, f)
    assert mu == _brute_max_mu(sd, v, 2)
    assert (mu.numerator <= 0) == is_semistable(sd, v)[0]


@given(st.sampled_from(PRESET_NAMES), st.integers(0, 10**6), st.integers(-4, 4), st.integers(1, 4))
def test_mu_weight_equivariance(name, seed, shift, scale):
    v = _rand(name, seed)
    rng = random.Random(seed)
    beta = [rng.randint(-2, 2) for _ in range(v.algebra.n)]
    sd = sd_for(v, beta)
    f = random_filtration(v, rng)
    moved = f.translated(shift)
    # the numerator is defined even when the shifted weights have zero norm
    assert _mu_parts(sd, moved.graded_classes(), moved.weights)[0] == \
        _mu_parts(sd, f.graded_classes(), f.weights)[0]
    try:
        mu = mu_beta(sd, f)
    except ZeroNorm:
        return
    assert mu_beta(sd, f.scaled(scale)) == mu


@given(st.sampled_from(PRESET_NAMES), st.integers(0, 10**6))
def test_numerator_by_summation_by_parts(name, seed):
    # sum_t w_t X(gr_t) = sum_{t<m} (w_t - w_{t+1}) X(A_t), X(E) = l(alpha) <beta,E> - <beta,alpha> l(E)
    v = _rand(name, seed)
    rng = random.Random(seed)
    sd = sd_for(v, [rng.randint(-3, 3) for _ in range(v.algebra.n)])
    f = random_filtration(v, rng)
    la, ba = sd.length_of(sd.alpha), sd.beta_of(sd.alpha)

    def x(dims):
        c = GClass(dims)
        return la * sd.beta_of(c) - ba * sd.length_of(c)

    w = f.weights
    rhs = sum((w[t] - w[t + 1]) * x(f.steps[t].dims) for t in range(len(w) - 1))
    num = sum(wt * x(c) for wt, c in zip(w, f.graded_classes()))
    assert num == rhs
    try:
        assert mu_beta(sd, f).numerator == rhs
    except ZeroNorm:
        pass


def test_b_gamma():
    m0 = presets.objects("sl2block", F2)["M0"]
    sd = sd_for(m0, (0, 1))
    soc = [e for e in subrepresentations(m0) if e.dims == (0, 1)][0]
    f = WeightedFiltration((3, -1), (soc, Subrepresentation.full(m0)))
    assert b_gamma(f, sd.gamma, 1) == mu_beta(sd, f).norm_sq == 10
    graded = [((1, 0), GClass((0, 1))), ((0, 2), GClass((1, 0)))]
    assert b_gamma(graded, (1, 1), (1, 1)) == 1 + 4
    assert b_gamma(graded, (1, 1), (2, 2)) == 4 * b_gamma(graded, (1, 1), (1, 1))


def test_mu_value_ordering():
    assert MuValue(-1, 1) < MuValue(0, 5) < MuValue(1, 4) < MuValue(1, 1)
    assert MuValue(2, 4) == MuValue(1, 1)
    assert MuValue(-2, 2) < MuValue(-1, 1)
    assert float(MuValue(2, 2)) == pytest.approx(2 ** 0.5)
    with pytest.raises(ZeroNorm):
        MuValue(1, 0)


def test_stability_data_validation():
    with pytest.raises(NegativeGamma):
        StabilityData((0, 0), (1, -1), (1, 1))
    with pytest.raises(DegenerateGamma):
        StabilityData((0, 0), (1, 0), (1, 1))
    sd = StabilityData((1, 2), (1, 0), (1, 0))
    with pytest.raises(ZeroGammaLength):
        slope(sd, GClass((0, 1)))
    obj = presets.objects("sl2block", F2)
    with pytest.raises(ClassMismatch):
        is_semistable(sd, obj["M0"])


def test_weighted_filtration_validation():
    m0 = presets.objects("sl2block", F2)["M0"]
    soc = [e for e in subrepresentations(m0) if e.dims == (0, 1)][0]
    full = Subrepresentation.full(m0)
    with pytest.raises(InvalidFiltration):
        WeightedFiltration((0, 1), (soc, full))
    with pytest.raises(InvalidFiltration):
        WeightedFiltration((1,), (soc,))
    with pytest.raises(InvalidFiltration):
        WeightedFiltration((1, 0), (full, full))


def test_direct_sum_of_semistables_of_equal_slope():
    obj = presets.objects("sl2block", F3)
    v = direct_sum(obj["M0"], obj["M0dual"])
    assert is_semistable(sd_for(v, (1, 1)), v)[0]
    assert not is_semistable(sd_for(v, (1, 0)), v)[0]
    f = hn_filtration(sd_for(v, (1, 0)), v)
    assert f.hn_type == ((GClass((1, 0)), 1), (GClass((1, 1)), Fraction(1, 2)), (GClass((0, 1)), 0))
