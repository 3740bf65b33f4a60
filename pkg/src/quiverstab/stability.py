"""Slope stability with respect to a pair (beta, gamma) of K-classes.

The slope of E is <beta, E> / l_gamma(E).  Semistability is certified by
exhausting all subrepresentations over F_p; Harder-Narasimhan filtrations
are built from maximal destabilizing subobjects; weighted filtrations feed
the numerical invariant

    mu(f) = sum_t w_t (l(alpha) <beta, gr_t> - <beta, alpha> l(gr_t))
            / sqrt(sum_t w_t^2 l(gr_t))

which is handled exactly as a (numerator, squared norm) pair.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import linalg
from .errors import (
    ClassMismatch,
    DegenerateGamma,
    IndexMismatch,
    InvalidFiltration,
    NegativeClass,
    NegativeGamma,
    ZeroGammaLength,
    ZeroNorm,
)
from .ktheory import GClass, KClass, canonical_gamma, is_nondegenerate, pairing
from .quiver import Representation, Subrepresentation, preimage, quotient
from .subreps import DEFAULT_BUDGET, subrepresentations


@dataclass(frozen=True)
class StabilityData:
    beta: KClass
    gamma: KClass
    alpha: GClass
    tau: tuple | None = None

    def __post_init__(self):
        object.__setattr__(self, "beta", KClass(self.beta))
        object.__setattr__(self, "gamma", KClass(self.gamma))
        object.__setattr__(self, "alpha", GClass(self.alpha))
        if not (len(self.beta) == len(self.gamma) == len(self.alpha)):
            raise IndexMismatch("beta, gamma and alpha must have one entry per vertex")
        if any(c < 0 for c in self.gamma):
            raise NegativeGamma(f"gamma {self.gamma} has a negative coefficient")
        if not self.alpha.is_effective():
            raise NegativeClass(f"alpha {self.alpha} is not effective")
        if not is_nondegenerate(self.gamma, self.alpha):
            raise DegenerateGamma(f"gamma {self.gamma} vanishes on the support of {self.alpha}")

    @classmethod
    def canonical(cls, algebra, beta, alpha) -> "StabilityData":
        """beta with the length-measuring gamma for ``alpha``."""
        return cls(beta, canonical_gamma(algebra, alpha), alpha)

    def with_alpha(self, alpha) -> "StabilityData":
        return StabilityData(self.beta, self.gamma, alpha, self.tau)

    def shifted(self, c) -> "StabilityData":
        """beta + c * gamma; every slope moves by exactly c."""
        return StabilityData(self.beta + Fraction(c) * self.gamma, self.gamma, self.alpha, self.tau)

    def scaled(self, c) -> "StabilityData":
        return StabilityData(Fraction(c) * self.beta, self.gamma, self.alpha, self.tau)

    def beta_of(self, x) -> Fraction:
        return pairing(self.beta, _as_class(x), self.tau)

    def length_of(self, x) -> Fraction:
        return pairing(self.gamma, _as_class(x), self.tau)


def _as_class(x) -> GClass:
    if isinstance(x, GClass):
        return x
    if isinstance(x, (Representation, Subrepresentation)):
        return GClass(x.dims)
    return GClass(x)


def slope(sd: StabilityData, e) -> Fraction:
    """<beta, E> / l_gamma(E) for a class, representation or subrepresentation."""
    cls = _as_class(e)
    length = sd.length_of(cls)
    if length == 0:
        raise ZeroGammaLength(f"l_gamma vanishes on {cls}")
    return sd.beta_of(cls) / length


def _check_object(sd: StabilityData, v: Representation):
    if GClass(v.dims) != sd.alpha:
        raise ClassMismatch(f"object has class {list(v.dims)}, stability data fixes {list(sd.alpha)}")
    if sd.length_of(sd.alpha) == 0:
        raise ZeroGammaLength("zero object has no slope")


def _maximal_destabilizing(sd, v, budget, order_seed):
    """The subobject maximizing (slope, l_gamma) among nonzero subobjects."""
    best, best_key = None, None
    for sub in subrepresentations(v, budget, order_seed):
        if sub.is_zero():
            continue
        key = (slope(sd, sub), sd.length_of(sub))
        if best_key is None or key > best_key:
            best, best_key = sub, key
    return best, best_key


def destabilizer_search(sd: StabilityData, v: Representation, budget: int = DEFAULT_BUDGET,
                        order_seed: int | None = None):
    """A subobject of strictly larger slope than ``v``, or None.

    When one exists the maximal destabilizing subobject is returned: largest
    slope, then largest gamma-length.  That subobject is unique, so the answer
    does not depend on enumeration order.
    """
    _check_object(sd, v)
    sigma = slope(sd, v)
    best, key = _maximal_destabilizing(sd, v, budget, order_seed)
    if key[0] > sigma:
        return best
    return None


def is_semistable(sd: StabilityData, v: Representation, budget: int = DEFAULT_BUDGET):
    """(semistable?, destabilizing certificate or None)."""
    cert = destabilizer_search(sd, v, budget)
    return cert is None, cert


def subquotient(upper: Subrepresentation, lower: Subrepresentation) -> Representation:
    """upper / lower for subobjects lower <= upper of one ambient."""
    u = upper.as_representation()
    basis = [[linalg.coordinates(b, upper.basis[i], upper.pivots[i]) for b in lower.basis[i]]
             for i in range(len(upper.basis))]
    inner = Subrepresentation(u, basis)
    return quotient(u, inner)[0]


@dataclass(frozen=True)
class HNFiltration:
    steps: tuple  # E_1 < ... < E_m = V, all nonzero
    hn_type: tuple  # ((GClass of E_t / E_{t-1}, slope), ...)

    @property
    def slopes(self) -> tuple:
        return tuple(s for _, s in self.hn_type)

    @property
    def classes(self) -> tuple:
        return tuple(c for c, _ in self.hn_type)

    def graded_pieces(self) -> list:
        v = self.steps[-1].ambient
        lower = [Subrepresentation.zero(v)] + list(self.steps[:-1])
        return [subquotient(u, low) for u, low in zip(self.steps, lower)]


def hn_filtration(sd: StabilityData, v: Representation, budget: int = DEFAULT_BUDGET,
                  order_seed: int | None = None) -> HNFiltration:
    _check_object(sd, v)
    steps = []
    current = Subrepresentation.zero(v)
    while not current.is_full():
        q, proj = quotient(v, current)
        sd_q = sd.with_alpha(GClass(q.dims))
        best, _ = _maximal_destabilizing(sd_q, q, budget, order_seed)
        current = preimage(proj, best)
        steps.append(current)
    hn_type = []
    prev = (0,) * len(v.dims)
    for e in steps:
        cls = GClass(a - b for a, b in zip(e.dims, prev))
        hn_type.append((cls, slope(sd, cls)))
        prev = e.dims
    return HNFiltration(tuple(steps), tuple(hn_type))


def hn_type(sd: StabilityData, v: Representation, budget: int = DEFAULT_BUDGET) -> tuple:
    return hn_filtration(sd, v, budget).hn_type


# -- weighted filtrations and the numerical invariant --------------------------

@dataclass(frozen=True)
class WeightedFiltration:
    """Weights w_1 > ... > w_m and steps A_1 < ... < A_m = V; A_t is the part
    of weight >= w_t, so gr_t = A_t / A_{t-1} sits in weight w_t."""

    weights: tuple
    steps: tuple

    def __post_init__(self):
        w = tuple(int(x) for x in self.weights)
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "steps", tuple(self.steps))
        if not w or len(w) != len(self.steps):
            raise InvalidFiltration("need one weight per step and at least one step")
        if any(a <= b for a, b in zip(w, w[1:])):
            raise InvalidFiltration(f"weights {w} are not strictly decreasing")
        if not self.steps[-1].is_full():
            raise InvalidFiltration("last step must be the whole object")
        prev = None
        for s in self.steps:
            if s.is_zero():
                raise InvalidFiltration("steps must be nonzero")
            if prev is not None and (not s.contains(prev) or s.dims == prev.dims):
                raise InvalidFiltration("steps must increase strictly")
            prev = s

    @property
    def ambient(self) -> Representation:
        return self.steps[-1].ambient

    def graded_classes(self) -> list:
        prev = (0,) * len(self.steps[0].dims)
        out = []
        for s in self.steps:
            out.append(GClass(a - b for a, b in zip(s.dims, prev)))
            prev = s.dims
        return out

    def translated(self, c: int) -> "WeightedFiltration":
        return WeightedFiltration(tuple(w + c for w in self.weights), self.steps)

    def scaled(self, c: int) -> "WeightedFiltration":
        if c <= 0:
            raise InvalidFiltration("scale factor must be positive")
        return WeightedFiltration(tuple(w * c for w in self.weights), self.steps)


@functools.total_ordering
@dataclass(frozen=True, eq=False)
class MuValue:
    """numerator / sqrt(norm_sq), compared without square roots."""

    numerator: Fraction
    norm_sq: Fraction

    def __post_init__(self):
        object.__setattr__(self, "numerator", Fraction(self.numerator))
        object.__setattr__(self, "norm_sq", Fraction(self.norm_sq))
        if self.norm_sq <= 0:
            raise ZeroNorm("quadratic norm vanishes")

    @property
    def sign(self) -> int:
        return (self.numerator > 0) - (self.numerator < 0)

    @property
    def signed_square(self) -> Fraction:
        """sign(mu) * mu^2, an exact order-preserving image of mu."""
        return self.sign * self.numerator**2 / self.norm_sq

    def __eq__(self, other):
        if not isinstance(other, MuValue):
            return NotImplemented
        return self.signed_square == other.signed_square

    def __lt__(self, other):
        if not isinstance(other, MuValue):
            return NotImplemented
        return self.signed_square < other.signed_square

    def __hash__(self):
        return hash(self.signed_square)

    def __float__(self):
        return float(self.numerator) / float(self.norm_sq) ** 0.5


def b_gamma(f, gamma, r) -> Fraction:
    """sum over graded pieces of (w . r)^2 l_gamma(piece).

    ``f`` is a WeightedFiltration (rank one, ``r`` a scalar or 1-vector) or a
    list of (weight vector, piece) pairs for a Z^h-graded object, pieces being
    G-classes or representations.
    """
    if isinstance(f, WeightedFiltration):
        pieces = [((w,), c) for w, c in zip(f.weights, f.graded_classes())]
    else:
        pieces = [(tuple(w) if isinstance(w, (tuple, list)) else (w,), c) for w, c in f]
    r = tuple(r) if isinstance(r, (tuple, list)) else (r,)
    gamma = KClass(gamma)
    total = Fraction(0)
    for w, piece in pieces:
        if len(w) != len(r):
            raise IndexMismatch(f"weight of rank {len(w)} against r of rank {len(r)}")
        dot = sum((Fraction(a) * Fraction(b) for a, b in zip(w, r)), Fraction(0))
        total += dot * dot * pairing(gamma, _as_class(piece))
    return total


def _mu_parts(sd, classes, weights):
    la, ba = sd.length_of(sd.alpha), sd.beta_of(sd.alpha)
    num = Fraction(0)
    norm = Fraction(0)
    for w, c in zip(weights, classes):
        lc = sd.length_of(c)
        num += w * (la * sd.beta_of(c) - ba * lc)
        norm += w * w * lc
    return num, norm


def mu_beta(sd: StabilityData, f: WeightedFiltration) -> MuValue:
    if GClass(f.ambient.dims) != sd.alpha:
        raise ClassMismatch("filtration of an object of another class")
    num, norm = _mu_parts(sd, f.graded_classes(), f.weights)
    return MuValue(num, norm)


def _chains_by_class(v: Representation, budget: int):
    """Every strictly increasing chain of nonzero subobjects ending at ``v``,
    one witness per sequence of step classes (mu depends only on those)."""
    subs = [s for s in subrepresentations(v, budget) if not s.is_zero()]
    subs.sort(key=lambda s: s.total_dim)  # stable: keeps kernel order within a size
    seqs = []
    for k, e in enumerate(subs):
        table = {(e.dims,): (e,)}
        for j in range(k):
            f = subs[j]
            if f.total_dim >= e.total_dim:
                break
            if all(a <= b for a, b in zip(f.dims, e.dims)) and e.contains(f):
                for seq, wit in seqs[j].items():
                    table.setdefault(seq + (e.dims,), wit + (e,))
        seqs.append(table)
    full = [k for k, e in enumerate(subs) if e.is_full()]
    return seqs[full[0]] if full else {}


def filtration_enumerate_max(sd: StabilityData, v: Representation, weight_bound: int = 2,
                             budget: int = DEFAULT_BUDGET):
    """Maximize mu over all weighted filtrations with weights in
    [-weight_bound, weight_bound].

    Ties go to the lexicographically smallest weight vector, then to the
    first chain in enumeration order.  Returns (WeightedFiltration, MuValue).
    """
    _check_object(sd, v)
    if weight_bound < 1:
        raise ValueError("weight_bound must be positive")
    pool = range(weight_bound, -weight_bound - 1, -1)
    best = None
    for seq, witness in _chains_by_class(v, budget).items():
        prev = (0,) * len(v.dims)
        classes = []
        for dims in seq:
            classes.append(GClass(a - b for a, b in zip(dims, prev)))
            prev = dims
        for weights in combinations(pool, len(seq)):
            num, norm = _mu_parts(sd, classes, weights)
            if norm == 0:
                continue
            mu = MuValue(num, norm)
            if best is None or mu > best[0] or (mu == best[0] and weights < best[1]):
                best = (mu, weights, witness)
    mu, weights, witness = best
    return WeightedFiltration(weights, witness), mu


def semistable_shift_check(sd: StabilityData, v: Representation, c, budget: int = DEFAULT_BUDGET) -> bool:
    """Semistability is unchanged by beta -> beta + c * gamma."""
    return is_semistable(sd, v, budget)[0] == is_semistable(sd.shifted(c), v, budget)[0]
