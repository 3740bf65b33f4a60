"""Desk-scale moduli census over a small prime field.

All arrow-map tuples of a fixed dimension vector are enumerated, the ones
satisfying the relations are grouped into isomorphism classes, and the
classes are sorted into Harder-Narasimhan strata.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import product
from math import prod

from . import kernels
from .errors import IsoTestBudgetExceeded, NotPrimeField, SearchBudgetExceeded
from .ktheory import GClass, minimal_cover_vector
from .linalg import FieldSpec, Matrix, rank
from .quiver import AlgebraPresentation, Representation, direct_sum, hom_space, zero_representation
from .stability import StabilityData, hn_filtration, slope
from .structure import is_semisimple, projective, semisimple_of_class
from .subreps import DEFAULT_BUDGET

DEFAULT_ISO_BUDGET = 2**20
WORKERS_ENV = "QUIVERSTAB_WORKERS"


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def gl_order(d: int, p: int) -> int:
    return prod(p**d - p**i for i in range(d))


# -- isomorphism tests ---------------------------------------------------------

def _flatten(morphisms):
    return [[x for m in f.vertex_maps for row in m.entries for x in row] for f in morphisms]


def _blocks(v_dims, w_dims):
    blocks, off = [], 0
    for dv, dw in zip(v_dims, w_dims):
        blocks.append((off, dw, dv))
        off += dw * dv
    return blocks


def _search(v, w, budget, count=False):
    basis, dim = hom_space(v, w)
    p = v.field.p
    if p is None:
        raise NotPrimeField("isomorphism search needs a prime field")
    if p**dim > budget:
        raise IsoTestBudgetExceeded(p**dim, budget, "Hom-space search")
    res = kernels.full_rank_search(p, _flatten(basis), _blocks(v.dims, w.dims), count)
    return basis, res


def find_isomorphism(v: Representation, w: Representation, budget: int = DEFAULT_ISO_BUDGET):
    """An invertible morphism v -> w, or None."""
    if v.dims != w.dims:
        return None
    basis, coeffs = _search(v, w, budget)
    if coeffs is None:
        return None
    out = None
    for c, f in zip(coeffs, basis):
        if c:
            out = f.scale(c) if out is None else out + f.scale(c)
    if out is None:
        from .quiver import Morphism
        out = Morphism.zero(v, w)
    return out


def is_isomorphic(v: Representation, w: Representation, budget: int = DEFAULT_ISO_BUDGET) -> bool:
    return find_isomorphism(v, w, budget) is not None


def automorphism_count(v: Representation, budget: int = DEFAULT_ISO_BUDGET) -> int:
    return _search(v, v, budget, count=True)[1]


def find_epimorphism(source: Representation, v: Representation, budget: int = DEFAULT_ISO_BUDGET):
    """Coefficients of a vertex-wise surjective morphism source -> v, or None."""
    basis, coeffs = _search(source, v, budget)
    return coeffs


def _fingerprint(v: Representation):
    """Cheap isomorphism invariant: ranks of all paths of length <= 2."""
    alg = v.algebra
    out = [rank(m) for m in v.maps]
    for k, a in enumerate(alg.arrows):
        for l, b in enumerate(alg.arrows):
            if a.target == b.source:
                out.append(rank(v.maps[l] @ v.maps[k]))
    return tuple(out)


# -- enumeration -----------------------------------------------------------------

def _all_matrices(rows, cols, p, field):
    return [Matrix(rows, cols, tuple(tuple(vals[r * cols:(r + 1) * cols]) for r in range(rows)), field)
            for vals in product(range(p), repeat=rows * cols)]


def _relation_plan(alg):
    """For each arrow position, the relations completed once it is assigned."""
    plan = [[] for _ in alg.arrows]
    for k, rel in enumerate(alg.relations):
        idx = max(alg.arrow_index[a] for w in rel.words() for a in w)
        src, tgt = alg.relation_ends(rel)
        terms = [(c, [alg.arrow_index[a] for a in w]) for c, w in rel.terms]
        plan[idx].append((src, tgt, terms))
    return plan


def _relations_hold(checks, maps, dims, field):
    for src, tgt, terms in checks:
        acc = Matrix.zeros(dims[tgt], dims[src], field)
        for c, word in terms:
            m = Matrix.identity(dims[src], field)
            for k in word:
                m = maps[k] @ m
            acc = acc + m.scale(c)
        if not acc.is_zero():
            return False
    return True


def _valid_tuples(alg, field, dims, first_choices):
    """Valid arrow-map tuples whose first map lies in ``first_choices``,
    in canonical order (arrows in order, entries row-major, values 0..p-1)."""
    p = field.p
    shapes = [(dims[alg.index(a.target)], dims[alg.index(a.source)]) for a in alg.arrows]
    choices = [_all_matrices(r, c, p, field) for r, c in shapes]
    if choices:
        choices[0] = [choices[0][i] for i in first_choices]
    plan = _relation_plan(alg)
    out = []
    maps = [None] * len(choices)

    def dfs(k):
        if k == len(choices):
            out.append(tuple(maps))
            return
        for m in choices[k]:
            maps[k] = m
            if _relations_hold(plan[k], maps, dims, field):
                dfs(k + 1)
        maps[k] = None

    dfs(0)
    return out


def _valid_tuples_job(args):
    alg, p, dims, first = args
    return [tuple(m.entries for m in t) for t in _valid_tuples(alg, FieldSpec(p), dims, first)]


@dataclass(frozen=True)
class IsoClassCatalog:
    algebra: AlgebraPresentation
    field: FieldSpec
    alpha: GClass
    representatives: tuple
    tuple_count: int  # valid arrow-map tuples of class alpha
    orbit_sizes: tuple | None = None

    def completeness_certified(self) -> bool | None:
        """Sum of orbit sizes equals the number of valid tuples (None if unknown)."""
        if self.orbit_sizes is None:
            return None
        return sum(self.orbit_sizes) == self.tuple_count

    def __len__(self):
        return len(self.representatives)


def enumerate_reps(algebra: AlgebraPresentation, alpha, field: FieldSpec, budget: int = DEFAULT_BUDGET,
                   iso_budget: int = DEFAULT_ISO_BUDGET, orbit_sizes="auto",
                   workers: int | None = None) -> IsoClassCatalog:
    """One representative per isomorphism class of representations of class alpha.

    Representatives are the first valid tuple of each class in canonical
    order, so the catalog is identical for every worker count.
    """
    alpha = GClass(alpha)
    if not field.is_prime_field:
        raise NotPrimeField("census enumeration needs a prime field")
    if not alpha.is_effective() or len(alpha) != algebra.n:
        raise ValueError(f"{alpha} is not an effective class of this quiver")
    p, dims = field.p, tuple(alpha)
    entries = sum(dims[algebra.index(a.target)] * dims[algebra.index(a.source)] for a in algebra.arrows)
    if p**entries > budget:
        raise SearchBudgetExceeded(p**entries, budget, "arrow-map enumeration")
    workers = workers or default_workers()
    first = algebra.arrows[0] if algebra.arrows else None
    n_first = p ** (dims[algebra.index(first.target)] * dims[algebra.index(first.source)]) if first else 1
    if workers > 1 and n_first > 1:
        # contiguous ranges of the first arrow's matrices keep the
        # concatenated result in canonical order
        size = -(-n_first // workers)
        chunks = [range(i, min(i + size, n_first)) for i in range(0, n_first, size)]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            parts = list(ex.map(_valid_tuples_job, [(algebra, p, dims, list(c)) for c in chunks]))
        shapes = [(dims[algebra.index(a.target)], dims[algebra.index(a.source)]) for a in algebra.arrows]
        tuples = [tuple(Matrix(r, c, e, field) for (r, c), e in zip(shapes, t))
                  for part in parts for t in part]
    else:
        tuples = _valid_tuples(algebra, field, dims, range(n_first))

    reps, by_fp = [], {}
    for maps in tuples:
        v = Representation(algebra, field, dims, maps, check=False)
        fp = _fingerprint(v)
        bucket = by_fp.setdefault(fp, [])
        if not any(is_isomorphic(v, reps[k], iso_budget) for k in bucket):
            bucket.append(len(reps))
            reps.append(v)
    sizes = None
    if orbit_sizes is True or (orbit_sizes == "auto" and alpha.total <= 3 and p in (2, 3)):
        group = prod(gl_order(d, p) for d in dims)
        sizes = tuple(group // automorphism_count(v, iso_budget) for v in reps)
    return IsoClassCatalog(algebra, field, alpha, tuple(reps), len(tuples), sizes)


# -- strata ----------------------------------------------------------------------

@dataclass(frozen=True)
class Stratum:
    hn_type: tuple
    representatives: tuple
    semistable: bool


@dataclass(frozen=True)
class StrataReport:
    alpha: GClass
    strata: tuple
    closed_point: Representation | None

    @property
    def semistable_stratum(self) -> Stratum | None:
        for s in self.strata:
            if s.semistable:
                return s
        return None


def theta_strata(catalog: IsoClassCatalog, sd: StabilityData, budget: int = DEFAULT_BUDGET) -> StrataReport:
    """Group the catalog by Harder-Narasimhan type."""
    if sd.alpha != catalog.alpha:
        raise ValueError("stability data and catalog fix different classes")
    groups: dict = {}
    for v in catalog.representatives:
        t = hn_filtration(sd, v, budget).hn_type
        groups.setdefault(t, []).append(v)
    single = ((catalog.alpha, slope(sd, catalog.alpha)),)
    ordered = sorted(groups, key=lambda t: ([s for _, s in t], [c.coeffs for c, _ in t]), reverse=True)
    strata = tuple(Stratum(t, tuple(groups[t]), t == single) for t in ordered)
    closed = [v for v in catalog.representatives if is_semisimple(v)]
    return StrataReport(catalog.alpha, strata, closed[0] if closed else None)


def closed_points(algebra: AlgebraPresentation, alphas, field: FieldSpec | None = None) -> list:
    """The semisimple object of each distinct effective class, classes sorted."""
    from .linalg import QQ

    field = field or QQ
    classes = sorted({GClass(a) for a in alphas})
    return [(a, semisimple_of_class(algebra, a, field)) for a in classes]


def cover_source(algebra: AlgebraPresentation, alpha, field: FieldSpec) -> Representation:
    """P_n = sum_j P_j^{n_j} for the minimal cover vector of alpha."""
    out = zero_representation(algebra, field)
    for j, n in minimal_cover_vector(alpha).items():
        pj = projective(algebra, j, field)
        for _ in range(n):
            out = direct_sum(out, pj)
    return out


def cover_check(catalog: IsoClassCatalog, iso_budget: int = DEFAULT_ISO_BUDGET) -> bool:
    """Every representative is a quotient of P_n (vertex-wise surjection found)."""
    src = cover_source(catalog.algebra, catalog.alpha, catalog.field)
    return all(find_epimorphism(src, v, iso_budget) is not None for v in catalog.representatives)


def effective_classes(n: int, max_total: int, include_zero: bool = True) -> list:
    out = []
    for c in product(range(max_total + 1), repeat=n):
        if sum(c) <= max_total and (include_zero or sum(c) > 0):
            out.append(GClass(c))
    return sorted(out, key=lambda a: (a.total, a.coeffs))

