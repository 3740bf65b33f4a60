"""Random valid representations and weighted filtrations for property tests.

A representation is drawn as a quotient of a random sum of indecomposable
projectives by the subrepresentation generated by a few random vectors,
followed by a random change of basis at every vertex.  Every object of
class alpha is such a quotient, so all isomorphism classes are reachable.
"""
from __future__ import annotations

import random

from .linalg import FieldSpec, Matrix, rank, solve
from .quiver import Representation, direct_sum, quotient, sub_from_generators, zero_representation
from .stability import WeightedFiltration
from .structure import projective
from .subreps import subrepresentations


def _random_invertible(rng, n, field):
    while True:
        m = Matrix.from_rows([[rng.randrange(field.p) for _ in range(n)] for _ in range(n)], field, cols=n)
        if rank(m) == n:
            return m


def _inverse(m):
    n = m.rows
    cols = [solve(m, [int(i == j) for i in range(n)]) for j in range(n)]
    return Matrix.from_columns(cols, n, m.field)


def base_change(v: Representation, rng) -> Representation:
    """v with a random invertible basis change at every vertex."""
    alg, f = v.algebra, v.field
    g = [_random_invertible(rng, d, f) for d in v.dims]
    ginv = [_inverse(m) for m in g]
    maps = []
    for a, m in zip(alg.arrows, v.maps):
        s, t = alg.index(a.source), alg.index(a.target)
        maps.append(g[t] @ m @ ginv[s])
    return Representation(alg, f, v.dims, maps)


def random_representation(algebra, field: FieldSpec, rng: random.Random | int | None = None,
                          max_total: int = 4, min_total: int = 1) -> Representation:
    """A random valid representation with min_total <= total dim <= max_total."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    if not field.is_prime_field:
        raise ValueError("sampling needs a prime field")
    proj = [projective(algebra, i, field) for i in range(algebra.n)]
    while True:
        src = zero_representation(algebra, field)
        for _ in range(rng.randint(1, max_total)):
            src = direct_sum(src, proj[rng.randrange(algebra.n)])
        gens = [[] for _ in range(algebra.n)]
        for _ in range(rng.randint(0, src.total_dim)):
            i = rng.randrange(algebra.n)
            if src.dims[i]:
                gens[i].append([rng.randrange(field.p) for _ in range(src.dims[i])])
        q, _ = quotient(src, sub_from_generators(src, gens))
        if min_total <= q.total_dim <= max_total:
            return base_change(q, rng)


def random_filtration(v: Representation, rng: random.Random | int | None = None,
                      weight_range: int = 5, budget: int = 10**6) -> WeightedFiltration:
    """A random chain of subrepresentations ending at v with random strictly
    decreasing integer weights."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)
    subs = [s for s in subrepresentations(v, budget) if not s.is_zero()]
    chain = [next(s for s in subs if s.is_full())]
    while rng.random() < 0.6:
        below = [s for s in subs if not s.is_full() and chain[0].contains(s) and s != chain[0]]
        if not below:
            break
        chain.insert(0, rng.choice(below))
    weights = sorted(rng.sample(range(-weight_range, weight_range + 1), len(chain)), reverse=True)
    return WeightedFiltration(tuple(weights), tuple(chain))
