"""Exhaustive enumeration of subrepresentations over a prime field.

Each vertex space F_p^d has finitely many subspaces; they are listed as
canonical RREF bases, encoded as bitmasks over the p^d vectors, and the
kernel keeps exactly the tuples closed under every arrow map.  This is
complete: every subrepresentation appears once.
"""
from __future__ import annotations

import random
from functools import lru_cache
from itertools import combinations, product
from math import prod

from . import kernels
from .errors import NotPrimeField, SearchBudgetExceeded
from .quiver import Representation, Subrepresentation

DEFAULT_BUDGET = 10**7


def _code(vec, p):
    c = 0
    for x in reversed(vec):
        c = c * p + x
    return c


def _span_members(vectors, p):
    """Bitmask of all F_p-combinations of ``vectors``."""
    if not vectors:
        return 1  # the zero vector has code 0
    mask = 0
    n = len(vectors[0])
    for coeffs in product(range(p), repeat=len(vectors)):
        v = [0] * n
        for c, b in zip(coeffs, vectors):
            if c:
                for j in range(n):
                    v[j] = (v[j] + c * b[j]) % p
        mask |= 1 << _code(v, p)
    return mask


@lru_cache(maxsize=None)
def subspaces(p: int, d: int) -> tuple:
    """All subspaces of F_p^d as (rref basis, pivots, member mask).

    Order: by dimension, then pivot set, then free entries lexicographically.
    """
    out = []
    for k in range(d + 1):
        for pivots in combinations(range(d), k):
            free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, d) if c not in pivots]
            for vals in product(range(p), repeat=len(free)):
                rows = [[0] * d for _ in range(k)]
                for r, pc in enumerate(pivots):
                    rows[r][pc] = 1
                for (r, c), x in zip(free, vals):
                    rows[r][c] = x
                basis = tuple(tuple(r) for r in rows)
                out.append((basis, pivots, _span_members(basis, p)))
    return tuple(out)


def count_subspaces(p: int, d: int) -> int:
    """Number of subspaces of F_p^d (sum of Gaussian binomials)."""
    total = 0
    for k in range(d + 1):
        num = den = 1
        for i in range(k):
            num *= p ** (d - i) - 1
            den *= p ** (i + 1) - 1
        total += num // den
    return total


def search_size(v: Representation) -> int:
    p = v.field.p
    return prod(count_subspaces(p, d) for d in v.dims)


def kernel_inputs(v: Representation, order_seed: int | None = None):
    """(subspace lists, member masks, arrow image masks) for ``closed_tuples``."""
    p, alg = v.field.p, v.algebra
    spaces = [list(subspaces(p, d)) for d in v.dims]
    if order_seed is not None:
        rng = random.Random(order_seed)
        for s in spaces:
            rng.shuffle(s)
    members = [[m for _, _, m in s] for s in spaces]
    arrows = []
    for k, a in enumerate(alg.arrows):
        i, j = alg.index(a.source), alg.index(a.target)
        m = v.maps[k]
        images = [_span_members([m.apply(b) for b in basis], p) for basis, _, _ in spaces[i]]
        arrows.append((i, j, images))
    return spaces, members, arrows


def subrepresentations(v: Representation, budget: int = DEFAULT_BUDGET, order_seed: int | None = None) -> list:
    """Every subrepresentation of ``v``.

    ``order_seed`` shuffles the per-vertex enumeration order; the set
    returned is the same, only its order changes.
    """
    if not v.field.is_prime_field:
        raise NotPrimeField(f"exhaustive subobject search needs a prime field, got {v.field}")
    need = search_size(v)
    if need > budget:
        raise SearchBudgetExceeded(need, budget, "subrepresentation search")
    spaces, members, arrows = kernel_inputs(v, order_seed)
    out = []
    for tup in kernels.closed_tuples(members, arrows):
        basis = [spaces[i][s][0] for i, s in enumerate(tup)]
        pivots = [spaces[i][s][1] for i, s in enumerate(tup)]
        out.append(Subrepresentation._from_rref(v, basis, pivots))
    return out


def dimension_vectors(v: Representation, budget: int = DEFAULT_BUDGET) -> list:
    return [s.dims for s in subrepresentations(v, budget)]
