"""Simples, indecomposable projectives, radical and socle, Jordan-Hoelder data."""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg
from .errors import NegativeClass
from .ktheory import GClass
from .linalg import QQ, FieldSpec, Matrix
from .quiver import (
    AlgebraPresentation,
    Representation,
    Subrepresentation,
    direct_sum,
    zero_representation,
)


def simple(algebra: AlgebraPresentation, vertex, field: FieldSpec = QQ) -> Representation:
    i = vertex if isinstance(vertex, int) else algebra.index(vertex)
    dims = [int(j == i) for j in range(algebra.n)]
    return Representation(algebra, field, dims, [None] * len(algebra.arrows), check=False)


def simples(algebra: AlgebraPresentation, field: FieldSpec = QQ) -> list:
    """One simple per vertex; admissible relations make these all the simples."""
    return [simple(algebra, i, field) for i in range(algebra.n)]


def projective(algebra: AlgebraPresentation, vertex, field: FieldSpec = QQ) -> Representation:
    """P_i on the basis of nonzero path classes starting at ``vertex``.

    The component at j is spanned by classes of paths i -> j, and an arrow
    c acts by appending c to the path and rewriting into normal classes.
    """
    i = vertex if isinstance(vertex, int) else algebra.index(vertex)
    pb = algebra.path_basis(i, field)
    by_vertex = [[] for _ in range(algebra.n)]
    for path in pb.normal:
        by_vertex[algebra._target(i, path)].append(path)
    pos = [{w: r for r, w in enumerate(ws)} for ws in by_vertex]
    maps = []
    for k, a in enumerate(algebra.arrows):
        s, t = algebra.index(a.source), algebra.index(a.target)
        cols = []
        for path in by_vertex[s]:
            col = [field.zero] * len(by_vertex[t])
            for w, c in algebra.reduce_path(i, path + (k,), field).items():
                col[pos[t][w]] = c
            cols.append(col)
        maps.append(Matrix.from_columns(cols, len(by_vertex[t]), field))
    return Representation(algebra, field, [len(ws) for ws in by_vertex], maps)


def projective_path_labels(algebra: AlgebraPresentation, vertex, field: FieldSpec = QQ) -> list:
    """Arrow-name words labelling the basis of ``projective(algebra, vertex)``."""
    i = vertex if isinstance(vertex, int) else algebra.index(vertex)
    pb = algebra.path_basis(i, field)
    by_vertex = [[] for _ in range(algebra.n)]
    for path in pb.normal:
        by_vertex[algebra._target(i, path)].append(tuple(algebra.arrows[k].name for k in path))
    return [w for ws in by_vertex for w in ws]


def _span_sub(v: Representation, vectors_per_vertex) -> Subrepresentation:
    f = v.field
    basis, pivs = [], []
    for i, vecs in enumerate(vectors_per_vertex):
        red, piv = linalg.span_rref(vecs, v.dims[i], f)
        basis.append(red)
        pivs.append(piv)
    return Subrepresentation._from_rref(v, basis, pivs)


def radical(v: Representation) -> Subrepresentation:
    """Per-vertex span of the images of all incoming arrows (J V)."""
    alg = v.algebra
    vecs = [[] for _ in range(alg.n)]
    for k, a in enumerate(alg.arrows):
        vecs[alg.index(a.target)].extend(v.maps[k].columns())
    return _span_sub(v, vecs)


def socle(v: Representation) -> Subrepresentation:
    """Per-vertex intersection of the kernels of all outgoing arrows."""
    alg, f = v.algebra, v.field
    vecs = []
    for i in range(alg.n):
        rows = [r for k, a in enumerate(alg.arrows) if alg.index(a.source) == i for r in v.maps[k].entries]
        m = Matrix.from_rows(rows, f, cols=v.dims[i])
        vecs.append(linalg.nullspace_basis(m))
    return _span_sub(v, vecs)


def _radical_layers(v: Representation) -> list:
    """rad^0 V = V, rad^1 V, ... down to 0, as subrepresentations of ``v``."""
    alg = v.algebra
    layers = [Subrepresentation.full(v)]
    while not layers[-1].is_zero():
        cur = layers[-1]
        vecs = [[] for _ in range(alg.n)]
        for k, a in enumerate(alg.arrows):
            m = v.maps[k]
            vecs[alg.index(a.target)].extend(m.apply(b) for b in cur.basis[alg.index(a.source)])
        nxt = _span_sub(v, vecs)
        if nxt.dims == cur.dims:  # pragma: no cover - impossible for admissible presentations
            raise RuntimeError("radical series does not terminate")
        layers.append(nxt)
    return layers


@dataclass(frozen=True)
class JordanHolderData:
    chain: tuple  # 0 = V_0 < V_1 < ... < V_n = V
    factors: tuple  # vertex name of each simple quotient V_t / V_{t-1}

    @property
    def length(self) -> int:
        return len(self.factors)


def jordan_holder(v: Representation) -> JordanHolderData:
    """Refine the radical series, adding one basis vector at a time.

    Every subspace between rad^{k+1} V and rad^k V is a subrepresentation,
    so each step has a one-dimensional, hence simple, quotient.
    """
    alg, f = v.algebra, v.field
    layers = _radical_layers(v)
    chain = [layers[-1]]
    factors = []
    for upper in reversed(layers[:-1]):
        cur = chain[-1]
        for i in range(alg.n):
            for b in upper.basis[i]:
                if linalg.in_span(b, cur.basis[i], cur.pivots[i], f):
                    continue
                basis = list(cur.basis)
                pivs = list(cur.pivots)
                basis[i], pivs[i] = linalg.span_rref(list(cur.basis[i]) + [b], v.dims[i], f)
                cur = Subrepresentation._from_rref(v, basis, pivs)
                chain.append(cur)
                factors.append(alg.vertices[i])
    return JordanHolderData(tuple(chain), tuple(factors))


def gr(v: Representation) -> GClass:
    """Class of the semisimplification, counted from Jordan-Hoelder factors."""
    alg = v.algebra
    counts = [0] * alg.n
    for name in jordan_holder(v).factors:
        counts[alg.index(name)] += 1
    return GClass(counts)


def length(v: Representation) -> int:
    return jordan_holder(v).length


def is_semisimple(v: Representation) -> bool:
    return radical(v).is_zero()


def semisimple_of_class(algebra: AlgebraPresentation, alpha, field: FieldSpec = QQ) -> Representation:
    """The direct sum of simples with multiplicities ``alpha``."""
    alpha = GClass(alpha)
    if not alpha.is_effective():
        raise NegativeClass(f"{alpha} is not effective")
    out = zero_representation(algebra, field)
    for i, n in enumerate(alpha):
        for _ in range(n):
            out = direct_sum(out, simple(algebra, i, field))
    return out
