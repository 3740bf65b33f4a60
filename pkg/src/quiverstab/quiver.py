"""Quivers with admissible relations and their finite-dimensional representations.

Paths are written left to right: the word ``("a", "b")`` traverses arrow ``a``
first and then ``b``, so it acts on a representation by ``V_b @ V_a``.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from . import linalg
from .errors import (
    AlgebraMismatch,
    FieldMismatch,
    InvalidPresentation,
    NotASubrep,
    NotIntertwining,
    RelationViolated,
    ShapeMismatch,
)
from .linalg import QQ, FieldSpec, Matrix

DEFAULT_PATH_CAP = 64
# hard ceiling on the number of paths materialised while certifying finiteness
PATH_ENUMERATION_LIMIT = 20000


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Relation:
    """A formal combination ``sum(c * word)`` of parallel paths."""

    terms: tuple  # ((Fraction, (arrow, ...)), ...)

    def __post_init__(self):
        merged: dict[tuple, Fraction] = {}
        for c, word in self.terms:
            word = tuple(word)
            merged[word] = merged.get(word, Fraction(0)) + Fraction(c)
        terms = tuple((c, w) for w, c in merged.items() if c != 0)
        object.__setattr__(self, "terms", terms)

    @classmethod
    def monomial(cls, *word: str) -> "Relation":
        return cls(((Fraction(1), tuple(word)),))

    def words(self):
        return [w for _, w in self.terms]


@dataclass(frozen=True)
class _PathBasis:
    """Normal path classes of e_s A and the rewriting data for the rest."""

    start: int
    truncation: int
    normal: tuple  # normal paths (tuples of arrow indices), sorted by (len, path)
    rewrite: dict  # non-normal path of length < truncation -> {normal path: coeff}


@dataclass(frozen=True)
class AlgebraPresentation:
    vertices: tuple
    arrows: tuple
    relations: tuple = ()
    path_cap: int = dc_field(default=DEFAULT_PATH_CAP, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(str(v) for v in self.vertices))
        object.__setattr__(self, "arrows", tuple(
            a if isinstance(a, Arrow) else Arrow(*map(str, a)) for a in self.arrows))
        object.__setattr__(self, "relations", tuple(
            r if isinstance(r, Relation) else Relation(tuple(r)) for r in self.relations))
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidPresentation("duplicate vertex names")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise InvalidPresentation("duplicate arrow names")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise InvalidPresentation(f"arrow {a.name} has an unknown endpoint")
        for k, rel in enumerate(self.relations):
            self._check_relation(k, rel)
        # certify finite dimensionality up front; raises InvalidPresentation
        self.path_count(QQ)

    def _check_relation(self, k: int, rel: Relation):
        if not rel.terms:
            raise InvalidPresentation(f"relation {k} is zero")
        ends = set()
        for _, word in rel.terms:
            if len(word) < 2:
                raise InvalidPresentation(
                    f"relation {k}: path {' '.join(word) or '(empty)'} has length < 2 "
                    "(relations must lie in the square of the arrow ideal)")
            for a in word:
                if a not in self.arrow_index:
                    raise InvalidPresentation(f"relation {k}: unknown arrow {a}")
            for a, b in zip(word, word[1:]):
                if self.arrow(a).target != self.arrow(b).source:
                    raise InvalidPresentation(f"relation {k}: {a} {b} is not composable")
            ends.add((self.arrow(word[0]).source, self.arrow(word[-1]).target))
        if len(ends) != 1:
            raise InvalidPresentation(f"relation {k}: paths are not parallel")

    # -- lookup ---------------------------------------------------------
    @cached_property
    def vertex_index(self) -> dict:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def arrow_index(self) -> dict:
        return {a.name: i for i, a in enumerate(self.arrows)}

    def index(self, vertex) -> int:
        try:
            return self.vertex_index[str(vertex)]
        except KeyError:
            raise InvalidPresentation(f"unknown vertex {vertex!r}") from None

    def arrow(self, name: str) -> Arrow:
        return self.arrows[self.arrow_index[name]]

    @property
    def n(self) -> int:
        return len(self.vertices)

    def relation_ends(self, rel: Relation) -> tuple[int, int]:
        word = rel.terms[0][1]
        return (self.index(self.arrow(word[0]).source), self.index(self.arrow(word[-1]).target))

    @cached_property
    def _out(self) -> list:
        out = [[] for _ in self.vertices]
        for k, a in enumerate(self.arrows):
            out[self.index(a.source)].append(k)
        return out

    def _target(self, start: int, path: tuple) -> int:
        return self.index(self.arrows[path[-1]].target) if path else start

    def _paths_of_length(self, start: int, length: int) -> list:
        level = [()]
        for _ in range(length):
            nxt = []
            for p in level:
                for k in self._out[self._target(start, p)]:
                    nxt.append(p + (k,))
            if len(nxt) > PATH_ENUMERATION_LIMIT:
                raise InvalidPresentation(
                    f"more than {PATH_ENUMERATION_LIMIT} paths of length {length}; "
                    "presentation is not finite within the path budget")
            level = nxt
        return level

    # -- path algebra normal forms --------------------------------------
    @cached_property
    def _relation_data(self):
        data = []
        for rel in self.relations:
            terms = [(c, tuple(self.arrow_index[a] for a in w)) for c, w in rel.terms]
            src, tgt = self.relation_ends(rel)
            lens = [len(w) for _, w in terms]
            data.append((src, tgt, terms, min(lens), max(lens)))
        return data

    def _ideal_generators(self, start: int, max_total: int, field: FieldSpec):
        """Elements u*r*v of the relation ideal with u from ``start`` and
        len(u) + minlen(r) + len(v) <= max_total, as sparse path vectors."""
        gens = []
        for src, tgt, terms, lo, _ in self._relation_data:
            budget = max_total - lo
            if budget < 0:
                continue
            for lu in range(budget + 1):
                us = [u for u in self._paths_of_length(start, lu) if self._target(start, u) == src]
                if not us:
                    continue
                for lv in range(budget - lu + 1):
                    vs = self._paths_of_length(tgt, lv)
                    for u in us:
                        for v in vs:
                            vec = {}
                            for c, w in terms:
                                vec[u + w + v] = field.coerce(c)
                            gens.append(vec)
        return gens

    def _truncation(self, start: int, field: FieldSpec) -> int:
        """Smallest N with every path of length N from ``start`` in the ideal.

        Membership is certified by an explicit combination of ideal
        generators, so the answer is exact; failure up to the cap rejects
        the presentation."""
        slack = max((hi - lo for *_, lo, hi in self._relation_data), default=0)
        for n in range(1, self.path_cap + 2):
            paths = self._paths_of_length(start, n)
            if not paths:
                return n
            if not self.relations:
                continue
            gens = self._ideal_generators(start, n + slack, field)
            if not gens:
                continue
            cols = sorted({w for g in gens for w in g} | set(paths), key=lambda w: (-len(w), w))
            pos = {w: j for j, w in enumerate(cols)}
            rows = [[field.zero] * len(cols) for _ in gens]
            for row, g in zip(rows, gens):
                for w, c in g.items():
                    row[pos[w]] = c
            red, piv = linalg._rref_rows(rows, len(cols), field.p)
            ok = True
            for path in paths:
                e = [field.zero] * len(cols)
                e[pos[path]] = field.one
                if not linalg.in_span(e, red, piv, field):
                    ok = False
                    break
            if ok:
                return n
        raise InvalidPresentation(
            f"paths from vertex {self.vertices[start]} do not vanish below length "
            f"{self.path_cap + 1}; the algebra is not finite-dimensional within the cap")

    def path_basis(self, start, field: FieldSpec = QQ) -> _PathBasis:
        s = start if isinstance(start, int) else self.index(start)
        key = (s, field)
        cache = self.__dict__.setdefault("_path_cache", {})
        if key in cache:
            return cache[key]
        n = self._truncation(s, field)
        paths = [p for length in range(n) for p in self._paths_of_length(s, length)]
        cols = sorted(paths, key=lambda w: (-len(w), w))
        pos = {w: j for j, w in enumerate(cols)}
        rows = []
        for g in self._ideal_generators(s, n - 1, field):
            row = [field.zero] * len(cols)
            nonzero = False
            for w, c in g.items():
                if len(w) < n:
                    row[pos[w]] = c
                    nonzero = nonzero or c != 0
            if nonzero:
                rows.append(row)
        red, piv = linalg._rref_rows(rows, len(cols), field.p)
        pivset = set(piv)
        normal = tuple(sorted((cols[j] for j in range(len(cols)) if j not in pivset),
                              key=lambda w: (len(w), w)))
        rewrite = {}
        for r, pc in zip(red, piv):
            rewrite[cols[pc]] = {cols[j]: -r[j] % field.p if field.p else -r[j]
                                 for j in range(len(cols)) if j not in pivset and r[j] != 0}
        total = sum(len(self.path_basis(t, field).normal) for t in range(s)) if s else 0
        if total + len(normal) > self.path_cap:
            raise InvalidPresentation(
                f"more than {self.path_cap} nonzero path classes; raise path_cap if intended")
        out = _PathBasis(s, n, normal, rewrite)
        cache[key] = out
        return out

    def path_count(self, field: FieldSpec = QQ) -> int:
        """Dimension of the path algebra modulo relations."""
        return sum(len(self.path_basis(s, field).normal) for s in range(self.n))

    def reduce_path(self, start: int, path: tuple, field: FieldSpec = QQ) -> dict:
        """Express a path from ``start`` in normal path classes."""
        pb = self.path_basis(start, field)
        if len(path) >= pb.truncation:
            return {}
        if path in pb.rewrite:
            return dict(pb.rewrite[path])
        return {path: field.one}

    def word(self, names: Sequence[str]) -> tuple:
        return tuple(self.arrow_index[a] for a in names)


class Representation:
    """A finite-dimensional representation: one matrix per arrow.

    The matrix of an arrow ``i -> j`` has shape ``dims[j] x dims[i]``.
    Relations are checked on construction unless ``check=False``.
    """

    __slots__ = ("algebra", "field", "dims", "maps", "__weakref__")

    def __init__(self, algebra: AlgebraPresentation, field: FieldSpec, dims, maps, check: bool = True):
        self.algebra = algebra
        self.field = field
        self.dims = tuple(int(d) for d in dims)
        if isinstance(maps, Mapping):
            maps = [maps.get(a.name) for a in algebra.arrows]
        maps = list(maps)
        if len(self.dims) != algebra.n or len(maps) != len(algebra.arrows):
            raise ShapeMismatch("dims/maps do not match the quiver")
        if any(d < 0 for d in self.dims):
            raise ShapeMismatch("negative dimension")
        fixed = []
        for a, m in zip(algebra.arrows, maps):
            r, c = self.dims[algebra.index(a.target)], self.dims[algebra.index(a.source)]
            if m is None:
                m = Matrix.zeros(r, c, field)
            elif not isinstance(m, Matrix):
                m = Matrix.from_rows(m, field, cols=c)
            if m.field != field:
                raise FieldMismatch(f"arrow {a.name}: matrix over {m.field}, expected {field}")
            if m.shape != (r, c):
                raise ShapeMismatch(f"arrow {a.name}: expected {r}x{c}, got {m.rows}x{m.cols}")
            fixed.append(m)
        self.maps = tuple(fixed)
        if check:
            validate(self)

    def __eq__(self, other):
        return (isinstance(other, Representation) and self.algebra == other.algebra
                and self.field == other.field and self.dims == other.dims
                and self.maps == other.maps)

    def __hash__(self):
        return hash((self.field, self.dims, self.maps))

    def __repr__(self):
        return f"Representation(dims={self.dims}, field={self.field})"

    def map(self, name: str) -> Matrix:
        return self.maps[self.algebra.arrow_index[name]]

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def word_matrix(self, word: Sequence) -> Matrix:
        """Matrix of a path (arrow names or indices), first arrow applied first."""
        idx = [self.algebra.arrow_index[a] if isinstance(a, str) else a for a in word]
        first = self.algebra.arrows[idx[0]]
        m = Matrix.identity(self.dims[self.algebra.index(first.source)], self.field)
        for k in idx:
            m = self.maps[k] @ m
        return m

    def dim_at(self, vertex) -> int:
        return self.dims[self.algebra.index(vertex)]


def validate(rep: Representation) -> None:
    """Raise ``RelationViolated`` unless every relation evaluates to zero."""
    alg = rep.algebra
    for k, rel in enumerate(alg.relations):
        src, tgt = alg.relation_ends(rel)
        acc = Matrix.zeros(rep.dims[tgt], rep.dims[src], rep.field)
        for c, word in rel.terms:
            acc = acc + rep.word_matrix(word).scale(c)
        if not acc.is_zero():
            raise RelationViolated(k, alg.vertices[src], alg.vertices[tgt])


def _same_category(v: Representation, w: Representation):
    if v.algebra != w.algebra:
        raise AlgebraMismatch("representations of different algebras")
    if v.field != w.field:
        raise FieldMismatch(f"{v.field} vs {w.field}")


class Morphism:
    __slots__ = ("source", "target", "vertex_maps")

    def __init__(self, source: Representation, target: Representation, vertex_maps, check: bool = True):
        _same_category(source, target)
        self.source = source
        self.target = target
        ms = []
        for i, m in enumerate(vertex_maps):
            if not isinstance(m, Matrix):
                m = Matrix.from_rows(m, source.field, cols=source.dims[i])
            if m.shape != (target.dims[i], source.dims[i]):
                raise ShapeMismatch(f"vertex {source.algebra.vertices[i]}: bad shape {m.shape}")
            ms.append(m)
        if len(ms) != source.algebra.n:
            raise ShapeMismatch("one matrix per vertex required")
        self.vertex_maps = tuple(ms)
        if check and not self.is_intertwining():
            raise NotIntertwining("vertex maps do not commute with the arrows")

    def is_intertwining(self) -> bool:
        alg = self.source.algebra
        for k, a in enumerate(alg.arrows):
            i, j = alg.index(a.source), alg.index(a.target)
            if self.target.maps[k] @ self.vertex_maps[i] != self.vertex_maps[j] @ self.source.maps[k]:
                return False
        return True

    def __eq__(self, other):
        return (isinstance(other, Morphism) and self.source == other.source
                and self.target == other.target and self.vertex_maps == other.vertex_maps)

    def __hash__(self):
        return hash(self.vertex_maps)

    def __repr__(self):
        return f"Morphism({self.source.dims} -> {self.target.dims})"

    def __add__(self, other: "Morphism") -> "Morphism":
        return Morphism(self.source, self.target,
                        [a + b for a, b in zip(self.vertex_maps, other.vertex_maps)], check=False)

    def scale(self, c) -> "Morphism":
        return Morphism(self.source, self.target, [m.scale(c) for m in self.vertex_maps], check=False)

    def compose(self, first: "Morphism") -> "Morphism":
        """``self o first``."""
        return Morphism(first.source, self.target,
                        [b @ a for a, b in zip(first.vertex_maps, self.vertex_maps)], check=False)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.vertex_maps)

    @classmethod
    def identity(cls, v: Representation) -> "Morphism":
        return cls(v, v, [Matrix.identity(d, v.field) for d in v.dims], check=False)

    @classmethod
    def zero(cls, v: Representation, w: Representation) -> "Morphism":
        return cls(v, w, [Matrix.zeros(w.dims[i], v.dims[i], v.field) for i in range(len(v.dims))],
                   check=False)


class Subrepresentation:
    """A subrepresentation stored as a canonical RREF basis per vertex.

    Equal subobjects of the same ambient representation compare equal.
    """

    __slots__ = ("ambient", "basis", "pivots")

    def __init__(self, ambient: Representation, basis, check: bool = True):
        self.ambient = ambient
        f = ambient.field
        bases, pivs = [], []
        if len(basis) != ambient.algebra.n:
            raise ShapeMismatch("one basis per vertex required")
        for i, vecs in enumerate(basis):
            vecs = list(vecs)
            red, piv = linalg.span_rref(vecs, ambient.dims[i], f)
            if check and len(red) != len(vecs):
                raise NotASubrep(f"basis at vertex {ambient.algebra.vertices[i]} is dependent")
            bases.append(red)
            pivs.append(piv)
        self.basis = tuple(bases)
        self.pivots = tuple(pivs)
        if check and not self._closed():
            raise NotASubrep("subspaces are not closed under the arrows")

    @classmethod
    def _from_rref(cls, ambient: Representation, basis, pivots) -> "Subrepresentation":
        obj = cls.__new__(cls)
        obj.ambient = ambient
        obj.basis = tuple(basis)
        obj.pivots = tuple(pivots)
        return obj

    def _closed(self) -> bool:
        alg, f = self.ambient.algebra, self.ambient.field
        for k, a in enumerate(alg.arrows):
            i, j = alg.index(a.source), alg.index(a.target)
            m = self.ambient.maps[k]
            for b in self.basis[i]:
                if not linalg.in_span(m.apply(b), self.basis[j], self.pivots[j], f):
                    return False
        return True

    def __eq__(self, other):
        return (isinstance(other, Subrepresentation) and self.basis == other.basis
                and self.ambient == other.ambient)

    def __hash__(self):
        return hash(self.basis)

    def __repr__(self):
        return f"Subrepresentation(dims={self.dims} in {self.ambient.dims})"

    @property
    def dims(self) -> tuple:
        return tuple(len(b) for b in self.basis)

    @property
    def total_dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def is_full(self) -> bool:
        return self.dims == self.ambient.dims

    def contains(self, other: "Subrepresentation") -> bool:
        f = self.ambient.field
        return all(linalg.in_span(v, b, p, f)
                   for ob, b, p in zip(other.basis, self.basis, self.pivots) for v in ob)

    def as_representation(self) -> Representation:
        """The subobject as a representation in its own RREF basis."""
        alg, f = self.ambient.algebra, self.ambient.field
        maps = []
        for k, a in enumerate(alg.arrows):
            i, j = alg.index(a.source), alg.index(a.target)
            m = self.ambient.maps[k]
            cols = [linalg.coordinates(m.apply(b), self.basis[j], self.pivots[j]) for b in self.basis[i]]
            maps.append(Matrix.from_columns(cols, len(self.basis[j]), f))
        return Representation(alg, f, self.dims, maps, check=False)

    def inclusion(self) -> Morphism:
        f = self.ambient.field
        sub = self.as_representation()
        maps = [Matrix.from_columns(list(b), self.ambient.dims[i], f) for i, b in enumerate(self.basis)]
        return Morphism(sub, self.ambient, maps, check=False)

    @classmethod
    def zero(cls, v: Representation) -> "Subrepresentation":
        return cls._from_rref(v, [()] * v.algebra.n, [()] * v.algebra.n)

    @classmethod
    def full(cls, v: Representation) -> "Subrepresentation":
        f = v.field
        basis = [tuple(tuple(f.one if r == c else f.zero for c in range(d)) for r in range(d)) for d in v.dims]
        return cls._from_rref(v, basis, [tuple(range(d)) for d in v.dims])

    def __add__(self, other: "Subrepresentation") -> "Subrepresentation":
        f = self.ambient.field
        basis, pivs = [], []
        for i, d in enumerate(self.ambient.dims):
            red, piv = linalg.span_rref(list(self.basis[i]) + list(other.basis[i]), d, f)
            basis.append(red)
            pivs.append(piv)
        return Subrepresentation._from_rref(self.ambient, basis, pivs)


# -- operations ---------------------------------------------------------------

def hom_space(v: Representation, w: Representation) -> tuple[list, int]:
    """Basis of Hom(v, w) and its dimension.

    Unknowns are the entries of one ``w_i x v_i`` matrix per vertex; every
    arrow ``a: i -> j`` contributes the equations ``W_a f_i - f_j V_a = 0``.
    """
    _same_category(v, w)
    alg, f = v.algebra, v.field
    offsets, total = [], 0
    for i in range(alg.n):
        offsets.append(total)
        total += w.dims[i] * v.dims[i]

    def var(i, r, c):
        return offsets[i] + r * v.dims[i] + c

    rows = []
    for k, a in enumerate(alg.arrows):
        i, j = alg.index(a.source), alg.index(a.target)
        wa, va = w.maps[k].entries, v.maps[k].entries
        for r in range(w.dims[j]):
            for c in range(v.dims[i]):
                row = [f.zero] * total
                for t in range(w.dims[i]):
                    if wa[r][t] != 0:
                        row[var(i, t, c)] += wa[r][t]
                for t in range(v.dims[j]):
                    if va[t][c] != 0:
                        row[var(j, r, t)] -= va[t][c]
                if any(x != 0 for x in row):
                    rows.append(row)
    if f.p:
        linalg._reduce(rows, f.p)
    red, piv = linalg._rref_rows(rows, total, f.p)
    basis = []
    for vec in linalg._nullspace_from_rref(red, piv, total, f):
        mats = []
        for i in range(alg.n):
            blk = vec[offsets[i]:offsets[i] + w.dims[i] * v.dims[i]]
            mats.append(Matrix(w.dims[i], v.dims[i],
                               tuple(tuple(blk[r * v.dims[i]:(r + 1) * v.dims[i]]) for r in range(w.dims[i])), f))
        basis.append(Morphism(v, w, mats, check=False))
    return basis, len(basis)


def kernel(fm: Morphism) -> tuple[Subrepresentation, Morphism]:
    src, f = fm.source, fm.source.field
    basis, pivs = [], []
    for i, m in enumerate(fm.vertex_maps):
        red, piv = linalg.span_rref(linalg.nullspace_basis(m), src.dims[i], f)
        basis.append(red)
        pivs.append(piv)
    sub = Subrepresentation._from_rref(src, basis, pivs)
    if not sub._closed():  # pragma: no cover - kernels of morphisms are always closed
        raise NotASubrep("kernel is not a subrepresentation; morphism is invalid")
    return sub, sub.inclusion()


def image(fm: Morphism) -> Subrepresentation:
    tgt, f = fm.target, fm.target.field
    basis, pivs = [], []
    for i, m in enumerate(fm.vertex_maps):
        red, piv = linalg.span_rref(m.columns(), tgt.dims[i], f)
        basis.append(red)
        pivs.append(piv)
    sub = Subrepresentation._from_rref(tgt, basis, pivs)
    if not sub._closed():  # pragma: no cover
        raise NotASubrep("image is not a subrepresentation; morphism is invalid")
    return sub


def quotient(v: Representation, e: Subrepresentation) -> tuple[Representation, Morphism]:
    """``v / e`` with coordinates at the non-pivot positions of ``e``'s basis."""
    if e.ambient != v:
        raise NotASubrep("subrepresentation of a different ambient")
    if not e._closed():
        raise NotASubrep("not closed under the arrows")
    alg, f = v.algebra, v.field
    projs = [linalg.complement_projection(e.basis[i], e.pivots[i], v.dims[i], f) for i in range(alg.n)]
    qdims = [p.rows for p in projs]
    maps = []
    for k, a in enumerate(alg.arrows):
        i, j = alg.index(a.source), alg.index(a.target)
        free = [c for c in range(v.dims[i]) if c not in set(e.pivots[i])]
        cols = []
        for c in free:
            col = v.maps[k].column(c)
            cols.append(projs[j].apply(col))
        maps.append(Matrix.from_columns(cols, qdims[j], f))
    q = Representation(alg, f, qdims, maps, check=False)
    return q, Morphism(v, q, projs, check=False)


def preimage(proj: Morphism, e: Subrepresentation) -> Subrepresentation:
    """Pull a subobject of ``proj.target`` back along ``proj``."""
    v, f = proj.source, proj.source.field
    basis, pivs = [], []
    for i, m in enumerate(proj.vertex_maps):
        r = linalg.complement_projection(e.basis[i], e.pivots[i], proj.target.dims[i], f)
        red, piv = linalg.span_rref(linalg.nullspace_basis(r @ m), v.dims[i], f)
        basis.append(red)
        pivs.append(piv)
    return Subrepresentation._from_rref(v, basis, pivs)


def direct_sum(v: Representation, w: Representation) -> Representation:
    _same_category(v, w)
    maps = [linalg.block_diag(a, b) for a, b in zip(v.maps, w.maps)]
    return Representation(v.algebra, v.field, [a + b for a, b in zip(v.dims, w.dims)], maps, check=False)


def zero_representation(algebra: AlgebraPresentation, field: FieldSpec = QQ) -> Representation:
    return Representation(algebra, field, [0] * algebra.n, [None] * len(algebra.arrows), check=False)


def sub_from_generators(v: Representation, vectors) -> Subrepresentation:
    """Smallest subrepresentation containing the given per-vertex vectors."""
    alg, f = v.algebra, v.field
    if isinstance(vectors, Mapping):
        vectors = [vectors.get(x, ()) for x in alg.vertices]
    if len(vectors) != alg.n:
        raise ShapeMismatch("one vector list per vertex required")
    spans = [linalg.span_rref(list(vs), v.dims[i], f) for i, vs in enumerate(vectors)]
    changed = True
    while changed:
        changed = False
        for k, a in enumerate(alg.arrows):
            i, j = alg.index(a.source), alg.index(a.target)
            red_j, piv_j = spans[j]
            new = [v.maps[k].apply(b) for b in spans[i][0]]
            new = [x for x in new if not linalg.in_span(x, red_j, piv_j, f)]
            if new:
                spans[j] = linalg.span_rref(list(red_j) + new, v.dims[j], f)
                changed = True
    sub = Subrepresentation._from_rref(v, [s[0] for s in spans], [s[1] for s in spans])
    assert sub._closed()
    return sub
