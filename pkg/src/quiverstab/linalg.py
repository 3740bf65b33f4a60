"""Exact linear algebra over the rationals and prime fields F_p.

Scalars are ``fractions.Fraction`` over Q and plain ints in ``range(p)`` over
F_p.  Vectors are tuples; matrices are immutable row-major ``Matrix`` values.
No floating point is used anywhere.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import FieldMismatch, ShapeMismatch

_MAX_PRIME = 2**31


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: Q when ``p`` is None, otherwise F_p."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if not isinstance(self.p, int) or isinstance(self.p, bool):
                raise ValueError(f"characteristic must be an int, got {self.p!r}")
            if not (2 <= self.p <= _MAX_PRIME) or not is_prime(self.p):
                raise ValueError(f"{self.p} is not a prime <= 2^31")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(None)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse ``"Q"`` or ``"F<p>"``."""
        t = text.strip()
        if t in ("Q", "QQ"):
            return cls(None)
        m = re.fullmatch(r"(?:F|GF)(\d+)", t)
        if not m:
            raise ValueError(f"unknown field {text!r}; expected Q or F<p>")
        return cls(int(m.group(1)))

    @property
    def is_prime_field(self) -> bool:
        return self.p is not None

    @property
    def name(self) -> str:
        return "Q" if self.p is None else f"F{self.p}"

    def __str__(self):
        return self.name

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def coerce(self, x):
        """Map an int, Fraction or "a/b" string into the field."""
        if isinstance(x, str):
            x = Fraction(x.strip())
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise FieldMismatch(f"{x} has no image in {self.name}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, bool) or not isinstance(x, int):
            raise TypeError(f"cannot coerce {x!r} into {self.name}")
        return x % self.p

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(x, -1, self.p) if self.p else 1 / Fraction(x)

    def elements(self) -> range:
        if self.p is None:
            raise FieldMismatch("Q is infinite")
        return range(self.p)

    def order(self) -> int:
        if self.p is None:
            raise FieldMismatch("Q is infinite")
        return self.p


QQ = FieldSpec(None)


def _reduce(rows: list[list], p: int | None) -> None:
    if p is not None:
        for r in rows:
            for j, x in enumerate(r):
                r[j] = x % p


def _rref_rows(rows: list[list], ncols: int, p: int | None) -> tuple[list[list], list[int]]:
    """In-place reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = rows
    pivots: list[int] = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        piv = None
        for i in range(r, nrows):
            if a[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        lead = a[r][c]
        if p is None:
            if lead != 1:
                a[r] = [x / lead for x in a[r]]
        elif lead != 1:
            inv = pow(lead, -1, p)
            a[r] = [x * inv % p for x in a[r]]
        prow = a[r]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    if p is None:
                        a[i] = [x - f * y for x, y in zip(a[i], prow)]
                    else:
                        a[i] = [(x - f * y) % p for x, y in zip(a[i], prow)]
        pivots.append(c)
        r += 1
    return a[:r], pivots


@dataclass(frozen=True)
class Matrix:
    rows: int
    cols: int
    entries: tuple
    field: FieldSpec = QQ

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatch("negative matrix dimensions")
        ent = tuple(tuple(r) for r in self.entries)
        if len(ent) != self.rows or any(len(r) != self.cols for r in ent):
            raise ShapeMismatch(
                f"entries do not form a {self.rows}x{self.cols} matrix"
            )
        f = self.field
        object.__setattr__(self, "entries", tuple(tuple(f.coerce(x) for x in r) for r in ent))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec = QQ, cols: int | None = None) -> "Matrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(tuple(r) for r in rows), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int, field: FieldSpec = QQ) -> "Matrix":
        cols = len(columns)
        ent = tuple(tuple(columns[j][i] for j in range(cols)) for i in range(nrows))
        return cls(nrows, cols, ent, field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec = QQ) -> "Matrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec = QQ) -> "Matrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), field)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.entries)

    def columns(self) -> list[tuple]:
        return [self.column(j) for j in range(self.cols)]

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.entries]

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.entries for x in r)

    def _check_field(self, other: "Matrix"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field} vs {other.field}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.shape != other.shape:
            raise ShapeMismatch(f"{self.shape} + {other.shape}")
        return Matrix(self.rows, self.cols,
                      tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self.entries, other.entries)),
                      self.field)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def scale(self, c) -> "Matrix":
        c = self.field.coerce(c)
        return Matrix(self.rows, self.cols, tuple(tuple(c * x for x in r) for r in self.entries), self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        self._check_field(other)
        if self.cols != other.rows:
            raise ShapeMismatch(f"{self.shape} @ {other.shape}")
        ocols = list(zip(*other.entries)) if other.rows else [()] * other.cols
        ent = tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in ocols) for r in self.entries)
        return Matrix(self.rows, other.cols, ent, self.field)

    def apply(self, vec: Sequence) -> tuple:
        if len(vec) != self.cols:
            raise ShapeMismatch(f"vector of length {len(vec)} for {self.shape} matrix")
        p = self.field.p
        out = tuple(sum(a * b for a, b in zip(r, vec)) for r in self.entries)
        return tuple(x % p for x in out) if p else out

    def transpose(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)), self.field)


def block_diag(a: Matrix, b: Matrix) -> Matrix:
    a._check_field(b)
    ent = [list(r) + [0] * b.cols for r in a.entries]
    ent += [[0] * a.cols + list(r) for r in b.entries]
    return Matrix(a.rows + b.rows, a.cols + b.cols, tuple(tuple(r) for r in ent), a.field)


def rref(m: Matrix) -> tuple[Matrix, list[int], int]:
    """Reduced row echelon form, pivot columns and rank."""
    rows = m.to_lists()
    red, pivots = _rref_rows(rows, m.cols, m.field.p)
    rank = len(pivots)
    zero_rows = [[0] * m.cols for _ in range(m.rows - rank)]
    return Matrix(m.rows, m.cols, tuple(tuple(r) for r in red + zero_rows), m.field), pivots, rank


def rank(m: Matrix) -> int:
    return len(_rref_rows(m.to_lists(), m.cols, m.field.p)[1])


def _nullspace_from_rref(red: list[list], pivots: list[int], ncols: int, field: FieldSpec) -> list[tuple]:
    free = [c for c in range(ncols) if c not in set(pivots)]
    p = field.p
    basis = []
    for fcol in free:
        v = [field.zero] * ncols
        v[fcol] = field.one
        for r, pc in enumerate(pivots):
            x = -red[r][fcol]
            v[pc] = x % p if p else x
        basis.append(tuple(v))
    return basis


def nullspace_basis(m: Matrix) -> list[tuple]:
    """Basis of {x : m x = 0}, one vector per free column."""
    red, pivots = _rref_rows(m.to_lists(), m.cols, m.field.p)
    return _nullspace_from_rref(red, pivots, m.cols, m.field)


def solve(m: Matrix, rhs: Sequence) -> tuple | None:
    """Some x with m x = rhs, or None if the system is inconsistent."""
    if len(rhs) != m.rows:
        raise ShapeMismatch(f"rhs has length {len(rhs)}, matrix has {m.rows} rows")
    f = m.field
    aug = [list(r) + [f.coerce(b)] for r, b in zip(m.entries, rhs)]
    red, pivots = _rref_rows(aug, m.cols + 1, f.p)
    if pivots and pivots[-1] == m.cols:
        return None
    x = [f.zero] * m.cols
    for r, pc in enumerate(pivots):
        x[pc] = red[r][m.cols]
    return tuple(x)


# Subspaces of k^n are handled as canonical RREF row bases: equal subspaces
# have identical bases, so tuples of them are hashable subspace keys.

def span_rref(vectors: Iterable[Sequence], n: int, field: FieldSpec) -> tuple[tuple, tuple[int, ...]]:
    rows = [[field.coerce(x) for x in v] for v in vectors]
    for v in rows:
        if len(v) != n:
            raise ShapeMismatch(f"vector of length {len(v)} in a space of dimension {n}")
    red, pivots = _rref_rows(rows, n, field.p)
    return tuple(tuple(r) for r in red), tuple(pivots)


def pivots_of(basis: Sequence[Sequence]) -> tuple[int, ...]:
    out = []
    for r in basis:
        for j, x in enumerate(r):
            if x != 0:
                out.append(j)
                break
    return tuple(out)


def reduce_mod(v: Sequence, basis: Sequence[Sequence], pivots: Sequence[int], field: FieldSpec) -> list:
    """Reduce ``v`` modulo the span of an RREF basis (zero at every pivot afterwards)."""
    p = field.p
    w = list(v)
    for r, pc in zip(basis, pivots):
        c = w[pc]
        if c != 0:
            if p:
                w = [(x - c * y) % p for x, y in zip(w, r)]
            else:
                w = [x - c * y for x, y in zip(w, r)]
    return w


def in_span(v: Sequence, basis: Sequence[Sequence], pivots: Sequence[int], field: FieldSpec) -> bool:
    return all(x == 0 for x in reduce_mod(v, basis, pivots, field))


def coordinates(v: Sequence, basis: Sequence[Sequence], pivots: Sequence[int]) -> tuple:
    """Coordinates of a vector lying in the span of an RREF basis."""
    return tuple(v[pc] for pc in pivots)


def complement_projection(basis: Sequence[Sequence], pivots: Sequence[int], n: int, field: FieldSpec) -> Matrix:
    """Matrix of k^n -> k^n / span(basis), quotient coordinates at the non-pivot slots."""
    free = [j for j in range(n) if j not in set(pivots)]
    cols = []
    for j in range(n):
        e = [field.zero] * n
        e[j] = field.one
        w = reduce_mod(e, basis, pivots, field)
        cols.append([w[c] for c in free])
    return Matrix.from_columns(cols, len(free), field)
