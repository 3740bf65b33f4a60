"""Grothendieck-group classes and the Euler pairing.

G-classes are integer vectors on the simples [S_i]; K-classes are rational
vectors on the projectives [P_i].  The pairing is <P_i, S_j> = delta_ij tau_i
with tau_i = dim Hom(P_i, S_i), which is 1 for vertex simples but is still
computed from Hom spaces by ``dual_basis_matrix``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import IndexMismatch, NegativeClass, NegativeGamma, NotDiagonal


class _Vector:
    __slots__ = ("coeffs",)
    _scalar = int

    def __init__(self, coeffs):
        if isinstance(coeffs, _Vector):
            coeffs = coeffs.coeffs
        object.__setattr__(self, "coeffs", tuple(self._convert(c) for c in coeffs))

    @classmethod
    def _convert(cls, c):
        return cls._scalar(c)

    def __setattr__(self, name, value):
        raise AttributeError("classes are immutable")

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __eq__(self, other):
        return type(other) is type(self) and self.coeffs == other.coeffs

    def __lt__(self, other):
        return self.coeffs < other.coeffs

    def __hash__(self):
        return hash((type(self).__name__, self.coeffs))

    def _same(self, other):
        if len(other) != len(self):
            raise IndexMismatch(f"{len(self)} vs {len(other)} entries")

    def __add__(self, other):
        self._same(other)
        return type(self)(a + b for a, b in zip(self, other))

    def __sub__(self, other):
        self._same(other)
        return type(self)(a - b for a, b in zip(self, other))

    def __neg__(self):
        return type(self)(-a for a in self)

    def __rmul__(self, c):
        return type(self)(c * a for a in self)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def support(self) -> tuple:
        return tuple(i for i, c in enumerate(self.coeffs) if c != 0)

    @classmethod
    def zero(cls, n: int):
        return cls([0] * n)

    @classmethod
    def unit(cls, n: int, i: int):
        return cls([int(j == i) for j in range(n)])


class GClass(_Vector):
    """Integer class on the basis of simples."""

    __slots__ = ()

    @classmethod
    def _convert(cls, c):
        if isinstance(c, Fraction):
            if c.denominator != 1:
                raise ValueError(f"G-classes are integral, got {c}")
            return int(c)
        if isinstance(c, float) or not isinstance(c, int):
            raise TypeError(f"G-class entries must be integers, got {c!r}")
        return int(c)

    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    @property
    def total(self) -> int:
        return sum(self.coeffs)

    def __repr__(self):
        return f"GClass({list(self.coeffs)})"


class KClass(_Vector):
    """Rational class on the basis of indecomposable projectives."""

    __slots__ = ()

    @classmethod
    def _convert(cls, c):
        if isinstance(c, float):
            raise TypeError("K-class entries must be exact")
        return Fraction(c)

    def __repr__(self):
        return f"KClass([{', '.join(str(c) for c in self.coeffs)}])"


def g_class(v) -> GClass:
    """Class of a representation; its dimension vector."""
    return GClass(v.dims)


def _tau(tau, n):
    return (1,) * n if tau is None else tuple(tau)


def pairing(beta, alpha, tau: Sequence | None = None) -> Fraction:
    """<beta, alpha> = sum_i beta_i tau_i alpha_i."""
    beta, alpha = KClass(beta), GClass(alpha)
    if len(beta) != len(alpha):
        raise IndexMismatch(f"K-class has {len(beta)} entries, G-class {len(alpha)}")
    t = _tau(tau, len(alpha))
    if len(t) != len(alpha):
        raise IndexMismatch("tau has the wrong length")
    return sum((b * s * a for b, s, a in zip(beta, t, alpha)), Fraction(0))


def pairing_object(beta, v) -> Fraction:
    """<beta, V> through Hom spaces: sum_i beta_i dim Hom(P_i, V)."""
    from .quiver import hom_space
    from .structure import projective

    beta = KClass(beta)
    alg = v.algebra
    if len(beta) != alg.n:
        raise IndexMismatch(f"K-class has {len(beta)} entries, quiver has {alg.n} vertices")
    total = Fraction(0)
    for i, b in enumerate(beta):
        if b:
            total += b * hom_space(projective(alg, i, v.field), v)[1]
    return total


def gamma_length(gamma, x, tau: Sequence | None = None) -> Fraction:
    """l_gamma(x) = <gamma, x> for a G-class or representation ``x``."""
    gamma = KClass(gamma)
    if any(c < 0 for c in gamma):
        raise NegativeGamma(f"gamma {gamma} has a negative coefficient")
    alpha = x if isinstance(x, GClass) else (GClass(x.dims) if hasattr(x, "dims") else GClass(x))
    return pairing(gamma, alpha, tau)


def canonical_gamma(algebra, alpha, tau: Sequence | None = None) -> KClass:
    """gamma = sum over the support of alpha of [P_i] / tau_i.

    With this choice l_gamma is the ordinary length on objects of class
    alpha and their subquotients.
    """
    alpha = GClass(alpha)
    if len(alpha) != algebra.n:
        raise IndexMismatch("class does not match the quiver")
    t = _tau(tau, len(alpha)) if tau is not None else dual_basis_matrix(algebra).tau
    return KClass(Fraction(1, 1) / t[i] if alpha[i] != 0 else 0 for i in range(len(alpha)))


def is_nondegenerate(gamma, alpha) -> bool:
    gamma, alpha = KClass(gamma), GClass(alpha)
    if len(gamma) != len(alpha):
        raise IndexMismatch("gamma and alpha have different lengths")
    return all(gamma[i] > 0 for i in alpha.support())


@dataclass(frozen=True)
class PairingMatrix:
    """Entries <P_i, S_j> indexed by vertex order."""

    entries: tuple

    @property
    def tau(self) -> tuple:
        return tuple(self.entries[i][i] for i in range(len(self.entries)))

    def is_diagonal(self) -> bool:
        return all(x == 0 for i, r in enumerate(self.entries) for j, x in enumerate(r) if i != j)


def dual_basis_matrix(algebra, field=None) -> PairingMatrix:
    from .linalg import QQ
    from .quiver import hom_space
    from .structure import projective, simple

    field = field or QQ
    n = algebra.n
    proj = [projective(algebra, i, field) for i in range(n)]
    simp = [simple(algebra, j, field) for j in range(n)]
    entries = tuple(tuple(Fraction(hom_space(proj[i], simp[j])[1]) for j in range(n)) for i in range(n))
    pm = PairingMatrix(entries)
    if not pm.is_diagonal() or any(t <= 0 for t in pm.tau):
        raise NotDiagonal(f"<P_i, S_j> is not diagonal with positive entries: {entries}")
    return pm


def minimal_cover_vector(alpha) -> dict:
    """Multiplicities n_j = alpha_j on the support of alpha; P_n = sum P_j^{n_j}
    surjects onto every object of class alpha."""
    alpha = GClass(alpha)
    if not alpha.is_effective():
        raise NegativeClass(f"{alpha} is not effective")
    return {j: alpha[j] for j in alpha.support()}
