"""Built-in algebras and named objects.

``sl2block`` presents the principal block of category O for sl(2):
vertex 1 carries L(0), vertex 2 carries L(-2), arrows a: 1 -> 2 and
b: 2 -> 1 with a b = 0.  Then P_1 = M(0) (top L(0), socle L(-2)) and
P_2 = P(-2) is uniserial L(-2) / L(0) / L(-2).
"""
from __future__ import annotations

from .linalg import FieldSpec
from .quiver import AlgebraPresentation, Arrow, Relation, Representation
from .structure import projective, simple


def a2() -> AlgebraPresentation:
    return AlgebraPresentation(("1", "2"), (Arrow("a", "1", "2"),))


def kronecker() -> AlgebraPresentation:
    return AlgebraPresentation(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "1", "2")))


def dualnumbers() -> AlgebraPresentation:
    return AlgebraPresentation(("1",), (Arrow("x", "1", "1"),), (Relation.monomial("x", "x"),))


def sl2block() -> AlgebraPresentation:
    return AlgebraPresentation(
        ("1", "2"),
        (Arrow("a", "1", "2"), Arrow("b", "2", "1")),
        (Relation.monomial("a", "b"),),
    )


PRESETS = {
    "a2": a2,
    "kronecker": kronecker,
    "dualnumbers": dualnumbers,
    "sl2block": sl2block,
}

DESCRIPTIONS = {
    "a2": "quiver 1 -> 2",
    "kronecker": "two arrows 1 => 2, no relations",
    "dualnumbers": "one loop x with x x = 0 (k[eps], eps^2 = 0)",
    "sl2block": "principal block of sl2 category O: a: 1 -> 2, b: 2 -> 1, a b = 0",
}


def algebra(name: str) -> AlgebraPresentation:
    try:
        return PRESETS[name]()
    except KeyError:
        raise KeyError(f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


def _sl2_objects(alg, field):
    return {
        "L0": simple(alg, "1", field),
        "L-2": simple(alg, "2", field),
        "M0": Representation(alg, field, (1, 1), {"a": [[1]], "b": [[0]]}),
        "M0dual": Representation(alg, field, (1, 1), {"a": [[0]], "b": [[1]]}),
        "P2": projective(alg, "2", field),
    }


def standard_objects(alg: AlgebraPresentation, field: FieldSpec) -> dict:
    """S<v> and P<v> for every vertex."""
    out = {}
    for v in alg.vertices:
        out[f"S{v}"] = simple(alg, v, field)
        out[f"P{v}"] = projective(alg, v, field)
    return out


def objects(name: str, field: FieldSpec) -> dict:
    """Named objects of a preset: S<v> and P<v> for every vertex, plus the
    five sl2-block indecomposables."""
    alg = algebra(name)
    out = standard_objects(alg, field)
    if name == "sl2block":
        out.update(_sl2_objects(alg, field))
    if name == "dualnumbers":
        out["S"] = out["S1"]
        out["P"] = out["P1"]
    return out
