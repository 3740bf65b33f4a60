import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverstab import formats, presets
from quiverstab.errors import DegenerateGamma, InvalidPresentation, ParseError, RelationViolated
from quiverstab.linalg import QQ, FieldSpec
from quiverstab.quiver import AlgebraPresentation, Arrow, Relation
from quiverstab.sampling import random_representation

from conftest import PRESET_NAMES


@pytest.mark.parametrize("name", PRESET_NAMES)
def test_preset_round_trip(name):
    alg = presets.algebra(name)
    assert formats.parse_algebra(formats.format_algebra(alg)) == alg
    for field in (QQ, FieldSpec(2), FieldSpec(3)):
        for v in presets.objects(name, field).values():
            text = formats.format_representation(v, f"preset:{name}")
            assert formats.parse_representation(text) == v


@given(st.sampled_from(PRESET_NAMES), st.integers(0, 10**6))
def test_random_representation_round_trip(name, seed):
    rng = random.Random(seed)
    v = random_representation(presets.algebra(name), FieldSpec(rng.choice([2, 3, 5])), rng)
    assert formats.parse_representation(formats.format_representation(v, f"preset:{name}")) == v


def test_rational_relations_round_trip():
    alg = AlgebraPresentation(
        ("1", "2", "3"),
        (Arrow("a", "1", "2"), Arrow("b", "2", "3"), Arrow("c", "1", "2"), Arrow("d", "2", "3")),
        (Relation(((Fraction(-3, 2), ("a", "b")), (2, ("c", "d")))),),
    )
    text = formats.format_algebra(alg)
    assert "relation: - 3/2 a b + 2 c d" in text
    assert formats.parse_algebra(text) == alg


def test_rational_map_entries(tmp_path):
    (tmp_path / "a2.alg").write_text("# A2\nvertices: 1 2\narrow a: 1 -> 2\n")
    (tmp_path / "v.rep").write_text("algebra: a2.alg\nfield: Q\ndims: 2 1\nmap a: 1/2 -3\n")
    v = formats.parse_representation((tmp_path / "v.rep").read_text(), base=tmp_path)
    assert v.maps[0].entries == ((Fraction(1, 2), Fraction(-3)),)
    assert formats.format_matrix(v.maps[0]) == "1/2 -3"


def test_omitted_maps_are_zero():
    v = formats.parse_representation("algebra: preset:kronecker\nfield: F3\ndims: 1 1\nmap b: 2\n")
    assert v.maps[0].is_zero() and v.maps[1].entries == ((2,),)


@pytest.mark.parametrize("text,line,column", [
    ("vertices: 1 2\narrow a: 1 -> 3\n", 2, 15),
    ("vertices: 1 2\narrow a 1 -> 2\n", 2, 15),
    ("vertices: 1 2\narrow a: 1 -> 2\nrelation: a q\n", 3, 13),
    ("vertices: 1 2\nedges: 1 2\n", 2, 1),
    ("arrow a: 1 -> 2\n", 1, 1),
    ("vertices: 1 2\narrow a: 1 -> 2\nrelation: a a +\n", 3, 16),
])
def test_algebra_parse_errors_carry_position(text, line, column):
    with pytest.raises(ParseError) as exc:
        formats.parse_algebra(text, "x.alg")
    assert (exc.value.line, exc.value.column) == (line, column)
    assert str(exc.value).startswith(f"x.alg:{line}:{column}:")


def test_invalid_presentation_is_not_a_parse_error():
    with pytest.raises(InvalidPresentation):
        formats.parse_algebra("vertices: 1\narrow x: 1 -> 1\n")


@pytest.mark.parametrize("text,line", [
    ("algebra: preset:a2\nfield: F4\ndims: 1 1\n", 2),
    ("algebra: preset:a2\nfield: F2\ndims: 1 1\nmap a: 1 1\n", 4),
    ("algebra: preset:a2\nfield: F2\ndims: 1 1\nmap a: x\n", 4),
    ("algebra: preset:a2\nfield: F2\ndims: 1 1\nmap z: 1\n", 4),
    ("algebra: preset:nope\nfield: F2\ndims: 1 1\n", 1),
    ("algebra: preset:a2\nfield: Q\ndims: 1 1\nmap a: 1/0\n", 4),
])
def test_rep_parse_errors(text, line):
    with pytest.raises(ParseError) as exc:
        formats.parse_representation(text)
    assert exc.value.line == line


def test_rep_relations_are_checked():
    with pytest.raises(RelationViolated):
        formats.parse_representation("algebra: preset:dualnumbers\nfield: F2\ndims: 1\nmap x: 1\n")


def test_stability_file():
    data = formats.parse_stability("beta: 1 -1/2\ngamma: canonical\nalpha: 1 2\n")
    assert data == {"beta": (1, Fraction(-1, 2)), "gamma": "canonical", "alpha": (1, 2)}
    text = formats.format_stability(data["beta"], (1, Fraction(1, 3)), data["alpha"])
    again = formats.parse_stability(text)
    assert again["gamma"] == (1, Fraction(1, 3)) and again["beta"] == data["beta"]
    with pytest.raises(ParseError):
        formats.parse_stability("beta: 1 1\ngamma: 1 -1\n")
    with pytest.raises(ParseError):
        formats.parse_stability("gamma: 1 1\n")
    with pytest.raises(ParseError):
        formats.parse_stability("beta: 1 1\nalpha: 1/2 1\n")
    with pytest.raises(ParseError):
        formats.parse_stability("beta: 1 1\nalpha: 1 1 1\n")
    with pytest.raises(DegenerateGamma):
        formats.parse_stability("beta: 1 1\ngamma: 1 0\nalpha: 1 1\n")
