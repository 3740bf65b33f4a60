"""Plain-text formats for algebras, representations and stability data.

Algebra file::

    # sl2 principal block
    vertices: 1 2
    arrow a: 1 -> 2
    arrow b: 2 -> 1
    relation: a b

Relation terms are arrow words read left to right (first arrow first),
optionally preceded by a rational coefficient and joined by ``+`` / ``-``,
e.g. ``relation: a b - 1/2 c d``.

Representation file::

    algebra: preset:sl2block      # or a path relative to this file
    field: F2                     # Q or F<p>
    dims: 1 2
    map a: 0 ; 1                  # rows separated by ';'
    map b: 1 0

Omitted maps are zero.  Stability file::

    beta: 1 1
    gamma: canonical              # or a rational vector
    alpha: 1 2                    # optional
"""
from __future__ import annotations

import re
from fractions import Fraction
from pathlib import Path

from .errors import DegenerateGamma, ParseError
from .ktheory import is_nondegenerate
from .linalg import FieldSpec, Matrix
from .quiver import AlgebraPresentation, Arrow, Relation, Representation

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_']*\Z")
_VERTEX = re.compile(r"[A-Za-z0-9_'-]+\Z")
_RATIONAL = re.compile(r"[+-]?\d+(/\d+)?\Z")


def _lines(text):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].rstrip()
        if line.strip():
            yield no, raw, line


def _split_key(no, raw, line, source):
    if ":" not in line:
        raise ParseError("expected 'key: value'", no, len(line) + 1, source)
    key, value = line.split(":", 1)
    return key.strip(), value, raw.index(":") + 2


def parse_rational(tok: str, no=None, col=None, source=None) -> Fraction:
    if not _RATIONAL.match(tok):
        raise ParseError(f"not a rational number: {tok!r}", no, col, source)
    try:
        return Fraction(tok)
    except ZeroDivisionError:
        raise ParseError(f"zero denominator in {tok!r}", no, col, source) from None


def _tokens(value, offset):
    """Whitespace tokens with their 1-based columns."""
    return [(m.group(), offset + m.start()) for m in re.finditer(r"\S+", value)]


def _parse_relation(value, col0, no, source, arrows):
    toks = _tokens(value, col0)
    terms, sign, coeff, word = [], 1, None, []

    def flush(col):
        if not word:
            raise ParseError("relation term without arrows", no, col, source)
        terms.append((sign * (coeff if coeff is not None else 1), tuple(word)))

    for tok, col in toks:
        if tok in "+-":
            if word:
                flush(col)
            elif coeff is not None or terms:
                raise ParseError("dangling sign", no, col, source)
            sign, coeff, word = (1 if tok == "+" else -1), None, []
        elif _RATIONAL.match(tok):
            if word:
                raise ParseError("coefficient after arrow word; separate terms with + or -", no, col, source)
            coeff = parse_rational(tok, no, col, source)
        else:
            if tok not in arrows:
                raise ParseError(f"unknown arrow {tok!r}", no, col, source)
            word.append(tok)
    flush(col0 + len(value))
    return Relation(tuple(terms))


def parse_algebra(text: str, source: str | None = None) -> AlgebraPresentation:
    vertices, arrows, relations = None, [], []
    last = 0
    for no, raw, line in _lines(text):
        last = no
        key, value, col = _split_key(no, raw, line, source)
        if key == "vertices":
            if vertices is not None:
                raise ParseError("vertices declared twice", no, 1, source)
            vertices = []
            for tok, c in _tokens(value, col):
                if not _VERTEX.match(tok):
                    raise ParseError(f"bad vertex name {tok!r}", no, c, source)
                vertices.append(tok)
        elif key.startswith("arrow "):
            name = key[6:].strip()
            if not _NAME.match(name):
                raise ParseError(f"bad arrow name {name!r}", no, 7, source)
            m = re.fullmatch(r"\s*(\S+)\s*->\s*(\S+)\s*", value)
            if not m:
                raise ParseError("expected 'arrow NAME: SOURCE -> TARGET'", no, col, source)
            if vertices is None:
                raise ParseError("arrow before vertices", no, 1, source)
            for v, c in ((m.group(1), col + m.start(1)), (m.group(2), col + m.start(2))):
                if v not in vertices:
                    raise ParseError(f"unknown vertex {v!r}", no, c, source)
            arrows.append(Arrow(name, m.group(1), m.group(2)))
        elif key == "relation":
            names = {a.name for a in arrows}
            relations.append((no, _parse_relation(value, col, no, source, names)))
        else:
            raise ParseError(f"unknown key {key!r}", no, 1, source)
    if vertices is None:
        raise ParseError("missing 'vertices:' line", last or 1, 1, source)
    try:
        return AlgebraPresentation(tuple(vertices), tuple(arrows), tuple(r for _, r in relations))
    except Exception as exc:
        from .errors import InvalidPresentation
        if isinstance(exc, InvalidPresentation):
            raise
        raise ParseError(str(exc), last or 1, 1, source) from exc


def _fmt_word(word):
    return " ".join(word)


def format_relation(rel: Relation) -> str:
    parts = []
    for k, (c, word) in enumerate(rel.terms):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = _fmt_word(word) if mag == 1 else f"{mag} {_fmt_word(word)}"
        if k == 0:
            parts.append(body if sign == "+" else f"- {body}")
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts)


def format_algebra(alg: AlgebraPresentation) -> str:
    lines = ["vertices: " + " ".join(alg.vertices)]
    lines += [f"arrow {a.name}: {a.source} -> {a.target}" for a in alg.arrows]
    lines += ["relation: " + format_relation(r) for r in alg.relations]
    return "\n".join(lines) + "\n"


def _parse_matrix(value, col0, no, source, field, shape, name):
    rows_txt = value.split(";")
    rows, offset = [], col0
    for rt in rows_txt:
        rows.append([field.coerce(parse_rational(tok, no, c, source)) for tok, c in _tokens(rt, offset)])
        offset += len(rt) + 1
    r, c = shape
    if r == 0 or c == 0:
        if any(rows_row for rows_row in rows):
            raise ParseError(f"map {name} must be empty ({r}x{c})", no, col0, source)
        return Matrix.zeros(r, c, field)
    if len(rows) != r or any(len(x) != c for x in rows):
        raise ParseError(f"map {name} must be {r}x{c}", no, col0 + 1, source)
    return Matrix.from_rows(rows, field, cols=c)


def resolve_algebra(ref: str, base: Path | None = None) -> AlgebraPresentation:
    from . import presets

    if ref.startswith("preset:"):
        return presets.algebra(ref[7:])
    path = Path(ref)
    if base is not None and not path.is_absolute():
        path = base / path
    return parse_algebra(path.read_text(), str(path))


def parse_representation(text: str, source: str | None = None, base: Path | None = None,
                         algebra: AlgebraPresentation | None = None) -> Representation:
    """Parse a representation file; relations are checked."""
    alg, field, dims, maps = algebra, None, None, {}
    pending = []
    for no, raw, line in _lines(text):
        key, value, col = _split_key(no, raw, line, source)
        if key == "algebra":
            ref = value.strip()
            try:
                alg = resolve_algebra(ref, base)
            except (OSError, KeyError) as exc:
                raise ParseError(f"cannot load algebra {ref!r}: {exc}", no, col, source) from exc
        elif key == "field":
            try:
                field = FieldSpec.parse(value)
            except ValueError as exc:
                raise ParseError(str(exc), no, col, source) from None
        elif key == "dims":
            dims = []
            for tok, c in _tokens(value, col):
                if not tok.isdigit():
                    raise ParseError(f"bad dimension {tok!r}", no, c, source)
                dims.append(int(tok))
        elif key.startswith("map "):
            pending.append((no, key[4:].strip(), value, col))
        else:
            raise ParseError(f"unknown key {key!r}", no, 1, source)
    if alg is None:
        raise ParseError("missing 'algebra:' line", 1, 1, source)
    if field is None:
        raise ParseError("missing 'field:' line", 1, 1, source)
    if dims is None or len(dims) != alg.n:
        raise ParseError(f"'dims:' needs {alg.n} entries", 1, 1, source)
    for no, name, value, col in pending:
        if name not in alg.arrow_index:
            raise ParseError(f"unknown arrow {name!r}", no, 5, source)
        a = alg.arrow(name)
        shape = (dims[alg.index(a.target)], dims[alg.index(a.source)])
        maps[name] = _parse_matrix(value, col, no, source, field, shape, name)
    return Representation(alg, field, dims, maps)


def format_matrix(m: Matrix) -> str:
    return " ; ".join(" ".join(str(x) for x in row) for row in m.entries)


def format_representation(rep: Representation, algebra_ref: str) -> str:
    lines = [f"algebra: {algebra_ref}", f"field: {rep.field}", "dims: " + " ".join(map(str, rep.dims))]
    for a, m in zip(rep.algebra.arrows, rep.maps):
        if m.rows and m.cols:
            lines.append(f"map {a.name}: {format_matrix(m)}")
    return "\n".join(lines) + "\n"


def parse_vector(text: str, source: str | None = None) -> tuple:
    toks = [t for t in re.split(r"[,\s]+", text.strip()) if t]
    return tuple(parse_rational(t, None, None, source) for t in toks)


def parse_stability(text: str, source: str | None = None) -> dict:
    """Returns {"beta": tuple, "gamma": tuple | "canonical", "alpha": tuple | None}."""
    out = {"beta": None, "gamma": "canonical", "alpha": None}
    for no, raw, line in _lines(text):
        key, value, col = _split_key(no, raw, line, source)
        if key not in out:
            raise ParseError(f"unknown key {key!r}", no, 1, source)
        if key == "gamma" and value.strip() == "canonical":
            continue
        vals = []
        for tok, c in _tokens(value, col):
            for piece in filter(None, tok.split(",")):
                vals.append(parse_rational(piece, no, c, source))
        if key == "gamma" and any(x < 0 for x in vals):
            raise ParseError("gamma entries must be >= 0", no, col, source)
        if key == "alpha" and any(x.denominator != 1 or x < 0 for x in vals):
            raise ParseError("alpha must be a nonnegative integer vector", no, col, source)
        out[key] = tuple(vals)
    if out["beta"] is None:
        raise ParseError("missing 'beta:' line", 1, 1, source)
    vecs = [v for v in (out["beta"], out["gamma"], out["alpha"]) if isinstance(v, tuple)]
    if len({len(v) for v in vecs}) > 1:
        raise ParseError("beta, gamma and alpha must have the same length", 1, 1, source)
    if isinstance(out["gamma"], tuple) and out["alpha"] is not None \
            and not is_nondegenerate(out["gamma"], [int(a) for a in out["alpha"]]):
        raise DegenerateGamma(f"gamma {list(map(str, out['gamma']))} vanishes on the support of alpha")
    return out


def format_stability(beta, gamma, alpha=None) -> str:
    lines = ["beta: " + " ".join(str(Fraction(x)) for x in beta)]
    lines.append("gamma: " + (gamma if isinstance(gamma, str) else " ".join(str(Fraction(x)) for x in gamma)))
    if alpha is not None:
        lines.append("alpha: " + " ".join(str(x) for x in alpha))
    return "\n".join(lines) + "\n"
