"""Text formats for ideals, graphs/clutters and matrix blocks.

Ideal file::

    vars 3
    1 1 0          # exponent vector
    t2*t3          # or a monomial string; "1" is the unit monomial

A line holding exactly ``vars`` integers is an exponent vector (so with one
variable ``1`` means ``t1``; write ``0`` for the unit monomial there).  No
generator lines means the zero ideal.

Graph file::

    vertices 5
    1 2
    2 3 4          # more than two entries: a clutter edge

Matrix block (the interchange format of external Hilbert-basis software)::

    amb_space 11   # optional
    normalization 21
    <21 integer rows>

or ``rees_algebra <n>`` followed by the ``n`` generator exponent rows (whose
length is ``amb_space - 1`` when ``amb_space`` is given).

``#`` starts a comment; blank lines are ignored.
"""

import re
from dataclasses import dataclass
from typing import Optional, Tuple

from .combinatorics import Clutter, Graph
from .errors import ParseError, UnsupportedInput
from .ideal import MonomialIdeal, make_ideal, parse_monomial

_INT = re.compile(r"^-?\d+$")


def _lines(text):
    """(line number, column of first token, tokens) for each meaningful line."""
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0]
        if not body.strip():
            continue
        col = len(body) - len(body.lstrip()) + 1
        yield no, col, body.split(), body


def _column_of(body, token_index):
    pos = 0
    for k, tok in enumerate(body.split()):
        pos = body.index(tok, pos)
        if k == token_index:
            return pos + 1
        pos += len(tok)
    return 1


def _header(it, keyword):
    try:
        no, col, toks, body = next(it)
    except StopIteration:
        raise ParseError(f"empty input, expected '{keyword} <n>'", 1, 1) from None
    if len(toks) != 2 or toks[0] != keyword or not toks[1].isdigit():
        raise ParseError(f"expected header '{keyword} <n>'", no, col)
    return int(toks[1])


# -- ideals -------------------------------------------------------------------------


def parse_ideal(text: str) -> MonomialIdeal:
    it = _lines(text)
    s = _header(it, "vars")
    gens = []
    for no, col, toks, body in it:
        if all(_INT.match(t) for t in toks) and len(toks) == s:
            vec = []
            for k, t in enumerate(toks):
                v = int(t)
                if v < 0:
                    raise ParseError(f"negative exponent {v}", no, _column_of(body, k))
                vec.append(v)
            gens.append(tuple(vec))
        elif toks == ["1"]:
            gens.append((0,) * s)
        elif all(_INT.match(t) for t in toks):
            raise ParseError(f"exponent vector has {len(toks)} entries, expected {s}", no, col)
        else:
            try:
                gens.append(parse_monomial("".join(toks), s))
            except ValueError as exc:
                raise ParseError(str(exc), no, col) from None
    return make_ideal(s, gens)


def serialize_ideal(I: MonomialIdeal) -> str:
    lines = [f"vars {I.num_vars}"]
    lines += [" ".join(str(x) for x in g) for g in I.gens]
    return "\n".join(lines) + "\n"


# -- graphs and clutters ------------------------------------------------------------------


def parse_graph(text: str) -> Clutter:
    """A :class:`Graph` when every edge has two vertices, else a :class:`Clutter`."""
    it = _lines(text)
    s = _header(it, "vertices")
    edges = []
    seen = {}
    for no, col, toks, body in it:
        verts = []
        for k, t in enumerate(toks):
            if not t.isdigit():
                raise ParseError(f"vertex {t!r} is not a positive integer", no, _column_of(body, k))
            v = int(t)
            if not 1 <= v <= s:
                raise ParseError(f"vertex {v} outside 1..{s}", no, _column_of(body, k))
            verts.append(v)
        e = frozenset(verts)
        if len(e) != len(verts):
            raise ParseError("repeated vertex in an edge (loops are not allowed)", no, col)
        if e in seen:
            raise ParseError(f"duplicate edge (first on line {seen[e]})", no, col)
        seen[e] = no
        edges.append((e, no, col))
    for e, no, col in edges:
        for f, no2, _ in edges:
            if e < f:
                raise ParseError(f"edge on line {no} is contained in the edge on line {no2}", no, col)
    verts = tuple(range(1, s + 1))
    es = frozenset(e for e, _, _ in edges)
    if all(len(e) == 2 for e in es):
        return Graph(verts, es)
    return Clutter(verts, es)


def serialize_graph(C: Clutter) -> str:
    if C.vertices != tuple(range(1, C.num_vertices + 1)):
        raise ValueError("only clutters on vertices 1..n can be written")
    lines = [f"vertices {C.num_vertices}"]
    lines += [" ".join(str(v) for v in e) for e in C.sorted_edges()]
    return "\n".join(lines) + "\n"


# -- matrix blocks --------------------------------------------------------------------------

MODES = ("normalization", "rees_algebra")


@dataclass(frozen=True)
class MatrixBlock:
    mode: str
    rows: Tuple[Tuple[int, ...], ...]
    amb_space: Optional[int] = None

    @property
    def row_length(self) -> int:
        if self.rows:
            return len(self.rows[0])
        if self.amb_space is None:
            return 0
        return self.amb_space - (1 if self.mode == "rees_algebra" else 0)


def parse_matrix_block(text: str) -> MatrixBlock:
    amb = None
    mode = None
    count = None
    rows = []
    for no, col, toks, body in _lines(text):
        if not _INT.match(toks[0]):
            word = toks[0]
            if word == "amb_space" and mode is None and amb is None:
                if len(toks) != 2 or not toks[1].isdigit():
                    raise ParseError("expected 'amb_space <d>'", no, col)
                amb = int(toks[1])
                continue
            if word in MODES and mode is None:
                if len(toks) != 2 or not toks[1].isdigit():
                    raise ParseError(f"expected '{word} <n>'", no, col)
                mode, count = word, int(toks[1])
                continue
            if word in ("amb_space",) + MODES:
                raise ParseError(f"unexpected '{word}' directive", no, col)
            raise UnsupportedInput(
                f"line {no}: directive '{word}' is not supported; only 'amb_space', "
                "'normalization' and 'rees_algebra' blocks are understood"
            )
        if mode is None:
            raise ParseError("matrix row before a 'normalization' or 'rees_algebra' line", no, col)
        for k, t in enumerate(toks):
            if not _INT.match(t):
                raise ParseError(f"non-integer entry {t!r}", no, _column_of(body, k))
        row = tuple(int(t) for t in toks)
        expected = len(rows[0]) if rows else None
        if expected is None and amb is not None:
            expected = amb - (1 if mode == "rees_algebra" else 0)
        if expected is not None and len(row) != expected:
            raise ParseError(f"row has {len(row)} entries, expected {expected}", no, col)
        rows.append(row)
        if len(rows) > count:
            raise ParseError(f"more than the announced {count} rows", no, col)
    if mode is None:
        raise ParseError("missing 'normalization <n>' or 'rees_algebra <n>' line", 1, 1)
    if len(rows) != count:
        raise ParseError(f"announced {count} rows but found {len(rows)}", None, None)
    return MatrixBlock(mode, tuple(rows), amb)


def serialize_matrix_block(block: MatrixBlock) -> str:
    lines = []
    if block.amb_space is not None:
        lines.append(f"amb_space {block.amb_space}")
    lines.append(f"{block.mode} {len(block.rows)}")
    lines += [" ".join(str(x) for x in r) for r in block.rows]
    return "\n".join(lines) + "\n"


def rees_block(I: MonomialIdeal) -> MatrixBlock:
    return MatrixBlock("rees_algebra", tuple(I.gens), I.num_vars + 1)


def normalization_block(generators) -> MatrixBlock:
    gens = tuple(tuple(g) for g in generators)
    return MatrixBlock("normalization", gens, len(gens[0]))
