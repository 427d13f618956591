"""Line-oriented text formats for oriented hypergraphs (``ohg 1``) and designs (``bibd``).

ohg::

    ohg 1
    vertex v1
    edge e1 = v1:+ v2:-

bibd::

    bibd
    point 0
    block b0 = 0 1 3
    params 7 7 3 3 1        (optional; cross-checked against counted values)

``#`` starts a comment; blank lines are ignored.
"""

from __future__ import annotations

from .designs import BlockDesign, DesignError, Params, validate_design
from .hypercore import (
    Edge,
    HypergraphError,
    OrientedHypergraph,
    UnknownLabelError,
    check_label,
)

OHG_HEADER = "ohg 1"
BIBD_HEADER = "bibd"
_SIGN_TOKENS = {"+": 1, "-": -1}


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def _lines(text: str):
    for lineno, raw in enumerate(text.split("\n"), start=1):
        tokens = raw.split("#", 1)[0].split()
        if tokens:
            yield lineno, tokens


def parse_ohg(text: str) -> OrientedHypergraph:
    lines = _lines(text)
    first = next(lines, None)
    if first is None:
        raise ParseError(1, "empty document, expected 'ohg 1'")
    lineno, tokens = first
    if tokens[0] != "ohg":
        raise ParseError(lineno, f"expected header 'ohg 1', got {' '.join(tokens)!r}")
    if tokens[1:] != ["1"]:
        raise ParseError(lineno, f"unsupported ohg version {' '.join(tokens[1:])!r}")

    vertices: list[str] = []
    seen_vertices: set[str] = set()
    edges: list[Edge] = []
    seen_edges: set[str] = set()
    for lineno, tokens in lines:
        kind = tokens[0]
        try:
            if kind == "vertex":
                if len(tokens) != 2:
                    raise ParseError(lineno, "expected 'vertex <label>'")
                v = check_label(tokens[1], "vertex label")
                if v in seen_vertices:
                    raise ParseError(lineno, f"duplicate vertex {v!r}")
                seen_vertices.add(v)
                vertices.append(v)
            elif kind == "edge":
                if len(tokens) < 3 or tokens[2] != "=":
                    raise ParseError(lineno, "expected 'edge <label> = <v>:<s> ...'")
                label = check_label(tokens[1], "edge label")
                if label in seen_edges:
                    raise ParseError(lineno, f"duplicate edge {label!r}")
                seen_edges.add(label)
                members = []
                used = set()
                for item in tokens[3:]:
                    v, colon, s = item.rpartition(":")
                    if not colon or s not in _SIGN_TOKENS:
                        raise ParseError(lineno, f"bad membership {item!r} (expected <v>:+ or <v>:-)")
                    if v not in seen_vertices:
                        raise ParseError(lineno, f"unknown vertex {v!r} in edge {label!r}")
                    if v in used:
                        raise ParseError(
                            lineno, f"duplicate membership of {v!r} in edge {label!r}"
                        )
                    used.add(v)
                    members.append((v, _SIGN_TOKENS[s]))
                edges.append(Edge(label, tuple(members)))
            else:
                raise ParseError(lineno, f"unknown declaration {kind!r}")
        except (HypergraphError, UnknownLabelError) as exc:
            raise ParseError(lineno, str(exc)) from None
    return OrientedHypergraph(tuple(vertices), tuple(edges))


def serialize_ohg(G: OrientedHypergraph) -> str:
    out = [OHG_HEADER]
    out.extend(f"vertex {v}" for v in G.vertices)
    for e in G.edges:
        members = " ".join(f"{v}:{'+' if s > 0 else '-'}" for v, s in e.members)
        out.append(f"edge {e.label} =" + (f" {members}" if members else ""))
    return "\n".join(out) + "\n"


def parse_bibd(text: str) -> BlockDesign:
    """Parse and validate a design file; raises ``ParseError`` or ``DesignError``."""
    lines = _lines(text)
    first = next(lines, None)
    if first is None or first[1] != [BIBD_HEADER]:
        raise ParseError(first[0] if first else 1, "expected header 'bibd'")
    points: list[str] = []
    labels: list[str] = []
    blocks: list[list[str]] = []
    expected = None
    for lineno, tokens in lines:
        kind = tokens[0]
        if kind == "point":
            if len(tokens) != 2:
                raise ParseError(lineno, "expected 'point <label>'")
            try:
                points.append(check_label(tokens[1], "point label"))
            except HypergraphError as exc:
                raise ParseError(lineno, str(exc)) from None
        elif kind == "block":
            if len(tokens) < 3 or tokens[2] != "=":
                raise ParseError(lineno, "expected 'block <label> = p1 p2 ...'")
            labels.append(tokens[1])
            blocks.append(tokens[3:])
        elif kind == "params":
            if len(tokens) != 6 or not all(t.isdigit() for t in tokens[1:]):
                raise ParseError(lineno, "expected 'params v b r k lambda'")
            expected = Params(*(int(t) for t in tokens[1:]))
        else:
            raise ParseError(lineno, f"unknown declaration {kind!r}")
    try:
        return validate_design(points, blocks, labels, expected)
    except HypergraphError as exc:
        raise DesignError(str(exc)) from None


def serialize_bibd(D: BlockDesign, with_params: bool = True) -> str:
    out = [BIBD_HEADER]
    out.extend(f"point {p}" for p in D.points)
    for label, block in zip(D.block_labels, D.blocks):
        out.append(f"block {label} = {' '.join(block)}")
    if with_params:
        out.append("params " + " ".join(str(x) for x in D.params.as_tuple()))
    return "\n".join(out) + "\n"


def sniff(text: str) -> str:
    """``'ohg'`` or ``'bibd'`` depending on the first declaration line."""
    for _, tokens in _lines(text):
        return "bibd" if tokens == [BIBD_HEADER] else "ohg"
    return "ohg"
