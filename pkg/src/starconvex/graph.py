"""Vertex-weighted simple graphs with exact rational weights, plus JSON/DOT I/O."""

from __future__ import annotations

import json
import re
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import TYPE_CHECKING, Any, Iterable, Iterator, Mapping, Union

from .errors import GraphFormatError, UnknownVertexError

if TYPE_CHECKING:
    from .core import CoreReport

WeightLike = Union[Fraction, int, str]

_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)")
_RATIO = re.compile(r"[+-]?\d+/\d+")


def parse_weight(token: object) -> Fraction:
    """Parse a decimal string, a ``p/q`` string or an integer into an exact weight.

    Floats are refused: ``0.1`` as a binary float is not the decimal 0.1.
    """
    if isinstance(token, Fraction):
        value = token
    elif isinstance(token, bool) or isinstance(token, float):
        raise GraphFormatError("weight must be a decimal string or an integer", token)
    elif isinstance(token, int):
        value = Fraction(token)
    elif isinstance(token, str):
        text = token.strip()
        if _DECIMAL.fullmatch(text):
            value = Fraction(text)
        elif _RATIO.fullmatch(text):
            num, den = text.split("/")
            if int(den) == 0:
                raise GraphFormatError("malformed decimal", token)
            value = Fraction(int(num), int(den))
        else:
            raise GraphFormatError("malformed decimal", token)
    else:
        raise GraphFormatError("weight must be a decimal string or an integer", token)
    if value < 0:
        raise GraphFormatError("negative weight", token)
    return value


def format_weight(value: Fraction) -> str:
    """Shortest exact text for ``value``: a finite decimal when one exists, else ``p/q``."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{value.numerator}/{value.denominator}"
    places = max(twos, fives)
    scaled = value * 10**places
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled.numerator)).rjust(places + 1, "0")
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


class WeightedGraph:
    """Immutable simple undirected graph with a non-negative rational weight per vertex.

    Connectivity is deliberately not enforced here; see :func:`validate`.
    """

    __slots__ = ("_weights", "_adj", "_edges")

    def __init__(
        self,
        weights: Mapping[str, WeightLike],
        edges: Iterable[tuple[str, str]] = (),
    ) -> None:
        parsed: dict[str, Fraction] = {}
        for vid, w in weights.items():
            if not isinstance(vid, str) or not vid:
                raise GraphFormatError("vertex id must be a non-empty string", vid)
            parsed[vid] = parse_weight(w)
        adj: dict[str, set[str]] = {v: set() for v in parsed}
        seen: set[frozenset[str]] = set()
        for edge in edges:
            a, b = edge
            for end in (a, b):
                if end not in parsed:
                    raise GraphFormatError("edge references unknown vertex", end)
            if a == b:
                raise GraphFormatError("self-loop", [a, b])
            key = frozenset((a, b))
            if key in seen:
                raise GraphFormatError("duplicate edge", [a, b])
            seen.add(key)
            adj[a].add(b)
            adj[b].add(a)
        self._weights = MappingProxyType(dict(sorted(parsed.items())))
        self._adj = {v: frozenset(ns) for v, ns in sorted(adj.items())}
        self._edges = tuple(sorted(tuple(sorted(e)) for e in seen))

    @property
    def weights(self) -> Mapping[str, Fraction]:
        return self._weights

    @property
    def vertices(self) -> tuple[str, ...]:
        """Vertex ids in lexicographic order."""
        return tuple(self._weights)

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        """Edges as sorted ``(a, b)`` pairs with ``a < b``, in lexicographic order."""
        return self._edges

    def weight(self, v: str) -> Fraction:
        try:
            return self._weights[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def neighbors(self, v: str) -> frozenset[str]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertexError(v) from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def has_edge(self, a: str, b: str) -> bool:
        return b in self._adj.get(a, ())

    def require(self, *vs: str) -> None:
        for v in vs:
            if v not in self._weights:
                raise UnknownVertexError(v)

    def is_subgraph_of(self, other: WeightedGraph) -> bool:
        """Every vertex (with its weight) and every edge of ``self`` appears in ``other``."""
        return all(
            v in other._weights and other._weights[v] == w for v, w in self._weights.items()
        ) and all(other.has_edge(a, b) for a, b in self._edges)

    def __contains__(self, v: object) -> bool:
        return v in self._weights

    def __iter__(self) -> Iterator[str]:
        return iter(self._weights)

    def __len__(self) -> int:
        return len(self._weights)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return dict(self._weights) == dict(other._weights) and self._edges == other._edges

    def __hash__(self) -> int:
        return hash((tuple(self._weights.items()), self._edges))

    def __repr__(self) -> str:
        ws = ", ".join(f"{v}={format_weight(w)}" for v, w in self._weights.items())
        es = ", ".join(f"{a}-{b}" for a, b in self._edges)
        return f"WeightedGraph([{ws}], [{es}])"


# -- structure -----------------------------------------------------------------


def leaves(g: WeightedGraph) -> frozenset[str]:
    """Vertices of degree exactly one. A lone vertex (degree 0) is not a leaf."""
    return frozenset(v for v in g if g.degree(v) == 1)


def components(g: WeightedGraph) -> list[frozenset[str]]:
    """Connected components, ordered by their smallest vertex id."""
    seen: set[str] = set()
    out = []
    for start in g:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            for n in g.neighbors(queue.popleft()):
                if n not in comp:
                    comp.add(n)
                    queue.append(n)
        seen |= comp
        out.append(frozenset(comp))
    return out


def induced_subgraph(g: WeightedGraph, vertices: Iterable[str]) -> WeightedGraph:
    keep = set(vertices)
    g.require(*keep)
    return WeightedGraph(
        {v: g.weight(v) for v in keep},
        [(a, b) for a, b in g.edges if a in keep and b in keep],
    )


def is_connected(g: WeightedGraph) -> bool:
    # The empty graph is treated as disconnected: it has nothing to analyse.
    return len(components(g)) == 1


def is_tree(g: WeightedGraph) -> bool:
    return is_connected(g) and len(g.edges) == len(g) - 1


@dataclass(frozen=True)
class ValidationReport:
    connected: bool
    components: int
    leaves: frozenset[str]
    degrees: Mapping[str, int]
    is_tree: bool
    findings: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.findings

    def to_dict(self) -> dict[str, Any]:
        return {
            "connected": self.connected,
            "components": self.components,
            "leaves": sorted(self.leaves),
            "degrees": dict(self.degrees),
            "is_tree": self.is_tree,
            "findings": list(self.findings),
        }


def validate(g: WeightedGraph) -> ValidationReport:
    comps = components(g)
    findings = []
    if not comps:
        findings.append("graph has no vertices")
    elif len(comps) > 1:
        findings.append(f"graph is disconnected ({len(comps)} components)")
    lv = leaves(g)
    if comps and not lv:
        findings.append("graph has no leaf vertices")
    return ValidationReport(
        connected=len(comps) == 1,
        components=len(comps),
        leaves=lv,
        degrees=MappingProxyType({v: g.degree(v) for v in g}),
        is_tree=len(comps) == 1 and len(g.edges) == len(g) - 1,
        findings=tuple(findings),
    )


# -- JSON ------------------------------------------------------------------------


def dumps_canonical(doc: Any) -> str:
    """Deterministic JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def graph_to_dict(g: WeightedGraph) -> dict[str, Any]:
    return {
        "vertices": [{"id": v, "w": format_weight(w)} for v, w in g.weights.items()],
        "edges": [list(e) for e in g.edges],
    }


def graph_from_dict(doc: Any) -> WeightedGraph:
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    for key in ("vertices", "edges"):
        if not isinstance(doc.get(key), list):
            raise GraphFormatError(f"graph document needs a {key!r} list")
    weights: dict[str, Fraction] = {}
    for item in doc["vertices"]:
        if not isinstance(item, dict) or "id" not in item or "w" not in item:
            raise GraphFormatError("vertex entry must be an object with 'id' and 'w'", item)
        vid = item["id"]
        if not isinstance(vid, str) or not vid:
            raise GraphFormatError("vertex id must be a non-empty string", vid)
        if vid in weights:
            raise GraphFormatError("duplicate vertex id", vid)
        weights[vid] = parse_weight(item["w"])
    edges = []
    for item in doc["edges"]:
        if (
            not isinstance(item, list)
            or len(item) != 2
            or not all(isinstance(x, str) for x in item)
        ):
            raise GraphFormatError("edge must be a pair of vertex ids", item)
        edges.append((item[0], item[1]))
    return WeightedGraph(weights, edges)


def parse_graph(text: str) -> WeightedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON ({exc.msg} at line {exc.lineno})") from None
    return graph_from_dict(doc)


def serialize_graph(g: WeightedGraph) -> str:
    return dumps_canonical(graph_to_dict(g))


def load_graph(path: str) -> WeightedGraph:
    with open(path, encoding="utf-8") as f:
        return parse_graph(f.read())


# -- DOT ---------------------------------------------------------------------------


def _dot_id(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(g: WeightedGraph, annotations: CoreReport | None = None) -> str:
    """Render ``g`` as an undirected DOT graph; core vertices of ``annotations`` are filled."""
    core = annotations.core if annotations is not None else frozenset()
    lines = ["graph G {"]
    for v, w in g.weights.items():
        attrs = [f"label={_dot_id(f'{v}:{format_weight(w)}')}"]
        if v in core:
            attrs += ["style=filled", 'fillcolor="gold"', "penwidth=2"]
        lines.append(f"  {_dot_id(v)} [{', '.join(attrs)}];")
    for a, b in g.edges:
        lines.append(f"  {_dot_id(a)} -- {_dot_id(b)};")
    lines.append("}")
    return "\n".join(lines) + "\n"
