"""Convex sequences sharing a minimal middle value, embedded as weights on a spider.

A class of ``n`` convex sequences of length ``2l + 1`` whose middle entries all
equal the class minimum ``u`` fits onto a regular spider with ``2n`` legs of
length ``l``: sequence ``j`` runs leaf-to-leaf through the hub along legs
``2j - 1`` and ``2j``.  Each such sequence falls to ``u`` and then rises, so every
hub-to-leaf path is monotone and the hub is in the core.

Sequence positions are 1-based throughout, matching ``u_1 .. u_{2l+1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, NamedTuple, Sequence

from .core import CoreReport, core
from .errors import GraphFormatError, StarConvexError
from .graph import WeightedGraph, WeightLike, format_weight, graph_to_dict, parse_weight


class Convexity(NamedTuple):
    ok: bool
    index: int | None  # 1-based position of the first failing second difference


def _check_shape(values: Sequence[object]) -> None:
    if len(values) < 3:
        raise ValueError(f"sequence needs at least 3 terms, got {len(values)}")
    if len(values) % 2 == 0:
        raise ValueError(f"sequence length must be odd, got {len(values)}")


def is_convex_sequence(values: Sequence[Fraction]) -> Convexity:
    """``2 u_i <= u_{i-1} + u_{i+1}`` at every interior position."""
    _check_shape(values)
    for i in range(1, len(values) - 1):
        if 2 * values[i] > values[i - 1] + values[i + 1]:
            return Convexity(False, i + 1)
    return Convexity(True, None)


def differences(values: Sequence[Fraction]) -> list[Fraction]:
    return [b - a for a, b in zip(values, values[1:])]


def is_bimonotone(values: Sequence[Fraction]) -> bool:
    """Non-increasing up to the middle entry and non-decreasing after it."""
    mid = len(values) // 2
    diffs = differences(values)
    return all(d <= 0 for d in diffs[:mid]) and all(d >= 0 for d in diffs[mid:])


@dataclass(frozen=True)
class ConvexSequenceClass:
    sequences: tuple[tuple[Fraction, ...], ...]
    hub_value: Fraction

    @classmethod
    def of(cls, sequences: Sequence[Sequence[WeightLike]], hub_value: WeightLike) -> ConvexSequenceClass:
        """Build a class from ints, fractions or decimal strings.

        Unlike weights, sequence entries may be negative here so that
        :func:`validate_class` can report them instead of failing on input.
        """
        return cls(
            tuple(tuple(_rational(x) for x in seq) for seq in sequences),
            _rational(hub_value),
        )

    @property
    def n(self) -> int:
        return len(self.sequences)

    @property
    def half_length(self) -> int:
        return len(self.sequences[0]) // 2 if self.sequences else 0

    def to_dict(self) -> dict[str, Any]:
        return {
            "hub_value": _format(self.hub_value),
            "sequences": [[_format(x) for x in seq] for seq in self.sequences],
        }

    @classmethod
    def from_dict(cls, doc: Any) -> ConvexSequenceClass:
        if not isinstance(doc, dict) or "hub_value" not in doc or "sequences" not in doc:
            raise GraphFormatError("class document needs 'hub_value' and 'sequences'")
        seqs = doc["sequences"]
        if not isinstance(seqs, list) or not all(isinstance(s, list) for s in seqs):
            raise GraphFormatError("'sequences' must be a list of lists", seqs)
        return cls.of(seqs, doc["hub_value"])


def _rational(token: object) -> Fraction:
    if isinstance(token, str) and token.strip().startswith("-"):
        return -parse_weight(token.strip()[1:])
    if isinstance(token, int) and not isinstance(token, bool) and token < 0:
        return Fraction(token)
    if isinstance(token, Fraction) and token < 0:
        return token
    return parse_weight(token)


def _format(x: Fraction) -> str:
    return "-" + format_weight(-x) if x < 0 else format_weight(x)


@dataclass(frozen=True)
class Violation:
    kind: str
    sequence: int | None = None  # 1-based
    index: int | None = None  # 1-based
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        return {"kind": self.kind, "sequence": self.sequence, "index": self.index, "detail": self.detail}


@dataclass(frozen=True)
class ClassReport:
    violations: tuple[Violation, ...]
    bimonotone: tuple[bool, ...] = field(default=())

    @property
    def valid(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {
            "valid": self.valid,
            "violations": [v.to_dict() for v in self.violations],
            "bimonotone": list(self.bimonotone),
        }


def validate_class(c: ConvexSequenceClass) -> ClassReport:
    """Every violation of shape, convexity, shared middle value and minimality.

    A valid class also has each sequence checked for bimonotonicity, which
    convexity plus the two middle-value conditions force.
    """
    found: list[Violation] = []
    if not c.sequences:
        return ClassReport((Violation("empty", detail="class has no sequences"),))
    if c.hub_value < 0:
        found.append(Violation("negative", detail=f"hub value {_format(c.hub_value)} is negative"))
    length = len(c.sequences[0])
    for j, seq in enumerate(c.sequences, 1):
        if len(seq) != length:
            found.append(Violation("length", j, detail=f"length {len(seq)} differs from {length}"))
            continue
        try:
            convex = is_convex_sequence(seq)
        except ValueError as exc:
            found.append(Violation("length", j, detail=str(exc)))
            continue
        if not convex.ok:
            found.append(Violation("convexity", j, convex.index, "second difference is negative"))
        mid = len(seq) // 2
        if seq[mid] != c.hub_value:
            found.append(
                Violation(
                    "middle",
                    j,
                    mid + 1,
                    f"middle entry {_format(seq[mid])} differs from hub value {_format(c.hub_value)}",
                )
            )
        for i, x in enumerate(seq, 1):
            if x < c.hub_value:
                found.append(
                    Violation(
                        "minimum",
                        j,
                        i,
                        f"entry {_format(x)} is below hub value {_format(c.hub_value)}",
                    )
                )
                break
    lowest = min((x for seq in c.sequences for x in seq), default=None)
    if lowest is not None and lowest > c.hub_value:
        found.append(
            Violation(
                "minimum",
                detail=f"class minimum {_format(lowest)} exceeds hub value {_format(c.hub_value)}",
            )
        )
    if found:
        return ClassReport(tuple(found))
    return ClassReport((), tuple(is_bimonotone(seq) for seq in c.sequences))


@dataclass(frozen=True)
class SpiderSpec:
    legs: int
    leg_length: int
    hub: str = "hub"

    @property
    def degenerate(self) -> bool:
        """Fewer than three legs: no vertex of degree above two, i.e. a path."""
        return self.legs < 3


def leg_vertex(leg: int, position: int) -> str:
    """Id of the vertex at ``position`` (1 = next to the hub) on ``leg`` (1-based)."""
    return f"L{leg}_{position}"


def build_spider(spec: SpiderSpec, weights: dict[str, WeightLike] | None = None) -> WeightedGraph:
    """Regular spider with every weight zero unless ``weights`` supplies it."""
    if spec.legs < 1 or spec.leg_length < 1:
        raise ValueError("spider needs at least one leg of positive length")
    weights = weights or {}
    ids = [spec.hub] + [
        leg_vertex(j, k) for j in range(1, spec.legs + 1) for k in range(1, spec.leg_length + 1)
    ]
    edges = []
    for j in range(1, spec.legs + 1):
        prev = spec.hub
        for k in range(1, spec.leg_length + 1):
            edges.append((prev, leg_vertex(j, k)))
            prev = leg_vertex(j, k)
    return WeightedGraph({v: weights.get(v, 0) for v in ids}, edges)


class InvalidClassError(StarConvexError):
    def __init__(self, report: ClassReport) -> None:
        first = report.violations[0]
        super().__init__(f"invalid sequence class: {first.kind} {first.detail}".rstrip())
        self.report = report


@dataclass(frozen=True)
class Embedding:
    graph: WeightedGraph
    spec: SpiderSpec
    report: CoreReport

    def to_dict(self) -> dict[str, Any]:
        return {
            "graph": graph_to_dict(self.graph),
            "core_report": self.report.to_dict(),
            "hub": self.spec.hub,
            "legs": self.spec.legs,
            "leg_length": self.spec.leg_length,
            "degenerate": self.spec.degenerate,
        }


def spider_weights(c: ConvexSequenceClass, hub: str = "hub") -> dict[str, Fraction]:
    """Weight map placing sequence ``j`` on legs ``2j - 1`` (entry 1 at its leaf) and ``2j``."""
    half = c.half_length
    out: dict[str, Fraction] = {hub: c.hub_value}
    for j, seq in enumerate(c.sequences, 1):
        for i, x in enumerate(seq, 1):
            if i <= half:
                out[leg_vertex(2 * j - 1, half + 1 - i)] = x
            elif i >= half + 2:
                out[leg_vertex(2 * j, i - (half + 1))] = x
    return out


def embed(c: ConvexSequenceClass) -> Embedding:
    """Place a valid class onto a regular spider with ``2n`` legs and certify it."""
    report = validate_class(c)
    if not report.valid:
        raise InvalidClassError(report)
    spec = SpiderSpec(legs=2 * c.n, leg_length=c.half_length)
    g = build_spider(spec, spider_weights(c, spec.hub))
    return Embedding(g, spec, core(g))
