"""Bridge between half-open barcode parts and persistence diagrams.

An R-part bar ``[a,b)@j`` is exactly the interval module with birth a
and death b; an L-part bar ``(a,b]@j`` becomes ``(-b,-a)`` after
reflecting the line, so one diagram convention serves both sides.  The
translation is lossless in both directions and turns the half-open slot
bottleneck into the classical persistence bottleneck (same sup cost,
same half-length deletion cost).

Diagrams identify barcodes, not finer module structure: two modules at
distance zero translate to the same diagram.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .barcode import CLRSplit
from .intervals import GradedInterval, Interval, ParseError, fmt_number, parse_number


@dataclass(frozen=True)
class PersistenceDiagram:
    """Multiset of (birth, death) pairs in one homological degree."""

    degree: int
    pairs: tuple[tuple[float, float], ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple(sorted(self.pairs)))
        for birth, death in self.pairs:
            if math.isnan(birth) or math.isnan(death) or not birth < death:
                raise ValueError(f"bad diagram pair ({birth}, {death})")


def to_persistence(split: CLRSplit, side: str, degree: int) -> PersistenceDiagram:
    """Diagram of one half-open slot.  ``side`` is "R" or "L"."""
    if side == "R":
        part = split.right.get(degree, ())
        pairs = tuple((g.interval.lo, g.interval.hi) for g in part)
    elif side == "L":
        part = split.left.get(degree, ())
        pairs = tuple((-g.interval.hi, -g.interval.lo) for g in part)
    else:
        raise ValueError(f"side must be 'R' or 'L', got {side!r}")
    return PersistenceDiagram(degree, pairs)


def from_persistence(diagram: PersistenceDiagram, side: str) -> tuple[GradedInterval, ...]:
    """Inverse of ``to_persistence``; returns the slot's bars."""
    bars = []
    for birth, death in diagram.pairs:
        if side == "R":
            iv = Interval(birth, death, birth != -math.inf, False)
        elif side == "L":
            iv = Interval(-death, -birth, False, birth != -math.inf)
        else:
            raise ValueError(f"side must be 'R' or 'L', got {side!r}")
        bars.append(GradedInterval(iv, diagram.degree))
    return tuple(sorted(bars, key=lambda g: g.key))


# ---------------------------------------------------------------------
# .pdg file format: "<degree> <birth> <death>" per line
# ---------------------------------------------------------------------


def parse_diagrams(text: str) -> tuple[PersistenceDiagram, ...]:
    """Parse a ``.pdg`` file into one diagram per degree."""
    by_degree: dict[int, list[tuple[float, float]]] = {}
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(f"line {ln}: expected '<degree> <birth> <death>'")
        try:
            degree = int(fields[0])
            birth = parse_number(fields[1])
            death = parse_number(fields[2])
        except ValueError as exc:
            raise ParseError(f"line {ln}: {exc}") from None
        if not birth < death:
            raise ParseError(f"line {ln}: birth must be below death")
        by_degree.setdefault(degree, []).append((birth, death))
    return tuple(
        PersistenceDiagram(deg, tuple(pairs)) for deg, pairs in sorted(by_degree.items())
    )


def format_diagrams(diagrams: tuple[PersistenceDiagram, ...] | list[PersistenceDiagram]) -> str:
    lines = []
    for d in sorted(diagrams, key=lambda d: d.degree):
        for birth, death in d.pairs:
            lines.append(f"{d.degree} {fmt_number(birth)} {fmt_number(death)}\n")
    return "".join(lines)
