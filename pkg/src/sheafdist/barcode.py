"""Graded barcodes: finite multisets of graded intervals.

A barcode is the complete isomorphism invariant this library computes
with.  Beyond the container itself this module provides the text format
(``.gbc`` files), the central/right/left split that dictates how bars
may be matched, and the graded dimensions of global sections (ordinary
and compactly supported), which are invariants of finite distance.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .intervals import (
    DEFAULT_TOL,
    INF,
    GradedInterval,
    Interval,
    Kind,
    ParseError,
    classify,
    interval_parts,
)


@dataclass(frozen=True)
class Barcode:
    """Finite multiset of graded intervals, stored canonically sorted.

    Multiplicity is preserved (the same bar may occur several times);
    equality and hashing are multiset equality.
    """

    bars: tuple[GradedInterval, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "bars", tuple(sorted(self.bars, key=lambda g: g.key)))

    def __len__(self) -> int:
        return len(self.bars)

    def __iter__(self):
        return iter(self.bars)

    def approx_eq(self, other: "Barcode", tol: float = DEFAULT_TOL) -> bool:
        """Multiset equality with endpoint tolerance (degrees and flags exact)."""
        if len(self) != len(other):
            return False
        return all(
            a.degree == b.degree and a.interval.approx_eq(b.interval, tol)
            for a, b in zip(self.bars, other.bars)
        )


# ---------------------------------------------------------------------
# .gbc file format: one "<degree> <interval>" entry per line
# ---------------------------------------------------------------------


def parse_barcode(text: str, tol: float = DEFAULT_TOL) -> Barcode:
    """Parse the ``.gbc`` format.

    Each non-blank line is ``<degree> <interval>`` with no interior
    spaces inside the interval, e.g. ``0 [-1,1]`` or ``1 (0,inf)``.
    ``#`` starts a comment.  Multiplicity is encoded by repeating lines.
    Raises ParseError (with line number) for malformed lines, empty
    intervals (up to ``tol``) and closed flags on infinite endpoints.
    """
    bars: list[GradedInterval] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 2:
            raise ParseError(f"line {ln}: expected '<degree> <interval>', got {line!r}")
        deg_tok, iv_tok = fields
        try:
            degree = int(deg_tok)
        except ValueError:
            raise ParseError(f"line {ln}: bad degree {deg_tok!r}") from None
        try:
            lo, hi, lc, hc = interval_parts(iv_tok)
            if hi - lo <= tol and not (lc and hc and hi >= lo):
                raise ParseError(f"empty interval {iv_tok!r}")
            iv = Interval(lo, hi, lc, hc)
        except ValueError as exc:
            raise ParseError(f"line {ln}: {exc}") from None
        bars.append(GradedInterval(iv, degree))
    return Barcode(tuple(bars))


def format_barcode(b: Barcode) -> str:
    """Canonical ``.gbc`` text; ``parse_barcode`` round-trips it exactly."""
    return "".join(f"{g.degree} {g.interval}\n" for g in b.bars)


# ---------------------------------------------------------------------
# CLR split
# ---------------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class CLRSplit:
    """Barcode regrouped for matching.

    ``central[m]`` holds the bounded open bars of degree m together with
    the bounded closed bars of degree m+1 (they are the ones a matching
    may pair across the degree step).  ``right[j]`` / ``left[j]`` hold
    the R- / L-type bars of degree j.
    """

    central: dict[int, tuple[GradedInterval, ...]] = field(default_factory=dict)
    right: dict[int, tuple[GradedInterval, ...]] = field(default_factory=dict)
    left: dict[int, tuple[GradedInterval, ...]] = field(default_factory=dict)


def split_clr(b: Barcode) -> CLRSplit:
    central: dict[int, list[GradedInterval]] = {}
    right: dict[int, list[GradedInterval]] = {}
    left: dict[int, list[GradedInterval]] = {}
    for g in b:
        kind = classify(g.interval)
        if kind is Kind.C_OPEN:
            central.setdefault(g.degree, []).append(g)
        elif kind is Kind.C_CLOSED:
            central.setdefault(g.degree - 1, []).append(g)
        elif kind is Kind.R:
            right.setdefault(g.degree, []).append(g)
        else:
            left.setdefault(g.degree, []).append(g)
    freeze = lambda d: {k: tuple(v) for k, v in sorted(d.items())}
    return CLRSplit(freeze(central), freeze(right), freeze(left))


# ---------------------------------------------------------------------
# global sections
# ---------------------------------------------------------------------

def _shape(iv: Interval) -> str:
    lo_inf, hi_inf = iv.lo == -INF, iv.hi == INF
    if lo_inf and hi_inf:
        return "line"
    if lo_inf:
        return "closed_ray" if iv.hi_closed else "open_ray"
    if hi_inf:
        return "closed_ray" if iv.lo_closed else "open_ray"
    if iv.lo_closed and iv.hi_closed:
        return "closed"
    if not iv.lo_closed and not iv.hi_closed:
        return "open"
    return "half_open"


# per-shape contribution: relative degree of the 1-dimensional piece, or None
_ORDINARY = {"closed": 0, "closed_ray": 0, "line": 0, "open": 1,
             "open_ray": None, "half_open": None}
_COMPACT = {"closed": 0, "open": 1, "open_ray": 1, "line": 1,
            "half_open": None, "closed_ray": None}


def global_sections(b: Barcode, compact_support: bool = False) -> dict[int, int]:
    """Graded dimensions of (compactly supported) global sections.

    Each bar contributes one dimension in a single degree, shifted by
    the bar's own degree; half-open bars (and closed rays, for the
    compactly supported flavour) contribute nothing.  Two barcodes at
    finite distance always agree on both flavours.
    """
    table = _COMPACT if compact_support else _ORDINARY
    dims: dict[int, int] = {}
    for g in b:
        rel = table[_shape(g.interval)]
        if rel is None:
            continue
        d = g.degree + rel
        dims[d] = dims.get(d, 0) + 1
    return dict(sorted(dims.items()))
