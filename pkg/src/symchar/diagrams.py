"""Young diagrams, multirectangular diagrams, dilation, and Frobenius
coordinates.

A partition is a weakly decreasing tuple of positive integers; () is the
empty diagram.  French convention throughout: row i (1-based) occupies
y in [i-1, i], its j-th box occupies x in [j-1, j], and the contents of a
point (x, y) is x - y.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def check_partition(rows: Sequence[int]) -> Partition:
    rows = tuple(int(r) for r in rows)
    for i, r in enumerate(rows):
        if r < 1:
            raise ValueError(f"row lengths must be positive, got {r}")
        if i > 0 and rows[i - 1] < r:
            raise ValueError(f"rows must be weakly decreasing, got {rows}")
    return rows


def parse_partition(text: str) -> Partition:
    """Parse "4,3,1" into (4, 3, 1); the empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return ()
    try:
        rows = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"malformed partition {text!r}") from None
    return check_partition(rows)


def format_partition(rows: Partition) -> str:
    return ",".join(str(r) for r in rows)


def conjugate(rows: Partition) -> Partition:
    if not rows:
        return ()
    return tuple(sum(1 for r in rows if r >= j) for j in range(1, rows[0] + 1))


def dilate(rows: Partition, s: int) -> Partition:
    """Replace every box by an s x s grid: each row r becomes s rows of s*r."""
    if s < 1:
        raise ValueError("dilation factor must be >= 1")
    out = []
    for r in rows:
        out.extend([s * r] * s)
    return tuple(out)


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n, parts bounded by max_part, largest-first order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int) -> Iterator[Partition]:
    """All nonempty partitions with 1 <= |lam| <= n."""
    for m in range(1, n + 1):
        yield from partitions(m)


def box_regions(rows: Partition) -> list[tuple[int, int]]:
    """Lower-left corners (x, y) of the unit boxes [x,x+1] x [y,y+1]."""
    return [(j - 1, i - 1) for i, r in enumerate(rows, 1) for j in range(1, r + 1)]


@dataclass(frozen=True)
class FrobeniusCoords:
    """Shifted Frobenius coordinates: A_i = a_i + 1/2, B_i = b_i + 1/2 where
    a_i, b_i are the arm and leg lengths of the i-th diagonal box."""

    A: tuple[Fraction, ...]
    B: tuple[Fraction, ...]

    def box_count(self) -> Fraction:
        return sum(self.A, Fraction(0)) + sum(self.B, Fraction(0))


def frobenius(rows: Partition) -> FrobeniusCoords:
    rows = check_partition(rows)
    conj = conjugate(rows)
    d = sum(1 for i in range(len(rows)) if rows[i] >= i + 1)
    half = Fraction(1, 2)
    A = tuple(Fraction(rows[i] - (i + 1)) + half for i in range(d))
    B = tuple(Fraction(conj[i] - (i + 1)) + half for i in range(d))
    return FrobeniusCoords(A, B)


def _parse_rationals(text: str) -> tuple[Fraction, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(Fraction(tok) for tok in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"malformed rational list {text!r}") from None


@dataclass(frozen=True)
class MultiRect:
    """Multirectangular diagram p x q: stacked rectangles, block i of height
    p_i and width q_i, widths weakly decreasing bottom-up."""

    p: tuple[Fraction, ...]
    q: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "p", tuple(Fraction(x) for x in self.p))
        object.__setattr__(self, "q", tuple(Fraction(x) for x in self.q))
        if len(self.p) != len(self.q):
            raise ValueError("p and q must have equal lengths")
        if any(x < 0 for x in self.p) or any(x < 0 for x in self.q):
            raise ValueError("p and q entries must be nonnegative")
        for a, b in zip(self.q, self.q[1:]):
            if a < b:
                raise ValueError("q must be weakly decreasing")

    @classmethod
    def from_strings(cls, p_text: str, q_text: str) -> "MultiRect":
        return cls(_parse_rationals(p_text), _parse_rationals(q_text))

    def box_count(self) -> Fraction:
        return sum((a * b for a, b in zip(self.p, self.q)), Fraction(0))

    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self.p + self.q)

    def to_partition(self) -> Partition:
        """(q_1 repeated p_1 times, q_2 repeated p_2 times, ...), zero rows
        dropped; integer entries required."""
        if not self.is_integral():
            raise ValueError("not a concrete partition: entries are not integers")
        rows = []
        for mult, width in zip(self.p, self.q):
            if width > 0:
                rows.extend([int(width)] * int(mult))
        return check_partition(rows)
