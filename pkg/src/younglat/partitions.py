"""Exact arithmetic on integer partitions and weak compositions.

A partition is stored as a tuple of positive parts in non-increasing order
with no trailing zeros; the empty tuple stands for the partition of 0.  A
partition belongs to the bounded lattice of shape ``(m, n)`` when it has at
most ``m`` parts, each of size at most ``n``; shape-dependent operations
zero-pad internally, so ``(3, 2, 1)`` and the four-part ``(3, 2, 1, 0)`` are
one element.

The same element can be written as a weak composition: a tuple of ``n + 1``
nonnegative entries summing to ``m`` whose entry ``j`` (1-based, left to
right) counts the parts of size ``n + 1 - j``.  The first entry counts parts
of size ``n`` and the last counts padding zeros.  ``to_multiplicity`` and
``from_multiplicity`` convert between the two coordinate systems and carry
cover edges to cover edges in both directions.

Everything here is a pure function over immutable tuples; concurrent callers
need no coordination.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Sequence

Partition = tuple[int, ...]
WeakComposition = tuple[int, ...]


class Shape(NamedTuple):
    """Lattice bounds: at most ``m`` parts, each of size at most ``n``."""

    m: int
    n: int


class InvalidElementError(ValueError):
    """Raised when a partition does not fit the shape it is used with."""


class InvalidCompositionError(ValueError):
    """Raised when a weak composition has the wrong length, sum, or sign."""


def as_partition(parts: Iterable[int]) -> Partition:
    """Canonicalize ``parts``: drop trailing zeros, reject bad sequences."""
    out = tuple(int(v) for v in parts)
    while out and out[-1] == 0:
        out = out[:-1]
    for i, v in enumerate(out):
        if v < 1:
            raise ValueError(f"parts must be positive, got {v} in {out}")
        if i and out[i - 1] < v:
            raise ValueError(f"parts must be non-increasing, got {out}")
    return out


def fits(a: Partition, shape: Shape) -> bool:
    """True when ``a`` has at most ``shape.m`` parts, each at most ``shape.n``."""
    return len(a) <= shape.m and (not a or a[0] <= shape.n)


def _require_fits(a: Partition, shape: Shape) -> None:
    if not fits(a, shape):
        raise InvalidElementError(
            f"partition {a} does not fit in a {shape.m} x {shape.n} box"
        )


def require_composition(c: WeakComposition, shape: Shape) -> None:
    """Validate that ``c`` is a weak composition of ``shape.m`` with ``shape.n + 1`` entries."""
    if len(c) != shape.n + 1:
        raise InvalidCompositionError(
            f"expected {shape.n + 1} entries, got {len(c)} in {c}"
        )
    if any(v < 0 for v in c):
        raise InvalidCompositionError(f"negative entry in {c}")
    if sum(c) != shape.m:
        raise InvalidCompositionError(
            f"entries of {c} sum to {sum(c)}, expected {shape.m}"
        )


def padded(a: Partition, m: int) -> tuple[int, ...]:
    """``a`` extended with zeros to exactly ``m`` entries."""
    return a + (0,) * (m - len(a))


def rank(a: Partition) -> int:
    """Sum of parts: the number of boxes in the Young diagram."""
    return sum(a)


def leq(a: Partition, b: Partition, shape: Shape) -> bool:
    """Entry-wise comparison after zero-padding both sides to ``m`` parts.

    Equivalently, the Young diagram of ``a`` fits inside the diagram of
    ``b``.
    """
    _require_fits(a, shape)
    _require_fits(b, shape)
    return all(x <= y for x, y in zip(padded(a, shape.m), padded(b, shape.m)))


def covers(b: Partition, a: Partition, shape: Shape) -> bool:
    """True when ``b`` covers ``a``: exactly one part grows by one box."""
    _require_fits(a, shape)
    _require_fits(b, shape)
    pa, pb = padded(a, shape.m), padded(b, shape.m)
    bumped = [i for i in range(shape.m) if pa[i] != pb[i]]
    return len(bumped) == 1 and pb[bumped[0]] == pa[bumped[0]] + 1


def lower_covers(b: Partition, shape: Shape) -> list[tuple[Partition, int]]:
    """Partitions covered by ``b``, each with the root color of its edge.

    Shrinking a part of size ``x`` to ``x - 1`` moves one unit of
    multiplicity between adjacent sizes, the simple-root step with index
    ``n + 1 - x``.  Only the last part of a run of equal values may shrink,
    which keeps the results distinct.
    """
    _require_fits(b, shape)
    p = padded(b, shape.m)
    out = []
    for i in range(shape.m):
        if p[i] >= 1 and (i + 1 == shape.m or p[i + 1] < p[i]):
            smaller = p[:i] + (p[i] - 1,) + p[i + 1 :]
            out.append((as_partition(smaller), shape.n + 1 - p[i]))
    return out


def conjugate(a: Partition) -> Partition:
    """Transpose the Young diagram: column lengths become the parts."""
    if not a:
        return ()
    return tuple(sum(1 for v in a if v > j) for j in range(a[0]))


def complement(a: Partition, shape: Shape) -> Partition:
    """Complement inside the ``m x n`` rectangle: parts ``n - a_i``, reversed.

    An order-reversing involution; ranks satisfy ``|a| + |a*| = m * n``.
    """
    _require_fits(a, shape)
    return as_partition(sorted((shape.n - v for v in padded(a, shape.m)), reverse=True))


def to_multiplicity(a: Partition, shape: Shape) -> WeakComposition:
    """Multiplicity coordinates of ``a``: entry ``j`` counts parts of size ``n + 1 - j``."""
    _require_fits(a, shape)
    counts = [0] * (shape.n + 1)
    for v in padded(a, shape.m):
        counts[shape.n - v] += 1
    return tuple(counts)


def from_multiplicity(c: WeakComposition, shape: Shape) -> Partition:
    """Inverse of :func:`to_multiplicity`."""
    require_composition(c, shape)
    parts: list[int] = []
    for j, count in enumerate(c):
        parts.extend([shape.n - j] * count)
    return as_partition(parts)


def weighted_sum(c: Sequence[int]) -> int:
    """Entries weighted by the part size their slot stands for (no validation)."""
    top = len(c) - 1
    return sum((top - i) * v for i, v in enumerate(c))


def composition_rank(c: WeakComposition, shape: Shape) -> int:
    """Rank in multiplicity coordinates: part size times multiplicity, summed.

    Always equals ``rank(from_multiplicity(c, shape))``.
    """
    require_composition(c, shape)
    return weighted_sum(c)


def composition_lower_covers(
    c: WeakComposition, shape: Shape
) -> list[tuple[WeakComposition, int]]:
    """Compositions covered by ``c``: move one unit right by one slot.

    Moving from slot ``j`` to ``j + 1`` (1-based) is the simple-root step
    ``j``, which is also the edge color.
    """
    require_composition(c, shape)
    out = []
    for j in range(shape.n):
        if c[j] >= 1:
            out.append((c[:j] + (c[j] - 1, c[j + 1] + 1) + c[j + 2 :], j + 1))
    return out


def enumerate_compositions(k: int, p: int) -> list[WeakComposition]:
    """All weak compositions of ``k`` with ``p`` parts, in lexicographic order.

    The count is C(k + p - 1, p - 1).
    """
    if k < 0:
        raise ValueError(f"total must be nonnegative, got {k}")
    if p < 1:
        raise ValueError(f"need at least one part, got {p}")
    out: list[WeakComposition] = []

    def fill(prefix: list[int], remaining: int, slots: int) -> None:
        if slots == 1:
            out.append(tuple(prefix) + (remaining,))
            return
        for v in range(remaining + 1):
            prefix.append(v)
            fill(prefix, remaining - v, slots - 1)
            prefix.pop()

    fill([], k, p)
    return out


def partitions_in_box(m: int, n: int) -> Iterator[Partition]:
    """Every partition with at most ``m`` parts, each at most ``n``.

    The empty partition is always included, so a degenerate box still yields
    one element.
    """
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be nonnegative")

    def grow(prefix: list[int], bound: int, slots: int) -> Iterator[Partition]:
        yield tuple(prefix)
        if slots == 0:
            return
        for v in range(min(bound, n), 0, -1):
            prefix.append(v)
            yield from grow(prefix, v, slots - 1)
            prefix.pop()

    yield from grow([], n, m)


def format_partition(a: Partition) -> str:
    """Digit-string display ("3211", "∅"), bracketed when a part exceeds 9."""
    if not a:
        return "∅"
    if a[0] <= 9:
        return "".join(str(v) for v in a)
    return "[" + ",".join(str(v) for v in a) + "]"


def parse_partition(text: str) -> Partition:
    """Accept digit strings ("3211"), bracketed lists ("[12,3]"), "∅", or "0"."""
    s = text.strip()
    if s in ("∅", "0", ""):
        return ()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated bracketed partition: {text!r}")
        return as_partition(int(v) for v in s[1:-1].split(","))
    if not s.isdigit():
        raise ValueError(f"not a partition string: {text!r}")
    return as_partition(int(ch) for ch in s)


def format_composition(c: WeakComposition) -> str:
    """Digit-string key ("1120"), bracketed ("[10,0,2,0]") when an entry exceeds 9."""
    if all(v <= 9 for v in c):
        return "".join(str(v) for v in c)
    return "[" + ",".join(str(v) for v in c) + "]"


def parse_composition(text: str) -> WeakComposition:
    """Inverse of :func:`format_composition`; syntax check only."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise ValueError(f"unterminated bracketed composition: {text!r}")
        body = s[1:-1]
        try:
            entries = tuple(int(v) for v in body.split(","))
        except ValueError:
            raise ValueError(f"not a composition key: {text!r}") from None
        if any(v < 0 for v in entries):
            raise ValueError(f"negative entry in composition key: {text!r}")
        return entries
    if not s.isdigit():
        raise ValueError(f"not a composition key: {text!r}")
    return tuple(int(ch) for ch in s)
