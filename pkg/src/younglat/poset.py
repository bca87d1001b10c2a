"""Bounded partition lattices as explicit graded posets.

Builds the lattice of shape ``(m, n)`` in either coordinate system, computes
Gaussian-binomial rank polynomials with exact big-integer arithmetic, checks
the two classical one-step splittings of that polynomial, and reads and
writes a line-oriented text format.  Posets are immutable after construction
and safe to share between threads.

The interchange format, one file per poset::

    poset L'(4,3) height=12 count=35
    <index> <rank> <key>          (one line per element)
    <lower> <upper> <color>       (one line per cover)

Element keys are always written in composition form so files from either
build mode share one key space.  Elements are ordered by rank and then
lexicographically; covers are sorted by index pair.  Output is byte-stable.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .partitions import (
    Shape,
    WeakComposition,
    composition_lower_covers,
    enumerate_compositions,
    format_composition,
    from_multiplicity,
    lower_covers,
    parse_composition,
    partitions_in_box,
    to_multiplicity,
    weighted_sum,
)


class ParseError(ValueError):
    """Malformed interchange file; carries the offending line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class RankPolynomial:
    """Nonnegative integer coefficients; index ``k`` counts rank-``k`` elements."""

    coefficients: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(self.coefficients))

    def __len__(self) -> int:
        return len(self.coefficients)

    def __getitem__(self, k: int) -> int:
        return self.coefficients[k]

    def __iter__(self):
        return iter(self.coefficients)

    @property
    def total(self) -> int:
        return sum(self.coefficients)

    @property
    def is_symmetric(self) -> bool:
        return self.coefficients == self.coefficients[::-1]

    @property
    def is_unimodal(self) -> bool:
        """Weakly increasing, then weakly decreasing."""
        c = self.coefficients
        falling = False
        for i in range(1, len(c)):
            if c[i] < c[i - 1]:
                falling = True
            elif c[i] > c[i - 1] and falling:
                return False
        return True


def _times_one_minus_power(poly: list[int], k: int) -> list[int]:
    # multiply by (1 - q^k)
    out = poly + [0] * k
    for j, v in enumerate(poly):
        out[j + k] -= v
    return out


def _exact_quotient_one_minus_power(poly: list[int], k: int) -> list[int]:
    # divide by (1 - q^k); the division must be exact
    deg = len(poly) - 1
    if deg < k:
        raise ArithmeticError("inexact polynomial division")
    quot = [0] * (deg - k + 1)
    for j in range(len(quot)):
        quot[j] = poly[j] + (quot[j - k] if j >= k else 0)
    for j in range(len(quot), deg + 1):
        expect = -(quot[j - k] if j - k >= 0 else 0)
        if poly[j] != expect:
            raise ArithmeticError("inexact polynomial division")
    return quot


def _poly_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def q_factorial(k: int) -> RankPolynomial:
    """Product of ``1 + q + ... + q^(i-1)`` over ``i = 1..k``, exactly."""
    if k < 0:
        raise ValueError("q-factorial needs a nonnegative argument")
    poly = [1]
    for i in range(2, k + 1):
        poly = _poly_mul(poly, [1] * i)
    return RankPolynomial(tuple(poly))


def gaussian_binomial(m: int, n: int) -> RankPolynomial:
    """Coefficients of the Gaussian binomial for an ``(m, n)`` box.

    Computed as ``prod(1 - q^(m+i)) / prod(1 - q^i)`` over ``i = 1..n`` with
    exact integer coefficients; every division is checked to leave no
    remainder.  The coefficient of ``q^k`` counts the partitions of ``k``
    with at most ``m`` parts, each at most ``n``.
    """
    if m < 0 or n < 0:
        raise ValueError("box dimensions must be nonnegative")
    poly = [1]
    for i in range(1, n + 1):
        poly = _times_one_minus_power(poly, m + i)
    for i in range(1, n + 1):
        poly = _exact_quotient_one_minus_power(poly, i)
    return RankPolynomial(tuple(poly))


class GradedPoset:
    """A finite leveled poset with colored cover edges.

    ``elements`` holds canonical keys (partition tuples or full composition
    tuples, depending on ``coords``) sorted by rank and then
    lexicographically; ``covers`` holds ``(lower_index, upper_index, color)``
    triples sorted by index pair.  The lattice factory guarantees a unique
    minimum and maximum; hand-built instances (test fixtures) may be any
    leveled poset.
    """

    __slots__ = ("shape", "coords", "elements", "ranks", "covers", "height",
                 "_index", "_edge_colors")

    def __init__(self, shape, coords, elements, ranks, covers, height):
        self.shape = shape
        self.coords = coords
        self.elements = tuple(elements)
        self.ranks = tuple(ranks)
        self.covers = tuple(covers)
        self.height = height
        if len(self.elements) != len(self.ranks):
            raise ValueError("one rank per element required")
        self._index = {key: i for i, key in enumerate(self.elements)}
        self._edge_colors = {(lo, hi): color for lo, hi, color in self.covers}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, key) -> bool:
        return key in self._index

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedPoset):
            return NotImplemented
        return (self.shape, self.coords, self.elements, self.ranks,
                self.covers, self.height) == (
                    other.shape, other.coords, other.elements, other.ranks,
                    other.covers, other.height)

    def index_of(self, key) -> int:
        if key not in self._index:
            raise KeyError(f"unknown element {key}")
        return self._index[key]

    def rank_of(self, key) -> int:
        return self.ranks[self.index_of(key)]

    def is_cover(self, lower_key, upper_key) -> bool:
        if lower_key not in self._index or upper_key not in self._index:
            return False
        return (self._index[lower_key], self._index[upper_key]) in self._edge_colors

    def color_of(self, lower_key, upper_key) -> int:
        return self._edge_colors[(self.index_of(lower_key), self.index_of(upper_key))]

    def levels(self) -> list[list[int]]:
        """Element indices grouped by rank, rank 0 first."""
        out: list[list[int]] = [[] for _ in range(self.height + 1)]
        for i, r in enumerate(self.ranks):
            out[r].append(i)
        return out

    def compositions(self) -> tuple[WeakComposition, ...]:
        """Every element in canonical composition form, in element order."""
        if self.coords == "composition":
            return self.elements
        return tuple(to_multiplicity(key, self.shape) for key in self.elements)

    def label(self) -> str:
        prime = "" if self.coords == "partition" else "'"
        return f"L{prime}({self.shape.m},{self.shape.n})"


def build_lattice(shape: Shape, coordinates: str = "partition") -> GradedPoset:
    """Materialize the lattice of partitions bounded by ``shape``.

    In partition coordinates the elements are the partitions in the box; in
    composition coordinates they are the weak compositions of ``m`` with
    ``n + 1`` entries, the lattice points of the ``m``-fold dilated simplex.
    Covers grow one box (move one multiplicity unit) and carry their
    simple-root color.  Shapes with ``m = 0`` or ``n = 0`` give the empty
    poset.
    """
    shape = Shape(*shape)
    m, n = shape
    if m < 0 or n < 0:
        raise ValueError("shape dimensions must be nonnegative")
    if coordinates not in ("partition", "composition"):
        raise ValueError(f"unknown coordinate system {coordinates!r}")
    if m == 0 or n == 0:
        return GradedPoset(shape, coordinates, (), (), (), 0)
    if coordinates == "partition":
        elems = sorted(partitions_in_box(m, n), key=lambda a: (sum(a), a))
        ranks = [sum(a) for a in elems]
        cover_fn = lambda key: lower_covers(key, shape)
    else:
        elems = sorted(enumerate_compositions(m, n + 1),
                       key=lambda c: (weighted_sum(c), c))
        ranks = [weighted_sum(c) for c in elems]
        cover_fn = lambda key: composition_lower_covers(key, shape)
    index = {key: i for i, key in enumerate(elems)}
    edges = []
    for hi, key in enumerate(elems):
        for low_key, color in cover_fn(key):
            edges.append((index[low_key], hi, color))
    edges.sort(key=lambda t: (t[0], t[1]))
    return GradedPoset(shape, coordinates, elems, ranks, edges, m * n)


def rank_profile(p: GradedPoset) -> RankPolynomial:
    """Per-level element counts of ``p``; equals the Gaussian binomial for lattices."""
    counts = [0] * (p.height + 1)
    for r in p.ranks:
        counts[r] += 1
    return RankPolynomial(tuple(counts))


def _shifted(coeffs: list[int], k: int) -> list[int]:
    return [0] * k + list(coeffs)


def _padded_add(a: list[int], b: list[int]) -> list[int]:
    width = max(len(a), len(b))
    out = [0] * width
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] += v
    return out


@dataclass(frozen=True)
class SplitCheck:
    """Result of the one-step splitting checks for an ``(m, n)`` box."""

    shape: Shape
    first_identity: bool
    second_identity: bool
    with_largest: int
    without_largest: int
    split_bijective: bool

    @property
    def passed(self) -> bool:
        return self.first_identity and self.second_identity and self.split_bijective

    def __bool__(self) -> bool:
        return self.passed


def check_splitting_identities(m: int, n: int) -> SplitCheck:
    """Check both one-step splittings of the rank polynomial, exactly.

    The first splitting peels off the elements with a part of size ``n``:
    deleting that part is a bijection onto the ``(m - 1, n)`` box, shifted up
    ``n`` levels, and the remaining elements are exactly the ``(m, n - 1)``
    box.  The second splits by number of parts instead.  Coefficient
    identities use exact arithmetic, and the first split is also replayed on
    the actual element sets.
    """
    if m < 1 or n < 1:
        raise ValueError("both box dimensions must be at least 1")
    whole = list(gaussian_binomial(m, n))
    fewer_parts = list(gaussian_binomial(m - 1, n))
    smaller_parts = list(gaussian_binomial(m, n - 1))
    first = whole == _padded_add(_shifted(fewer_parts, n), smaller_parts)
    second = whole == _padded_add(fewer_parts, _shifted(smaller_parts, m))
    elements = set(partitions_in_box(m, n))
    with_big = {a for a in elements if a and a[0] == n}
    without_big = elements - with_big
    image = {a[1:] for a in with_big}
    bijective = (
        len(image) == len(with_big)
        and image == set(partitions_in_box(m - 1, n))
        and without_big == set(partitions_in_box(m, n - 1))
    )
    return SplitCheck(Shape(m, n), first, second, len(with_big),
                      len(without_big), bijective)


def serialize_poset(p: GradedPoset) -> str:
    """Render ``p`` in the interchange format (always composition keys)."""
    lines = [f"poset {p.label()} height={p.height} count={len(p)}"]
    comps = p.compositions()
    for i, c in enumerate(comps):
        lines.append(f"{i} {p.ranks[i]} {format_composition(c)}")
    for lo, hi, color in p.covers:
        lines.append(f"{lo} {hi} {color}")
    return "\n".join(lines) + "\n"


def _parse_header(line: str):
    parts = line.split()
    if len(parts) != 4 or parts[0] != "poset":
        raise ParseError(1, f"bad poset header: {line!r}")
    label = parts[1]
    coords = "composition" if label.startswith("L'") else "partition"
    body = label[2:] if coords == "composition" else label[1:]
    if not (body.startswith("(") and body.endswith(")")):
        raise ParseError(1, f"bad lattice label: {label!r}")
    try:
        m, n = (int(v) for v in body[1:-1].split(","))
    except ValueError:
        raise ParseError(1, f"bad lattice label: {label!r}") from None
    fields = {}
    for chunk in parts[2:]:
        key, _, value = chunk.partition("=")
        if not value.isdigit():
            raise ParseError(1, f"bad header field: {chunk!r}")
        fields[key] = int(value)
    if set(fields) != {"height", "count"}:
        raise ParseError(1, "expected height= and count= in header")
    return Shape(m, n), coords, fields["height"], fields["count"]


def parse_poset(text: str) -> GradedPoset:
    """Parse the interchange format back into a :class:`GradedPoset`.

    The parser is strict: declared counts, ordering, ranks, keys, and edge
    colors are all revalidated, so a file that parses is a faithful lattice.
    """
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty poset file")
    shape, coords, height, count = _parse_header(lines[0])
    m, n = shape
    expected_count = 0 if m == 0 or n == 0 else comb(m + n, m)
    if count != expected_count:
        raise ParseError(1, f"count={count} does not match the {m} x {n} lattice")
    if height != m * n:
        raise ParseError(1, f"height={height} does not match the {m} x {n} lattice")
    if len(lines) < 1 + count:
        raise ParseError(len(lines), "truncated element section")

    comps: list[WeakComposition] = []
    ranks: list[int] = []
    for i in range(count):
        line_no = i + 2
        fields = lines[1 + i].split()
        if len(fields) != 3:
            raise ParseError(line_no, f"bad element line: {lines[1 + i]!r}")
        try:
            idx, r = int(fields[0]), int(fields[1])
            key = parse_composition(fields[2])
        except ValueError as exc:
            raise ParseError(line_no, str(exc)) from None
        if idx != i:
            raise ParseError(line_no, f"expected index {i}, got {idx}")
        if len(key) != n + 1 or sum(key) != m:
            raise ParseError(line_no, f"key {fields[2]} is not an element of the lattice")
        if r != weighted_sum(key):
            raise ParseError(line_no, f"rank {r} does not match key {fields[2]}")
        if comps and (ranks[-1], comps[-1]) >= (r, key):
            raise ParseError(line_no, "elements out of order")
        comps.append(key)
        ranks.append(r)

    index = {key: i for i, key in enumerate(comps)}
    covers: list[tuple[int, int, int]] = []
    degree_total = sum(sum(1 for j in range(n) if c[j] >= 1) for c in comps)
    for offset, line in enumerate(lines[1 + count :]):
        line_no = count + 2 + offset
        fields = line.split()
        if len(fields) != 3:
            raise ParseError(line_no, f"bad cover line: {line!r}")
        try:
            lo, hi, color = (int(v) for v in fields)
        except ValueError:
            raise ParseError(line_no, f"bad cover line: {line!r}") from None
        if not (0 <= lo < count and 0 <= hi < count):
            raise ParseError(line_no, "cover index out of range")
        if not 1 <= color <= n:
            raise ParseError(line_no, f"color {color} out of range 1..{n}")
        upper, lower = comps[hi], comps[lo]
        j = color - 1
        moved = upper[:j] + (upper[j] - 1, upper[j + 1] + 1) + upper[j + 2 :]
        if moved != lower:
            raise ParseError(line_no, f"{lower} is not the color-{color} cover below {upper}")
        if covers and covers[-1][:2] >= (lo, hi):
            raise ParseError(line_no, "covers out of order")
        covers.append((lo, hi, color))
    if len(covers) != degree_total:
        raise ParseError(len(lines), f"expected {degree_total} covers, got {len(covers)}")

    if coords == "partition":
        elements = [from_multiplicity(c, shape) for c in comps]
    else:
        elements = comps
    return GradedPoset(shape, coords, elements, ranks, covers, height)
