"""Symmetric chain machinery for the bounded partition lattices.

A chain is a tuple of composition keys listed top-down; it is symmetric in a
poset of height ``h`` when it is saturated and its endpoint ranks add up to
``h``.  A decomposition partitions the whole poset into symmetric chains.
This module provides the universal verifier, the alternating construction
for two part sizes, the recursive construction for three part sizes, and a
small backtracking search used as an oracle on small posets.

Decomposition file format, one file per decomposition::

    scd L'(4,3) chains=5
    <key> <key> ...               (one line per chain, top-down)

Chains are canonically ordered by (bottom rank, bottom key); files written
here parse back bit-exactly.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .partitions import (
    Shape,
    WeakComposition,
    conjugate,
    format_composition,
    from_multiplicity,
    parse_composition,
    to_multiplicity,
    weighted_sum,
)
from .poset import GradedPoset, ParseError

Chain = tuple[WeakComposition, ...]


class ChainDecomposition:
    """A set of chains over one lattice, canonically ordered.

    Chains are sorted by (bottom rank, bottom key, whole chain); the class
    does not check validity, that is the verifier's job.
    """

    __slots__ = ("shape", "chains")

    def __init__(self, shape: Shape | None, chains):
        self.shape = Shape(*shape) if shape is not None else None
        normalized = []
        for chain in chains:
            chain = tuple(tuple(key) for key in chain)
            if not chain:
                raise ValueError("chains must contain at least one element")
            normalized.append(chain)
        normalized.sort(key=lambda ch: (weighted_sum(ch[-1]), ch[-1], ch))
        self.chains = tuple(normalized)

    def __len__(self) -> int:
        return len(self.chains)

    def __iter__(self):
        return iter(self.chains)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainDecomposition):
            return NotImplemented
        return (self.shape, self.chains) == (other.shape, other.chains)

    def all_keys(self) -> list[WeakComposition]:
        return [key for chain in self.chains for key in chain]

    def chain_lengths(self) -> Counter:
        """Multiset of chain lengths, counted in covering steps."""
        return Counter(len(chain) - 1 for chain in self.chains)


def as_partition_chains(d: ChainDecomposition) -> list[tuple]:
    """The chains converted to partition tuples via the multiplicity bijection."""
    return [
        tuple(from_multiplicity(key, d.shape) for key in chain) for chain in d.chains
    ]


def is_symmetric_chain(chain, p: GradedPoset) -> bool:
    """True when the top-down ``chain`` is saturated in ``p`` and its endpoint
    ranks add up to the poset height.  Unknown elements raise ``KeyError``."""
    comps = p.compositions()
    index = {key: i for i, key in enumerate(comps)}
    keys = [tuple(key) for key in chain]
    for key in keys:
        if key not in index:
            raise KeyError(f"unknown element {key}")
    edge_set = {(lo, hi) for lo, hi, _ in p.covers}
    for upper, lower in zip(keys, keys[1:]):
        if (index[lower], index[upper]) not in edge_set:
            return False
    top, bottom = keys[0], keys[-1]
    return p.ranks[index[top]] + p.ranks[index[bottom]] == p.height


@dataclass(frozen=True)
class ScdReport:
    """Verification outcome: defect lists plus the chain-start profile."""

    shape: Shape | None
    height: int
    poset_size: int
    chain_count: int
    missing: tuple
    duplicated: tuple
    unknown: tuple
    unsaturated: tuple[int, ...]
    asymmetric: tuple[int, ...]
    start_profile: dict[int, int] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not (
            self.missing
            or self.duplicated
            or self.unknown
            or self.unsaturated
            or self.asymmetric
        )

    def lines(self) -> list[str]:
        out = [
            f"decomposition: {self.chain_count} chains",
            f"poset: {self.poset_size} elements, height {self.height}",
            "chain starts: "
            + (
                " ".join(f"{s}:{c}" for s, c in sorted(self.start_profile.items()))
                or "(none)"
            ),
        ]
        for name, items in (
            ("missing elements", self.missing),
            ("duplicated elements", self.duplicated),
            ("unknown elements", self.unknown),
            ("unsaturated chains", self.unsaturated),
            ("non-symmetric chains", self.asymmetric),
        ):
            out.append(f"{name}: {len(items)}")
            for item in items:
                shown = format_composition(item) if isinstance(item, tuple) else item
                out.append(f"  {shown}")
        out.append("verdict: " + ("PASS" if self.passed else "FAIL"))
        return out


def verify_scd(d: ChainDecomposition, p: GradedPoset) -> ScdReport:
    """Check ``d`` against the definition of a symmetric chain decomposition.

    Defects are report content, never exceptions: missing and doubly covered
    elements, keys absent from the poset, chains that are not saturated, and
    chains whose endpoint ranks do not mirror.  The report also counts how
    many chains start (bottom out) at each rank.
    """
    comps = p.compositions()
    index = {key: i for i, key in enumerate(comps)}
    edge_set = {(lo, hi) for lo, hi, _ in p.covers}
    seen: Counter = Counter()
    unknown: list = []
    unsaturated: list[int] = []
    asymmetric: list[int] = []
    profile: Counter = Counter()
    for ci, chain in enumerate(d.chains):
        chain_known = True
        for key in chain:
            seen[key] += 1
            if key not in index:
                unknown.append(key)
                chain_known = False
        if not chain_known:
            unsaturated.append(ci)
            continue
        saturated = all(
            (index[lower], index[upper]) in edge_set
            for upper, lower in zip(chain, chain[1:])
        )
        if not saturated:
            unsaturated.append(ci)
        top_rank = p.ranks[index[chain[0]]]
        bottom_rank = p.ranks[index[chain[-1]]]
        if top_rank + bottom_rank != p.height:
            asymmetric.append(ci)
        profile[bottom_rank] += 1
    missing = tuple(sorted(set(comps) - set(seen)))
    duplicated = tuple(sorted(k for k, v in seen.items() if v > 1))
    return ScdReport(
        shape=d.shape,
        height=p.height,
        poset_size=len(p),
        chain_count=len(d.chains),
        missing=missing,
        duplicated=duplicated,
        unknown=tuple(unknown),
        unsaturated=tuple(unsaturated),
        asymmetric=tuple(asymmetric),
        start_profile=dict(sorted(profile.items())),
    )


# ---------------------------------------------------------------------------
# constructions


def scd_n2(m: int) -> ChainDecomposition:
    """Alternating decomposition of the lattice with two part sizes.

    Chain ``i`` starts at ``(m - 2i, 2i, 0)`` and alternates the two root
    steps, largest-part step first, for ``2(m - 2i)`` covers.  The middle
    slot stays at ``2i`` or ``2i + 1`` along chain ``i``, so the chains
    partition the triangle.  Even ``m`` leaves a singleton chain; odd ``m``
    bottoms out with a chain of length 2.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    chains = []
    for i in range(m // 2 + 1):
        a, b, c = m - 2 * i, 2 * i, 0
        chain = [(a, b, c)]
        while a > 0:
            a -= 1
            chain.append((a, b + 1, c))
            chain.append((a, b, c + 1))
            c += 1
        chains.append(tuple(chain))
    return ChainDecomposition(Shape(m, 2), chains)


def _shift(chain: Chain, s: int) -> Chain:
    # re-embed a chain by adding s to the first and last entries
    return tuple((a + s, b, c, d + s) for a, b, c, d in chain)


def _odd_shell(m: int) -> list[Chain]:
    """Chains covering the two outer faces of the simplex for odd ``m``.

    Chain ``i`` (0-based, up to (m - 1) / 2) starts at ``(m - 2i, 2i, 0, 0)``,
    zigzags down the last-slot-zero face with its second slot held at ``2i``
    or ``2i + 1``, crosses onto the first-slot-zero face, and then sweeps one
    element per rank down to rank ``2i``.  Endpoint ranks are ``3m - 2i`` and
    ``2i``, so every chain is symmetric; together the chains cover exactly
    the compositions whose first or last entry is zero.
    """
    chains = []
    for i in range((m + 1) // 2):
        a, b, c = m - 2 * i, 2 * i, 0
        chain = [(a, b, c, 0)]
        while a > 0:
            a -= 1
            chain.append((a, b + 1, c, 0))
            chain.append((a, b, c + 1, 0))
            c += 1
        # face sweep: at rank r the chain sits at second slot bb, one rank a step
        for r in range(m - 1 + 2 * i, 2 * i - 1, -1):
            bb = i + max(0, (r - (m - 1)) // 2)
            chain.append((0, bb, r - 2 * bb, m - r + bb))
        chains.append(tuple(chain))
    return chains


def _even_shell(m: int) -> list[Chain]:
    """Chains covering the outer two layers of the simplex for even ``m`` >= 4.

    One marked chain runs the full middle-root string along the edge shared
    by the two outer faces, from ``(0, m, 0, 0)`` down to ``(0, 0, m, 0)``;
    its endpoint ranks ``2m`` and ``m`` mirror.  Outer chains then zigzag the
    last-slot-zero face but stop one step short of that occupied edge, detour
    through a single inner-layer element, and sweep the first-slot-zero face.
    Inner chains repeat the pattern one layer in, where the detours of the
    outer chains have already consumed the even positions of the inner edge.
    """
    if m < 4 or m % 2:
        raise ValueError(f"generic even shell needs even m >= 4, got {m}")
    chains: list[Chain] = [tuple((0, m - k, k, 0) for k in range(m + 1))]
    for i in range(m // 2):
        a, b, c = m - 2 * i, 2 * i, 0
        chain = [(a, b, c, 0)]
        while a > 1:
            a -= 1
            chain.append((a, b + 1, c, 0))
            chain.append((a, b, c + 1, 0))
            c += 1
        chain.append((1, b, c - 1, 1))  # inner-layer detour past the edge chain
        for r in range(m + 2 * i, 2 * i - 1, -1):
            bb = max(0, r - m + 1) + i - max(0, -(-(r - m) // 2))
            chain.append((0, bb, r - 2 * bb, m - r + bb))
        chains.append(tuple(chain))
    inner = m - 2
    for j in range(m // 2 - 1):
        a, b, c = inner - 2 * j, 2 * j, 0
        chain = [(a + 1, b, c, 1)]
        while a > 0:
            a -= 1
            chain.append((a + 1, b + 1, c, 1))
            if a > 0:
                chain.append((a + 1, b, c + 1, 1))
                c += 1
        for r in range(inner + 2 * j, 2 * j - 1, -1):
            bb = max(0, r - inner + 1) + j - max(0, -(-(r - inner) // 2))
            chain.append((1, bb, r - 2 * bb, inner - r + bb + 1))
        chains.append(tuple(chain))
    return chains


def _two_column_seed() -> list[Chain]:
    """Decomposition of the (2, 3) lattice obtained by conjugating the
    alternating decomposition of the (3, 2) box."""
    out = []
    for chain in scd_n2(3).chains:
        mapped = []
        for key in chain:
            part = from_multiplicity(key, Shape(3, 2))
            mapped.append(to_multiplicity(conjugate(part), Shape(2, 3)))
        out.append(tuple(mapped))
    return out


def lindstrom_odd(t: int) -> ChainDecomposition:
    """Recursive decomposition of the three-size lattice with ``m = 2t + 1``.

    The decomposition for ``m - 2`` re-embeds by adding one to the first and
    last entry of every key (ranks shift by 3, the height by 6, so symmetry
    is preserved), and the two outer faces are filled by :func:`_odd_shell`.
    The base ``m = 1`` is the single four-element chain.
    """
    if t < 0:
        raise ValueError(f"need t >= 0, got {t}")
    chains: list[Chain] = []
    for k in range(1, 2 * t + 2, 2):
        chains = [_shift(ch, 1) for ch in chains]
        chains.extend(_odd_shell(k))
    return ChainDecomposition(Shape(2 * t + 1, 3), chains)


def lindstrom_even(t: int) -> ChainDecomposition:
    """Recursive decomposition of the three-size lattice with ``m = 2t``.

    The decomposition for ``m - 4`` re-embeds by adding two to the first and
    last entry of every key (rank shift 6), and the outer two layers are
    filled by :func:`_even_shell`.  Base cases: ``m = 2`` is the conjugated
    two-column decomposition, and the embedded core of ``m = 4`` is the
    single middle node ``(2, 0, 0, 2)``.
    """
    if t < 1:
        raise ValueError(f"need t >= 1, got {t}")
    m = 2 * t
    if m == 2:
        return ChainDecomposition(Shape(2, 3), _two_column_seed())
    if m % 4 == 0:
        chains: list[Chain] = [((2, 0, 0, 2),)]
        start = 4
    else:
        chains = [_shift(ch, 2) for ch in _two_column_seed()]
        start = 6
    chains.extend(_even_shell(start))
    for k in range(start + 4, m + 1, 4):
        chains = [_shift(ch, 2) for ch in chains]
        chains.extend(_even_shell(k))
    return ChainDecomposition(Shape(m, 3), chains)


def lindstrom(m: int) -> ChainDecomposition:
    """Symmetric chain decomposition of the three-size lattice for any ``m >= 1``.

    Dispatches to the odd or even recursion.  Through the multiplicity
    bijection the result also decomposes the partition form of the lattice,
    and by conjugation its transpose.
    """
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    if m % 2:
        return lindstrom_odd((m - 1) // 2)
    return lindstrom_even(m // 2)


# ---------------------------------------------------------------------------
# brute-force oracle


@dataclass(frozen=True)
class SearchResult:
    """Outcome of the backtracking search.

    ``status`` is ``"found"``, ``"not-found"`` (proven), or
    ``"budget-exhausted"`` (gave up after the assignment budget).
    """

    status: str
    decomposition: ChainDecomposition | None
    assignments: int


class _BudgetExceeded(Exception):
    pass


def brute_force_scd(p: GradedPoset, budget: int = 100_000_000) -> SearchResult:
    """Backtracking search for a symmetric chain decomposition of ``p``.

    The highest-ranked unassigned element must top a chain descending to the
    mirror rank; candidate paths are explored in canonical element order, so
    the result is deterministic.  Branches are pruned with the forced count
    of chain tops per level (the consecutive differences of the rank
    numbers).  An asymmetric or non-unimodal rank profile is proof that no
    decomposition exists.  Each attempted placement consumes one unit of
    ``budget``; running out is reported distinctly from proven absence.
    """
    n_el = len(p)
    if n_el == 0:
        return SearchResult("found", ChainDecomposition(p.shape, ()), 0)
    ht = p.height
    counts = [0] * (ht + 1)
    for r in p.ranks:
        counts[r] += 1
    if any(counts[r] != counts[ht - r] for r in range(ht + 1)):
        return SearchResult("not-found", None, 0)
    if any(counts[r] > counts[r + 1] for r in range(ht // 2)):
        return SearchResult("not-found", None, 0)

    tops_quota = {}
    for t in range((ht + 1) // 2, ht + 1):
        quota = counts[t] - (counts[t + 1] if t < ht else 0)
        if quota:
            tops_quota[t] = quota

    down: list[list[int]] = [[] for _ in range(n_el)]
    for lo, hi, _ in p.covers:
        down[hi].append(lo)
    for targets in down:
        targets.sort()

    unassigned = [True] * n_el
    chains_acc: list[tuple[int, ...]] = []
    spent = [0]

    def charge() -> None:
        spent[0] += 1
        if spent[0] > budget:
            raise _BudgetExceeded

    def next_top() -> int:
        for i in range(n_el - 1, -1, -1):
            if unassigned[i]:
                return i
        return -1

    def extend(path: list[int], bottom_rank: int) -> bool:
        if p.ranks[path[-1]] == bottom_rank:
            chains_acc.append(tuple(path))
            if start_chain():
                return True
            chains_acc.pop()
            return False
        for child in down[path[-1]]:
            if unassigned[child]:
                charge()
                unassigned[child] = False
                path.append(child)
                if extend(path, bottom_rank):
                    return True
                path.pop()
                unassigned[child] = True
        return False

    def start_chain() -> bool:
        i = next_top()
        if i < 0:
            return True
        t = p.ranks[i]
        quota = tops_quota.get(t, 0)
        if quota == 0:
            return False
        charge()
        tops_quota[t] = quota - 1
        unassigned[i] = False
        if extend([i], ht - t):
            return True
        unassigned[i] = True
        tops_quota[t] = quota
        return False

    try:
        found = start_chain()
    except _BudgetExceeded:
        return SearchResult("budget-exhausted", None, spent[0])
    if not found:
        return SearchResult("not-found", None, spent[0])
    comps = p.compositions()
    chains = [tuple(comps[i] for i in chain) for chain in chains_acc]
    return SearchResult(
        "found", ChainDecomposition(p.shape, chains), spent[0]
    )


# ---------------------------------------------------------------------------
# file format


def serialize_decomposition(d: ChainDecomposition) -> str:
    """Render ``d`` in the decomposition file format."""
    if d.shape is None:
        raise ValueError("cannot serialize a decomposition without a shape")
    lines = [f"scd L'({d.shape.m},{d.shape.n}) chains={len(d.chains)}"]
    for chain in d.chains:
        lines.append(" ".join(format_composition(key) for key in chain))
    return "\n".join(lines) + "\n"


def parse_decomposition(text: str) -> ChainDecomposition:
    """Parse a decomposition file; semantic checks are left to the verifier."""
    lines = text.splitlines()
    if not lines:
        raise ParseError(1, "empty decomposition file")
    fields = lines[0].split()
    if len(fields) != 3 or fields[0] != "scd" or not fields[1].startswith("L'("):
        raise ParseError(1, f"bad decomposition header: {lines[0]!r}")
    label = fields[1]
    if not label.endswith(")"):
        raise ParseError(1, f"bad lattice label: {label!r}")
    try:
        m, n = (int(v) for v in label[3:-1].split(","))
    except ValueError:
        raise ParseError(1, f"bad lattice label: {label!r}") from None
    key_name, _, value = fields[2].partition("=")
    if key_name != "chains" or not value.isdigit():
        raise ParseError(1, f"bad header field: {fields[2]!r}")
    declared = int(value)
    chains = []
    for offset, line in enumerate(lines[1:]):
        line_no = offset + 2
        if not line.strip():
            raise ParseError(line_no, "empty chain line")
        try:
            chains.append(tuple(parse_composition(tok) for tok in line.split()))
        except ValueError as exc:
            raise ParseError(line_no, str(exc)) from None
    if len(chains) != declared:
        raise ParseError(
            len(lines), f"header declares {declared} chains, found {len(chains)}"
        )
    return ChainDecomposition(Shape(m, n), chains)
