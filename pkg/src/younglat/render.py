"""Deterministic Hasse-diagram renderers producing DOT and SVG text.

Both renderers emit one node per element and one edge per cover, lay levels
out by rank, color edges by root index, and optionally overlay a chain
decomposition (chain edges bold, the rest dimmed).  Output is a pure
function of the inputs, byte for byte.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partitions import format_composition, format_partition, from_multiplicity
from .poset import GradedPoset
from .roots import ColorMap
from .scd import ChainDecomposition


class DiagramSizeError(ValueError):
    """Poset too tall for the requested drawing."""


@dataclass(frozen=True)
class RenderSpec:
    """How to draw: node labels, edge colors, optional chain highlight."""

    labels: str = "partition"  # partition | composition | young
    colors: ColorMap | None = None
    highlight: ChainDecomposition | None = None
    max_height: int = 60


def _young_rows(partition) -> list[str]:
    return ["■" * v for v in partition]


def _node_labels(p: GradedPoset, spec: RenderSpec) -> list[str]:
    comps = p.compositions()
    if spec.labels == "composition":
        return [format_composition(c) for c in comps]
    parts = [from_multiplicity(c, p.shape) for c in comps]
    if spec.labels == "partition":
        return [format_partition(a) for a in parts]
    if spec.labels == "young":
        return ["\\n".join(_young_rows(a)) or "∅" for a in parts]
    raise ValueError(f"unknown label mode {spec.labels!r}")


def _highlight_edges(p: GradedPoset, spec: RenderSpec) -> set[tuple[int, int]] | None:
    if spec.highlight is None:
        return None
    comps = p.compositions()
    index = {key: i for i, key in enumerate(comps)}
    pairs = set()
    for chain in spec.highlight.chains:
        for upper, lower in zip(chain, chain[1:]):
            if upper not in index or lower not in index:
                raise ValueError(f"highlight element {upper} or {lower} not in poset")
            pairs.add((index[lower], index[upper]))
    return pairs


def _colormap(p: GradedPoset, spec: RenderSpec) -> ColorMap:
    if spec.colors is not None:
        return spec.colors
    return ColorMap.default(p.shape.n if p.shape is not None else 0)


def to_dot(p: GradedPoset, spec: RenderSpec | None = None) -> str:
    """Graphviz digraph: edges point upward, levels grouped rank=same."""
    spec = spec or RenderSpec()
    colors = _colormap(p, spec)
    chain_edges = _highlight_edges(p, spec)
    keys = [format_composition(c) for c in p.compositions()]
    labels = _node_labels(p, spec)
    out = [
        f'digraph "{p.label()}" {{',
        "  rankdir=BT;",
        '  node [shape=box, fontname="monospace"];',
    ]
    for level in p.levels():
        if level:
            members = " ".join(f'"{keys[i]}";' for i in level)
            out.append(f"  {{ rank=same; {members} }}")
    for i, key in enumerate(keys):
        out.append(f'  "{key}" [label="{labels[i]}"];')
    for lo, hi, color in p.covers:
        attrs = f'color="{colors.name(color)}"'
        if chain_edges is not None:
            if (lo, hi) in chain_edges:
                attrs += ", penwidth=2.4"
            else:
                attrs += ", style=dotted, penwidth=0.8"
        out.append(f'  "{keys[lo]}" -> "{keys[hi]}" [{attrs}];')
    out.append("}")
    return "\n".join(out) + "\n"


_DX, _DY, _MARGIN, _RADIUS = 64, 48, 40, 9


def to_svg(p: GradedPoset, spec: RenderSpec | None = None) -> str:
    """Standalone SVG 1.1, nodes on rank rows, centered within each level."""
    spec = spec or RenderSpec()
    if p.height > spec.max_height:
        raise DiagramSizeError(
            f"poset height {p.height} exceeds the drawing limit {spec.max_height}"
        )
    colors = _colormap(p, spec)
    chain_edges = _highlight_edges(p, spec)
    labels = _node_labels(p, spec)
    comps = p.compositions()
    levels = p.levels()
    widest = max((len(level) for level in levels), default=1) or 1
    width = 2 * _MARGIN + (widest - 1) * _DX
    height_px = 2 * _MARGIN + p.height * _DY
    pos: dict[int, tuple[float, float]] = {}
    for r, level in enumerate(levels):
        y = _MARGIN + (p.height - r) * _DY
        for slot, i in enumerate(level):
            x = width / 2 + (slot - (len(level) - 1) / 2) * _DX
            pos[i] = (x, y)
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height_px}" viewBox="0 0 {width} {height_px}">',
        f"  <title>{p.label()}</title>",
        '  <g class="edges">',
    ]
    for lo, hi, color in p.covers:
        (x1, y1), (x2, y2) = pos[lo], pos[hi]
        stroke = colors.name(color)
        extra = ""
        if chain_edges is not None:
            if (lo, hi) in chain_edges:
                extra = ' stroke-width="2.6"'
            else:
                extra = ' stroke-width="1" stroke-opacity="0.35"'
        out.append(
            f'    <line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" '
            f'stroke="{stroke}"{extra}/>'
        )
    out.append("  </g>")
    out.append('  <g class="nodes">')
    cell = 7
    for i in range(len(p)):
        x, y = pos[i]
        out.append(f'    <g class="node" data-key="{format_composition(comps[i])}">')
        if spec.labels == "young":
            rows = _young_rows(from_multiplicity(comps[i], p.shape))
            if not rows:
                out.append(
                    f'      <text x="{x:.1f}" y="{y:.1f}" text-anchor="middle" '
                    f'font-size="10">∅</text>'
                )
            for ridx, row in enumerate(rows):
                row_len = len(row)
                x0 = x - row_len * cell / 2
                y0 = y - len(rows) * cell / 2 + ridx * cell
                for cidx in range(row_len):
                    out.append(
                        f'      <rect x="{x0 + cidx * cell:.1f}" y="{y0:.1f}" '
                        f'width="{cell}" height="{cell}" fill="white" stroke="black"/>'
                    )
        else:
            out.append(
                f'      <circle cx="{x:.1f}" cy="{y:.1f}" r="{_RADIUS}" '
                f'fill="white" stroke="black"/>'
            )
            out.append(
                f'      <text x="{x:.1f}" y="{y + 3:.1f}" text-anchor="middle" '
                f'font-size="8">{labels[i]}</text>'
            )
        out.append("    </g>")
    out.append("  </g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
