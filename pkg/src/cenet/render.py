"""Deterministic diagram emitters.

Wires run left to right, wire 1 on top. Elements are vertical connectors
placed column by column following the stage schedule; elements of one stage
share a stage band but overlapping spans get their own sub-column so the
drawing stays readable. Fused elements mark shared interior joints with an
open circle. With statistics attached, each connector is labeled with its
exchange probabilities, the header carries links/max-swaps and the average,
the top right corner shows the disorder count, and settled wires get an 'x'
at the right margin.

Output is byte-identical for identical inputs: fixed attribute order, fixed
number formatting, no clocks or randomness.
"""

from __future__ import annotations

from fractions import Fraction

from .core import Network, check_valid, fused_joints, schedule
from .engine import StatsReport

MAX_RENDER_ORDER = 16


def format_probability(p: Fraction) -> str:
    """Exact fraction while the denominator stays small, else 3 decimals."""
    if p.denominator <= 99:
        return f"{p.numerator}/{p.denominator}"
    return f"{float(p):.3f}"


def _format_average(avg: Fraction) -> str:
    if avg.denominator == 1:
        return str(avg.numerator)
    return f"{float(avg):.6g}"


def _columns(net: Network) -> tuple[list[list[int]], list[int]]:
    """Flatten the schedule into drawing columns.

    Returns (elements per column, column index per element). Elements in a
    stage are packed into the stage's sub-columns first-fit by span overlap.
    """
    cols: list[list[int]] = []
    col_of = [0] * len(net.elements)
    for stage in schedule(net).stages:
        bands: list[list[int]] = []
        spans: list[list[tuple[int, int]]] = []
        for idx in stage:
            ws = net.elements[idx].endpoints
            lo, hi = ws[0], ws[-1]
            for band, taken in zip(bands, spans):
                if all(hi < a or lo > b for a, b in taken):
                    band.append(idx)
                    taken.append((lo, hi))
                    break
            else:
                bands.append([idx])
                spans.append([(lo, hi)])
        for band in bands:
            col_of_idx = len(cols)
            cols.append(band)
            for idx in band:
                col_of[idx] = col_of_idx
    return cols, col_of


def _check(net: Network, stats: StatsReport | None) -> None:
    check_valid(net)
    if net.order > MAX_RENDER_ORDER:
        raise ValueError(f"order {net.order} exceeds render cap {MAX_RENDER_ORDER}")
    if stats is not None and len(stats.element_probs) != len(net.elements):
        raise ValueError("statistics do not match the network's element count")


def render_ascii(net: Network, stats: StatsReport | None = None, max_width: int = 512) -> str:
    """Character diagram; one row per wire, '+' endpoints, 'o' fused joints."""
    _check(net, stats)
    cols, col_of = _columns(net)
    gap, margin = 3, 2
    width = margin * 2 + (len(cols) * (gap + 1) - gap if cols else 1)
    if width > max_width:
        raise ValueError(f"diagram width {width} exceeds limit {max_width}")
    grid = [["-"] * width for _ in range(net.order)]
    for idx, el in enumerate(net.elements):
        x = margin + col_of[idx] * (gap + 1)
        ws = el.endpoints
        joints = set(fused_joints(el))
        for w in range(ws[0], ws[-1] + 1):
            if w in joints:
                grid[w - 1][x] = "o"
            elif w in ws:
                grid[w - 1][x] = "+"
            else:
                grid[w - 1][x] = "|"
    rows = ["".join(r) for r in grid]
    lines = []
    if stats is not None:
        left = f"{stats.links}/{stats.max_swaps} {_format_average(stats.avg_swaps)}"
        right = str(stats.disorder)
        pad = max(1, width - len(left) - len(right))
        lines.append(left + " " * pad + right)
        rows = [
            row + (" x" if w in stats.settled else "")
            for w, row in enumerate(rows, start=1)
        ]
    lines.extend(rows)
    if stats is not None:
        for idx, ep in enumerate(stats.element_probs, start=1):
            lines.append(f"{idx} " + ",".join(format_probability(p) for p in ep.slots))
    return "\n".join(lines) + "\n"


_SVG_HEADER = (
    '<?xml version="1.0" encoding="UTF-8"?>\n'
    '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
    'width="{w}" height="{h}" viewBox="0 0 {w} {h}">\n'
)

# Layout constants (pixels).
_X0, _Y0 = 40, 30
_DX, _DY = 36, 26  # column pitch, wire pitch
_R_DOT, _R_JOINT = 4, 6


def render_svg(net: Network, stats: StatsReport | None = None) -> str:
    """Standalone SVG diagram built from line, circle and text elements only."""
    _check(net, stats)
    cols, col_of = _columns(net)
    x_right = _X0 + (len(cols) - 1) * _DX + 40 if cols else _X0 + 40
    label_rows = 2 if stats is not None else 0
    height = _Y0 + (net.order - 1) * _DY + 24 + label_rows * 16
    width = x_right + 30
    out = [_SVG_HEADER.format(w=width, h=height)]

    def y(w: int) -> int:
        return _Y0 + (w - 1) * _DY

    if stats is not None:
        head = f"{stats.links}/{stats.max_swaps} {_format_average(stats.avg_swaps)}"
        out.append(f'<text x="{_X0 - 30}" y="14" font-size="12">{head}</text>\n')
        out.append(
            f'<text x="{x_right}" y="14" font-size="12" text-anchor="end">'
            f"{stats.disorder}</text>\n"
        )
    for w in range(1, net.order + 1):
        out.append(
            f'<line x1="{_X0 - 30}" y1="{y(w)}" x2="{x_right}" y2="{y(w)}" '
            'stroke="black" stroke-width="1"/>\n'
        )
        if stats is not None and w in stats.settled:
            out.append(
                f'<text x="{x_right + 6}" y="{y(w) + 4}" font-size="12">x</text>\n'
            )
    for idx, el in enumerate(net.elements):
        x = _X0 + col_of[idx] * _DX
        ws = el.endpoints
        out.append(
            f'<line x1="{x}" y1="{y(ws[0])}" x2="{x}" y2="{y(ws[-1])}" '
            'stroke="black" stroke-width="2"/>\n'
        )
        for w in ws:
            out.append(
                f'<circle cx="{x}" cy="{y(w)}" r="{_R_DOT}" fill="black"/>\n'
            )
        for w in fused_joints(el):
            out.append(
                f'<circle cx="{x}" cy="{y(w)}" r="{_R_JOINT}" fill="white" '
                'stroke="black" stroke-width="2"/>\n'
            )
        if stats is not None:
            label = ",".join(
                format_probability(p) for p in stats.element_probs[idx].slots
            )
            ly = _Y0 + (net.order - 1) * _DY + 18 + (idx % 2) * 14
            out.append(
                f'<text x="{x}" y="{ly}" font-size="10" text-anchor="middle">'
                f"{label}</text>\n"
            )
    out.append("</svg>\n")
    return "".join(out)
