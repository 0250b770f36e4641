"""Bundled report emission: delimited tables, JSON, diagrams, figures.

Writes one directory per network with the statistics table and swap
histogram as tab-separated files, the fixed-schema JSON report, the SVG
diagram, and a matplotlib rendering of the swap histogram.
"""

from __future__ import annotations

import json
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .core import Network
from .engine import StatsReport, stats_to_json
from .render import format_probability, render_svg


def elements_table(net: Network, stats: StatsReport) -> str:
    """Per-element TSV: index, kind, wires, slot probabilities, activation."""
    lines = ["element\tkind\twires\tslot_probs\tactivation"]
    for idx, (el, ep) in enumerate(zip(net.elements, stats.element_probs), start=1):
        lines.append(
            "\t".join(
                (
                    str(idx),
                    type(el).__name__.lower(),
                    ",".join(str(w) for w in el.endpoints),
                    ";".join(format_probability(p) for p in ep.slots),
                    format_probability(ep.activation),
                )
            )
        )
    return "\n".join(lines) + "\n"


def histogram_table(stats: StatsReport) -> str:
    lines = ["swaps\tinputs"]
    lines.extend(f"{k}\t{v}" for k, v in stats.histogram)
    return "\n".join(lines) + "\n"


def histogram_figure(stats: StatsReport, path: Path, title: str) -> None:
    """Bar chart of input counts by total exchanges performed."""
    ks = [k for k, _ in stats.histogram]
    vs = [v for _, v in stats.histogram]
    fig, ax = plt.subplots(figsize=(5.0, 3.2))
    ax.bar(ks, vs, width=0.7, color="#4878a8", edgecolor="black", linewidth=0.6)
    ax.set_xlabel("Swap counts")
    ax.set_ylabel("Number of occurrences")
    ax.set_title(title)
    ax.set_xticks(ks)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_report(net: Network, stats: StatsReport, outdir: str | Path) -> list[Path]:
    """Write the full report bundle; returns the created paths."""
    out = Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    title = net.name or f"{net.order}-wire network"
    created = []

    def emit(name: str, text: str) -> None:
        p = out / name
        p.write_text(text, encoding="utf-8")
        created.append(p)

    emit("stats.json", json.dumps(stats_to_json(stats), indent=2) + "\n")
    emit("elements.tsv", elements_table(net, stats))
    emit("histogram.tsv", histogram_table(stats))
    emit("network.svg", render_svg(net, stats))
    png = out / "histogram.png"
    histogram_figure(stats, png, title)
    created.append(png)
    return created
