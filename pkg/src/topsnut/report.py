"""Figures written next to the CLI's key=value output."""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402


def _save(fig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig.savefig(path, dpi=120, bbox_inches="tight")
    plt.close(fig)
    return path


def accounting_figure(parts, path) -> Path:
    """Bar per TB-paw component; blocks and joins in two colours."""
    names = [n for n, _ in parts]
    sizes = [s for _, s in parts]
    colours = ["tab:blue" if n.startswith("H") else "tab:orange" for n in names]
    fig, ax = plt.subplots(figsize=(min(12, max(4, 0.35 * len(parts))), 3))
    ax.bar(range(len(parts)), sizes, color=colours, width=0.9)
    if len(parts) <= 40:
        ax.set_xticks(range(len(parts)), names, rotation=90, fontsize=7)
    else:
        ax.set_xlabel("component (blue: block, orange: join)")
    ax.set_ylabel("characters")
    ax.set_title(f"TB-paw components, total {sum(sizes)}")
    return _save(fig, Path(path))


def host_figure(net, path) -> Path:
    """The host tree drawn with each vertex and edge tagged by its block."""
    import networkx as nx

    g = net.host.to_networkx()
    pos = nx.spring_layout(g, seed=0)
    fig, ax = plt.subplots(figsize=(6, 6))
    nx.draw_networkx(g, pos, ax=ax, node_size=160, font_size=6,
                     labels={v: f"H{net.vertex_block(v).index}" for v in g})
    edge_tags = {(u, v): f"H{net.edge_block(e).index}" for e, u, v in net.host.edges}
    nx.draw_networkx_edge_labels(g, pos, edge_labels=edge_tags, ax=ax, font_size=5)
    ax.set_axis_off()
    return _save(fig, Path(path))


def census_figure(census: dict[int, int], q: int, path) -> Path:
    """Number of fold-line covers of the 3 x q grid by line count."""
    fig, ax = plt.subplots(figsize=(4, 3))
    keys = sorted(census)
    ax.bar([str(k) for k in keys], [census[k] for k in keys], color="tab:green")
    ax.set_xlabel("fold-lines in the cover")
    ax.set_ylabel("directed covers")
    ax.set_title(f"3 x {q} grid")
    return _save(fig, Path(path))


def generation_figure(series, path) -> Path:
    """Vertex and join-edge counts per self-similar generation (log scale)."""
    gens = range(1, len(series.generations) + 1)
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.semilogy(gens, [g.p for g in series.generations], "o-", label="vertices")
    ax.semilogy(gens, [len(u) for u in series.unlabelled], "s--", label="join edges")
    ax.set_xlabel("generation")
    ax.legend()
    return _save(fig, Path(path))
