"""Figure rendering for the CLI report path.  matplotlib is imported
lazily and always with the Agg backend so the CLI works headless."""

from __future__ import annotations

import os


def _plt():
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    return plt


def hilbert_figure(hilbert, path: str, title: str = "Hilbert function") -> str:
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ks = list(range(len(hilbert)))
    ax.bar(ks, hilbert, color="#4878d0")
    ax.set_xlabel("degree")
    ax.set_ylabel("dim")
    ax.set_title(title)
    ax.set_xticks(ks)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def wlp_figure(report: dict, path: str) -> str:
    """Per-degree source/target dimensions against the generic rank."""
    plt = _plt()
    degs = report["degrees"]
    ks = [d["k"] for d in degs]
    fig, ax = plt.subplots(figsize=(6.4, 3.6))
    ax.plot(ks, [d["dim_source"] for d in degs], "o-", label="dim source")
    ax.plot(ks, [d["dim_target"] for d in degs], "s-", label="dim target")
    ax.plot(ks, [d["generic_rank"] for d in degs], "x--", label="generic rank")
    for d in degs:
        if not d["injective"] and not d["surjective"]:
            ax.axvline(d["k"], color="red", alpha=0.3)
    ax.set_xlabel("target degree k")
    ax.set_title(f"multiplication ranks ({report['verdict']})")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def levels_figure(level_sizes, flags, path: str,
                  title: str = "level sizes") -> str:
    """Level sizes with per-step pass/fail coloring (for NMP checks)."""
    plt = _plt()
    fig, ax = plt.subplots(figsize=(6, 3.2))
    ks = list(range(len(level_sizes)))
    ax.bar(ks, level_sizes, color="#6acc64")
    if flags:
        for i, ok in enumerate(flags):
            if not ok:
                ax.axvspan(i + 0.4, i + 0.6, color="red", alpha=0.5)
    ax.set_xlabel("rank")
    ax.set_ylabel("size")
    ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def repro_figure(items: list[dict], path: str) -> str:
    plt = _plt()
    names = [it["item"] for it in items]
    ok = [1 if it["status"] == "PASS" else 0 for it in items]
    colors = ["#6acc64" if v else "#d65f5f" for v in ok]
    fig, ax = plt.subplots(figsize=(6.4, 0.5 * len(items) + 1.2))
    ax.barh(range(len(items)), [1] * len(items), color=colors)
    ax.set_yticks(range(len(items)))
    ax.set_yticklabels(names)
    ax.set_xticks([])
    for i, it in enumerate(items):
        ax.text(0.5, i, it["status"], va="center", ha="center")
    ax.set_title("reproduction suite")
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
    return path


def render_for_command(command: str, result: dict, figdir: str) -> list[str]:
    """Render the figures appropriate for a command's result payload."""
    os.makedirs(figdir, exist_ok=True)
    out = []
    if command == "hilbert":
        out.append(hilbert_figure(result["hilbert"],
                                  os.path.join(figdir, "hilbert.png")))
    elif command == "wlp":
        out.append(wlp_figure(result, os.path.join(figdir, "wlp_ranks.png")))
        out.append(hilbert_figure(result["hilbert"],
                                  os.path.join(figdir, "hilbert.png")))
    elif command == "sperner":
        out.append(hilbert_figure(result["hilbert"],
                                  os.path.join(figdir, "hilbert.png"),
                                  title="level sizes vs antichain"))
    elif command in ("lym", "poset"):
        flags = result.get("nmp")
        out.append(levels_figure(result["level_sizes"], flags,
                                 os.path.join(figdir, "levels.png")))
    elif command in ("rees", "strong-rees"):
        sizes = result.get("level_sizes")
        if sizes is None and result.get("sperner"):
            sizes = result["sperner"]["hilbert"]
        if sizes:
            out.append(levels_figure(sizes, result.get("nmp_levels"),
                                     os.path.join(figdir, "levels.png")))
    elif command == "repro":
        out.append(repro_figure(result["items"],
                                os.path.join(figdir, "repro.png")))
    return out
