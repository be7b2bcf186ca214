"""Matplotlib figure output for circle spectra.

The CLI report path can save one of these next to its JSON/CSV/SVG
output.  Format follows the file extension (png, pdf, svg, ...).
"""

from __future__ import annotations

from .project import CircleSpectrum


def save_spectrum_figure(
    spectrum: CircleSpectrum,
    path: str,
    title: str | None = None,
    size_inches: float = 6.0,
    dpi: int = 150,
) -> None:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(size_inches, size_inches))
    rmax = max((c.radius for c in spectrum.circles), default=1.0)
    for c in spectrum.circles:
        ax.add_patch(plt.Circle((0.0, 0.0), c.radius, fill=False, color="0.65", lw=0.8))
    xs = [p.x for c in spectrum.circles for p in c.members]
    ys = [p.y for c in spectrum.circles for p in c.members]
    ax.scatter(xs, ys, s=14, color="#c0392b", zorder=3)
    lim = 1.15 * rmax if rmax > 0 else 1.0
    ax.set_xlim(-lim, lim)
    ax.set_ylim(-lim, lim)
    ax.set_aspect("equal")
    ax.axhline(0.0, color="0.85", lw=0.6, zorder=0)
    ax.axvline(0.0, color="0.85", lw=0.6, zorder=0)
    if title:
        ax.set_title(title)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
