"""Render Newton polygons to image files with matplotlib.

Import of matplotlib is deferred to call time so the CLI stays fast when
no figure is requested; the Agg backend is forced because reports are
written headless.
"""

from __future__ import annotations

from .newton import OreResult, counted_lattice_points


def render_polygon_figure(result: OreResult, poly_text: str, path: str) -> None:
    """One subplot per phi: the principal polygon and its counted points."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    reports = result.phi_reports
    n = max(len(reports), 1)
    fig, axes = plt.subplots(1, n, figsize=(4.2 * n, 3.6), squeeze=False)
    for ax, report in zip(axes[0], reports):
        sides = report.polygon.sides
        if sides:
            verts = [sides[0].start] + [s.end for s in sides]
            xs = [v[0] for v in verts]
            ys = [v[1] for v in verts]
            ax.plot(xs, ys, "o-", color="tab:blue", linewidth=1.6)
            counted = counted_lattice_points(sides)
            if counted:
                ax.plot(
                    [p[0] for p in counted],
                    [p[1] for p in counted],
                    "x",
                    color="tab:red",
                    markersize=6,
                )
            ax.set_xlim(-0.4, max(xs) + 0.6)
            ax.set_ylim(-0.4, max(ys) + 0.6)
            ax.set_xticks(range(0, max(xs) + 1))
            ax.set_yticks(range(0, max(ys) + 1))
        else:
            ax.text(0.5, 0.5, "empty principal polygon", ha="center", va="center")
            ax.set_xticks([])
            ax.set_yticks([])
        ax.grid(True, linestyle=":", linewidth=0.5)
        ax.set_title(
            f"phi = {report.phi}, ind = {report.index_contribution}"
            f"{'' if report.regular else ' (not regular)'}",
            fontsize=9,
        )
        ax.set_xlabel("i")
        ax.set_ylabel("v_p(a_i)")
    if not reports:
        axes[0][0].set_axis_off()
    fig.suptitle(f"{poly_text}   (p = {result.p})", fontsize=10)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
