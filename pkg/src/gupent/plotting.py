import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .reports import Table  # noqa: E402

STYLES = [
    dict(color="black", linestyle="-"),
    dict(color="red", linestyle="--"),
    dict(color="blue", linestyle=":"),
]


def render_table(table: Table, path, dpi: int = 150) -> None:
    """Plot every value column of a grid table against its first column.

    Tables whose columns are the alpha grid (one row per coupling) are
    plotted transposed so that each coupling gets one curve.
    """
    fig, ax = plt.subplots(figsize=(5.5, 4.0))
    if table.xlabel == "alpha":
        xs = [float(h.split("=", 1)[1]) for h in table.header[1:]]
        for i, row in enumerate(table.rows):
            ax.plot(xs, row[1:], label=f"J = {row[0]:g}", **STYLES[i % len(STYLES)])
    else:
        xs = [r[0] for r in table.rows]
        for i, name in enumerate(table.header[1:]):
            ax.plot(xs, table.column(name), label=name.replace("alpha", "α"),
                    **STYLES[i % len(STYLES)])
    ax.set_xlabel(table.xlabel)
    ax.set_ylabel(table.ylabel)
    ax.set_title(table.title, fontsize=10)
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, dpi=dpi)
    plt.close(fig)
