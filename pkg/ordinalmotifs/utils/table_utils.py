import pandas as pd

from ordinalmotifs.engine.motif_covering import MotifCovering

STAT_ROWS = ("local full sm", "maximal lf-sm", "largest lf-sm")


def stats_table(stats):
    """Families as columns in rank order, one row per statistic."""
    families = sorted(stats)
    return pd.DataFrame(
        [[getattr(stats[family], field) for family in families]
         for field in ("total", "maximal", "largest")],
        index=list(STAT_ROWS),
        columns=[family.value for family in families])


def render_stats_table(stats):
    return stats_table(stats).to_string()


def ratio_table(steps):
    """Family shares among the first i selections, for every i."""
    families = sorted({family for step in steps for family in step.families})
    rows = []
    for i in range(1, len(steps) + 1):
        ratios = MotifCovering.family_ratios(steps, i)
        rows.append([i] + [float(ratios.get(family, 0)) for family in families])
    return pd.DataFrame(rows, columns=["step"] + [family.value for family in families])


def family_curves_frame(curves):
    """Long format (series, step, new, cumulative) for named covering runs."""
    frames = [MotifCovering.coverage_curve(steps).assign(series=name) for name, steps in curves.items()]
    if not frames:
        return pd.DataFrame(columns=["series", "step", "new", "cumulative"])
    return pd.concat(frames, ignore_index=True)[["series", "step", "new", "cumulative"]]


def write_csv(frame, path):
    frame.to_csv(path, index=False, lineterminator="\n")
