import pandas as pd
def stats_summary(df: pd.DataFrame) -> pd.DataFrame:
    """
    Computes descriptive statistics for every column; the statistic name
    becomes a regular column so the result stays tabular.
    Node: StatsSummary
    """
    result = df.describe(include="all").reset_index().rename(columns={"index": "statistic"})
    print(f"[StatsSummary] Computed {len(result)} summary statistics")
    return result
