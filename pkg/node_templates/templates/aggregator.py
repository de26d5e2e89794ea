import pandas as pd
def aggregator(df: pd.DataFrame, group_by: str, agg_func: str) -> pd.DataFrame:
    """
    Groups by a column and aggregates. Count aggregation always produces a
    column named exactly 'count'; this is a fixed property of the node, not
    a parameter.
    Node: Aggregator
    """
    grouped = df.groupby(group_by)
    if agg_func == "count":
        result = grouped.size().reset_index(name="count")
    else:
        result = grouped.agg(agg_func).reset_index()
    print(f"[Aggregator] Grouped by '{group_by}' with '{agg_func}' ({len(result)} groups)")
    return result
