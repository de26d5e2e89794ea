import pandas as pd
def data_deduplicator(df: pd.DataFrame) -> pd.DataFrame:
    """
    Removes rows that duplicate an earlier row in every column.
    Node: DataDeduplicator
    """
    result = df.drop_duplicates().reset_index(drop=True)
    print(f"[DataDeduplicator] Removed {len(df) - len(result)} duplicate rows")
    return result
