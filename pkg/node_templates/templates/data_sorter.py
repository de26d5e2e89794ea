import pandas as pd
def data_sorter(df: pd.DataFrame, by: str, ascending: bool) -> pd.DataFrame:
    """
    Sorts by a column. The ascending flag is required: omitting it is a
    plan error, never a silent default.
    Node: DataSorter
    """
    result = df.sort_values(by=by, ascending=ascending).reset_index(drop=True)
    print(f"[DataSorter] Sorted by '{by}' ascending={ascending}")
    return result
