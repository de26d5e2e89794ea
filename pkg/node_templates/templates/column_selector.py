import pandas as pd
def column_selector(df: pd.DataFrame, columns) -> pd.DataFrame:
    """
    Projects the DataFrame onto the given columns, in the given order.
    Missing columns raise a KeyError.
    Node: ColumnSelector
    """
    selected = df[list(columns)]
    print(f"[ColumnSelector] Selected columns: {', '.join(selected.columns)}")
    return selected
