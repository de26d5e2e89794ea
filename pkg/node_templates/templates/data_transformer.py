import pandas as pd
def data_transformer(df: pd.DataFrame) -> pd.DataFrame:
    """
    Passthrough transformation hook: normalizes the row index and reports
    the shape of the data flowing through.
    Node: DataTransformer
    """
    result = df.reset_index(drop=True)
    print(f"[DataTransformer] Passed through {len(result)} rows x {len(result.columns)} columns")
    return result
