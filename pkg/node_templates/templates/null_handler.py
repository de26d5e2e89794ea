import pandas as pd
def null_handler(df: pd.DataFrame, strategy: str) -> pd.DataFrame:
    """
    Handles missing values. Strategies:
      drop  - remove rows containing any null
      zero  - replace nulls with 0
      mean  - replace numeric-column nulls with the column mean
    Node: NullHandler
    """
    if strategy == "drop":
        result = df.dropna()
    elif strategy == "zero":
        result = df.fillna(0)
    elif strategy == "mean":
        result = df.fillna(df.mean(numeric_only=True))
    else:
        raise ValueError(f"[NullHandler] Unknown strategy: {strategy!r}")
    print(f"[NullHandler] Applied strategy '{strategy}' ({len(df)} -> {len(result)} rows)")
    return result
