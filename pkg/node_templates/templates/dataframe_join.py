import pandas as pd
def dataframe_join(df: pd.DataFrame, on: str, how: str) -> pd.DataFrame:
    """
    Reserved two-input join primitive. Single-stream pipelines cannot
    deliver a second frame, so executing this node is always an error.
    Node: DataFrameJoin
    """
    raise NotImplementedError(
        "[DataFrameJoin] Two-input execution is not supported in single-stream pipelines"
    )
