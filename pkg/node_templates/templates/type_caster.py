import pandas as pd
def type_caster(df: pd.DataFrame, mapping: dict) -> pd.DataFrame:
    """
    Casts columns to new dtypes, e.g. {"price": "float", "id": "int"}.
    Node: TypeCaster
    """
    result = df.astype(mapping)
    print(f"[TypeCaster] Cast columns: {', '.join(mapping)}")
    return result
