import pandas as pd
def json_parser(file_path: str) -> pd.DataFrame:
    """
    Reads a JSON array of objects into a DataFrame.
    Node: JSONParser
    """
    df = pd.read_json(file_path)
    print(f"[JSONParser] Loaded {len(df)} rows from {file_path}")
    return df
