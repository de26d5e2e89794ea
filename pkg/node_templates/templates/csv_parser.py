import pandas as pd
def csv_parser(file_path: str) -> pd.DataFrame:
    df = pd.read_csv(file_path)
    print(f"[CSVParser] Loaded {len(df)} rows from {file_path}")
    return df
