import pandas as pd
def excel_parser(file_path: str) -> pd.DataFrame:
    """
    Reads a spreadsheet into a DataFrame. If no spreadsheet engine is
    installed and the file is actually CSV, falls back to the CSV reader
    with a loud notice rather than failing silently.
    Node: ExcelParser
    """
    try:
        df = pd.read_excel(file_path)
    except ImportError:
        if not file_path.lower().endswith(".csv"):
            raise
        print(f"[ExcelParser] No spreadsheet engine available; reading {file_path} as CSV")
        df = pd.read_csv(file_path)
    print(f"[ExcelParser] Loaded {len(df)} rows from {file_path}")
    return df
