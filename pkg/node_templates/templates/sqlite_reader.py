import os
import sqlite3
def sqlite_reader(db_path: str):
    """
    Opens a pre-existing SQLite database file. Entry point only: it must
    start a pipeline, never follow SQLiteConnector. Refuses to create a
    new empty database when the file is missing.
    Node: SQLiteReader
    """
    if not os.path.exists(db_path):
        raise FileNotFoundError(f"[SQLiteReader] Database file not found: {db_path}")
    conn = sqlite3.connect(db_path)
    print(f"[SQLiteReader] Opened {db_path}")
    return conn
