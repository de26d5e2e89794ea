import pandas as pd
def postgres_connector(df: pd.DataFrame, connection_string: str, table_name: str):
    """
    Registered stub: live PostgreSQL connectivity is not available in the
    offline benchmark environment. Fails loudly if executed.
    Node: PostgresConnector
    """
    raise NotImplementedError(
        "[PostgresConnector] Live database connectivity is not available offline"
    )
