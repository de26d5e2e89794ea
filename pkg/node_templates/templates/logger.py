def logger(value):
    """
    Transparent observability probe: prints a short summary of whatever
    passes through and returns it unchanged. Accepts any value, so it can
    sit between any pair of nodes.
    Node: Logger
    """
    summary = type(value).__name__
    try:
        summary += f" with {len(value)} rows"
    except TypeError:
        pass
    print(f"[Logger] Passing through: {summary}")
    return value
