def http_to_dataframe(response):
    """
    Registered stub: HTTP response adaptation is outside the offline
    benchmark surface. Fails loudly if executed.
    Node: HTTPToDataFrame
    """
    raise NotImplementedError(
        "[HTTPToDataFrame] HTTP adaptation is not available in offline benchmark execution"
    )
