def error_handler(value):
    """
    Registered stub: HTTP error responses are outside the offline benchmark
    surface. Fails loudly if executed.
    Node: ErrorHandler
    """
    raise NotImplementedError(
        "[ErrorHandler] HTTP error handling is not available in offline benchmark execution"
    )
